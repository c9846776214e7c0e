#pragma once

#include "cdlat/group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdlat {

// A subgroup of an enumerated group: member bit vector over element ids,
// a minimal-ish generating list, and the order.
struct Subgroup {
    GroupHandle parent;
    Bitset members;
    std::vector<std::uint32_t> gens; // element ids, never the identity
    std::uint64_t order = 0;

    bool contains(std::uint32_t e) const { return members.test(e); }
    bool contains(const Subgroup& o) const { return o.members.is_subset_of(members); }
    bool same_parent(const Subgroup& o) const { return parent.get() == o.parent.get(); }
    bool operator==(const Subgroup& o) const {
        return parent.get() == o.parent.get() && members == o.members;
    }
    std::string describe_gens() const;
};

// <seeds>: breadth-first product closure.  Seeds already inside the closure
// of the earlier ones are dropped, which keeps the generating list short.
Subgroup subgroup_closure(const GroupHandle& g, std::span<const std::uint32_t> seeds);

// Wraps an already-closed member set, extracting generators greedily.
// Rejects sets that are not closed.
Subgroup subgroup_from_members(const GroupHandle& g, Bitset members);

Subgroup trivial_subgroup(const GroupHandle& g);
Subgroup whole_group(const GroupHandle& g);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g);
bool is_normal(const Subgroup& h);

// The set product HK = {hk}; a subgroup precisely when HK = KH.
Bitset product_set(const Subgroup& a, const Subgroup& b);

struct SubgroupSet {
    GroupHandle parent;
    std::vector<Subgroup> subgroups;
    // parent_of[i]: index of one normal index-p parent recorded by the
    // layered enumerator, or -1 (trivial subgroup / closure enumerator).
    std::vector<std::int32_t> parent_of;

    std::size_t size() const { return subgroups.size(); }
};

// Sorts by (order, member-set lex) and keeps the family deduplicated; all
// enumerators return sets in this canonical order.
void canonicalize(SubgroupSet& s);

// Every subgroup of a p-group, layer by layer: each subgroup of order
// p^{k+1} arises as <H, x> with H normal of index p in it, x in N_G(H) and
// x^p in H.  Prime-power groups only.
SubgroupSet all_subgroups_layered(const GroupHandle& g, const Limits& lim = {});

// Independent oracle: closure of the cyclic subgroups under pairwise join.
// Complete because every subgroup is an iterated join of cyclic subgroups.
SubgroupSet all_subgroups_closure(const GroupHandle& g, const Limits& lim = {});

enum class EnumeratorKind { layered, closure };
SubgroupSet all_subgroups(const GroupHandle& g, EnumeratorKind kind, const Limits& lim = {});

// Covering pairs (i, j): subgroup i is covered by subgroup j.
std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges(
    const std::vector<Subgroup>& subs);

} // namespace cdlat
