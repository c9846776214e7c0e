#include "cdlat/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace cdlat {

std::string Subgroup::describe_gens() const {
    if (gens.empty()) return "<1>";
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += parent->describe(gens[i]);
    }
    return s + ">";
}

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
    if (!a.same_parent(b))
        fail(errc::mismatched_groups, "subgroups belong to different parent groups");
}

// Extends the closed set `members` (with `list` its element list) by the
// generators in `gens`; breadth-first over right products.
void extend_closure(const GenericGroup& g, Bitset& members, std::vector<std::uint32_t>& list,
                    const std::vector<std::uint32_t>& gens) {
    for (std::size_t head = 0; head < list.size(); ++head) {
        const std::uint32_t x = list[head];
        for (auto s : gens) {
            const std::uint32_t y = g.mul(x, s);
            if (!members.test(y)) {
                members.set(y);
                list.push_back(y);
            }
        }
    }
}

} // namespace

Subgroup subgroup_closure(const GroupHandle& g, std::span<const std::uint32_t> seeds) {
    Bitset members(g->size());
    members.set(g->identity());
    std::vector<std::uint32_t> list{g->identity()};
    std::vector<std::uint32_t> kept;
    for (auto s : seeds) {
        if (s >= g->size()) fail(errc::invalid_argument, "seed element out of range");
        if (members.test(s)) continue;
        kept.push_back(s);
        members.set(s);
        list.push_back(s);
        extend_closure(*g, members, list, kept);
    }
    return Subgroup{g, std::move(members), std::move(kept), list.size()};
}

Subgroup subgroup_from_members(const GroupHandle& g, Bitset members) {
    if (members.size() != g->size())
        fail(errc::mismatched_groups, "member set sized for another group");
    if (!members.test(g->identity())) fail(errc::not_subgroup, "missing identity");
    Bitset closed(g->size());
    closed.set(g->identity());
    std::vector<std::uint32_t> list{g->identity()};
    std::vector<std::uint32_t> kept;
    members.for_each([&](std::uint32_t e) {
        if (closed.test(e)) return;
        kept.push_back(e);
        closed.set(e);
        list.push_back(e);
        extend_closure(*g, closed, list, kept);
    });
    if (!(closed == members))
        fail(errc::not_subgroup, "member set is not closed under multiplication");
    return Subgroup{g, std::move(members), std::move(kept), list.size()};
}

Subgroup trivial_subgroup(const GroupHandle& g) {
    Bitset m(g->size());
    m.set(g->identity());
    return Subgroup{g, std::move(m), {}, 1};
}

Subgroup whole_group(const GroupHandle& g) {
    return subgroup_closure(g, g->generators());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    if (b.members.is_subset_of(a.members)) return a;
    if (a.members.is_subset_of(b.members)) return b;
    std::vector<std::uint32_t> seeds = a.gens;
    seeds.insert(seeds.end(), b.gens.begin(), b.gens.end());
    return subgroup_closure(a.parent, seeds);
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    return subgroup_from_members(a.parent, a.members & b.members);
}

Subgroup normalizer(const Subgroup& h) {
    const auto& g = *h.parent;
    Bitset m(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (auto gen : h.gens)
            if (!h.members.test(g.conj(gen, x))) {
                ok = false;
                break;
            }
        if (ok) m.set(x);
    }
    return subgroup_from_members(h.parent, std::move(m));
}

Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g) {
    const auto& grp = *h.parent;
    Bitset m(grp.size());
    h.members.for_each([&](std::uint32_t e) { m.set(grp.conj(e, g)); });
    std::vector<std::uint32_t> gens;
    gens.reserve(h.gens.size());
    for (auto x : h.gens) gens.push_back(grp.conj(x, g));
    return Subgroup{h.parent, std::move(m), std::move(gens), h.order};
}

bool is_normal(const Subgroup& h) {
    const auto& g = *h.parent;
    for (auto x : g.generators())
        for (auto gen : h.gens)
            if (!h.members.test(g.conj(gen, x))) return false;
    return true;
}

Bitset product_set(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    const auto& g = *a.parent;
    Bitset out(g.size());
    const auto bs = b.members.to_indices();
    a.members.for_each([&](std::uint32_t x) {
        for (auto y : bs) out.set(g.mul(x, y));
    });
    return out;
}

// ---------------------------------------------------------------------------
// enumeration

void canonicalize(SubgroupSet& s) {
    std::vector<std::uint32_t> idx(s.subgroups.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (s.subgroups[x].order != s.subgroups[y].order)
            return s.subgroups[x].order < s.subgroups[y].order;
        return s.subgroups[x].members.lex_less(s.subgroups[y].members);
    });
    std::vector<std::int32_t> remap(idx.size());
    for (std::uint32_t pos = 0; pos < idx.size(); ++pos) remap[idx[pos]] = static_cast<std::int32_t>(pos);
    std::vector<Subgroup> subs;
    std::vector<std::int32_t> parents;
    subs.reserve(idx.size());
    parents.reserve(idx.size());
    for (auto i : idx) {
        subs.push_back(std::move(s.subgroups[i]));
        const std::int32_t p = s.parent_of.empty() ? -1 : s.parent_of[i];
        parents.push_back(p < 0 ? -1 : remap[p]);
    }
    s.subgroups = std::move(subs);
    s.parent_of = std::move(parents);
}

SubgroupSet all_subgroups_layered(const GroupHandle& g, const Limits& lim) {
    const std::uint32_t p = g->prime_power_base();
    if (p == 0 || (p < 2 && g->size() > 1))
        fail(errc::invalid_argument, "layered enumeration requires a prime-power group order");
    if (g->size() > lim.max_enum_elements)
        fail(errc::enumeration_bound, "group too large for subgroup enumeration");

    SubgroupSet out{g, {}, {}};
    std::unordered_set<Bitset, BitsetHash> known;

    out.subgroups.push_back(trivial_subgroup(g));
    out.parent_of.push_back(-1);
    known.insert(out.subgroups[0].members);
    if (g->size() == 1) return out;

    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto hi : frontier) {
            // Collect N_G(H) first; every index-p extension of H lives in it.
            const Subgroup h = out.subgroups[hi]; // copy: out.subgroups may reallocate
            Bitset nh(g->size());
            for (std::uint32_t x = 0; x < g->size(); ++x) {
                bool ok = true;
                for (auto gen : h.gens)
                    if (!h.members.test(g->conj(gen, x))) {
                        ok = false;
                        break;
                    }
                if (ok) nh.set(x);
            }
            Bitset seen = h.members;
            nh.for_each([&](std::uint32_t x) {
                if (seen.test(x)) return;
                if (!h.members.test(g->pow(x, p))) {
                    seen.set(x); // x lies in no index-p extension of H
                    return;
                }
                // K = union of the cosets H x^i
                Bitset km = h.members;
                std::uint32_t xi = x;
                for (std::uint32_t i = 1; i < p; ++i) {
                    h.members.for_each([&](std::uint32_t m) { km.set(g->mul(m, xi)); });
                    xi = g->mul(xi, x);
                }
                seen |= km;
                if (known.insert(km).second) {
                    std::vector<std::uint32_t> gens = h.gens;
                    gens.push_back(x);
                    const std::uint64_t ord = km.count();
                    out.subgroups.push_back(Subgroup{g, std::move(km), std::move(gens), ord});
                    out.parent_of.push_back(static_cast<std::int32_t>(hi));
                    next.push_back(static_cast<std::uint32_t>(out.subgroups.size() - 1));
                    if (out.subgroups.size() > lim.max_subgroups)
                        fail(errc::subgroup_guard,
                             "subgroup enumeration exceeded " + std::to_string(lim.max_subgroups) +
                                 " subgroups");
                }
            });
        }
        frontier = std::move(next);
    }
    canonicalize(out);
    return out;
}

SubgroupSet all_subgroups_closure(const GroupHandle& g, const Limits& lim) {
    if (g->size() > lim.max_oracle_elements)
        fail(errc::enumeration_bound, "group too large for the join-closure enumerator");

    SubgroupSet out{g, {}, {}};
    std::unordered_set<Bitset, BitsetHash> known;
    auto add = [&](Subgroup s) -> bool {
        if (!known.insert(s.members).second) return false;
        out.subgroups.push_back(std::move(s));
        out.parent_of.push_back(-1);
        if (out.subgroups.size() > lim.max_subgroups)
            fail(errc::subgroup_guard, "subgroup enumeration exceeded the guard");
        return true;
    };

    add(trivial_subgroup(g));
    for (std::uint32_t x = 1; x < g->size(); ++x) {
        const std::uint32_t seed[1] = {x};
        add(subgroup_closure(g, seed));
    }
    // Worklist of pairwise joins until closed.
    for (std::size_t i = 1; i < out.subgroups.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Subgroup& a = out.subgroups[i];
            const Subgroup& b = out.subgroups[j];
            if (b.members.is_subset_of(a.members) || a.members.is_subset_of(b.members)) continue;
            Subgroup joined = join(a, b);
            add(std::move(joined));
        }
    }
    canonicalize(out);
    return out;
}

SubgroupSet all_subgroups(const GroupHandle& g, EnumeratorKind kind, const Limits& lim) {
    return kind == EnumeratorKind::layered ? all_subgroups_layered(g, lim)
                                           : all_subgroups_closure(g, lim);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges(
    const std::vector<Subgroup>& subs) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const std::size_t n = subs.size();
    for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t a = 0; a < n; ++a) {
            if (a == b || subs[a].order >= subs[b].order) continue;
            if (!subs[a].members.is_subset_of(subs[b].members)) continue;
            bool covered = true;
            for (std::uint32_t c = 0; c < n && covered; ++c) {
                if (c == a || c == b) continue;
                if (subs[c].order <= subs[a].order || subs[c].order >= subs[b].order) continue;
                if (subs[a].members.is_subset_of(subs[c].members) &&
                    subs[c].members.is_subset_of(subs[b].members))
                    covered = false;
            }
            if (covered) edges.push_back({a, b});
        }
    }
    return edges;
}

} // namespace cdlat
