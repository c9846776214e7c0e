#include "cdlat/cd.hpp"

#include "cdlat/products.hpp"

#include <algorithm>
#include <unordered_map>

namespace cdlat {

std::uint64_t cd_measure(const GroupHandle& g, const Subgroup& h) {
    if (h.parent.get() != g.get()) fail(errc::mismatched_groups, "subgroup of another group");
    return h.order * static_cast<std::uint64_t>(set_centralizer(*g, h.gens).count());
}

namespace {

// Element centralizers repeat heavily across a subgroup family (layered
// generating sets share prefixes), so they are memoized per element.
class CentralizerCache {
  public:
    explicit CentralizerCache(const GenericGroup& g) : g_(g) {}

    const Bitset& of(std::uint32_t x) {
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(x, element_centralizer(g_, x)).first->second;
    }

    Bitset intersection(const std::vector<std::uint32_t>& xs) {
        if (xs.empty()) {
            Bitset all(g_.size());
            for (std::uint32_t a = 0; a < g_.size(); ++a) all.set(a);
            return all;
        }
        Bitset m = of(xs[0]);
        for (std::size_t i = 1; i < xs.size(); ++i) m &= of(xs[i]);
        return m;
    }

  private:
    const GenericGroup& g_;
    std::unordered_map<std::uint32_t, Bitset> cache_;
};

} // namespace

CdLattice cd_lattice(const GroupHandle& g, const Limits& lim,
                     std::optional<EnumeratorKind> enumerator) {
    if (g->size() > lim.max_cd_elements)
        fail(errc::infeasible, "group of order " + std::to_string(g->size()) +
                                   " exceeds the lattice enumeration bound " +
                                   std::to_string(lim.max_cd_elements));
    EnumeratorKind kind = enumerator.value_or(
        g->prime_power_base() >= 2 ? EnumeratorKind::layered : EnumeratorKind::closure);

    SubgroupSet all = all_subgroups(g, kind, lim);
    CentralizerCache cache(*g);

    std::uint64_t m = 0;
    std::vector<std::uint64_t> measures(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Subgroup& h = all.subgroups[i];
        measures[i] = h.order * static_cast<std::uint64_t>(cache.intersection(h.gens).count());
        m = std::max(m, measures[i]);
    }

    CdLattice out;
    out.group = g;
    out.m = m;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (measures[i] == m) out.members.push_back(all.subgroups[i]);
    // all_subgroups returns canonical (order, lex) order; members inherit it.
    out.hasse = hasse_edges(out.members);
    out.chain_length = is_chain(out);
    return out;
}

std::optional<std::uint32_t> is_chain(const CdLattice& l) {
    const auto& ms = l.members;
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        if (ms[i].order >= ms[i + 1].order) return std::nullopt; // tie: not a chain
        if (!ms[i].members.is_subset_of(ms[i + 1].members)) return std::nullopt;
    }
    if (ms.empty()) return std::nullopt;
    return static_cast<std::uint32_t>(ms.size() - 1);
}

VerificationReport check_omnibus(const CdLattice& l) {
    VerificationReport rep;
    rep.target = "CD lattice (m=" + std::to_string(l.m) + ", " +
                 std::to_string(l.members.size()) + " members)";
    const GroupHandle& g = l.group;
    const auto& ms = l.members;

    // (a) <H,K> = HK and the join stays in the lattice
    bool join_ok = true;
    std::string join_detail;
    for (std::size_t i = 0; i < ms.size() && join_ok; ++i)
        for (std::size_t j = i; j < ms.size() && join_ok; ++j) {
            Subgroup jn = join(ms[i], ms[j]);
            if (!(product_set(ms[i], ms[j]) == jn.members)) {
                join_ok = false;
                join_detail = "join differs from the set product HK";
            } else if (std::none_of(ms.begin(), ms.end(),
                                    [&](const Subgroup& s) { return s.members == jn.members; })) {
                join_ok = false;
                join_detail = "join of two members left the lattice";
            }
        }
    rep.add("join_is_product_and_member", join_ok, join_detail);

    // (b) centralizers are members and C_G(C_G(H)) = H
    bool cent_ok = true;
    std::string cent_detail;
    std::vector<Subgroup> cents;
    for (const auto& h : ms) {
        Subgroup c = centralizer(h);
        cents.push_back(c);
        if (std::none_of(ms.begin(), ms.end(),
                         [&](const Subgroup& s) { return s.members == c.members; })) {
            cent_ok = false;
            cent_detail = "a centralizer of a member is not a member";
            break;
        }
        Subgroup cc = centralizer(c);
        if (!(cc.members == h.members)) {
            cent_ok = false;
            cent_detail = "C_G(C_G(H)) != H for a member";
            break;
        }
    }
    rep.add("centralizer_involution", cent_ok, cent_detail);

    // (c) meets stay members
    bool meet_ok = true;
    for (std::size_t i = 0; i < ms.size() && meet_ok; ++i)
        for (std::size_t j = i; j < ms.size() && meet_ok; ++j) {
            Subgroup mt = meet(ms[i], ms[j]);
            meet_ok = std::any_of(ms.begin(), ms.end(),
                                  [&](const Subgroup& s) { return s.members == mt.members; });
        }
    rep.add("meet_is_member", meet_ok);

    // (d) minimum member: abelian, normal, contains Z(G)
    if (!ms.empty()) {
        const Subgroup& mn = ms.front();
        bool min_ok = std::all_of(ms.begin(), ms.end(),
                                  [&](const Subgroup& s) { return mn.members.is_subset_of(s.members); });
        auto mn_group = SubgroupAsGroup::make(g, mn.members, mn.gens);
        const Subgroup z = center(g);
        min_ok = min_ok && mn_group->is_abelian() && is_normal(mn) &&
                 z.members.is_subset_of(mn.members);
        rep.add("min_member_abelian_normal_contains_center", min_ok,
                "normality asserted; the characteristic property needs Aut(G) and is not checked");

        // (e) maximum member normal
        const Subgroup& mx = ms.back();
        bool max_ok = std::all_of(ms.begin(), ms.end(),
                                  [&](const Subgroup& s) { return s.members.is_subset_of(mx.members); });
        max_ok = max_ok && is_normal(mx);
        rep.add("max_member_normal", max_ok,
                "normality asserted; the characteristic property needs Aut(G) and is not checked");
    } else {
        rep.add("min_member_abelian_normal_contains_center", false, "empty lattice");
    }

    // (f) H -> C_G(H) is an order-reversing involution on the members
    bool dual_ok = cent_ok;
    if (dual_ok) {
        for (std::size_t i = 0; i < ms.size() && dual_ok; ++i)
            for (std::size_t j = 0; j < ms.size() && dual_ok; ++j) {
                if (!ms[i].members.is_subset_of(ms[j].members)) continue;
                dual_ok = cents[j].members.is_subset_of(cents[i].members);
            }
    }
    rep.add("self_duality", dual_ok);
    return rep;
}

VerificationReport check_maxmember(const GroupHandle& g, const Limits& lim) {
    VerificationReport rep;
    CdLattice lat = cd_lattice(g, lim);
    rep.target = "maximal-member recursion";
    const Subgroup& mx = lat.members.back();
    for (const auto& s : lat.members)
        if (!s.members.is_subset_of(mx.members)) {
            rep.add("unique_maximal_member", false, "lattice has no maximum");
            return rep;
        }
    rep.add("unique_maximal_member", true);

    auto mgrp = SubgroupAsGroup::make(g, mx.members, mx.gens);
    CdLattice inner = cd_lattice(mgrp, lim);

    // Map CD(M)'s member sets back into G and compare families.
    std::vector<Bitset> mapped;
    for (const auto& s : inner.members) {
        Bitset b(g->size());
        s.members.for_each([&](std::uint32_t loc) { b.set(mgrp->to_base(loc)); });
        mapped.push_back(std::move(b));
    }
    bool equal = mapped.size() == lat.members.size();
    if (equal) {
        for (const auto& b : mapped)
            if (std::none_of(lat.members.begin(), lat.members.end(),
                             [&](const Subgroup& s) { return s.members == b; })) {
                equal = false;
                break;
            }
    }
    rep.add("cd_of_max_member_equals_cd", equal,
            "CD(M) has " + std::to_string(inner.members.size()) + " members, CD(G) has " +
                std::to_string(lat.members.size()));
    return rep;
}

VerificationReport check_direct_product(const PcPresentationPtr& g1, const PcPresentationPtr& g2,
                                        const Limits& lim) {
    VerificationReport rep;
    rep.target = g1->name() + " x " + g2->name();

    auto prod_pres = direct_product(g1, g2);
    auto gp = PcGroup::enumerate(prod_pres, lim);
    auto h1 = PcGroup::enumerate(g1, lim);
    auto h2 = PcGroup::enumerate(g2, lim);

    CdLattice cd1 = cd_lattice(h1, lim);
    CdLattice cd2 = cd_lattice(h2, lim);
    CdLattice cdp = cd_lattice(gp, lim);

    // index(a, b) = index(a) * |G2| + index(b) under the concatenated
    // presentation, so product member sets transfer coordinate-wise.
    const std::uint64_t n2 = h2->size();
    std::vector<Bitset> expected;
    for (const auto& a : cd1.members)
        for (const auto& b : cd2.members) {
            Bitset m(gp->size());
            a.members.for_each([&](std::uint32_t x) {
                b.members.for_each(
                    [&](std::uint32_t y) { m.set(static_cast<std::uint32_t>(x * n2 + y)); });
            });
            expected.push_back(std::move(m));
        }

    bool ok = expected.size() == cdp.members.size();
    if (ok)
        for (const auto& e : expected)
            if (std::none_of(cdp.members.begin(), cdp.members.end(),
                             [&](const Subgroup& s) { return s.members == e; })) {
                ok = false;
                break;
            }
    rep.add("cd_of_product_is_product_of_cds", ok,
            "product lattice has " + std::to_string(cdp.members.size()) + " members, expected " +
                std::to_string(expected.size()));
    return rep;
}

} // namespace cdlat
