#include "cdlat/group_ops.hpp"

namespace cdlat {

Bitset element_centralizer(const GenericGroup& g, std::uint32_t x) {
    Bitset m(g.size());
    for (std::uint32_t a = 0; a < g.size(); ++a)
        if (g.mul(a, x) == g.mul(x, a)) m.set(a);
    return m;
}

Bitset set_centralizer(const GenericGroup& g, std::span<const std::uint32_t> xs) {
    if (xs.empty()) {
        Bitset all(g.size());
        for (std::uint32_t a = 0; a < g.size(); ++a) all.set(a);
        return all;
    }
    Bitset m = element_centralizer(g, xs[0]);
    for (std::size_t k = 1; k < xs.size(); ++k) {
        const std::uint32_t x = xs[k];
        Bitset next(g.size());
        m.for_each([&](std::uint32_t a) {
            if (g.mul(a, x) == g.mul(x, a)) next.set(a);
        });
        m = std::move(next);
    }
    return m;
}

Subgroup centralizer(const Subgroup& h) {
    return subgroup_from_members(h.parent, set_centralizer(*h.parent, h.gens));
}

Subgroup center(const GroupHandle& g) {
    return subgroup_from_members(g, set_centralizer(*g, g->generators()));
}

std::vector<Subgroup> upper_central_series(const GroupHandle& g) {
    std::vector<Subgroup> series;
    series.push_back(center(g));
    while (true) {
        const Bitset& zk = series.back().members;
        if (series.back().order == g->size()) break;
        Bitset next(g->size());
        for (std::uint32_t x = 0; x < g->size(); ++x) {
            bool in = true;
            for (auto gen : g->generators())
                if (!zk.test(g->comm(x, gen))) {
                    in = false;
                    break;
                }
            if (in) next.set(x);
        }
        if (next == zk) break;
        series.push_back(subgroup_from_members(g, std::move(next)));
    }
    return series;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
    if (!a.same_parent(b)) fail(errc::mismatched_groups, "commutator of foreign subgroups");
    const auto& g = *a.parent;
    constexpr std::uint64_t kAllPairsLimit = std::uint64_t{1} << 22;

    if (a.order * b.order <= kAllPairsLimit) {
        Bitset comms(g.size());
        const auto bs = b.members.to_indices();
        a.members.for_each([&](std::uint32_t x) {
            for (auto y : bs) comms.set(g.comm(x, y));
        });
        return subgroup_closure(a.parent, comms.to_indices());
    }

    // Generator commutators, then normal closure under <A, B>.
    std::vector<std::uint32_t> seeds;
    for (auto x : a.gens)
        for (auto y : b.gens) seeds.push_back(g.comm(x, y));
    Subgroup k = subgroup_closure(a.parent, seeds);
    std::vector<std::uint32_t> conjugators = a.gens;
    conjugators.insert(conjugators.end(), b.gens.begin(), b.gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> add;
        for (auto x : k.gens)
            for (auto c : conjugators) {
                const std::uint32_t y = g.conj(x, c);
                if (!k.members.test(y)) add.push_back(y);
            }
        if (!add.empty()) {
            std::vector<std::uint32_t> seeds2 = k.gens;
            seeds2.insert(seeds2.end(), add.begin(), add.end());
            k = subgroup_closure(a.parent, seeds2);
            grew = true;
        }
    }
    return k;
}

Subgroup derived_subgroup(const GroupHandle& g) {
    const Subgroup whole = whole_group(g);
    return commutator_subgroup(whole, whole);
}

GroupHandle quotient_group(const GroupHandle& g, const Subgroup& n) {
    if (n.parent.get() != g.get()) fail(errc::mismatched_groups, "subgroup of another group");
    if (!is_normal(n)) fail(errc::not_normal, "quotient by a non-normal subgroup");
    return CosetGroup::make(g, n.members);
}

bool is_elementary_abelian(const GenericGroup& g) {
    if (g.size() == 1) return true;
    const std::uint32_t p = g.prime_power_base();
    if (p < 2) return false;
    if (!g.is_abelian()) return false;
    return exponent_divides(g, p);
}

bool exponent_divides(const GenericGroup& g, std::uint64_t k) {
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (g.pow(x, static_cast<std::int64_t>(k)) != g.identity()) return false;
    return true;
}

bool is_extraspecial(const GroupHandle& g) {
    const std::uint32_t p = g->prime_power_base();
    if (p < 2) return false;
    const Subgroup z = center(g);
    if (z.order != p) return false;
    const Subgroup der = derived_subgroup(g);
    if (!(der.members == z.members)) return false;
    auto q = quotient_group(g, z);
    if (!is_elementary_abelian(*q)) return false;
    // Frattini = G' G^p; with G' = Z and an elementary abelian quotient all
    // p-th powers land in Z, so Frattini = Z holds automatically.
    return true;
}

bool has_class_at_most_two(const GenericGroup& g) {
    const auto& gs = g.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            const std::uint32_t c = g.comm(gs[i], gs[j]);
            if (c == g.identity()) continue;
            for (auto k : gs)
                if (g.comm(c, k) != g.identity()) return false;
        }
    return true;
}

} // namespace cdlat
