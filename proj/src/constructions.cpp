#include "cdlat/constructions.hpp"

#include <algorithm>

namespace cdlat {

std::uint32_t find_c(std::uint32_t p) {
    if (!is_prime(p)) fail(errc::invalid_argument, "find_c needs a prime");
    std::vector<bool> hit(p, false);
    for (std::uint64_t m = 0; m < p; ++m) hit[(m * (m + 1)) % p] = true;
    for (std::uint32_t c = 0; c < p; ++c)
        if (!hit[c]) return c;
    fail(errc::invalid_argument, "f(m) = m(m+1) is surjective mod " + std::to_string(p));
}

namespace {

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) fail(errc::invalid_argument, "p must be prime");
}

void require_odd_prime(std::uint32_t p, const char* family) {
    require_prime(p);
    if (p == 2)
        fail(errc::invalid_argument, std::string(family) + " requires an odd prime");
}

} // namespace

// Generators ordered non-central first, central last, so every commutator
// relation [u, v] = w becomes a legal conjugation word v^u = v * w^{+-1}.

PcPresentationPtr build_l1odd(std::uint32_t p) {
    require_odd_prime(p, "l1odd");
    PcPresentationBuilder b("l1odd_p" + std::to_string(p), {p, p, p, p, p});
    b.generator_names({"x1", "x2", "t", "z1", "z2"});
    b.conjugate(0, 1, {{1, 1}, {2, p - 1}}); // [x1,x2] = t
    b.conjugate(0, 2, {{2, 1}, {3, 1}});     // [t,x1] = z1
    b.conjugate(1, 2, {{2, 1}, {4, 1}});     // [t,x2] = z2
    return b.build();
}

PcPresentationPtr build_l1n(std::uint32_t p) {
    require_prime(p);
    PcPresentationBuilder b("l1n_p" + std::to_string(p), {p, p, p, p, p, p});
    b.generator_names({"x1", "x2", "x3", "z12", "z13", "z23"});
    b.conjugate(0, 1, {{1, 1}, {3, p - 1}}); // [x1,x2] = z12
    b.conjugate(0, 2, {{2, 1}, {4, p - 1}}); // [x1,x3] = z13
    b.conjugate(1, 2, {{2, 1}, {5, p - 1}}); // [x2,x3] = z23
    return b.build();
}

PcPresentationPtr build_l2odd(std::uint32_t p) {
    require_odd_prime(p, "l2odd");
    const std::uint32_t c = find_c(p);
    PcPresentationBuilder b("l2odd_p" + std::to_string(p), {p, p, p, p, p, p});
    b.generator_names({"x1", "x2", "a1", "a2", "z1", "z2"});
    b.conjugate(0, 1, {{1, 1}, {2, p - 1}});        // [x1,x2] = a1
    b.conjugate(0, 2, {{2, 1}, {4, 1}});            // [a1,x1] = z1
    b.conjugate(1, 2, {{2, 1}, {4, 1}, {5, c}});    // [a1,x2] = z1 z2^c
    b.conjugate(0, 3, {{3, 1}, {5, 1}});            // [a2,x1] = z2
    b.conjugate(1, 3, {{3, 1}, {4, 1}});            // [a2,x2] = z1
    return b.build();
}

PcPresentationPtr build_l2n(std::uint32_t p) {
    require_prime(p);
    const std::uint32_t c = find_c(p);
    PcPresentationBuilder b("l2n_p" + std::to_string(p), {p, p, p, p, p, p, p});
    b.generator_names({"x1", "x2", "a1", "a2", "z", "z1", "z2"});
    b.conjugate(0, 1, {{1, 1}, {4, p - 1}});        // [x1,x2] = z
    b.conjugate(0, 2, {{2, 1}, {5, 1}});            // [a1,x1] = z1
    b.conjugate(1, 2, {{2, 1}, {5, 1}, {6, c}});    // [a1,x2] = z1 z2^c
    b.conjugate(0, 3, {{3, 1}, {6, 1}});            // [a2,x1] = z2
    b.conjugate(1, 3, {{3, 1}, {5, 1}});            // [a2,x2] = z1
    return b.build();
}

PcPresentationPtr build_construction(const ConstructionRecipe& r) {
    if (r.family == "l1odd") return build_l1odd(r.p);
    if (r.family == "l1n") return build_l1n(r.p);
    if (r.family == "l2odd") return build_l2odd(r.p);
    if (r.family == "l2n") return build_l2n(r.p);
    fail(errc::invalid_argument, "unknown construction family '" + r.family + "'");
}

ConstructionRecipe recipe_for(const std::string& family, std::uint32_t p) {
    ConstructionRecipe r{family, p, std::nullopt};
    if (family == "l2odd" || family == "l2n") {
        require_prime(p);
        r.c = find_c(p);
    }
    return r;
}

// ---------------------------------------------------------------------------
// stock groups

PcPresentationPtr cyclic_group(std::uint64_t n) {
    if (n < 2) fail(errc::invalid_argument, "cyclic group needs order >= 2");
    // One generator per prime factor with multiplicity; power chains link the
    // generators within each prime.
    std::vector<std::uint32_t> orders;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chain; // (index, next)
    std::uint64_t rest = n;
    for (std::uint64_t q = 2; rest > 1; ++q) {
        if (rest % q) continue;
        const auto first = static_cast<std::uint32_t>(orders.size());
        while (rest % q == 0) {
            orders.push_back(static_cast<std::uint32_t>(q));
            rest /= q;
        }
        for (std::uint32_t i = first; i + 1 < orders.size(); ++i) chain.push_back({i, i + 1});
    }
    PcPresentationBuilder b("C" + std::to_string(n), orders);
    for (auto [i, j] : chain) b.power(i, {{j, 1}});
    return b.build();
}

PcPresentationPtr elementary_abelian_group(std::uint32_t p, std::uint32_t rank) {
    require_prime(p);
    if (rank == 0) fail(errc::invalid_argument, "rank must be positive");
    PcPresentationBuilder b("C" + std::to_string(p) + "^" + std::to_string(rank),
                            std::vector<std::uint32_t>(rank, p));
    return b.build();
}

PcPresentationPtr dihedral_group(std::uint32_t order) {
    if (order < 8 || (order & (order - 1)) != 0)
        fail(errc::invalid_argument, "dihedral builder expects order 2^k >= 8");
    std::uint32_t k = 0;
    for (std::uint32_t v = order; v > 1; v >>= 1) ++k;
    // generators: b, a, a^2, a^4, ..., a^{2^{k-2}}
    PcPresentationBuilder b("D" + std::to_string(order / 2),
                            std::vector<std::uint32_t>(k, 2));
    std::vector<std::string> names{"b", "a"};
    for (std::uint32_t j = 2; j < k; ++j) names.push_back("a" + std::to_string(1u << (j - 1)));
    b.generator_names(std::move(names));
    for (std::uint32_t j = 1; j + 1 < k; ++j) b.power(j, {{j + 1, 1}});
    for (std::uint32_t j = 1; j + 1 < k; ++j) {
        // (a^{2^{j-1}})^b = a^{-2^{j-1}} = product of the higher a-generators
        Word w;
        for (std::uint32_t t = j; t < k; ++t) w.push_back({t, 1});
        b.conjugate(0, j, std::move(w));
    }
    return b.build();
}

PcPresentationPtr quaternion8() {
    PcPresentationBuilder b("Q8", {2, 2, 2});
    b.generator_names({"i", "j", "m"});
    b.power(0, {{2, 1}});
    b.power(1, {{2, 1}});
    b.conjugate(0, 1, {{1, 1}, {2, 1}}); // j^i = j * (-1)
    return b.build();
}

PcPresentationPtr extraspecial_exponent_p(std::uint32_t p) {
    require_prime(p);
    PcPresentationBuilder b("ES" + std::to_string(p) + "^3+", {p, p, p});
    b.generator_names({"x", "y", "z"});
    b.conjugate(0, 1, {{1, 1}, {2, p - 1}}); // [x,y] = z
    return b.build();
}

PcPresentationPtr extraspecial_exponent_p2(std::uint32_t p) {
    require_odd_prime(p, "the exponent-p^2 extraspecial type");
    PcPresentationBuilder b("ES" + std::to_string(p) + "^3-", {p, p, p});
    b.generator_names({"x", "y", "z"});
    b.power(0, {{2, 1}});                    // x^p = z
    b.conjugate(0, 1, {{1, 1}, {2, p - 1}}); // [x,y] = z
    return b.build();
}

PcPresentationPtr symmetric3() {
    PcPresentationBuilder b("S3", {2, 3});
    b.generator_names({"s", "r"});
    b.conjugate(0, 1, {{1, 2}}); // r^s = r^2
    return b.build();
}

std::vector<PcPresentationPtr> corpus() {
    std::vector<PcPresentationPtr> out;
    for (std::uint64_t n : {2, 3, 4, 5, 6, 8, 9, 16, 25, 27, 49, 64, 81})
        out.push_back(cyclic_group(n));
    out.push_back(elementary_abelian_group(2, 2));
    out.push_back(elementary_abelian_group(2, 3));
    out.push_back(elementary_abelian_group(2, 4));
    out.push_back(elementary_abelian_group(2, 6));
    out.push_back(elementary_abelian_group(3, 2));
    out.push_back(elementary_abelian_group(3, 3));
    out.push_back(elementary_abelian_group(3, 4));
    out.push_back(elementary_abelian_group(5, 2));
    out.push_back(elementary_abelian_group(7, 2));
    out.push_back(dihedral_group(8));
    out.push_back(dihedral_group(16));
    out.push_back(dihedral_group(32));
    out.push_back(quaternion8());
    out.push_back(extraspecial_exponent_p(3));
    out.push_back(extraspecial_exponent_p2(3));
    out.push_back(symmetric3());
    out.push_back(direct_product(cyclic_group(2), symmetric3(), "C2xS3"));
    out.push_back(direct_product(cyclic_group(3), symmetric3(), "C3xS3"));
    out.push_back(direct_product(cyclic_group(2), dihedral_group(8), "C2xD4"));
    out.push_back(direct_product(cyclic_group(4), cyclic_group(2), "C4xC2"));
    out.push_back(direct_product(cyclic_group(4), cyclic_group(4), "C4xC4"));
    out.push_back(build_l1odd(3));
    out.push_back(build_l1n(2));
    out.push_back(build_l1n(3));
    out.push_back(build_l2odd(3));
    out.push_back(build_l2n(2));
    out.push_back(build_l2n(3));
    return out;
}

// ---------------------------------------------------------------------------
// structural criteria

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

CriteriaResult check_l1_criteria(const GroupHandle& g, const Limits& lim) {
    (void)lim;
    const std::uint32_t p = g->prime_power_base();
    if (p < 2) return {false, "order is not a prime power", {}};
    if (p == 2) return {false, "p = 2", {}};
    if (g->size() != ipow(p, 5))
        return {false, "order is " + std::to_string(g->size()) + ", not p^5", {}};
    const Subgroup z = center(g);
    if (z.order != ipow(p, 2)) return {false, "|Z| = " + std::to_string(z.order) + ", not p^2", {}};
    auto q = quotient_group(g, z);
    if (!is_extraspecial(q)) return {false, "P/Z is not extraspecial", {}};
    if (!exponent_divides(*q, p)) return {false, "P/Z has exponent larger than p", {}};
    const auto ucs = upper_central_series(g);
    if (ucs.size() < 2) return {false, "upper central series stops below Z_2", {}};
    const Subgroup z2p = commutator_subgroup(ucs[1], whole_group(g));
    if (!(z2p.members == z.members)) return {false, "[Z_2(P), P] != Z(P)", {}};
    return {true, "chain of length 1 certified", {}};
}

bool l2_bracket_condition(const GroupHandle& g, const Subgroup& a, const Subgroup& z) {
    // With every [gen, x] central the map h -> [h, x] is a homomorphism on A,
    // so [A, x] is generated by the generator commutators.
    for (std::uint32_t x = 0; x < g->size(); ++x) {
        if (a.members.test(x)) continue;
        std::vector<std::uint32_t> comms;
        bool central = true;
        for (auto gen : a.gens) {
            const std::uint32_t c = g->comm(gen, x);
            if (!z.members.test(c)) {
                central = false;
                break;
            }
            comms.push_back(c);
        }
        if (!central) return false;
        if (subgroup_closure(g, comms).order != z.order) return false;
    }
    return true;
}

CriteriaResult check_l2_criteria(const GroupHandle& g, const Limits& lim) {
    const std::uint32_t p = g->prime_power_base();
    if (p < 2) return {false, "order is not a prime power", {}};
    if (p == 2) return {false, "p = 2", {}};
    if (g->size() != ipow(p, 6))
        return {false, "order is " + std::to_string(g->size()) + ", not p^6", {}};
    const Subgroup z = center(g);
    if (z.order != ipow(p, 2)) return {false, "|Z| = " + std::to_string(z.order) + ", not p^2", {}};
    const Subgroup der = derived_subgroup(g);
    if (der.order != ipow(p, 3))
        return {false, "|P'| = " + std::to_string(der.order) + ", not p^3", {}};

    // Any abelian normal A of order p^4 with [A,x] = Z(P) contains Z(P)
    // (the bracket lands inside a normal A), so it is the pullback of an
    // order-p^2 subgroup of P/Z.
    auto q = quotient_group(g, z);
    const auto* coset = dynamic_cast<const CosetGroup*>(q.get());
    SubgroupSet qsubs = all_subgroups_layered(q, lim);
    for (const auto& cand : qsubs.subgroups) {
        if (cand.order != ipow(p, 2)) continue;
        if (!is_normal(cand)) continue;
        Bitset members(g->size());
        for (std::uint32_t e = 0; e < g->size(); ++e)
            if (cand.members.test(coset->coset_of(e))) members.set(e);
        Subgroup a = subgroup_from_members(g, std::move(members));
        auto ag = SubgroupAsGroup::make(g, a.members, a.gens);
        if (!ag->is_abelian()) continue;
        if (!is_normal(a)) continue;
        if (l2_bracket_condition(g, a, z))
            return {true, "witness A = " + a.describe_gens(), a};
    }
    return {false, "no abelian normal subgroup of order p^4 satisfies the bracket condition", {}};
}

LemmaCentrResult check_lemma_centr(const GroupHandle& p, const Subgroup& r, const Subgroup& q) {
    if (r.parent.get() != p.get() || q.parent.get() != p.get())
        fail(errc::mismatched_groups, "subgroups of another group");
    const std::uint32_t pp = p->prime_power_base();
    if (pp < 2) fail(errc::invalid_argument, "the lemma is about p-groups");
    const Subgroup z = center(p);
    if (!(z.members.is_subset_of(r.members)) || r.order != z.order * pp || z.members == r.members)
        fail(errc::invalid_argument, "need Z(P) < R with |R/Z(P)| = p");
    if (!r.members.is_subset_of(q.members)) fail(errc::invalid_argument, "need R <= Q");
    if (!is_normal(r) || !is_normal(q)) fail(errc::invalid_argument, "R and Q must be normal");

    const Subgroup rp = commutator_subgroup(r, whole_group(p));
    if (p->size() <= q.order * rp.order) return {LemmaCentrResult::Kind::hypothesis_violation, 0, 0};

    const std::uint64_t needed = std::uint64_t{pp} * pp * z.order;
    for (std::uint32_t x = 0; x < p->size(); ++x) {
        if (q.members.test(x)) continue;
        const std::uint64_t cx = element_centralizer(*p, x).count();
        if (cx >= needed) return {LemmaCentrResult::Kind::witness, x, cx};
    }
    return {LemmaCentrResult::Kind::no_witness, 0, 0};
}

} // namespace cdlat
