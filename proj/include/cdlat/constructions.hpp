#pragma once

#include "cdlat/cd.hpp"
#include "cdlat/products.hpp"

#include <optional>

namespace cdlat {

// Smallest c in [0, p) missed by f(m) = m(m+1) mod p; exists for every prime.
std::uint32_t find_c(std::uint32_t p);

// --- the four chain constructions -------------------------------------------
// l1odd: order p^5 (p odd),  CD(P) = { Z(P), P }       (chain of length 1)
// l1n:   order p^6 (any p),  CD(P) = { Z(P), P },  Z(P) and P/Z(P)
//        elementary abelian of order p^3
// l2odd: order p^6 (p odd),  CD(P) = Z(P) < A < P      (chain of length 2)
// l2n:   order p^7 (any p),  CD(P) = Z(P) < A < P,  Z(P) and P/Z(P)
//        elementary abelian
PcPresentationPtr build_l1odd(std::uint32_t p);
PcPresentationPtr build_l1n(std::uint32_t p);
PcPresentationPtr build_l2odd(std::uint32_t p);
PcPresentationPtr build_l2n(std::uint32_t p);

struct ConstructionRecipe {
    std::string family; // l1odd | l1n | l2odd | l2n
    std::uint32_t p = 0;
    std::optional<std::uint32_t> c; // recorded for l2odd / l2n
};

PcPresentationPtr build_construction(const ConstructionRecipe& r);
ConstructionRecipe recipe_for(const std::string& family, std::uint32_t p);

// --- stock groups ------------------------------------------------------------

PcPresentationPtr cyclic_group(std::uint64_t n);
PcPresentationPtr elementary_abelian_group(std::uint32_t p, std::uint32_t rank);
// Dihedral group of order 2^k, k >= 3 (named by polygon: order 8 is "D4").
PcPresentationPtr dihedral_group(std::uint32_t order);
PcPresentationPtr quaternion8();
// Extraspecial of order p^3: exponent p (p odd; p = 2 gives the dihedral
// type), and the exponent-p^2 type for odd p.
PcPresentationPtr extraspecial_exponent_p(std::uint32_t p);
PcPresentationPtr extraspecial_exponent_p2(std::uint32_t p);
PcPresentationPtr symmetric3();

// Deterministic test corpus: cyclic and elementary abelian groups of order
// <= 81, dihedrals of order 8/16/32, the quaternion group, extraspecial
// groups of order 8 and 27, S3 and small direct products, plus the four
// constructions above at p in {2, 3} where defined.
std::vector<PcPresentationPtr> corpus();

// --- structural criteria ------------------------------------------------------

struct CriteriaResult {
    bool satisfied = false;
    std::string diagnostics;
    std::optional<Subgroup> witness; // the abelian normal subgroup for the l2 test

    explicit operator bool() const { return satisfied; }
};

// p odd, |P| = p^5, |Z| = p^2, P/Z extraspecial of exponent p and
// [Z_2(P), P] = Z(P).  True certifies a chain of length 1; false certifies
// nothing beyond the failed condition.
CriteriaResult check_l1_criteria(const GroupHandle& g, const Limits& lim = {});

// p odd, |P| = p^6, |Z| = p^2, |P'| = p^3, and some abelian normal subgroup
// A of order p^4 has [A, x] = Z(P) for every x outside A.  The search runs
// over all abelian normal candidates (every valid A contains Z, so they are
// pulled back from the order-p^2 subgroups of P/Z).
CriteriaResult check_l2_criteria(const GroupHandle& g, const Limits& lim = {});

// Bracket condition for one designated candidate: [A, x] = Z(P) for all
// x in P \ A.
bool l2_bracket_condition(const GroupHandle& g, const Subgroup& a, const Subgroup& z);

// --- the small centralizer lemma ---------------------------------------------

struct LemmaCentrResult {
    enum class Kind { witness, hypothesis_violation, no_witness } kind;
    std::uint32_t witness = 0;        // element id when kind == witness
    std::uint64_t centralizer_order = 0;
};

// For normal R, Q with Z(P) < R <= Q and |R / Z(P)| = p: whenever
// |P| > |Q| |[R,P]| there is x outside Q with |C_P(x)| >= p^2 |Z(P)|.
// The witness search is exhaustive; no_witness would falsify the statement.
LemmaCentrResult check_lemma_centr(const GroupHandle& p, const Subgroup& r, const Subgroup& q);

} // namespace cdlat
