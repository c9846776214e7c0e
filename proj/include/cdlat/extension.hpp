#pragma once

#include "cdlat/cd.hpp"
#include "cdlat/constructions.hpp"

namespace cdlat {

// What is known about a group's center and CD lattice when it is too large
// to re-derive by enumeration.  Words are over the group's own generators.
struct CdCertificate {
    std::vector<Word> center_gens;
    std::vector<std::vector<Word>> members; // ascending by order
    // false: re-derived by full enumeration in this process.
    // true: carried by construction (the extension theorem / the stated
    //       properties of the seed groups).
    bool stated = true;
};

// Result of embedding H into G = (H x E) x| P: the presentation of G plus
// certified handles (generator index lists into G) for the distinguished
// subgroups.  N = A E complements H; x1 shears the chosen basis of H/Z(H)
// into E.
struct ExtensionData {
    PcPresentationPtr g;
    PcPresentationPtr h;
    std::uint32_t p = 0;
    std::uint32_t rank_r = 0;

    std::vector<std::uint32_t> p_gens;   // the acting group P
    std::vector<std::uint32_t> h_gens;   // image of H
    std::vector<std::uint32_t> e_gens;   // E
    std::vector<std::uint32_t> a_gens;   // A inside P
    std::vector<std::uint32_t> n_gens;   // N = A E
    std::vector<std::uint32_t> z_gens;   // claimed Z(G) = Z(H) x E x Z(P)
    std::vector<std::uint32_t> cph_gens; // claimed C_P(H) = <x2> A
    std::vector<std::uint32_t> v_reps;   // basis coset representatives of H/Z(H)

    CdCertificate h_cert; // what was known about H
    CdCertificate g_cert; // predicted CD(G) and claimed Z(G)
    bool h_enumerated = false;
};

// Builds G for a p-group H of class <= 2 with H/Z(H) elementary abelian and
// H in CD(H).  When H is small enough the hypotheses and CD(H) are
// recomputed here; otherwise a certificate must be supplied (its center
// generators are revalidated symbolically, and member measures are
// re-verified whenever the orders allow).
ExtensionData extend(const PcPresentationPtr& h,
                     const std::optional<CdCertificate>& certificate = std::nullopt,
                     const Limits& lim = {});

// CD(G) as predicted by the extension: Z(G), then N H~ for H~ in CD(H)
// ascending, then G.  Generator words over G.
std::vector<std::vector<Word>> predicted_cd_words(const ExtensionData& x);
// The same, realized inside an enumerated G.
std::vector<Subgroup> predicted_cd(const ExtensionData& x, const GroupHandle& g);

// Centralizer structure of G, exhaustive on small domains and sampled on
// large ones: the exact center product decomposition, C_H(x) = Z(H) off the
// action kernel, C_P(h) = <x2> A off Z(H), the centralizer product rule on
// the kernel, and C_G(hx) = <hx> Z(G) off it.
VerificationReport verify_gcentralizers(const ExtensionData& x, std::uint32_t sample_count,
                                        std::uint64_t seed = 0, const Limits& lim = {});

// Every predicted member attains |G| |Z(G)| = m(H) m(P) m(E), and the new
// minimal / maximal members extend the lattice strictly.
VerificationReport verify_extension_measures(const ExtensionData& x, const Limits& lim = {});

// Seeded random subgroups (closures of up to four random elements, plus
// perturbations of the predicted members); any measure above |G| |Z(G)|, or
// equal to it outside the predicted list, is a hard failure.
VerificationReport random_subgroup_probe(const ExtensionData& x, std::uint32_t trials,
                                         std::uint64_t seed = 0, const Limits& lim = {});

struct ChainResult {
    PcPresentationPtr pres;
    CdCertificate cert;
    std::uint32_t length = 0;
    // extension data for the last step when length >= 3
    std::optional<ExtensionData> last_step;
};

// A p-group whose CD lattice is a chain of length n: C_p, then the two
// explicit constructions, then iterated extensions (each step adds 2).
ChainResult chain_group(std::uint32_t p, std::uint32_t n, const Limits& lim = {});

} // namespace cdlat
