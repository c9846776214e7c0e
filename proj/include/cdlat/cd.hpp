#pragma once

#include "cdlat/group_ops.hpp"
#include "cdlat/report.hpp"

#include <optional>

namespace cdlat {

// The subgroups attaining the maximal measure m(G) = max |H| |C_G(H)|,
// in canonical order, with their covering relation.
struct CdLattice {
    GroupHandle group;
    std::uint64_t m = 0;
    std::vector<Subgroup> members;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse;
    std::optional<std::uint32_t> chain_length; // set iff totally ordered
};

// |H| * |C_G(H)|; the centralizer comes from H's generators.
std::uint64_t cd_measure(const GroupHandle& g, const Subgroup& h);

// Enumerates every subgroup (layered for prime-power orders, join-closure
// otherwise, unless forced) and keeps the measure maximizers.
CdLattice cd_lattice(const GroupHandle& g, const Limits& lim = {},
                     std::optional<EnumeratorKind> enumerator = std::nullopt);

// Length n when the members form a chain H_0 < ... < H_n, absent otherwise.
std::optional<std::uint32_t> is_chain(const CdLattice& l);

// The lattice-theoretic facts about CD(G), each as a report entry:
//  (a) <H,K> = HK and HK is a member        (b) C_G(H) is a member and
//      C_G(C_G(H)) = H                       (c) meets stay members
//  (d) the minimum is abelian, normal and contains Z(G)
//  (e) the maximum is normal                 (f) H -> C_G(H) is an
//      order-reversing involution on the members.
// Normality stands in for "characteristic" in (d)/(e); computing Aut(G) is
// out of scope, and the report says so.
VerificationReport check_omnibus(const CdLattice& l);

// CD(M) for the maximal member M, recomputed with M as the ambient group,
// must coincide with CD(G).
VerificationReport check_maxmember(const GroupHandle& g, const Limits& lim = {});

// CD(G1 x G2) = { H1 x H2 : Hi in CD(Gi) }.
VerificationReport check_direct_product(const PcPresentationPtr& g1, const PcPresentationPtr& g2,
                                        const Limits& lim = {});

} // namespace cdlat
