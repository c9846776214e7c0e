#pragma once

#include "cdlat/subgroup.hpp"

namespace cdlat {

// Member set of C_G(x); single scan over the group.
Bitset element_centralizer(const GenericGroup& g, std::uint32_t x);

// C_G of a set, computed as the intersection of element centralizers of the
// given elements.  The first scan runs over the whole group, later ones only
// over the surviving candidates.
Bitset set_centralizer(const GenericGroup& g, std::span<const std::uint32_t> xs);

// C_G(H) from H's generators.
Subgroup centralizer(const Subgroup& h);

// {x : [x,g] = 1 for all g}; the generator set determines it.
Subgroup center(const GroupHandle& g);

// Z_1 = Z(G) <= Z_2 <= ...; stops at the first repeat (reaches G exactly for
// nilpotent groups).
std::vector<Subgroup> upper_central_series(const GroupHandle& g);

// [A,B]: generated from all element-pair commutators when |A||B| is small,
// otherwise from generator commutators plus normal closure inside <A,B>.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const GroupHandle& g);

// G/N as a CosetGroup; N must be normal.
GroupHandle quotient_group(const GroupHandle& g, const Subgroup& n);

bool is_elementary_abelian(const GenericGroup& g);
// Exponent divides k on the full universe.
bool exponent_divides(const GenericGroup& g, std::uint64_t k);
// Center, derived subgroup and Frattini subgroup coincide with order p and
// the central quotient is elementary abelian.
bool is_extraspecial(const GroupHandle& g);
// Nilpotency class at most 2 over the generator set: [[gi,gj],gk] = 1.
bool has_class_at_most_two(const GenericGroup& g);

} // namespace cdlat
