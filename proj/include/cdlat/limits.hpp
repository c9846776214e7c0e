#pragma once

#include <cstdint>

namespace cdlat {

// Resource bounds shared across the library.  Presentation-level arithmetic
// is never bounded; anything that enumerates elements or subgroups is.
struct Limits {
    // Largest group that may be enumerated element-by-element.
    std::uint64_t max_enum_elements = std::uint64_t{1} << 18;
    // Largest group for which a full multiplication table is cached.
    std::uint64_t max_table_elements = 4096;
    // Largest group accepted by the join-closure subgroup enumerator.
    std::uint64_t max_oracle_elements = 512;
    // Largest group accepted by full-subgroup-lattice computations.
    std::uint64_t max_cd_elements = 4096;
    // Hard cap on the number of subgroups any enumeration may produce.
    std::uint64_t max_subgroups = 5'000'000;
    // Collection step budget per word; exceeding it is evidence of an
    // inconsistent presentation.
    std::uint64_t collect_budget = 1'000'000;
    // Worker threads for the scan-heavy verification paths.
    unsigned threads = 1;
};

} // namespace cdlat
