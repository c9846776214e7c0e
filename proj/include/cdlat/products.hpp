#pragma once

#include "cdlat/limits.hpp"
#include "cdlat/presentation.hpp"

#include <optional>
#include <vector>

namespace cdlat {

// Action of Q's generators on K.  images[i], when present, lists the image
// of every K generator under conjugation by q_i (words over K's indexing);
// absent means q_i acts trivially.  inverse_images supply the inverse
// automorphism so bijectivity can be certified without enumerating K.
struct GeneratorAction {
    std::vector<std::optional<std::vector<Word>>> images;
    std::vector<std::optional<std::vector<Word>>> inverse_images;

    static GeneratorAction trivial(std::size_t q_rank) {
        GeneratorAction a;
        a.images.assign(q_rank, std::nullopt);
        a.inverse_images.assign(q_rank, std::nullopt);
        return a;
    }
};

// K x| Q with Q's generators first and K's after; conjugation words across
// the blocks encode the action.  Validates that every acting generator
// induces an automorphism of K (relations preserved, bijective) and that the
// assignment is compatible with Q's own relations, then runs the overlap
// consistency tests on the result.
PcPresentationPtr semidirect_product(const PcPresentationPtr& k, const PcPresentationPtr& q,
                                     const GeneratorAction& action, std::string name = "",
                                     const Limits& lim = {});

// G1 x G2 with G1's generators first: the trivial-action special case.
PcPresentationPtr direct_product(const PcPresentationPtr& a, const PcPresentationPtr& b,
                                 std::string name = "", const Limits& lim = {});

} // namespace cdlat
