#include "cdlat/products.hpp"

#include <unordered_set>

namespace cdlat {

namespace {

// An endomorphism of K given by generator images (collected elements).
using GenImages = std::vector<Exponents>;

GenImages identity_images(const PcPresentation& k) {
    GenImages out;
    for (std::uint32_t i = 0; i < k.rank(); ++i) out.push_back(k.generator_element(i));
    return out;
}

Exponents apply_images(const PcPresentation& k, const GenImages& img, ExpSpan e) {
    Exponents c = k.identity_element();
    for (std::uint32_t i = 0; i < k.rank(); ++i)
        if (e[i]) k.rightmul_element(c, k.power(img[i], e[i]));
    return c;
}

GenImages compose(const PcPresentation& k, const GenImages& first, const GenImages& second) {
    GenImages out;
    out.reserve(first.size());
    for (const auto& e : first) out.push_back(apply_images(k, second, e));
    return out;
}

bool images_equal(const GenImages& a, const GenImages& b) { return a == b; }

// Checks that the images define an endomorphism: every defining relation of
// K is preserved.
void require_endomorphism(const PcPresentation& k, const GenImages& img,
                          const std::string& who) {
    for (std::uint32_t i = 0; i < k.rank(); ++i) {
        Exponents lhs = k.power(img[i], k.relative_order(i));
        Exponents rhs = apply_images(k, img, k.evaluate(k.power_word(i)));
        if (lhs != rhs)
            fail(errc::invalid_argument,
                 who + ": power relation of generator " + std::to_string(i + 1) +
                     " is not preserved (action is not an automorphism)");
    }
    for (std::uint32_t i = 0; i < k.rank(); ++i)
        for (std::uint32_t j = i + 1; j < k.rank(); ++j) {
            Exponents lhs = k.conjugate(img[j], img[i]);
            Exponents target = k.has_conjugate(i, j) ? k.evaluate(k.conjugate_word(i, j))
                                                     : k.generator_element(j);
            Exponents rhs = apply_images(k, img, target);
            if (lhs != rhs)
                fail(errc::invalid_argument,
                     who + ": conjugation relation (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") is not preserved (action is not an automorphism)");
        }
}

// Bijectivity: either via a supplied inverse (checked symbolically) or, for
// enumerable K, by closing the images.
void require_bijective(const PcPresentation& k, const GenImages& img,
                       const std::optional<std::vector<Word>>& inverse, const Limits& lim,
                       const std::string& who) {
    if (inverse) {
        GenImages inv;
        for (const auto& w : *inverse) inv.push_back(k.evaluate(w));
        require_endomorphism(k, inv, who + " (inverse)");
        GenImages round = compose(k, img, inv);
        GenImages round2 = compose(k, inv, img);
        if (!images_equal(round, identity_images(k)) || !images_equal(round2, identity_images(k)))
            fail(errc::invalid_argument, who + ": supplied inverse does not invert the action");
        return;
    }
    if (k.order() > lim.max_enum_elements)
        fail(errc::invalid_argument,
             who + ": group too large to certify surjectivity; supply inverse images");
    // <images> must be all of K.
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<Exponents> list{k.identity_element()};
    for (std::size_t head = 0; head < list.size(); ++head) {
        for (const auto& g : img) {
            Exponents y = k.multiply(list[head], g);
            if (seen.insert(k.index_of(y)).second) list.push_back(std::move(y));
        }
    }
    if (seen.size() != k.order())
        fail(errc::invalid_argument, who + ": images do not generate the whole group");
}

} // namespace

PcPresentationPtr semidirect_product(const PcPresentationPtr& kp, const PcPresentationPtr& qp,
                                     const GeneratorAction& action, std::string name,
                                     const Limits& lim) {
    const PcPresentation& k = *kp;
    const PcPresentation& q = *qp;
    const std::uint32_t nq = static_cast<std::uint32_t>(q.rank());
    const std::uint32_t nk = static_cast<std::uint32_t>(k.rank());
    if (action.images.size() != nq)
        fail(errc::invalid_argument, "action must assign one entry per acting generator");

    // Collect the per-generator automorphisms.
    std::vector<GenImages> phi(nq);
    for (std::uint32_t i = 0; i < nq; ++i) {
        if (!action.images[i]) {
            phi[i] = identity_images(k);
            continue;
        }
        if (action.images[i]->size() != nk)
            fail(errc::invalid_argument, "action images must cover every generator of K");
        for (const auto& w : *action.images[i]) phi[i].push_back(k.evaluate(w));
        const std::string who = "action of generator " + std::to_string(i + 1);
        require_endomorphism(k, phi[i], who);
        const std::optional<std::vector<Word>>& inv =
            i < action.inverse_images.size() ? action.inverse_images[i] : std::nullopt;
        require_bijective(k, phi[i], inv, lim, who);
    }

    // Compatibility with Q's relations: the assignment must extend to a
    // homomorphism Q -> Aut(K).  For a word u over Q's generators, A_u is the
    // composite automorphism (right action, leftmost applied first).
    auto map_of_word = [&](const Word& w) {
        GenImages m = identity_images(k);
        for (const auto& s : w)
            for (std::uint32_t t = 0; t < s.exp; ++t) m = compose(k, m, phi[s.gen]);
        return m;
    };
    for (std::uint32_t i = 0; i < nq; ++i) {
        GenImages lhs = identity_images(k);
        for (std::uint32_t t = 0; t < q.relative_order(i); ++t) lhs = compose(k, lhs, phi[i]);
        GenImages rhs = map_of_word(q.power_word(i));
        if (!images_equal(lhs, rhs))
            fail(errc::invalid_argument,
                 "action incompatible with the power relation of acting generator " +
                     std::to_string(i + 1));
    }
    for (std::uint32_t i = 0; i < nq; ++i)
        for (std::uint32_t j = i + 1; j < nq; ++j) {
            // q_j q_i = q_i (q_j^{q_i})  =>  A_{q_i} A_{q_j} = A_{q_j^{q_i}} A_{q_i}
            Word tail = q.has_conjugate(i, j) ? q.conjugate_word(i, j) : Word{{j, 1}};
            GenImages lhs = compose(k, phi[j], phi[i]);
            GenImages rhs = compose(k, phi[i], map_of_word(tail));
            if (!images_equal(lhs, rhs))
                fail(errc::invalid_argument,
                     "action incompatible with the conjugation relation (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ") of the acting group");
        }

    // Assemble: Q's generators first, K's after.
    std::vector<std::uint32_t> orders = q.relative_orders();
    orders.insert(orders.end(), k.relative_orders().begin(), k.relative_orders().end());
    if (name.empty()) name = q.name() + " x| " + k.name();
    PcPresentationBuilder b(std::move(name), std::move(orders));

    std::vector<std::string> names;
    bool any_names = q.has_generator_names() || k.has_generator_names();
    if (any_names) {
        for (std::uint32_t i = 0; i < nq; ++i) names.push_back(q.generator_name(i));
        for (std::uint32_t j = 0; j < nk; ++j) names.push_back(k.generator_name(j));
        b.generator_names(std::move(names));
    }

    auto shift_word = [&](const Word& w, std::uint32_t delta) {
        Word out = w;
        for (auto& s : out) s.gen += delta;
        return out;
    };

    for (std::uint32_t i = 0; i < nq; ++i)
        if (q.has_power(i)) b.power(i, q.power_word(i));
    for (std::uint32_t j = 0; j < nk; ++j)
        if (k.has_power(j)) b.power(nq + j, shift_word(k.power_word(j), nq));

    for (std::uint32_t i = 0; i < nq; ++i)
        for (std::uint32_t j = i + 1; j < nq; ++j)
            if (q.has_conjugate(i, j)) b.conjugate(i, j, q.conjugate_word(i, j));
    for (std::uint32_t i = 0; i < nk; ++i)
        for (std::uint32_t j = i + 1; j < nk; ++j)
            if (k.has_conjugate(i, j)) b.conjugate(nq + i, nq + j, shift_word(k.conjugate_word(i, j), nq));

    for (std::uint32_t i = 0; i < nq; ++i) {
        if (!action.images[i]) continue;
        for (std::uint32_t j = 0; j < nk; ++j) {
            const Word img = k.to_word(phi[i][j]);
            if (img.size() == 1 && img[0].gen == j && img[0].exp == 1) continue; // fixed
            b.conjugate(i, nq + j, shift_word(img, nq));
        }
    }

    auto result = b.build();
    if (auto c = result->check_consistency(); !c.ok)
        fail(errc::invalid_argument, "product presentation failed consistency: " + c.detail);
    return result;
}

PcPresentationPtr direct_product(const PcPresentationPtr& a, const PcPresentationPtr& b,
                                 std::string name, const Limits& lim) {
    if (name.empty()) name = a->name() + " x " + b->name();
    return semidirect_product(b, a, GeneratorAction::trivial(a->rank()), std::move(name), lim);
}

} // namespace cdlat
