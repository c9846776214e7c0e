#pragma once

#include "cdlat/error.hpp"
#include "cdlat/word.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cdlat {

// Normal-form exponent vector: e[i] in [0, p_i).
using Exponents = std::vector<std::uint32_t>;
using ExpSpan = std::span<const std::uint32_t>;

struct ConsistencyResult {
    bool ok = true;
    std::string detail; // description of the first failing overlap, empty when ok

    explicit operator bool() const { return ok; }
};

class PcPresentation;
using PcPresentationPtr = std::shared_ptr<const PcPresentation>;

// A finite solvable group given by a consistent polycyclic presentation:
// generators g_1..g_n of prime relative order p_i, power relations
// g_i^{p_i} = w_i and conjugation relations g_j^{g_i} = w_ij (i < j), where
// every relation word uses only generators of index > i.  Omitted power
// words mean g_i^{p_i} = 1; omitted conjugation words mean [g_i, g_j] = 1.
//
// Elements are exponent vectors in collected normal form
// g_1^{e_1} ... g_n^{e_n}; the mixed-radix index sum e_i * prod_{k>i} p_k is
// a bijection onto [0, order()).  All arithmetic is defined at presentation
// level and never enumerates the group.
//
// Instances are immutable; every method is const and safe to call from
// concurrent threads.
class PcPresentation {
  public:
    // --- structure ---------------------------------------------------------

    const std::string& name() const { return name_; }
    std::size_t rank() const { return orders_.size(); }
    std::uint32_t relative_order(std::uint32_t i) const { return orders_[i]; }
    const std::vector<std::uint32_t>& relative_orders() const { return orders_; }

    // Group order prod p_i; the builder guarantees it fits in uint64.
    std::uint64_t order() const { return order_; }

    // Empty word = identity.
    const Word& power_word(std::uint32_t i) const { return powers_[i]; }
    bool has_power(std::uint32_t i) const { return !powers_[i].empty(); }

    bool has_conjugate(std::uint32_t i, std::uint32_t j) const {
        return !conj_[i * rank() + j].empty();
    }
    // Defined only when has_conjugate(i, j).
    const Word& conjugate_word(std::uint32_t i, std::uint32_t j) const {
        return conj_[i * rank() + j];
    }

    bool has_generator_names() const { return !gen_names_.empty(); }
    std::string generator_name(std::uint32_t i) const;

    // True when relative orders, power words and conjugation words all agree
    // (names are ignored).
    bool same_relations(const PcPresentation& other) const;

    // All relative orders equal to one prime p; returns p or 0.
    std::uint32_t uniform_prime() const;

    // --- element arithmetic -------------------------------------------------

    Exponents identity_element() const { return Exponents(rank(), 0); }
    Exponents generator_element(std::uint32_t i) const;
    bool is_identity(ExpSpan a) const;

    // Collection to normal form.  Words with arbitrary signed exponents are
    // accepted; relation words must already be legal.
    Exponents collect(const SignedWord& w) const;
    Exponents evaluate(const Word& w) const;

    Exponents multiply(ExpSpan a, ExpSpan b) const;
    Exponents inverse(ExpSpan a) const;
    Exponents power(ExpSpan a, std::int64_t k) const;
    // a^b = b^-1 a b
    Exponents conjugate(ExpSpan a, ExpSpan b) const;
    // [a,b] = a^-1 b^-1 a b
    Exponents commutator(ExpSpan a, ExpSpan b) const;
    std::uint64_t element_order(ExpSpan a) const;

    // In-place right multiplications (the collection hot path).
    void rightmul_syllable(Exponents& c, std::uint32_t gen, std::uint32_t exp) const;
    void rightmul_word(Exponents& c, const Word& w) const;
    void rightmul_element(Exponents& c, ExpSpan b) const;

    // --- enumeration support -----------------------------------------------

    std::uint64_t index_of(ExpSpan a) const;
    Exponents element_at(std::uint64_t index) const;
    void element_at_into(std::uint64_t index, Exponents& out) const;

    // --- formatting ----------------------------------------------------------

    Word to_word(ExpSpan a) const;
    std::string format_element(ExpSpan a) const;
    std::string format_word(const Word& w) const;

    // --- consistency ----------------------------------------------------------

    // Runs the standard overlap tests: associativity words g_k(g_j g_i) =
    // (g_k g_j) g_i over generator triples k > j > i plus the power overlaps.
    // Failure (including a blown collection budget) is a return value.
    ConsistencyResult check_consistency() const;

    std::uint64_t collect_budget() const { return budget_; }

  private:
    friend class PcPresentationBuilder;
    PcPresentation() = default;

    std::string name_;
    std::vector<std::uint32_t> orders_;
    std::vector<std::string> gen_names_;
    std::vector<Word> powers_;      // rank entries, empty = identity
    std::vector<Word> conj_;        // rank*rank entries, empty = commuting
    std::vector<std::uint64_t> weights_; // mixed-radix weights, w_i = prod_{k>i} p_k
    std::uint64_t order_ = 1;
    std::uint64_t budget_ = 1'000'000;

    void run_collector(Exponents& c, std::vector<Syllable>& stack) const;
    Exponents gen_power(std::uint32_t g, std::int64_t e) const;
};

class PcPresentationBuilder {
  public:
    PcPresentationBuilder(std::string name, std::vector<std::uint32_t> relative_orders);

    PcPresentationBuilder& generator_names(std::vector<std::string> names);
    // g_i^{p_i} = w; w over generators with index > i.
    PcPresentationBuilder& power(std::uint32_t i, Word w);
    // g_j^{g_i} = w for i < j; w over generators with index > i.
    PcPresentationBuilder& conjugate(std::uint32_t i, std::uint32_t j, Word w);
    PcPresentationBuilder& collect_budget(std::uint64_t steps);

    // Validates structure (prime orders, legal words, order fits in uint64)
    // and freezes the presentation.  Does NOT run the consistency tests;
    // call check_consistency() for that.
    PcPresentationPtr build();

  private:
    std::string name_;
    std::vector<std::uint32_t> orders_;
    std::vector<std::string> gen_names_;
    std::map<std::uint32_t, Word> powers_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Word> conj_;
    std::uint64_t budget_ = 1'000'000;
};

bool is_prime(std::uint64_t n);

} // namespace cdlat
