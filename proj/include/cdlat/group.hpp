#pragma once

#include "cdlat/bitset.hpp"
#include "cdlat/limits.hpp"
#include "cdlat/presentation.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cdlat {

// An abstract finite group over a dense element universe [0, size()).
// Element 0 is the identity in every realization.  Implementations are
// immutable after construction and safe for concurrent callers.
class GenericGroup {
  public:
    virtual ~GenericGroup() = default;

    virtual std::uint32_t size() const = 0;
    virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t inv(std::uint32_t a) const = 0;
    // A generating set (element ids); may be empty for the trivial group.
    virtual const std::vector<std::uint32_t>& generators() const = 0;
    virtual std::string describe(std::uint32_t a) const = 0;

    std::uint32_t identity() const { return 0; }

    std::uint32_t conj(std::uint32_t a, std::uint32_t b) const { // a^b
        return mul(inv(b), mul(a, b));
    }
    std::uint32_t comm(std::uint32_t a, std::uint32_t b) const { // [a,b]
        return mul(inv(a), mul(inv(b), mul(a, b)));
    }
    bool commutes(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }
    std::uint32_t pow(std::uint32_t a, std::int64_t k) const;
    std::uint64_t element_order(std::uint32_t a) const;

    bool is_abelian() const;
    // Returns p when size() is a nontrivial power of the prime p, 1 for the
    // trivial group, 0 otherwise.
    std::uint32_t prime_power_base() const;
};

using GroupHandle = std::shared_ptr<const GenericGroup>;

// Enumerated realization of a pc presentation.  Element ids are the
// mixed-radix indices of the normal forms.  Groups small enough get a full
// multiplication table; larger ones multiply through collection.
class PcGroup final : public GenericGroup {
  public:
    static std::shared_ptr<const PcGroup> enumerate(PcPresentationPtr pres,
                                                    const Limits& lim = {});

    std::uint32_t size() const override { return size_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override;
    std::uint32_t inv(std::uint32_t a) const override;
    const std::vector<std::uint32_t>& generators() const override { return gens_; }
    std::string describe(std::uint32_t a) const override;

    const PcPresentation& presentation() const { return *pres_; }
    const PcPresentationPtr& presentation_ptr() const { return pres_; }
    bool has_table() const { return !table_.empty(); }

    std::uint32_t element_of(ExpSpan e) const {
        return static_cast<std::uint32_t>(pres_->index_of(e));
    }
    Exponents exponents_of(std::uint32_t a) const { return pres_->element_at(a); }

  private:
    PcGroup() = default;

    PcPresentationPtr pres_;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> table_;  // size*size when cached
    std::vector<std::uint32_t> invtab_; // size when cached
    std::vector<std::uint32_t> gens_;
};

// Quotient realization G/N.  Elements are cosets ordered by their minimal
// member, multiplied representative-wise.
class CosetGroup final : public GenericGroup {
  public:
    // N must be the member set of a normal subgroup of base; this is
    // revalidated here (identity, inverses, conjugation by generators).
    static std::shared_ptr<const CosetGroup> make(GroupHandle base, const Bitset& normal_members);

    std::uint32_t size() const override { return static_cast<std::uint32_t>(reps_.size()); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return coset_of_[base_->mul(reps_[a], reps_[b])];
    }
    std::uint32_t inv(std::uint32_t a) const override { return invtab_[a]; }
    const std::vector<std::uint32_t>& generators() const override { return gens_; }
    std::string describe(std::uint32_t a) const override;

    const GroupHandle& base() const { return base_; }
    std::uint32_t coset_of(std::uint32_t base_elem) const { return coset_of_[base_elem]; }
    std::uint32_t representative(std::uint32_t c) const { return reps_[c]; }

  private:
    CosetGroup() = default;

    GroupHandle base_;
    std::vector<std::uint32_t> coset_of_;
    std::vector<std::uint32_t> reps_;
    std::vector<std::uint32_t> invtab_;
    std::vector<std::uint32_t> gens_;
};

// A subgroup viewed as a group in its own right (ambient-group recursion,
// e.g. recomputing a lattice inside a maximal member).
class SubgroupAsGroup final : public GenericGroup {
  public:
    static std::shared_ptr<const SubgroupAsGroup> make(GroupHandle base, const Bitset& members,
                                                       const std::vector<std::uint32_t>& gens);

    std::uint32_t size() const override { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return local_[base_->mul(elems_[a], elems_[b])];
    }
    std::uint32_t inv(std::uint32_t a) const override { return local_[base_->inv(elems_[a])]; }
    const std::vector<std::uint32_t>& generators() const override { return gens_; }
    std::string describe(std::uint32_t a) const override { return base_->describe(elems_[a]); }

    const GroupHandle& base() const { return base_; }
    std::uint32_t to_base(std::uint32_t local) const { return elems_[local]; }
    std::uint32_t to_local(std::uint32_t base_elem) const { return local_[base_elem]; }

  private:
    SubgroupAsGroup() = default;

    GroupHandle base_;
    std::vector<std::uint32_t> elems_; // ascending base ids
    std::vector<std::uint32_t> local_;
    std::vector<std::uint32_t> gens_;
};

struct AxiomCheckResult {
    bool ok = true;
    std::string detail;
};

// Exhaustive associativity/inverse check up to exhaustive_cap elements,
// sampled triples above.
AxiomCheckResult check_group_axioms(const GenericGroup& g, std::uint64_t samples = 100000,
                                    std::uint32_t exhaustive_cap = 512, std::uint64_t seed = 0);

} // namespace cdlat
