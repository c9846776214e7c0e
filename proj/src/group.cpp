#include "cdlat/group.hpp"

#include "cdlat/rng.hpp"

#include <algorithm>

namespace cdlat {

std::uint32_t GenericGroup::pow(std::uint32_t a, std::int64_t k) const {
    if (k < 0) return pow(inv(a), -k);
    std::uint32_t acc = identity();
    std::uint32_t base = a;
    auto e = static_cast<std::uint64_t>(k);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

std::uint64_t GenericGroup::element_order(std::uint32_t a) const {
    std::uint64_t k = 1;
    std::uint32_t x = a;
    while (x != identity()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool GenericGroup::is_abelian() const {
    const auto& gs = generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            if (!commutes(gs[i], gs[j])) return false;
    return true;
}

std::uint32_t GenericGroup::prime_power_base() const {
    std::uint64_t n = size();
    if (n == 1) return 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? static_cast<std::uint32_t>(p) : 0;
    }
    return static_cast<std::uint32_t>(n); // n prime
}

// ---------------------------------------------------------------------------
// PcGroup

std::shared_ptr<const PcGroup> PcGroup::enumerate(PcPresentationPtr pres, const Limits& lim) {
    if (pres->order() > lim.max_enum_elements)
        fail(errc::enumeration_bound, "group of order " + std::to_string(pres->order()) +
                                          " exceeds the enumeration bound " +
                                          std::to_string(lim.max_enum_elements));

    auto g = std::shared_ptr<PcGroup>(new PcGroup());
    g->pres_ = pres;
    g->size_ = static_cast<std::uint32_t>(pres->order());
    for (std::uint32_t i = 0; i < pres->rank(); ++i)
        g->gens_.push_back(static_cast<std::uint32_t>(pres->index_of(pres->generator_element(i))));

    if (g->size_ <= lim.max_table_elements) {
        const std::uint32_t n = g->size_;
        const std::uint32_t rank = static_cast<std::uint32_t>(pres->rank());
        const std::uint32_t last = rank - 1;
        const std::uint32_t p_last = pres->relative_order(last);
        g->table_.assign(std::size_t{n} * n, 0);

        // Row a: walk b in index order.  Incrementing b's last digit is a
        // right multiplication by the last generator; on digit wrap the
        // product is recomputed from scratch.
        Exponents a_exps, b_exps, cur;
        for (std::uint32_t a = 0; a < n; ++a) {
            pres->element_at_into(a, a_exps);
            cur = a_exps;
            std::uint32_t* row = g->table_.data() + std::size_t{a} * n;
            row[0] = a;
            for (std::uint32_t b = 1; b < n; ++b) {
                if (b % p_last != 0) {
                    pres->rightmul_syllable(cur, last, 1);
                } else {
                    pres->element_at_into(b, b_exps);
                    cur = a_exps;
                    pres->rightmul_element(cur, b_exps);
                }
                row[b] = static_cast<std::uint32_t>(pres->index_of(cur));
            }
        }

        g->invtab_.assign(n, 0);
        for (std::uint32_t a = 0; a < n; ++a) {
            const std::uint32_t* row = g->table_.data() + std::size_t{a} * n;
            for (std::uint32_t b = 0; b < n; ++b)
                if (row[b] == 0) {
                    g->invtab_[a] = b;
                    break;
                }
        }
    }
    return g;
}

namespace {
thread_local Exponents t_a, t_b;
}

std::uint32_t PcGroup::mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[std::size_t{a} * size_ + b];
    pres_->element_at_into(a, t_a);
    pres_->element_at_into(b, t_b);
    pres_->rightmul_element(t_a, t_b);
    return static_cast<std::uint32_t>(pres_->index_of(t_a));
}

std::uint32_t PcGroup::inv(std::uint32_t a) const {
    if (!invtab_.empty()) return invtab_[a];
    pres_->element_at_into(a, t_a);
    Exponents r = pres_->inverse(t_a);
    return static_cast<std::uint32_t>(pres_->index_of(r));
}

std::string PcGroup::describe(std::uint32_t a) const {
    pres_->element_at_into(a, t_a);
    return pres_->format_element(t_a);
}

// ---------------------------------------------------------------------------
// CosetGroup

std::shared_ptr<const CosetGroup> CosetGroup::make(GroupHandle base, const Bitset& n_members) {
    const std::uint32_t n = base->size();
    if (n_members.size() != n) fail(errc::mismatched_groups, "normal subgroup from another group");
    if (!n_members.test(base->identity()))
        fail(errc::not_subgroup, "normal subgroup must contain the identity");

    const auto members = n_members.to_indices();
    if (n % members.size() != 0)
        fail(errc::not_subgroup, "member count does not divide the group order");
    for (auto m : members) {
        if (!n_members.test(base->inv(m)))
            fail(errc::not_subgroup, "member set is not inverse-closed");
        for (auto g : base->generators())
            if (!n_members.test(base->conj(m, g)))
                fail(errc::not_normal, "subgroup is not normal in its parent");
    }

    auto q = std::shared_ptr<CosetGroup>(new CosetGroup());
    q->base_ = std::move(base);
    q->coset_of_.assign(n, UINT32_MAX);
    for (std::uint32_t e = 0; e < n; ++e) {
        if (q->coset_of_[e] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(q->reps_.size());
        q->reps_.push_back(e);
        for (auto m : members) q->coset_of_[q->base_->mul(e, m)] = id;
    }
    q->invtab_.resize(q->reps_.size());
    for (std::uint32_t c = 0; c < q->reps_.size(); ++c)
        q->invtab_[c] = q->coset_of_[q->base_->inv(q->reps_[c])];
    for (auto g : q->base_->generators()) {
        const std::uint32_t img = q->coset_of_[g];
        if (img != 0 && std::find(q->gens_.begin(), q->gens_.end(), img) == q->gens_.end())
            q->gens_.push_back(img);
    }
    return q;
}

std::string CosetGroup::describe(std::uint32_t a) const {
    return base_->describe(reps_[a]) + "*N";
}

// ---------------------------------------------------------------------------
// SubgroupAsGroup

std::shared_ptr<const SubgroupAsGroup> SubgroupAsGroup::make(GroupHandle base,
                                                             const Bitset& members,
                                                             const std::vector<std::uint32_t>& gens) {
    if (members.size() != base->size())
        fail(errc::mismatched_groups, "member set from another group");
    if (!members.test(base->identity()))
        fail(errc::not_subgroup, "subgroup must contain the identity");

    auto h = std::shared_ptr<SubgroupAsGroup>(new SubgroupAsGroup());
    h->base_ = std::move(base);
    h->elems_ = members.to_indices();
    h->local_.assign(h->base_->size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < h->elems_.size(); ++i) h->local_[h->elems_[i]] = i;
    for (auto g : gens) {
        if (!members.test(g)) fail(errc::not_subgroup, "generator outside the member set");
        if (g != 0) h->gens_.push_back(h->local_[g]);
    }
    return h;
}

// ---------------------------------------------------------------------------

AxiomCheckResult check_group_axioms(const GenericGroup& g, std::uint64_t samples,
                                    std::uint32_t exhaustive_cap, std::uint64_t seed) {
    const std::uint32_t n = g.size();
    auto bad = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    };
    if (n <= exhaustive_cap) {
        for (std::uint32_t a = 0; a < n; ++a) {
            if (g.mul(a, g.identity()) != a || g.mul(g.identity(), a) != a)
                return {false, "identity fails at " + std::to_string(a)};
            if (g.mul(a, g.inv(a)) != g.identity() || g.mul(g.inv(a), a) != g.identity())
                return {false, "inverse fails at " + std::to_string(a)};
        }
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return {false, bad(a, b, c)};
        return {};
    }
    DetRng rng(seed);
    for (std::uint64_t t = 0; t < samples; ++t) {
        const auto a = static_cast<std::uint32_t>(rng.below(n));
        const auto b = static_cast<std::uint32_t>(rng.below(n));
        const auto c = static_cast<std::uint32_t>(rng.below(n));
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return {false, bad(a, b, c)};
        if (g.mul(a, g.inv(a)) != g.identity() || g.mul(g.inv(a), a) != g.identity())
            return {false, "inverse fails at " + std::to_string(a)};
    }
    return {};
}

} // namespace cdlat
