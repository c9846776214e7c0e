#include "cdlat/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace cdlat {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// builder

PcPresentationBuilder::PcPresentationBuilder(std::string name,
                                             std::vector<std::uint32_t> relative_orders)
    : name_(std::move(name)), orders_(std::move(relative_orders)) {}

PcPresentationBuilder& PcPresentationBuilder::generator_names(std::vector<std::string> names) {
    gen_names_ = std::move(names);
    return *this;
}

PcPresentationBuilder& PcPresentationBuilder::power(std::uint32_t i, Word w) {
    powers_[i] = std::move(w);
    return *this;
}

PcPresentationBuilder& PcPresentationBuilder::conjugate(std::uint32_t i, std::uint32_t j, Word w) {
    conj_[{i, j}] = std::move(w);
    return *this;
}

PcPresentationBuilder& PcPresentationBuilder::collect_budget(std::uint64_t steps) {
    budget_ = steps;
    return *this;
}

namespace {

// Drops zero-exponent syllables and reduces exponents mod the relative
// orders; rejects anything referencing an illegal generator.
Word normalize_relation_word(const Word& w, const std::vector<std::uint32_t>& orders,
                             const std::string& what) {
    Word out;
    for (const auto& s : w) {
        if (s.gen >= orders.size())
            fail(errc::invalid_argument, what + ": generator index out of range");
        const std::uint32_t p = orders[s.gen];
        const std::uint32_t e = s.exp % p;
        if (e != 0) out.push_back({s.gen, e});
    }
    return out;
}

} // namespace

PcPresentationPtr PcPresentationBuilder::build() {
    if (orders_.empty()) fail(errc::invalid_argument, "presentation needs at least one generator");
    for (auto p : orders_)
        if (!is_prime(p)) fail(errc::invalid_argument, "relative orders must be prime");
    if (!gen_names_.empty() && gen_names_.size() != orders_.size())
        fail(errc::invalid_argument, "generator name count does not match rank");

    auto pres = std::shared_ptr<PcPresentation>(new PcPresentation());
    pres->name_ = name_;
    pres->orders_ = orders_;
    pres->gen_names_ = gen_names_;
    pres->budget_ = budget_;

    const std::size_t n = orders_.size();
    pres->powers_.assign(n, {});
    pres->conj_.assign(n * n, {});

    for (auto& [i, w] : powers_) {
        if (i >= n) fail(errc::invalid_argument, "power relation for unknown generator");
        pres->powers_[i] = normalize_relation_word(w, orders_, "power word");
        for (const auto& s : pres->powers_[i])
            if (s.gen <= i) fail(errc::invalid_argument, "power word must use generators of higher index");
    }
    for (auto& [ij, w] : conj_) {
        auto [i, j] = ij;
        if (i >= j || j >= n) fail(errc::invalid_argument, "conjugation relation needs i < j < rank");
        if (w.empty()) fail(errc::invalid_argument, "conjugation word may not be empty");
        Word nw = normalize_relation_word(w, orders_, "conjugation word");
        for (const auto& s : nw)
            if (s.gen <= i) fail(errc::invalid_argument, "conjugation word must use generators of higher index");
        // g_j^{g_i} = g_j means the pair commutes; store as absent.
        if (nw.size() == 1 && nw[0].gen == j && nw[0].exp == 1) continue;
        if (nw.empty()) fail(errc::invalid_argument, "conjugation word collapses to identity");
        pres->conj_[i * n + j] = std::move(nw);
    }

    std::uint64_t order = 1;
    for (auto p : orders_) {
        if (order > (std::uint64_t{1} << 62) / p)
            fail(errc::invalid_argument, "group order exceeds 2^62");
        order *= p;
    }
    pres->order_ = order;
    pres->weights_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) pres->weights_[i - 1] = pres->weights_[i] * orders_[i];
    return pres;
}

// ---------------------------------------------------------------------------
// collection

namespace {

inline void push_reversed(std::vector<Syllable>& stack, const Word& w) {
    for (std::size_t t = w.size(); t-- > 0;) stack.push_back(w[t]);
}

} // namespace

// Collection from the left with an explicit work stack.  Invariant: the group
// element being computed equals c * product of the stack read from back to
// front.  Each iteration pops the leftmost pending syllable g_j^e and merges
// one g_j into c, conjugating the trailing part of c (indices > j) across it.
void PcPresentation::run_collector(Exponents& c, std::vector<Syllable>& stack) const {
    const std::size_t n = rank();
    std::uint64_t steps = 0;

    int top = -1;
    for (std::size_t i = n; i-- > 0;)
        if (c[i]) { top = static_cast<int>(i); break; }

    while (!stack.empty()) {
        if (++steps > budget_)
            fail(errc::collect_budget,
                 "collection exceeded " + std::to_string(budget_) +
                     " steps (presentation is likely inconsistent)");

        const Syllable s = stack.back();
        stack.pop_back();
        const std::uint32_t j = s.gen;
        const std::uint32_t p = orders_[j];

        if (top <= static_cast<int>(j)) {
            c[j] += s.exp;
            if (c[j] >= p) {
                c[j] -= p;
                push_reversed(stack, powers_[j]);
            }
            if (c[j]) {
                top = std::max(top, static_cast<int>(j));
            } else if (top == static_cast<int>(j)) {
                top = -1;
                for (std::size_t i = j; i-- > 0;)
                    if (c[i]) { top = static_cast<int>(i); break; }
            }
            continue;
        }

        // c = A * B with B supported on indices > j:
        //   c * g_j^e * rest  =  A * g_j * B^{g_j} * g_j^{e-1} * rest
        if (s.exp > 1) stack.push_back({j, s.exp - 1});
        for (std::size_t k = static_cast<std::size_t>(top); k > j; --k) {
            const std::uint32_t ek = c[k];
            if (!ek) continue;
            c[k] = 0;
            const Word& w = conj_[j * n + k];
            if (w.empty()) {
                stack.push_back({static_cast<std::uint32_t>(k), ek});
            } else {
                for (std::uint32_t t = 0; t < ek; ++t) push_reversed(stack, w);
            }
        }
        c[j] += 1;
        if (c[j] == p) {
            c[j] = 0;
            push_reversed(stack, powers_[j]);
        }
        top = -1;
        for (std::size_t i = j + 1; i-- > 0;)
            if (c[i]) { top = static_cast<int>(i); break; }
    }
}

namespace {
thread_local std::vector<Syllable> t_stack;
}

void PcPresentation::rightmul_syllable(Exponents& c, std::uint32_t gen, std::uint32_t exp) const {
    if (gen >= rank()) fail(errc::invalid_argument, "generator index out of range");
    exp %= orders_[gen];
    if (!exp) return;
    auto& stack = t_stack;
    stack.clear();
    stack.push_back({gen, exp});
    run_collector(c, stack);
}

void PcPresentation::rightmul_word(Exponents& c, const Word& w) const {
    auto& stack = t_stack;
    stack.clear();
    push_reversed(stack, w);
    run_collector(c, stack);
}

void PcPresentation::rightmul_element(Exponents& c, ExpSpan b) const {
    auto& stack = t_stack;
    stack.clear();
    for (std::size_t i = rank(); i-- > 0;)
        if (b[i]) stack.push_back({static_cast<std::uint32_t>(i), b[i]});
    run_collector(c, stack);
}

Exponents PcPresentation::generator_element(std::uint32_t i) const {
    if (i >= rank()) fail(errc::invalid_argument, "generator index out of range");
    Exponents e(rank(), 0);
    e[i] = 1;
    return e;
}

bool PcPresentation::is_identity(ExpSpan a) const {
    for (auto e : a)
        if (e) return false;
    return true;
}

Exponents PcPresentation::evaluate(const Word& w) const {
    Exponents c(rank(), 0);
    for (const auto& s : w) {
        if (s.gen >= rank()) fail(errc::invalid_argument, "generator index out of range");
        rightmul_syllable(c, s.gen, s.exp % orders_[s.gen]);
    }
    return c;
}

// g^e for arbitrary signed e: split e = q*p + r with r in [0,p); g^p is the
// power-word element, which commutes with g.
Exponents PcPresentation::gen_power(std::uint32_t g, std::int64_t e) const {
    const std::int64_t p = orders_[g];
    std::int64_t q = e / p, r = e % p;
    if (r < 0) { r += p; q -= 1; }
    Exponents c(rank(), 0);
    if (r) rightmul_syllable(c, g, static_cast<std::uint32_t>(r));
    if (q != 0 && has_power(g)) {
        Exponents gp = evaluate(powers_[g]);
        rightmul_element(c, power(gp, q));
    }
    return c;
}

Exponents PcPresentation::collect(const SignedWord& w) const {
    Exponents c(rank(), 0);
    for (const auto& s : w) {
        if (s.gen >= rank()) fail(errc::invalid_argument, "generator index out of range");
        if (s.exp == 0) continue;
        if (s.exp > 0 && s.exp < orders_[s.gen]) {
            rightmul_syllable(c, s.gen, static_cast<std::uint32_t>(s.exp));
        } else {
            rightmul_element(c, gen_power(s.gen, s.exp));
        }
    }
    return c;
}

Exponents PcPresentation::multiply(ExpSpan a, ExpSpan b) const {
    Exponents c(a.begin(), a.end());
    rightmul_element(c, b);
    return c;
}

// Solve a * x = 1 position by position; right-multiplying by g_i^k never
// changes exponents below index i, so the recorded syllables are already the
// normal form of the inverse.
Exponents PcPresentation::inverse(ExpSpan a) const {
    Exponents t(a.begin(), a.end());
    Exponents x(rank(), 0);
    for (std::uint32_t i = 0; i < rank(); ++i) {
        if (!t[i]) continue;
        const std::uint32_t k = orders_[i] - t[i];
        rightmul_syllable(t, i, k);
        x[i] = k;
    }
    return x;
}

Exponents PcPresentation::power(ExpSpan a, std::int64_t k) const {
    if (k < 0) {
        Exponents ai = inverse(a);
        return power(ai, -k);
    }
    Exponents acc = identity_element();
    Exponents base(a.begin(), a.end());
    std::uint64_t e = static_cast<std::uint64_t>(k);
    while (e) {
        if (e & 1) rightmul_element(acc, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return acc;
}

Exponents PcPresentation::conjugate(ExpSpan a, ExpSpan b) const {
    Exponents c = inverse(b);
    rightmul_element(c, a);
    rightmul_element(c, b);
    return c;
}

Exponents PcPresentation::commutator(ExpSpan a, ExpSpan b) const {
    Exponents c = inverse(a);
    Exponents bi = inverse(b);
    rightmul_element(c, bi);
    rightmul_element(c, a);
    rightmul_element(c, b);
    return c;
}

std::uint64_t PcPresentation::element_order(ExpSpan a) const {
    if (is_identity(a)) return 1;
    Exponents acc(a.begin(), a.end());
    std::uint64_t k = 1;
    while (!is_identity(acc)) {
        rightmul_element(acc, a);
        ++k;
        if (k > order()) fail(errc::invalid_argument, "element order exceeded group order");
    }
    return k;
}

std::uint64_t PcPresentation::index_of(ExpSpan a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx += a[i] * weights_[i];
    return idx;
}

void PcPresentation::element_at_into(std::uint64_t index, Exponents& out) const {
    out.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        out[i] = static_cast<std::uint32_t>(index / weights_[i]);
        index %= weights_[i];
    }
}

Exponents PcPresentation::element_at(std::uint64_t index) const {
    Exponents e;
    element_at_into(index, e);
    return e;
}

// ---------------------------------------------------------------------------
// formatting

std::string PcPresentation::generator_name(std::uint32_t i) const {
    if (i < gen_names_.size()) return gen_names_[i];
    return "g" + std::to_string(i + 1);
}

Word PcPresentation::to_word(ExpSpan a) const {
    Word w;
    for (std::uint32_t i = 0; i < rank(); ++i)
        if (a[i]) w.push_back({i, a[i]});
    return w;
}

std::string PcPresentation::format_word(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w) {
        if (!first) os << "*";
        first = false;
        os << generator_name(s.gen);
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

std::string PcPresentation::format_element(ExpSpan a) const { return format_word(to_word(a)); }

// ---------------------------------------------------------------------------
// structure helpers

bool PcPresentation::same_relations(const PcPresentation& other) const {
    return orders_ == other.orders_ && powers_ == other.powers_ && conj_ == other.conj_;
}

std::uint32_t PcPresentation::uniform_prime() const {
    const std::uint32_t p = orders_[0];
    for (auto q : orders_)
        if (q != p) return 0;
    return p;
}

// ---------------------------------------------------------------------------
// consistency

ConsistencyResult PcPresentation::check_consistency() const {
    const std::size_t n = rank();

    auto word_for_conj = [&](std::uint32_t i, std::uint32_t j) -> Word {
        // g_j * g_i rewritten as g_i * g_j^{g_i}
        Word w{{i, 1}};
        if (has_conjugate(i, j)) {
            const Word& cw = conjugate_word(i, j);
            w.insert(w.end(), cw.begin(), cw.end());
        } else {
            w.push_back({j, 1});
        }
        return w;
    };

    auto compare = [&](const Word& lhs, const Word& rhs, const std::string& what)
        -> ConsistencyResult {
        Exponents a, b;
        try {
            a = evaluate(lhs);
            b = evaluate(rhs);
        } catch (const error& e) {
            if (e.code() == errc::collect_budget)
                return {false, what + ": " + e.what()};
            throw;
        }
        if (a != b)
            return {false, what + ": " + format_word(lhs) + " -> " + format_element(a) +
                               " but " + format_word(rhs) + " -> " + format_element(b)};
        return {};
    };

    // associativity overlaps g_k (g_j g_i) = (g_k g_j) g_i, k > j > i
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            for (std::uint32_t k = j + 1; k < n; ++k) {
                Word lhs{{k, 1}};
                Word inner = word_for_conj(i, j);
                lhs.insert(lhs.end(), inner.begin(), inner.end());
                Word rhs{{j, 1}};
                if (has_conjugate(j, k)) {
                    const Word& cw = conjugate_word(j, k);
                    rhs.insert(rhs.end(), cw.begin(), cw.end());
                } else {
                    rhs.push_back({k, 1});
                }
                rhs.push_back({i, 1});
                auto r = compare(lhs, rhs, "overlap g" + std::to_string(k + 1) + "(g" +
                                               std::to_string(j + 1) + " g" + std::to_string(i + 1) +
                                               ")");
                if (!r.ok) return r;
            }
        }
    }

    // power overlaps
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            {
                // g_j^{p_j} g_i  =  g_j^{p_j - 1} (g_j g_i)
                Word lhs = powers_[j];
                lhs.push_back({i, 1});
                Word rhs{{j, orders_[j] - 1}};
                Word tail = word_for_conj(i, j);
                rhs.insert(rhs.end(), tail.begin(), tail.end());
                auto r = compare(lhs, rhs, "power overlap g" + std::to_string(j + 1) + "^p g" +
                                               std::to_string(i + 1));
                if (!r.ok) return r;
            }
            {
                // g_j g_i^{p_i}  =  (g_j g_i) g_i^{p_i - 1}
                Word lhs{{j, 1}};
                lhs.insert(lhs.end(), powers_[i].begin(), powers_[i].end());
                Word rhs = word_for_conj(i, j);
                rhs.push_back({i, orders_[i] - 1});
                auto r = compare(lhs, rhs, "power overlap g" + std::to_string(j + 1) + " g" +
                                               std::to_string(i + 1) + "^p");
                if (!r.ok) return r;
            }
        }
        // g_i g_i^{p_i} = g_i^{p_i} g_i
        Word lhs{{i, 1}};
        lhs.insert(lhs.end(), powers_[i].begin(), powers_[i].end());
        Word rhs = powers_[i];
        rhs.push_back({i, 1});
        auto r = compare(lhs, rhs, "power overlap g" + std::to_string(i + 1) + "^(p+1)");
        if (!r.ok) return r;
    }
    return {};
}

} // namespace cdlat
