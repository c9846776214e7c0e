#include "cdlat/extension.hpp"

#include "cdlat/rng.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace cdlat {

namespace {

// --- symbolic (presentation-level) helpers ---------------------------------

bool pres_is_central_gen(const PcPresentation& h, std::uint32_t i) {
    const Exponents gi = h.generator_element(i);
    for (std::uint32_t j = 0; j < h.rank(); ++j) {
        if (j == i) continue;
        if (!h.is_identity(h.commutator(gi, h.generator_element(j)))) return false;
    }
    return true;
}

bool pres_class_at_most_two(const PcPresentation& h) {
    for (std::uint32_t i = 0; i < h.rank(); ++i)
        for (std::uint32_t j = i + 1; j < h.rank(); ++j) {
            const Exponents c = h.commutator(h.generator_element(i), h.generator_element(j));
            if (h.is_identity(c)) continue;
            for (std::uint32_t k = 0; k < h.rank(); ++k)
                if (!h.is_identity(h.commutator(c, h.generator_element(k)))) return false;
        }
    return true;
}

Word word_of_gen(std::uint32_t i) { return Word{{i, 1}}; }

Word remap_word(const Word& w, const std::vector<std::uint32_t>& map) {
    Word out = w;
    for (auto& s : out) s.gen = map[s.gen];
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// rank of a matrix over F_p (rows destroyed)
std::uint32_t fp_rank(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    std::uint32_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        // normalize pivot to 1
        std::uint64_t inv = 1, base = rows[r][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& v : rows[r]) v = static_cast<std::uint32_t>(v * inv % p);
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == r || rows[r2][col] % p == 0) continue;
            const std::uint64_t f = p - rows[r2][col] % p;
            for (std::size_t cidx = 0; cidx < cols; ++cidx)
                rows[r2][cidx] =
                    static_cast<std::uint32_t>((rows[r2][cidx] + f * rows[r][cidx]) % p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<std::uint32_t> element_ids(const PcGroup& g, const std::vector<std::uint32_t>& gens) {
    std::vector<std::uint32_t> out;
    out.reserve(gens.size());
    for (auto i : gens)
        out.push_back(g.element_of(g.presentation().generator_element(i)));
    return out;
}

std::vector<std::uint32_t> word_ids(const PcGroup& g, const std::vector<Word>& words) {
    std::vector<std::uint32_t> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(g.element_of(g.presentation().evaluate(w)));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// extend

ExtensionData extend(const PcPresentationPtr& h, const std::optional<CdCertificate>& certificate,
                     const Limits& lim) {
    const std::uint32_t p = h->uniform_prime();
    if (p < 2) fail(errc::invalid_argument, "extension needs a p-group presentation");
    if (!pres_class_at_most_two(*h))
        fail(errc::invalid_argument, "extension hypothesis violated: class exceeds 2");

    const auto n = static_cast<std::uint32_t>(h->rank());
    std::vector<bool> central(n);
    std::vector<std::uint32_t> noncentral, central_idx;
    for (std::uint32_t i = 0; i < n; ++i) {
        central[i] = pres_is_central_gen(*h, i);
        (central[i] ? central_idx : noncentral).push_back(i);
    }

    CdCertificate hcert;
    bool h_enumerated = false;
    std::vector<std::uint32_t> basis;                      // H generator indices
    std::vector<std::vector<std::uint32_t>> coords;        // per noncentral gen, F_p coords in basis
    std::uint64_t z_order = 0;
    std::vector<Word> z_h_words;                           // Z(H) generators, words over H

    if (certificate) {
        // The certificate's center generators must be exactly the
        // symbolically central generators; anything subtler needs the
        // enumerable path.
        std::vector<bool> listed(n, false);
        for (const auto& w : certificate->center_gens) {
            if (w.size() != 1 || w[0].exp != 1 || w[0].gen >= n)
                fail(errc::bad_certificate,
                     "certificate center generators must be single generators");
            if (!central[w[0].gen])
                fail(errc::bad_certificate, "certificate lists a non-central generator as central");
            listed[w[0].gen] = true;
        }
        for (std::uint32_t i = 0; i < n; ++i)
            if (central[i] && !listed[i])
                fail(errc::bad_certificate, "certificate omits a central generator");
        if (certificate->members.empty())
            fail(errc::bad_certificate, "certificate carries no lattice members");

        basis = noncentral;
        coords.assign(noncentral.size(), {});
        for (std::uint32_t t = 0; t < noncentral.size(); ++t) {
            coords[t].assign(noncentral.size(), 0);
            coords[t][t] = 1;
        }
        z_order = ipow(p, static_cast<std::uint32_t>(central_idx.size()));
        for (auto i : central_idx) z_h_words.push_back(word_of_gen(i));
        hcert = *certificate;
    } else {
        if (h->order() > lim.max_cd_elements)
            fail(errc::bad_certificate,
                 "group of order " + std::to_string(h->order()) +
                     " needs a certificate (lattice enumeration is infeasible)");
        auto hg = PcGroup::enumerate(h, lim);
        const Subgroup zh = center(hg);
        auto q = quotient_group(hg, zh);
        if (!is_elementary_abelian(*q))
            fail(errc::invalid_argument,
                 "extension hypothesis violated: H/Z(H) is not elementary abelian");
        CdLattice cd = cd_lattice(hg, lim);
        if (std::none_of(cd.members.begin(), cd.members.end(),
                         [&](const Subgroup& s) { return s.order == hg->size(); }))
            fail(errc::invalid_argument, "extension hypothesis violated: H is not in CD(H)");

        z_order = zh.order;
        for (auto e : zh.gens)
            z_h_words.push_back(h->to_word(hg->exponents_of(e)));
        for (const auto& m : cd.members) {
            std::vector<Word> ws;
            for (auto e : m.gens) ws.push_back(h->to_word(hg->exponents_of(e)));
            hcert.members.push_back(std::move(ws));
        }
        hcert.center_gens = z_h_words;
        hcert.stated = false;
        h_enumerated = true;

        // Lexicographically earliest non-central generators projecting to a
        // basis of H/Z(H); the rest get coordinates by exhausting F_p^r.
        Subgroup span = subgroup_closure(hg, zh.gens);
        std::vector<std::uint32_t> basis_ids;
        for (auto i : noncentral) {
            const std::uint32_t id = hg->element_of(h->generator_element(i));
            if (span.members.test(id)) continue;
            basis.push_back(i);
            basis_ids.push_back(id);
            std::vector<std::uint32_t> seeds = span.gens;
            seeds.push_back(id);
            span = subgroup_closure(hg, seeds);
        }
        const auto r = static_cast<std::uint32_t>(basis.size());
        if (r > 20) fail(errc::infeasible, "basis rank too large for coordinate search");
        coords.assign(noncentral.size(), {});
        for (std::uint32_t t = 0; t < noncentral.size(); ++t) {
            coords[t].assign(r, 0);
            const std::uint32_t i = noncentral[t];
            const auto bpos = std::find(basis.begin(), basis.end(), i);
            if (bpos != basis.end()) {
                coords[t][static_cast<std::uint32_t>(bpos - basis.begin())] = 1;
                continue;
            }
            const std::uint32_t id = hg->element_of(h->generator_element(i));
            bool found = false;
            std::vector<std::uint32_t> c(r, 0);
            const std::uint64_t total = ipow(p, r);
            for (std::uint64_t code = 0; code < total && !found; ++code) {
                std::uint64_t v = code;
                for (std::uint32_t s = 0; s < r; ++s) {
                    c[s] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                std::uint32_t acc = id;
                for (std::uint32_t s = 0; s < r; ++s)
                    if (c[s]) acc = hg->mul(acc, hg->pow(basis_ids[s], p - c[s]));
                if (zh.members.test(acc)) {
                    coords[t] = c;
                    found = true;
                }
            }
            if (!found)
                fail(errc::invalid_argument, "generator has no coordinates over the chosen basis");
        }
    }

    const auto r = static_cast<std::uint32_t>(basis.size());
    const auto nnc = static_cast<std::uint32_t>(noncentral.size());
    const auto ncent = static_cast<std::uint32_t>(central_idx.size());

    // --- K = H x E, generators reordered: non-central H, then E, then central H
    std::vector<std::uint32_t> map_h(n);
    for (std::uint32_t t = 0; t < nnc; ++t) map_h[noncentral[t]] = t;
    for (std::uint32_t s = 0; s < ncent; ++s) map_h[central_idx[s]] = nnc + r + s;

    std::vector<std::uint32_t> k_orders(nnc + r + ncent, p);
    PcPresentationBuilder kb(h->name() + (r ? "xE" : ""), k_orders);
    {
        std::vector<std::string> names(nnc + r + ncent);
        for (std::uint32_t i = 0; i < n; ++i) names[map_h[i]] = h->generator_name(i);
        for (std::uint32_t s = 0; s < r; ++s) names[nnc + s] = "e" + std::to_string(s + 1);
        kb.generator_names(std::move(names));
    }
    auto normal_form_word = [&](const Word& w) { return h->to_word(h->evaluate(w)); };
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!h->has_power(i)) continue;
        const Word nf = normal_form_word(h->power_word(i));
        if (central[i])
            for (const auto& s : nf)
                if (!central[s.gen])
                    fail(errc::invalid_argument,
                         "presentation cannot be reordered: a central generator's power word "
                         "involves non-central generators");
        kb.power(map_h[i], remap_word(nf, map_h));
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!h->has_conjugate(i, j)) continue;
            if (central[i]) continue; // relation is redundant: the pair commutes
            kb.conjugate(map_h[i], map_h[j], remap_word(normal_form_word(h->conjugate_word(i, j)), map_h));
        }
    PcPresentationPtr k = kb.build();

    // --- the action: x1 shears v_i across e_i and fixes Z(H) x E
    PcPresentationPtr pn = build_l2n(p);
    GeneratorAction action = GeneratorAction::trivial(pn->rank());
    if (r > 0) {
        std::vector<Word> images, inverses;
        for (std::uint32_t kg = 0; kg < k->rank(); ++kg) {
            images.push_back(word_of_gen(kg));
            inverses.push_back(word_of_gen(kg));
        }
        for (std::uint32_t t = 0; t < nnc; ++t) {
            Word img = word_of_gen(t), inv = word_of_gen(t);
            for (std::uint32_t s = 0; s < r; ++s) {
                const std::uint32_t c = coords[t][s];
                if (!c) continue;
                img.push_back({nnc + s, c});
                inv.push_back({nnc + s, p - c});
            }
            images[t] = std::move(img);
            inverses[t] = std::move(inv);
        }
        action.images[0] = std::move(images);
        action.inverse_images[0] = std::move(inverses);
    }

    ExtensionData x;
    x.g = semidirect_product(k, pn, action, "ext(" + h->name() + ")", lim);
    x.h = h;
    x.p = p;
    x.rank_r = r;
    x.h_cert = hcert;
    x.h_enumerated = h_enumerated;

    const std::uint32_t off = static_cast<std::uint32_t>(pn->rank()); // 7
    for (std::uint32_t i = 0; i < off; ++i) x.p_gens.push_back(i);
    x.a_gens = {2, 3, 4, 5, 6};
    x.cph_gens = {1, 2, 3, 4, 5, 6};
    for (std::uint32_t i = 0; i < n; ++i) x.h_gens.push_back(off + map_h[i]);
    for (std::uint32_t s = 0; s < r; ++s) x.e_gens.push_back(off + nnc + s);
    x.n_gens = x.a_gens;
    x.n_gens.insert(x.n_gens.end(), x.e_gens.begin(), x.e_gens.end());
    for (auto i : basis) x.v_reps.push_back(off + map_h[i]);

    // claimed Z(G) = Z(H) x E x Z(P)
    auto lift_h_word = [&](const Word& w) {
        Word out = remap_word(w, map_h);
        for (auto& s : out) s.gen += off;
        return out;
    };
    std::vector<Word> z_words;
    for (const auto& w : z_h_words) z_words.push_back(lift_h_word(w));
    for (auto e : x.e_gens) z_words.push_back(word_of_gen(e));
    for (std::uint32_t zi : {4u, 5u, 6u}) z_words.push_back(word_of_gen(zi));

    x.g_cert.center_gens = z_words;
    x.g_cert.stated = true;
    {
        std::vector<Word> zg = z_words;
        x.g_cert.members.push_back(std::move(zg));
        for (const auto& member : hcert.members) {
            std::vector<Word> ws;
            for (auto gidx : x.n_gens) ws.push_back(word_of_gen(gidx));
            for (const auto& w : member) ws.push_back(lift_h_word(w));
            x.g_cert.members.push_back(std::move(ws));
        }
        std::vector<Word> all;
        for (std::uint32_t i = 0; i < x.g->rank(); ++i) all.push_back(word_of_gen(i));
        x.g_cert.members.push_back(std::move(all));
    }

    // --- structural invariants ------------------------------------------------
    if (x.g->order() != h->order() * ipow(p, r + 7))
        fail(errc::invalid_argument, "extension order bookkeeping failed");

    const PcPresentation& g = *x.g;
    // v_i^{x1} = v_i e_i
    for (std::uint32_t s = 0; s < r; ++s) {
        const Exponents v = g.generator_element(x.v_reps[s]);
        const Exponents lhs = g.conjugate(v, g.generator_element(0));
        const Exponents rhs = g.multiply(v, g.generator_element(x.e_gens[s]));
        if (lhs != rhs) fail(errc::invalid_argument, "shear relation v^x1 = v e failed");
    }
    // N = A E is an elementary abelian span and normal in G
    std::vector<bool> in_n(g.rank(), false);
    for (auto i : x.n_gens) in_n[i] = true;
    for (auto i : x.n_gens) {
        if (g.has_power(i)) fail(errc::invalid_argument, "N is not elementary abelian");
        for (auto j : x.n_gens)
            if (i < j && g.has_conjugate(i, j)) fail(errc::invalid_argument, "N is not abelian");
    }
    for (auto m : x.n_gens)
        for (std::uint32_t w = 0; w < g.rank(); ++w) {
            const Exponents c =
                g.conjugate(g.generator_element(m), g.generator_element(w));
            for (std::uint32_t pos = 0; pos < g.rank(); ++pos)
                if (c[pos] && !in_n[pos])
                    fail(errc::invalid_argument, "N is not normal in G");
        }
    // N and H intersect trivially: their generator blocks are disjoint and
    // both blocks are closed under the relations used above.
    for (auto i : x.h_gens)
        if (in_n[i]) fail(errc::invalid_argument, "N meets H");

    return x;
}

std::vector<std::vector<Word>> predicted_cd_words(const ExtensionData& x) {
    return x.g_cert.members;
}

std::vector<Subgroup> predicted_cd(const ExtensionData& x, const GroupHandle& g) {
    const auto* pg = dynamic_cast<const PcGroup*>(g.get());
    if (!pg || !pg->presentation().same_relations(*x.g))
        fail(errc::mismatched_groups, "group does not realize the extension presentation");
    std::vector<Subgroup> out;
    for (const auto& ws : x.g_cert.members)
        out.push_back(subgroup_closure(g, word_ids(*pg, ws)));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].members == out[j].members)
                fail(errc::invalid_argument, "predicted members are not pairwise distinct");
    return out;
}

// ---------------------------------------------------------------------------
// verification

namespace {

// Scan helper: member set of C_G(x), optionally chunked over threads.
Bitset centralizer_scan(const GenericGroup& g, std::uint32_t x, unsigned threads) {
    const std::uint32_t n = g.size();
    if (threads <= 1 || n < (1u << 12)) return element_centralizer(g, x);
    std::vector<Bitset> parts(threads, Bitset(n));
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            const std::uint32_t lo = t * chunk, hi = std::min(n, lo + chunk);
            for (std::uint32_t a = lo; a < hi; ++a)
                if (g.mul(a, x) == g.mul(x, a)) parts[t].set(a);
        });
    }
    for (auto& th : pool) th.join();
    Bitset m(n);
    for (auto& b : parts) m |= b;
    return m;
}

struct Realized {
    std::shared_ptr<const PcGroup> g;
    Subgroup p, h, e, nn, z_claim, cph_claim;
    std::vector<std::uint32_t> h_gen_ids, p_gen_ids;
};

Realized realize(const ExtensionData& x, const Limits& lim) {
    Realized r;
    r.g = PcGroup::enumerate(x.g, lim);
    GroupHandle gh = r.g;
    r.p_gen_ids = element_ids(*r.g, x.p_gens);
    r.h_gen_ids = element_ids(*r.g, x.h_gens);
    r.p = subgroup_closure(gh, r.p_gen_ids);
    r.h = subgroup_closure(gh, r.h_gen_ids);
    r.e = subgroup_closure(gh, element_ids(*r.g, x.e_gens));
    r.nn = subgroup_closure(gh, element_ids(*r.g, x.n_gens));
    r.z_claim = subgroup_closure(gh, word_ids(*r.g, x.g_cert.center_gens));
    r.cph_claim = subgroup_closure(gh, element_ids(*r.g, x.cph_gens));
    return r;
}

} // namespace

VerificationReport verify_gcentralizers(const ExtensionData& x, std::uint32_t sample_count,
                                        std::uint64_t seed, const Limits& lim) {
    VerificationReport rep;
    rep.target = x.g->name();
    rep.tier = "structural";
    rep.seed = seed;

    Realized rz = realize(x, lim);
    const auto& g = *rz.g;
    GroupHandle gh = rz.g;

    // (2) exact center and elementary abelian central quotient
    const Subgroup zg = center(gh);
    rep.add("center_equals_ZH_x_E_x_ZP", zg.members == rz.z_claim.members,
            "|Z(G)| = " + std::to_string(zg.order) + ", claimed " +
                std::to_string(rz.z_claim.order));
    {
        auto q = quotient_group(gh, zg);
        rep.add("central_quotient_elementary_abelian", is_elementary_abelian(*q));
    }

    // honest C_P(H) and Z(H) inside G
    auto commutes_with_all = [&](std::uint32_t e, const std::vector<std::uint32_t>& xs) {
        for (auto y : xs)
            if (!g.commutes(e, y)) return false;
        return true;
    };
    Bitset cph_m(g.size());
    rz.p.members.for_each([&](std::uint32_t pe) {
        if (commutes_with_all(pe, rz.h_gen_ids)) cph_m.set(pe);
    });
    const Subgroup cph = subgroup_from_members(gh, std::move(cph_m));
    Bitset zh_m(g.size());
    rz.h.members.for_each([&](std::uint32_t he) {
        if (commutes_with_all(he, rz.h_gen_ids)) zh_m.set(he);
    });
    const Subgroup zh = subgroup_from_members(gh, std::move(zh_m));

    const bool h_abelian = zh.order == rz.h.order;
    if (h_abelian) {
        rep.add_status("action_kernel_is_x2A", CheckStatus::vacuous, "H abelian: C_P(H) = P");
    } else {
        rep.add("action_kernel_is_x2A", cph.members == rz.cph_claim.members,
                "|C_P(H)| = " + std::to_string(cph.order));
    }

    DetRng rng(seed);
    const std::vector<std::uint32_t> p_outside = [&] {
        std::vector<std::uint32_t> v;
        rz.p.members.for_each([&](std::uint32_t pe) {
            if (!cph.contains(pe)) v.push_back(pe);
        });
        return v;
    }();
    const std::vector<std::uint32_t> h_elems = rz.h.members.to_indices();
    const std::vector<std::uint32_t> h_noncentral = [&] {
        std::vector<std::uint32_t> v;
        for (auto he : h_elems)
            if (!zh.contains(he)) v.push_back(he);
        return v;
    }();
    const std::vector<std::uint32_t> cph_elems = cph.members.to_indices();

    // (3) C_H(x) = Z(H) for x in P \ C_P(H); the domain is small, so this is
    // exhaustive.
    if (p_outside.empty()) {
        rep.add_status("centralizer_in_H_off_kernel", CheckStatus::vacuous, "no x outside C_P(H)");
    } else {
        bool ok = true;
        for (auto xe : p_outside) {
            Bitset chx(g.size());
            for (auto he : h_elems)
                if (g.commutes(he, xe)) chx.set(he);
            if (!(chx == zh.members)) {
                ok = false;
                break;
            }
        }
        rep.add("centralizer_in_H_off_kernel", ok,
                "exhaustive over " + std::to_string(p_outside.size()) + " elements");
        rep.stats["clause3_cases"] = p_outside.size();
    }

    // (4) C_P(h) = <x2> A for h in H \ Z(H)
    if (h_noncentral.empty()) {
        rep.add_status("centralizer_in_P_of_noncentral_h", CheckStatus::vacuous, "H is abelian");
    } else {
        bool ok = true;
        std::uint64_t cases = 0;
        const bool exhaustive = h_noncentral.size() <= std::max<std::size_t>(sample_count, 4096);
        const std::size_t count = exhaustive ? h_noncentral.size() : sample_count;
        for (std::size_t t = 0; t < count && ok; ++t) {
            const std::uint32_t he =
                exhaustive ? h_noncentral[t]
                           : h_noncentral[rng.below(h_noncentral.size())];
            Bitset cp(g.size());
            rz.p.members.for_each([&](std::uint32_t pe) {
                if (g.commutes(pe, he)) cp.set(pe);
            });
            ok = cp == cph.members;
            ++cases;
        }
        rep.add("centralizer_in_P_of_noncentral_h", ok,
                (exhaustive ? "exhaustive over " : "sampled ") + std::to_string(cases) +
                    " elements");
        rep.stats["clause4_cases"] = cases;
    }

    // Memoized full-group centralizer scans for (5) and (6).
    std::unordered_map<std::uint32_t, Bitset> cg_cache;
    auto cg_of = [&](std::uint32_t e) -> const Bitset& {
        auto it = cg_cache.find(e);
        if (it != cg_cache.end()) return it->second;
        return cg_cache.emplace(e, centralizer_scan(g, e, lim.threads)).first->second;
    };

    // (5) C_G(hx) = C_G(h) n C_G(x) for x in C_P(H)
    {
        bool ok = true;
        std::uint64_t cases = 0;
        for (std::uint32_t t = 0; t < sample_count && ok; ++t) {
            const std::uint32_t he = h_elems[rng.below(h_elems.size())];
            const std::uint32_t xe = cph_elems[rng.below(cph_elems.size())];
            const Bitset lhs = centralizer_scan(g, g.mul(he, xe), lim.threads);
            ok = lhs == (cg_of(he) & cg_of(xe));
            ++cases;
        }
        rep.add("kernel_product_centralizers", ok, std::to_string(cases) + " sampled pairs");
        rep.stats["clause5_samples"] = cases;
    }

    // (6) C_G(hx) = <hx> Z(G) for x outside C_P(H)
    if (p_outside.empty()) {
        rep.add_status("offkernel_cyclic_centralizers", CheckStatus::vacuous,
                       "no x outside C_P(H)");
    } else {
        bool ok = true;
        std::uint64_t cases = 0;
        for (std::uint32_t t = 0; t < sample_count && ok; ++t) {
            const std::uint32_t he = h_elems[rng.below(h_elems.size())];
            const std::uint32_t xe = p_outside[rng.below(p_outside.size())];
            const std::uint32_t hx = g.mul(he, xe);
            const Bitset lhs = centralizer_scan(g, hx, lim.threads);
            std::vector<std::uint32_t> seeds = zg.gens;
            seeds.push_back(hx);
            ok = lhs == subgroup_closure(gh, seeds).members;
            ++cases;
        }
        rep.add("offkernel_cyclic_centralizers", ok, std::to_string(cases) + " sampled pairs");
        rep.stats["clause6_samples"] = cases;
    }
    return rep;
}

VerificationReport verify_extension_measures(const ExtensionData& x, const Limits& lim) {
    VerificationReport rep;
    rep.target = x.g->name();
    rep.tier = "structural";

    Realized rz = realize(x, lim);
    GroupHandle gh = rz.g;
    const auto& g = *rz.g;

    const Subgroup zg = center(gh);
    const std::uint64_t m_target = std::uint64_t{g.size()} * zg.order;

    std::vector<Subgroup> members = predicted_cd(x, gh);
    rep.add("member_count",
            members.size() == x.h_cert.members.size() + 2,
            std::to_string(members.size()) + " predicted members");

    bool ascending = true;
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        ascending = ascending && members[i].order < members[i + 1].order &&
                    members[i].members.is_subset_of(members[i + 1].members);
    rep.add("members_form_chain_matching_cd_of_h", ascending,
            "strict inclusions along the predicted list");

    bool measures_ok = true;
    std::string detail;
    for (const auto& mem : members) {
        const std::uint64_t m = mem.order * static_cast<std::uint64_t>(
                                                set_centralizer(g, mem.gens).count());
        if (m != m_target) {
            measures_ok = false;
            detail = "member of order " + std::to_string(mem.order) + " has measure " +
                     std::to_string(m) + " != " + std::to_string(m_target);
            break;
        }
    }
    rep.add("common_measure_G_times_ZG", measures_ok,
            detail.empty() ? "measure " + std::to_string(m_target) : detail);

    // strictness: Z(G) < N Z(H) and N H < G
    if (members.size() >= 2) {
        const Subgroup& zmem = members.front();
        const Subgroup& nzh = members[1];
        const Subgroup& nh = members[members.size() - 2];
        rep.add("new_members_extend_strictly",
                zmem.order < nzh.order && zmem.members.is_subset_of(nzh.members) &&
                    nh.order < g.size(),
                "Z(G) < N Z(H) and N H < G");
    }

    // m(H) m(P) m(E) = |G| |Z(G)|
    Bitset zh_m(g.size());
    rz.h.members.for_each([&](std::uint32_t he) {
        bool c = true;
        for (auto y : rz.h_gen_ids)
            if (!g.commutes(he, y)) {
                c = false;
                break;
            }
        if (c) zh_m.set(he);
    });
    Bitset zp_m(g.size());
    rz.p.members.for_each([&](std::uint32_t pe) {
        bool c = true;
        for (auto y : rz.p_gen_ids)
            if (!g.commutes(pe, y)) {
                c = false;
                break;
            }
        if (c) zp_m.set(pe);
    });
    const std::uint64_t m_h = rz.h.order * zh_m.count();
    const std::uint64_t m_p = rz.p.order * zp_m.count();
    const std::uint64_t m_e = rz.e.order * rz.e.order;
    rep.add("measure_factorization", m_h * m_p * m_e == m_target,
            std::to_string(m_h) + " * " + std::to_string(m_p) + " * " + std::to_string(m_e) +
                " vs " + std::to_string(m_target));
    rep.stats["m_target"] = m_target;
    return rep;
}

VerificationReport random_subgroup_probe(const ExtensionData& x, std::uint32_t trials,
                                         std::uint64_t seed, const Limits& lim) {
    VerificationReport rep;
    rep.target = x.g->name();
    rep.tier = "structural";
    rep.seed = seed;
    if (trials == 0) {
        rep.stats["trials"] = 0;
        return rep;
    }

    Realized rz = realize(x, lim);
    GroupHandle gh = rz.g;
    const auto& g = *rz.g;
    const PcPresentation& pres = *x.g;

    const Subgroup zg = center(gh);
    const std::uint64_t m_max = std::uint64_t{g.size()} * zg.order;
    std::vector<Subgroup> predicted = predicted_cd(x, gh);

    // Fast measure path for class-2 groups whose center is spanned by
    // dedicated generator positions: |C_G(K)| = |G| / |im(g -> ([s,g])_s)|,
    // and the image size is a matrix rank over F_p read off the central
    // coordinates of generator commutators.
    const std::uint32_t p = x.p;
    std::vector<std::uint32_t> zpos;
    bool fast = has_class_at_most_two(g);
    for (const auto& w : x.g_cert.center_gens) {
        if (w.size() != 1 || w[0].exp != 1) {
            fast = false;
            break;
        }
        zpos.push_back(w[0].gen);
    }
    if (fast) {
        Bitset span(g.size());
        std::vector<std::uint32_t> ids = word_ids(*rz.g, x.g_cert.center_gens);
        span = subgroup_closure(gh, ids).members;
        fast = span == zg.members;
    }
    std::vector<bool> in_z(pres.rank(), false);
    for (auto zp : zpos) in_z[zp] = true;

    auto measure_slow = [&](const Subgroup& k) {
        return k.order * static_cast<std::uint64_t>(set_centralizer(g, k.gens).count());
    };
    Exponents scratch;
    auto measure_fast = [&](const Subgroup& k) -> std::uint64_t {
        std::vector<std::vector<std::uint32_t>> rows;
        for (auto gen : g.generators()) {
            std::vector<std::uint32_t> row;
            row.reserve(k.gens.size() * zpos.size());
            bool supported = true;
            for (auto s : k.gens) {
                pres.element_at_into(g.comm(s, gen), scratch);
                for (std::uint32_t pos = 0; pos < pres.rank(); ++pos)
                    if (scratch[pos] && !in_z[pos]) supported = false;
                for (auto zp : zpos) row.push_back(scratch[zp]);
            }
            if (!supported) return measure_slow(k); // commutator escaped the span
            rows.push_back(std::move(row));
        }
        const std::uint32_t rank = fp_rank(rows, p);
        return k.order * (std::uint64_t{g.size()} / ipow(p, rank));
    };
    auto measure_of = [&](const Subgroup& k) { return fast ? measure_fast(k) : measure_slow(k); };

    DetRng rng(seed);
    bool ok = true;
    std::string detail;
    std::uint64_t done = 0, crosschecked = 0;
    auto check_subgroup = [&](const Subgroup& k) {
        const std::uint64_t m = measure_of(k);
        if (crosschecked < 3) {
            ++crosschecked;
            if (m != measure_slow(k)) {
                ok = false;
                detail = "fast measure disagrees with the scan measure";
                return;
            }
        }
        if (m > m_max) {
            ok = false;
            detail = "measure " + std::to_string(m) + " exceeds " + std::to_string(m_max) +
                     " for " + k.describe_gens();
            return;
        }
        if (m == m_max) {
            const bool is_predicted =
                std::any_of(predicted.begin(), predicted.end(),
                            [&](const Subgroup& s) { return s.members == k.members; });
            if (!is_predicted) {
                ok = false;
                detail = "non-predicted subgroup attains the maximum: " + k.describe_gens();
            }
        }
    };

    for (std::uint32_t t = 0; t < trials && ok; ++t) {
        std::uint32_t seeds[4];
        for (auto& s : seeds) s = static_cast<std::uint32_t>(rng.below(g.size()));
        check_subgroup(subgroup_closure(gh, seeds));
        ++done;
    }
    // targeted perturbations of the predicted members
    const std::uint32_t per_member = 6;
    for (const auto& mem : predicted) {
        for (std::uint32_t t = 0; t < per_member && ok; ++t) {
            std::vector<std::uint32_t> seeds = mem.gens;
            seeds.push_back(static_cast<std::uint32_t>(rng.below(g.size())));
            check_subgroup(subgroup_closure(gh, seeds));
            ++done;
        }
    }

    rep.add("no_measure_violations", ok, detail.empty() ? std::to_string(done) + " probes" : detail);
    rep.stats["trials"] = done;
    rep.stats["fast_path"] = fast ? 1 : 0;
    return rep;
}

// ---------------------------------------------------------------------------
// chains

ChainResult chain_group(std::uint32_t p, std::uint32_t n, const Limits& lim) {
    if (!is_prime(p)) fail(errc::invalid_argument, "p must be prime");
    ChainResult out;
    out.length = n;
    if (n == 0) {
        PcPresentationBuilder b("C" + std::to_string(p), {p});
        out.pres = b.build();
        out.cert.center_gens = {word_of_gen(0)};
        out.cert.members = {{word_of_gen(0)}};
        return out;
    }
    if (n == 1) {
        out.pres = build_l1n(p);
        std::vector<Word> z{word_of_gen(3), word_of_gen(4), word_of_gen(5)};
        std::vector<Word> all;
        for (std::uint32_t i = 0; i < 6; ++i) all.push_back(word_of_gen(i));
        out.cert.center_gens = z;
        out.cert.members = {z, all};
        return out;
    }
    if (n == 2) {
        out.pres = build_l2n(p);
        std::vector<Word> z{word_of_gen(4), word_of_gen(5), word_of_gen(6)};
        std::vector<Word> a{word_of_gen(2), word_of_gen(3), word_of_gen(4), word_of_gen(5),
                            word_of_gen(6)};
        std::vector<Word> all;
        for (std::uint32_t i = 0; i < 7; ++i) all.push_back(word_of_gen(i));
        out.cert.center_gens = z;
        out.cert.members = {z, a, all};
        return out;
    }
    ChainResult prev = chain_group(p, n - 2, lim);
    ExtensionData x = extend(prev.pres, prev.cert, lim);
    out.pres = x.g;
    out.cert = x.g_cert;
    out.last_step = std::move(x);
    return out;
}

} // namespace cdlat
