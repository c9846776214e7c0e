#include "cdlat/json_io.hpp"

#include "cdlat/extension.hpp"

#include <fstream>
#include <sstream>

namespace cdlat {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json word_to_json(const Word& w) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : w) arr.push_back({s.gen + 1, s.exp});
    return arr;
}

Word word_from_json(const json& j, std::size_t rank) {
    if (!j.is_array()) fail(errc::io, "word must be an array of [generator, exponent] pairs");
    Word w;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            fail(errc::io, "word syllable must be a pair of non-negative integers");
        const std::uint64_t gen = pair[0].get<std::uint64_t>();
        const std::uint64_t exp = pair[1].get<std::uint64_t>();
        if (gen < 1 || gen > rank) fail(errc::io, "generator index out of range in word");
        if (exp == 0) continue;
        w.push_back({static_cast<std::uint32_t>(gen - 1), static_cast<std::uint32_t>(exp)});
    }
    return w;
}

} // namespace

ordered_json presentation_to_json(const PcPresentation& p,
                                  const std::optional<ConstructionRecipe>& recipe,
                                  const std::optional<ordered_json>& certificates) {
    ordered_json j;
    j["name"] = p.name();
    j["relative_orders"] = p.relative_orders();
    if (p.has_generator_names()) {
        ordered_json names = ordered_json::array();
        for (std::uint32_t i = 0; i < p.rank(); ++i) names.push_back(p.generator_name(i));
        j["generators"] = std::move(names);
    }
    ordered_json powers = ordered_json::object();
    for (std::uint32_t i = 0; i < p.rank(); ++i)
        if (p.has_power(i)) powers[std::to_string(i + 1)] = word_to_json(p.power_word(i));
    j["powers"] = std::move(powers);
    ordered_json conj = ordered_json::object();
    for (std::uint32_t i = 0; i < p.rank(); ++i)
        for (std::uint32_t k = i + 1; k < p.rank(); ++k)
            if (p.has_conjugate(i, k))
                conj[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                    word_to_json(p.conjugate_word(i, k));
    j["conjugates"] = std::move(conj);
    if (recipe) {
        ordered_json r;
        r["family"] = recipe->family;
        r["p"] = recipe->p;
        if (recipe->c) r["c"] = *recipe->c;
        j["recipe"] = std::move(r);
    }
    if (certificates) j["certificates"] = *certificates;
    return j;
}

PresentationFile presentation_from_json(const json& j) {
    if (!j.is_object()) fail(errc::io, "presentation must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "relative_orders" && key != "generators" &&
            key != "powers" && key != "conjugates" && key != "recipe" && key != "certificates")
            fail(errc::io, "unknown key '" + key + "' in presentation file");
    }
    if (!j.contains("name") || !j["name"].is_string()) fail(errc::io, "missing group name");
    if (!j.contains("relative_orders") || !j["relative_orders"].is_array())
        fail(errc::io, "missing relative_orders");

    std::vector<std::uint32_t> orders;
    for (const auto& v : j["relative_orders"]) {
        if (!v.is_number_unsigned()) fail(errc::io, "relative orders must be positive integers");
        orders.push_back(v.get<std::uint32_t>());
    }
    const std::size_t rank = orders.size();
    PcPresentationBuilder b(j["name"].get<std::string>(), orders);

    if (j.contains("generators")) {
        std::vector<std::string> names;
        for (const auto& v : j["generators"]) names.push_back(v.get<std::string>());
        b.generator_names(std::move(names));
    }
    if (j.contains("powers")) {
        for (const auto& [key, value] : j["powers"].items()) {
            std::size_t pos = 0;
            const unsigned long gen = std::stoul(key, &pos);
            if (pos != key.size() || gen < 1 || gen > rank)
                fail(errc::io, "bad generator key '" + key + "' in powers");
            b.power(static_cast<std::uint32_t>(gen - 1), word_from_json(value, rank));
        }
    }
    if (j.contains("conjugates")) {
        for (const auto& [key, value] : j["conjugates"].items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) fail(errc::io, "bad conjugate key '" + key + "'");
            std::size_t p1 = 0, p2 = 0;
            const unsigned long gi = std::stoul(key.substr(0, comma), &p1);
            const unsigned long gj = std::stoul(key.substr(comma + 1), &p2);
            if (p1 != comma || p2 != key.size() - comma - 1 || gi < 1 || gj <= gi || gj > rank)
                fail(errc::io, "bad conjugate key '" + key + "'");
            b.conjugate(static_cast<std::uint32_t>(gi - 1), static_cast<std::uint32_t>(gj - 1),
                        word_from_json(value, rank));
        }
    }

    PresentationFile out;
    out.pres = b.build();
    if (j.contains("recipe")) {
        const auto& r = j["recipe"];
        ConstructionRecipe rec;
        rec.family = r.at("family").get<std::string>();
        rec.p = r.at("p").get<std::uint32_t>();
        if (r.contains("c")) rec.c = r["c"].get<std::uint32_t>();
        out.recipe = rec;
    }
    if (j.contains("certificates")) out.certificates = ordered_json(j["certificates"]);
    return out;
}

std::string to_file_string(const ordered_json& j) { return j.dump(2) + "\n"; }

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(errc::io, "cannot parse '" + path + "': " + e.what());
    }
    return presentation_from_json(j);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot write '" + path + "'");
    out << contents;
}

ordered_json lattice_to_json(const CdLattice& l) {
    const auto* pg = dynamic_cast<const PcGroup*>(l.group.get());
    const Subgroup z = center(l.group);
    ordered_json j;
    j["m"] = l.m;
    ordered_json members = ordered_json::array();
    for (const auto& s : l.members) {
        ordered_json m;
        m["order"] = s.order;
        ordered_json gens = ordered_json::array();
        for (auto g : s.gens)
            gens.push_back(pg ? pg->presentation().format_element(pg->exponents_of(g))
                              : l.group->describe(g));
        m["generators"] = std::move(gens);
        m["is_center"] = s.members == z.members;
        m["is_group"] = s.order == l.group->size();
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
    ordered_json hasse = ordered_json::array();
    for (auto [a, b] : l.hasse) hasse.push_back({a, b});
    j["hasse"] = std::move(hasse);
    if (l.chain_length) j["chain_length"] = *l.chain_length;
    else j["chain_length"] = nullptr;
    return j;
}

std::string lattice_to_dot(const CdLattice& l) {
    const auto* pg = dynamic_cast<const PcGroup*>(l.group.get());
    std::ostringstream os;
    os << "digraph cd {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.members.size(); ++i) {
        const auto& s = l.members[i];
        std::string label = std::to_string(s.order);
        const std::uint32_t p = l.group->prime_power_base();
        if (p >= 2) {
            std::uint32_t k = 0;
            for (std::uint64_t v = s.order; v > 1; v /= p) ++k;
            label = std::to_string(p) + "^" + std::to_string(k);
        }
        std::string gens;
        for (std::size_t t = 0; t < s.gens.size(); ++t) {
            if (t) gens += ",";
            gens += pg ? pg->presentation().format_element(pg->exponents_of(s.gens[t]))
                       : l.group->describe(s.gens[t]);
        }
        os << "  n" << i << " [label=\"" << label << "\\n<" << gens << ">\"];\n";
    }
    for (auto [a, b] : l.hasse) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["target"] = r.target;
    j["tier"] = r.tier;
    j["seed"] = r.seed;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["id"] = c.id;
        e["status"] = to_string(c.status);
        if (!c.details.empty()) e["details"] = c.details;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    ordered_json stats = ordered_json::object();
    for (const auto& [k, v] : r.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    j["ok"] = r.ok();
    return j;
}

ordered_json certificates_json(const ExtensionData& x) {
    const PcPresentation& g = *x.g;
    auto word_strings = [&](const std::vector<std::uint32_t>& gens) {
        ordered_json arr = ordered_json::array();
        for (auto i : gens) arr.push_back(g.generator_name(i));
        return arr;
    };
    ordered_json j;
    j["h"] = word_strings(x.h_gens);
    j["e"] = word_strings(x.e_gens);
    j["p"] = word_strings(x.p_gens);
    j["n"] = word_strings(x.n_gens);
    ordered_json z = ordered_json::array();
    for (const auto& w : x.g_cert.center_gens) z.push_back(g.format_word(w));
    j["z"] = std::move(z);
    return j;
}

} // namespace cdlat
