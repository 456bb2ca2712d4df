#include "hartogs/domain.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hartogs {

std::vector<Rational> block_roots(const BlockData& block) {
    std::vector<Rational> roots;
    roots.reserve(block.size());
    const long denom = 2L * block.weight_denom();
    for (unsigned i = 1; i <= block.size(); ++i)
        roots.emplace_back(2L * i + block.q, denom);
    return roots;
}

StructuralData structural_data(const DomainSpec& spec) {
    if (spec.blocks.empty())
        throw std::invalid_argument("domain spec has no blocks");
    std::vector<Rational> all;
    for (const auto& blk : spec.blocks) {
        auto r = block_roots(blk);
        all.insert(all.end(), r.begin(), r.end());
    }
    StructuralData data;
    data.roots = RationalMultiset(std::move(all));
    data.c_omega = data.roots.min();
    data.dim = spec.dimension();
    Polynomial f{Rational(1)};
    for (const auto& a : data.roots.sorted())
        f *= Polynomial({Rational(1), Rational(1) / a});
    data.f_omega = std::move(f);
    if (data.f_omega.degree() != static_cast<int>(data.dim) ||
        data.f_omega(Rational(0)) != Rational(1))
        throw std::logic_error("structural polynomial violates deg/normalization invariant");
    return data;
}

bool validate_s(const StructuralData& data, const Rational& s) {
    return s > -data.c_omega;
}

DomainSpec ball_spec(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("ball dimension must be >= 1");
    return DomainSpec{{BlockData{n - 1, 0, 0}}, "ball:" + std::to_string(n)};
}

DomainSpec polydisc_spec(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("polydisc dimension must be >= 1");
    DomainSpec spec;
    spec.blocks.assign(n, BlockData{0, 0, 0});
    spec.label = "polydisc:" + std::to_string(n);
    return spec;
}

std::optional<DomainSpec> preset_spec(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos)
        return std::nullopt;
    const std::string family = name.substr(0, colon);
    const std::string dim_text = name.substr(colon + 1);
    if (family != "ball" && family != "polydisc")
        return std::nullopt;
    if (dim_text.empty() || dim_text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed preset '" + name + "' (expected e.g. " +
                                    family + ":2)");
    const unsigned long n = std::stoul(dim_text);
    if (n == 0 || n > 64)
        throw std::invalid_argument("preset dimension out of range in '" + name + "'");
    return family == "ball" ? ball_spec(static_cast<unsigned>(n))
                            : polydisc_spec(static_cast<unsigned>(n));
}

std::vector<std::string> preset_catalog() {
    return {
        "ball:<n>       unit ball B^n, one block (p,q,b) = (n-1,0,0)",
        "polydisc:<n>   n-fold polydisc, n blocks (0,0,0)",
    };
}

DomainSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open spec file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("spec file '" + path + "' is not valid JSON: " + e.what());
    }
    DomainSpec spec;
    try {
        spec.label = doc.value("label", path);
        for (const auto& item : doc.at("blocks")) {
            BlockData blk;
            blk.p = item.value("p", 0u);
            blk.q = item.value("q", 0u);
            blk.b = item.value("b", 0u);
            spec.blocks.push_back(blk);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("spec file '" + path + "' has unexpected structure: " +
                                    e.what());
    }
    if (spec.blocks.empty())
        throw std::invalid_argument("spec file '" + path + "' defines no blocks");
    return spec;
}

DomainSpec resolve_spec(const std::string& source) {
    if (auto preset = preset_spec(source))
        return *preset;
    return load_spec_file(source);
}

std::string spec_to_json(const DomainSpec& spec) {
    nlohmann::ordered_json doc;
    doc["label"] = spec.label;
    doc["blocks"] = nlohmann::ordered_json::array();
    for (const auto& blk : spec.blocks)
        doc["blocks"].push_back({{"p", blk.p}, {"q", blk.q}, {"b", blk.b}});
    return doc.dump(2);
}

} // namespace hartogs
