#include "hartogs/report.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hartogs/numfmt.hpp"

namespace hartogs {

namespace {

std::string rat_list(const std::vector<Rational>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].to_string();
    }
    return out + "]";
}

std::string blocks_line(const DomainSpec& spec) {
    std::string out;
    for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
        if (k)
            out += " ";
        out += "(" + std::to_string(spec.blocks[k].p) + "," +
               std::to_string(spec.blocks[k].q) + "," + std::to_string(spec.blocks[k].b) + ")";
    }
    return out;
}

nlohmann::ordered_json poly_json(const Polynomial& g) {
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& c : g.coefficients())
        arr.push_back(c.to_string());
    return arr;
}

nlohmann::ordered_json rat_vec_json(const std::vector<Rational>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& c : v)
        arr.push_back(c.to_string());
    return arr;
}

nlohmann::ordered_json lab_json(const lab::LabSummary& ls) {
    nlohmann::ordered_json j;
    j["base"] = ls.label;
    j["density"] = ls.density;
    j["grid_points"] = ls.rows.size();
    j["hermitian_dev"] = ls.hermitian_dev;
    j["zero_offdiag_max"] = ls.zero_offdiag_max;
    j["zero_horizontal_rel"] = ls.zero_horizontal_rel;
    j["zero_fiber_rel"] = ls.zero_fiber_rel;
    j["hblock_dev"] = ls.hblock_dev;
    j["det_rel_max"] = ls.det_rel_max;
    j["einstein_residual_max"] = ls.einstein_residual_max;
    j["base_ratio_value"] = ls.base_ratio_value;
    j["base_ratio_expected"] = ls.base_ratio_expected;
    j["base_ratio_spread"] = ls.base_ratio_spread;
    j["base_ricci_residual_max"] = ls.base_ricci_residual_max;
    j["diastasis_dev"] = ls.diastasis_dev;
    if (ls.oracle_rel_max)
        j["oracle_rel_max"] = *ls.oracle_rel_max;
    return j;
}

void render_lab_text(std::ostringstream& out, const lab::LabSummary& ls) {
    out << "  lab (base " << ls.label << ", density " << ls.density << ", "
        << ls.rows.size() << " grid points)\n";
    out << "    hermitian deviation        = " << fmt_g(ls.hermitian_dev) << "\n";
    out << "    zero-section offdiag (abs) = " << fmt_g(ls.zero_offdiag_max) << "\n";
    out << "    zero-section horizontal    = " << fmt_g(ls.zero_horizontal_rel) << " (rel)\n";
    out << "    zero-section fiber         = " << fmt_g(ls.zero_fiber_rel) << " (rel)\n";
    out << "    eta-block deviation        = " << fmt_g(ls.hblock_dev) << "\n";
    out << "    det crosscheck max rel     = " << fmt_g(ls.det_rel_max) << "\n";
    out << "    einstein residual max      = " << fmt_g(ls.einstein_residual_max) << "\n";
    out << "    base det/K ratio           = " << fmt_g(ls.base_ratio_value)
        << " (expected " << fmt_g(ls.base_ratio_expected)
        << ", spread " << fmt_g(ls.base_ratio_spread) << ")\n";
    out << "    base ricci residual max    = " << fmt_g(ls.base_ricci_residual_max) << "\n";
    out << "    diastasis deviation        = " << fmt_g(ls.diastasis_dev) << "\n";
    if (ls.oracle_rel_max)
        out << "    kernel series max rel      = " << fmt_g(*ls.oracle_rel_max) << "\n";
}

} // namespace

Report run(const RunConfig& config) {
    if (config.m_values.empty() || config.s_values.empty())
        throw std::invalid_argument("config: at least one m and one s value are required");
    if (config.lab && config.grid_density == 0)
        throw std::invalid_argument("config: grid density must be positive");

    Report report;
    report.spec = resolve_spec(config.spec_source);
    report.data = structural_data(report.spec);

    for (const Rational& s : config.s_values)
        if (!validate_s(report.data, s))
            throw std::invalid_argument("inadmissible s = " + s.to_string() +
                                        "; requires s > -C_Omega = " +
                                        (-report.data.c_omega).to_string());

    for (unsigned m : config.m_values) {
        for (const Rational& s : config.s_values) {
            ReportEntry entry;
            entry.m = m;
            entry.s = s;
            const HartogsParams params = make_params(report.data, m, s);
            entry.profile = build_profile(report.data, params);
            entry.verdict = check_einstein(report.data, entry.profile);
            entry.classification = classify(report.spec, params);
            if (config.lab)
                entry.lab_summary = lab::run_lab(report.spec, params, config.grid_density);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "domain: " << report.spec.label << "\n";
    out << "  blocks (p,q,b): " << blocks_line(report.spec) << "\n";
    out << "  n = " << report.data.dim << ", rank = " << report.spec.rank() << "\n";
    out << "  exponents: " << report.data.roots.to_string() << "\n";
    out << "  C_Omega = " << report.data.c_omega.to_string()
        << " (admissible s > " << (-report.data.c_omega).to_string() << ")\n";
    out << "  F_Omega(sigma) = " << report.data.f_omega.to_string("sigma") << "\n";

    for (const ReportEntry& entry : report.entries) {
        out << "\n[m = " << entry.m << ", s = " << entry.s.to_string() << "]\n";
        out << "  A = " << entry.profile.big_a.to_string() << "\n";
        out << "  c   = " << rat_list(entry.profile.c_coeffs) << "\n";
        out << "  A_j = " << rat_list(entry.profile.a_coeffs) << "\n";
        out << "  P(y) = " << entry.profile.p_poly.to_string("y") << "\n";
        out << "  P(1) = " << entry.profile.p_poly(Rational(1)).to_string()
            << ", p(0) = " << p_at_zero(entry.profile).to_string() << "\n";
        if (entry.verdict.is_einstein) {
            out << "  einstein: yes, C6 = " << entry.verdict.c6->to_string() << "\n";
        } else {
            out << "  einstein: no\n";
            out << "  witness(y) = " << entry.verdict.residual_witness->to_string("y") << "\n";
        }
        out << "  classification: " << to_string(entry.classification.kind) << "\n";
        if (entry.classification.kind == ClassificationKind::Ball) {
            out << "    ball dimension: " << *entry.classification.ball_dim << "\n";
            out << "    s recovered: " << entry.classification.s_recovered->to_string() << "\n";
            out << "    rescaling: " << entry.classification.rescale->describe() << "\n";
            out << "    C approx:  " << fmt_g(entry.classification.rescale->approx()) << "\n";
        }
        if (entry.lab_summary)
            render_lab_text(out, *entry.lab_summary);
    }
    return out.str();
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["domain"]["label"] = report.spec.label;
    auto blocks = nlohmann::ordered_json::array();
    for (const BlockData& blk : report.spec.blocks)
        blocks.push_back({{"p", blk.p}, {"q", blk.q}, {"b", blk.b}});
    j["domain"]["blocks"] = blocks;
    j["domain"]["n"] = report.data.dim;
    j["domain"]["rank"] = report.spec.rank();
    j["domain"]["exponents"] = rat_vec_json(report.data.roots.sorted());
    j["domain"]["c_omega"] = report.data.c_omega.to_string();
    j["domain"]["f_omega"] = poly_json(report.data.f_omega);

    auto entries = nlohmann::ordered_json::array();
    for (const ReportEntry& entry : report.entries) {
        nlohmann::ordered_json e;
        e["m"] = entry.m;
        e["s"] = entry.s.to_string();
        e["A"] = entry.profile.big_a.to_string();
        e["c"] = rat_vec_json(entry.profile.c_coeffs);
        e["A_j"] = rat_vec_json(entry.profile.a_coeffs);
        e["P"] = poly_json(entry.profile.p_poly);
        e["P_at_1"] = entry.profile.p_poly(Rational(1)).to_string();
        e["p_at_0"] = p_at_zero(entry.profile).to_string();
        e["einstein"] = entry.verdict.is_einstein;
        if (entry.verdict.is_einstein) {
            e["C6"] = entry.verdict.c6->to_string();
        } else {
            e["witness"]["num"] = poly_json(entry.verdict.residual_witness->num());
            e["witness"]["den"] = poly_json(entry.verdict.residual_witness->den());
        }
        e["classification"] = to_string(entry.classification.kind);
        if (entry.classification.kind == ClassificationKind::Ball) {
            e["ball_dim"] = *entry.classification.ball_dim;
            e["s_recovered"] = entry.classification.s_recovered->to_string();
            e["rescale"]["map"] = entry.classification.rescale->describe();
            e["rescale"]["C_approx"] = entry.classification.rescale->approx();
        }
        if (entry.lab_summary)
            e["lab"] = lab_json(*entry.lab_summary);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string sweep_csv(const Report& report) {
    std::ostringstream out;
    out << "spec,m,s,kind,is_einstein,c6,ball_dim,s_recovered\n";
    for (const ReportEntry& entry : report.entries) {
        out << report.spec.label << "," << entry.m << "," << entry.s.to_string() << ","
            << to_string(entry.classification.kind) << ","
            << (entry.verdict.is_einstein ? "true" : "false") << ",";
        if (entry.verdict.c6)
            out << entry.verdict.c6->to_string();
        out << ",";
        if (entry.classification.ball_dim)
            out << *entry.classification.ball_dim;
        out << ",";
        if (entry.classification.s_recovered)
            out << entry.classification.s_recovered->to_string();
        out << "\n";
    }
    return out.str();
}

std::vector<Rational> parse_s_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("s grid must have the form START:STOP:STEP, got '" + text + "'");

    const Rational start = Rational::parse(text.substr(0, first));
    const Rational stop = Rational::parse(text.substr(first + 1, second - first - 1));
    const Rational step = Rational::parse(text.substr(second + 1));
    if (step.sign() <= 0)
        throw std::invalid_argument("s grid step must be positive, got " + step.to_string());
    if (start > stop)
        throw std::invalid_argument("s grid start " + start.to_string() +
                                    " exceeds stop " + stop.to_string());

    std::vector<Rational> grid;
    for (Rational cur = start; cur <= stop; cur += step) {
        if (grid.size() >= 10000)
            throw std::invalid_argument("s grid has more than 10000 points");
        grid.push_back(cur);
    }
    return grid;
}

} // namespace hartogs
