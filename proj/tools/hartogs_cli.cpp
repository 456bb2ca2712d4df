#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hartogs/report.hpp"

namespace {

enum class CsvKind { Sweep, Lab };

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
    if (!out)
        throw std::invalid_argument("failed while writing '" + path + "'");
}

std::vector<hartogs::Rational> parse_s_list(const std::vector<std::string>& raw) {
    std::vector<hartogs::Rational> out;
    out.reserve(raw.size());
    for (const std::string& txt : raw)
        out.push_back(hartogs::Rational::parse(txt));
    return out;
}

/// Text report always goes to stdout; --out adds a text file plus a
/// sibling JSON file at PATH.json; --csv writes the machine table.
void emit(const hartogs::RunConfig& config, const std::string& out_path,
          const std::string& csv_path, CsvKind csv_kind) {
    const hartogs::Report report = hartogs::run(config);
    const std::string text = hartogs::render_text(report);
    std::cout << text;
    if (!out_path.empty()) {
        write_file(out_path, text);
        write_file(out_path + ".json", hartogs::render_json(report));
    }
    if (csv_path.empty())
        return;
    if (csv_kind == CsvKind::Sweep) {
        write_file(csv_path, hartogs::sweep_csv(report));
    } else {
        std::string csv = hartogs::lab::lab_csv_header() + "\n";
        for (const auto& entry : report.entries)
            if (entry.lab_summary)
                csv += hartogs::lab::lab_csv_rows(*entry.lab_summary);
        write_file(csv_path, csv);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman metrics of Hartogs domains over bounded homogeneous bases:\n"
                 "exact Kahler-Einstein test, ball classification, numerical cross-checks."};
    app.require_subcommand(1);

    std::string spec_source;
    std::vector<unsigned> m_values{1};
    std::vector<std::string> s_texts;
    std::string s_grid_text;
    std::string out_path;
    std::string csv_path;
    unsigned grid_density = 1;
    bool with_lab = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_source,
                        "preset name (ball:N, polydisc:N) or JSON spec file")
            ->required();
        cmd->add_option("--m", m_values, "fiber dimensions (repeatable)")
            ->delimiter(',')
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path,
                        "write the text report to PATH and JSON to PATH.json");
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "exact Einstein test and classification for given m, s");
    add_common(classify);
    classify->add_option("--s", s_texts, "twist exponents as exact rationals (repeatable)")
        ->delimiter(',')
        ->required();
    classify->add_flag("--lab", with_lab, "also run the finite-difference lab");
    classify->add_option("--grid-density", grid_density, "lab grid refinement")
        ->check(CLI::PositiveNumber);
    classify->add_option("--csv", csv_path, "write lab rows as CSV (requires --lab)");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "classify across an arithmetic grid of s values");
    add_common(sweep);
    sweep->add_option("--s-grid", s_grid_text, "inclusive rational grid START:STOP:STEP")
        ->required();
    sweep->add_option("--csv", csv_path, "write one classification row per (m, s)");

    CLI::App* lab = app.add_subcommand(
        "lab", "finite-difference cross-validation of the closed-form metric");
    add_common(lab);
    lab->add_option("--s", s_texts, "twist exponents as exact rationals (repeatable)")
        ->delimiter(',')
        ->required();
    lab->add_option("--grid-density", grid_density, "lab grid refinement")
        ->check(CLI::PositiveNumber);
    lab->add_option("--csv", csv_path, "write lab rows as CSV");

    CLI::App* presets = app.add_subcommand("presets", "list built-in domain presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets->parsed()) {
            for (const std::string& line : hartogs::preset_catalog())
                std::cout << line << "\n";
            return 0;
        }

        hartogs::RunConfig config;
        config.spec_source = spec_source;
        config.m_values = m_values;
        config.grid_density = grid_density;

        if (classify->parsed()) {
            if (!csv_path.empty() && !with_lab)
                throw std::invalid_argument("classify --csv needs --lab (the CSV holds lab rows)");
            config.s_values = parse_s_list(s_texts);
            config.lab = with_lab;
            emit(config, out_path, csv_path, CsvKind::Lab);
        } else if (sweep->parsed()) {
            config.s_values = hartogs::parse_s_grid(s_grid_text);
            emit(config, out_path, csv_path, CsvKind::Sweep);
        } else if (lab->parsed()) {
            config.s_values = parse_s_list(s_texts);
            config.lab = true;
            emit(config, out_path, csv_path, CsvKind::Lab);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
