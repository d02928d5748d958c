// SPDX-License-Identifier: Apache-2.0
#include "cvd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>

#include "cvd/error.hpp"
#include "cvd/image.hpp"
#include "cvd/palette.hpp"
#include "cvd/serialize.hpp"
#include "cvd/stylesheet.hpp"

namespace cvd::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type;
    std::string color;
    std::string input;
    std::string output;

    std::string palette;
    std::string css;
    std::string types = "protan,deutan,tritan";
    std::string format = "text";
    std::string report;
    std::string plan;
    std::string lightness_steps;

    ConflictThresholds thresholds;
    RemapPolicy policy;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(path + ": cannot open file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw DataError(path + ": cannot write file");
}

void require_input(const std::string& path) {
    if (!fs::is_regular_file(path)) throw DataError(path + ": no such file");
}

void require_output_dir(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
        throw UsageError(path + ": output directory does not exist");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

DichromacySet parse_kinds(const std::string& list) {
    DichromacySet kinds;
    for (const auto& name : split(list, ',')) {
        const auto k = parse_dichromacy(name);
        if (!k) throw UsageError("unknown dichromacy type \"" + name + "\" (use protan, deutan or tritan)");
        kinds.insert(*k);
    }
    return kinds;
}

void parse_lightness_steps(Options& opt) {
    if (opt.lightness_steps.empty()) return;
    opt.policy.lightness_steps.clear();
    for (const auto& item : split(opt.lightness_steps, ',')) {
        try {
            std::size_t used = 0;
            opt.policy.lightness_steps.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad lightness step \"" + item + "\"");
        }
    }
}

void report_warnings(const ScanResult& scan, const std::string& source, std::ostream& err) {
    for (const auto& w : scan.warnings) {
        err << "warning: " << source << ": byte " << w.offset << ": " << w.message << "\n";
    }
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto kind = parse_dichromacy(opt.type);
    if (!kind) throw UsageError("unknown dichromacy type \"" + opt.type + "\"");
    if (opt.color.empty() == opt.input.empty()) {
        throw UsageError("simulate needs exactly one of --color or --input");
    }
    if (!opt.color.empty()) {
        const auto parsed = parse_color_literal(opt.color);
        if (!parsed) throw DataError("not a colour: \"" + opt.color + "\"");
        out << to_hex(simulate_color(parsed->color, *kind)) << "\n";
        return kOk;
    }
    if (opt.output.empty()) throw UsageError("--input requires --output");
    require_input(opt.input);
    require_output_dir(opt.output);
    const Image img = read_png(opt.input);
    write_png(opt.output, simulate_image(img, *kind));
    err << "simulate: " << img.width << "x" << img.height << " " << short_name(*kind) << " -> "
        << opt.output << "\n";
    return kOk;
}

template <class Config>
void validate_flags(const Config& config) {
    try {
        config.validate();
    } catch (const ValidationError& e) {
        throw UsageError(e.what());
    }
}

void merge_style_graph(const StyleGraph& graph, std::vector<ColorToken>& tokens,
                       std::vector<AdjacencyPair>& adjacency) {
    for (const auto& t : graph.tokens) {
        auto it = std::find_if(tokens.begin(), tokens.end(), [&](const ColorToken& x) { return x.id == t.id; });
        if (it == tokens.end()) {
            tokens.push_back(t);
        } else if (it->color == t.color) {
            it->weight += t.weight;
        } else {
            throw DataError("token id \"" + t.id + "\" names two different colours");
        }
    }
    adjacency.insert(adjacency.end(), graph.adjacency.begin(), graph.adjacency.end());
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.palette.empty() && opt.css.empty()) throw UsageError("check needs --palette and/or --css");
    if (opt.format != "text" && opt.format != "json") throw UsageError("--format must be text or json");
    const DichromacySet kinds = parse_kinds(opt.types);
    validate_flags(opt.thresholds);
    if (!opt.palette.empty()) require_input(opt.palette);
    if (!opt.css.empty()) require_input(opt.css);
    if (!opt.report.empty()) require_output_dir(opt.report);

    std::vector<ColorToken> tokens;
    std::vector<AdjacencyPair> adjacency;
    if (!opt.palette.empty()) {
        const PaletteDoc doc = parse_palette(read_file(opt.palette), opt.palette);
        tokens = doc.colors;
        adjacency = doc.effective_adjacency();
    }
    if (!opt.css.empty()) {
        const ScanResult scan = scan_stylesheet(read_file(opt.css));
        report_warnings(scan, opt.css, err);
        merge_style_graph(derive_adjacency(scan.occurrences), tokens, adjacency);
    }

    const auto reports = detect_conflicts(tokens, adjacency, kinds, opt.thresholds);
    const std::string rendered = opt.format == "json" ? conflicts_to_json(reports) : conflicts_to_text(reports);
    if (opt.report.empty()) {
        out << rendered;
    } else {
        write_file(opt.report, rendered);
    }
    err << "check: " << tokens.size() << " colours, " << adjacency.size() << " adjacent pairs, "
        << reports.size() << " conflicts\n";
    return reports.empty() ? kOk : kFindings;
}

int cmd_adapt(Options opt, std::ostream&, std::ostream& err) {
    const DichromacySet kinds = parse_kinds(opt.types);
    parse_lightness_steps(opt);
    validate_flags(opt.thresholds);
    validate_flags(opt.policy);
    require_input(opt.css);
    require_output_dir(opt.output);
    if (!opt.plan.empty()) require_output_dir(opt.plan);

    const std::string text = read_file(opt.css);
    const ScanResult scan = scan_stylesheet(text);
    report_warnings(scan, opt.css, err);
    const StyleGraph graph = derive_adjacency(scan.occurrences);

    const RemapPlan plan = resolve(graph.tokens, graph.adjacency, kinds, opt.thresholds, opt.policy);
    write_file(opt.output, rewrite_stylesheet(text, scan.occurrences, plan));
    if (!opt.plan.empty()) write_file(opt.plan, plan_to_json(plan));

    err << "adapt: " << plan.entries.size() << " colours remapped, " << plan.unresolved.size()
        << " conflicts unresolved\n";
    return plan.unresolved.empty() ? kOk : kPartial;
}

void add_threshold_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--types", opt.types, "Comma-separated dichromacy types (protan,deutan,tritan)");
    cmd->add_option("--distinct-normal", opt.thresholds.distinct_normal,
                    "Minimum normal-vision dE for a pair to count as distinct");
    cmd->add_option("--confusable-sim", opt.thresholds.confusable_sim,
                    "Simulated dE below which a pair is confusable");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colour-vision-deficiency simulation, conflict checking and palette adaptation", "cvdkit"};
    app.require_subcommand(1);
    Options opt;

    auto* simulate = app.add_subcommand("simulate", "Simulate dichromacy on a PNG or a single colour");
    simulate->add_option("--type", opt.type, "protan | deutan | tritan")->required();
    simulate->add_option("--color", opt.color, "Colour literal, e.g. #808080");
    simulate->add_option("--input", opt.input, "Input PNG");
    simulate->add_option("--output", opt.output, "Output PNG");

    auto* check = app.add_subcommand("check", "Report colour pairs that collide under dichromacy");
    check->add_option("--palette", opt.palette, "Palette JSON");
    check->add_option("--css", opt.css, "Stylesheet");
    check->add_option("--format", opt.format, "text | json");
    check->add_option("--report", opt.report, "Write the report here instead of standard output");
    add_threshold_flags(check, opt);

    auto* adapt = app.add_subcommand("adapt", "Recolour a stylesheet so adjacent colours stay distinguishable");
    adapt->add_option("--css", opt.css, "Input stylesheet")->required();
    adapt->add_option("--out", opt.output, "Rewritten stylesheet")->required();
    adapt->add_option("--plan", opt.plan, "Write the remap plan JSON here");
    add_threshold_flags(adapt, opt);
    adapt->add_option("--hue-step", opt.policy.hue_step, "Hue rotation step in degrees");
    adapt->add_option("--max-rotation", opt.policy.max_rotation, "Largest hue rotation in degrees");
    adapt->add_option("--max-passes", opt.policy.max_passes, "Greedy remap passes");
    adapt->add_option("--lightness-steps", opt.lightness_steps,
                      "Comma-separated lightness offsets tried in order (default 0,0.05,-0.05,0.1,-0.1,0.2,-0.2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(opt, out, err);
        if (check->parsed()) return cmd_check(opt, out, err);
        return cmd_adapt(opt, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    } catch (const cvd::Error& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    }
}

}  // namespace cvd::cli
