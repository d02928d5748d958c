// SPDX-License-Identifier: Apache-2.0
// Acceptance checks for the toolkit. Prints one PASS/FAIL line per criterion
// and exits non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvd/cli.hpp"
#include "cvd/color.hpp"
#include "cvd/conflict.hpp"
#include "cvd/image.hpp"
#include "cvd/remap.hpp"
#include "cvd/simulate.hpp"
#include "cvd/stylesheet.hpp"

namespace fs = std::filesystem;
using namespace cvd;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<std::uint8_t> grid_levels() {
    std::vector<std::uint8_t> out;
    for (int i = 0; i < 32; ++i) out.push_back(static_cast<std::uint8_t>(round_half_away(i * 255.0 / 31.0)));
    return out;
}

void for_grid(const std::function<void(Srgb8)>& fn) {
    const auto levels = grid_levels();
    for (auto r : levels)
        for (auto g : levels)
            for (auto b : levels) fn({r, g, b});
}

int channel_diff(Srgb8 a, Srgb8 b) {
    return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

std::string fixture(const std::string& name) { return std::string(CVD_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli_run(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out) *out = o.str();
    return code;
}

char fmt_buf[256];

template <class... A>
std::string fmt(const char* f, A... a) {
    std::snprintf(fmt_buf, sizeof fmt_buf, f, a...);
    return fmt_buf;
}

Outcome criterion1() {
    Outcome o;
    const Mat3 p = simulation_matrix(Dichromacy::Protanopia).matrix;
    const Mat3 d = simulation_matrix(Dichromacy::Deuteranopia).matrix;
    o.require(p(0, 0) == 0.0 && p(0, 1) == 2.0234 && p(0, 2) == -2.5258, "protan row");
    o.require(d(1, 0) == 0.4942 && d(1, 1) == 0.0 && d(1, 2) == 1.2483, "deutan row");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i != 0) o.require(p(i, j) == (i == j ? 1.0 : 0.0), "protan identity rows");
            if (i != 1) o.require(d(i, j) == (i == j ? 1.0 : 0.0), "deutan identity rows");
        }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (auto kind : kAllDichromacies) {
        const Mat3 p = simulation_matrix(kind).matrix;
        const Mat3 pp = p * p;
        double worst = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(pp(i, j) - p(i, j)));
        o.require(worst < 1e-9, fmt("%s |PP-P| = %g", std::string(short_name(kind)).c_str(), worst));
    }
    int worst = 0;
    for_grid([&](Srgb8 c) {
        for (auto kind : kAllDichromacies) {
            const Srgb8 once = simulate_color(c, kind);
            worst = std::max(worst, channel_diff(simulate_color(once, kind), once));
        }
    });
    o.require(worst <= 1, fmt("twice vs once differs by %d", worst));
    if (o.ok) o.detail = fmt("max twice-vs-once diff %d", worst);
    return o;
}

Outcome criterion3() {
    Outcome o;
    int worst = 0;
    for (int v = 0; v < 256; ++v) {
        const auto u = static_cast<std::uint8_t>(v);
        for (auto kind : kAllDichromacies) worst = std::max(worst, channel_diff(simulate_color({u, u, u}, kind), {u, u, u}));
    }
    o.require(worst <= 1, fmt("gray drift %d", worst));
    const Vec3 w = rgb_to_lms(LinearRgb(1, 1, 1)).vec();
    const double rel = std::abs(w[0] - (2.0234 * w[1] - 2.5258 * w[2])) / w[0];
    o.require(rel < 1e-3, fmt("white relative residual %g", rel));
    if (o.ok) o.detail = fmt("max gray drift %d, white residual %.2e", worst, rel);
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int v = 0; v < 256; ++v) {
        const auto u = static_cast<std::uint8_t>(v);
        const Srgb8 c{u, u, u};
        o.require(encode_srgb(decode_srgb(c)) == c, fmt("transfer round trip at %d", v));
    }
    int hsl_worst = 0;
    double lms_worst = 0;
    for_grid([&](Srgb8 c) {
        hsl_worst = std::max(hsl_worst, channel_diff(quantize(hsl_to_rgb(rgb_to_hsl(c))), c));
        const LinearRgb lin = decode_srgb(c);
        const Vec3 back = lms_to_rgb(rgb_to_lms(lin)).vec();
        for (int i = 0; i < 3; ++i) lms_worst = std::max(lms_worst, std::abs(back[i] - lin.vec()[i]));
    });
    o.require(hsl_worst <= 1, fmt("HSL round trip off by %d", hsl_worst));
    o.require(lms_worst <= 1e-6, fmt("LMS round trip off by %g", lms_worst));
    if (o.ok) o.detail = fmt("HSL max %d LSB, LMS max %.1e", hsl_worst, lms_worst);
    return o;
}

Outcome criterion5() {
    Outcome o;
    const Hsl red = rgb_to_hsl(EncodedRgb(1, 0, 0));
    o.require(red.h == 0 && red.s == 1 && red.l == 0.5, "red");
    const Hsl steel = rgb_to_hsl(EncodedRgb(0.2, 0.4, 0.6));
    o.require(std::abs(steel.h - 210) < 1e-9 && std::abs(steel.s - 0.5) < 1e-9 && std::abs(steel.l - 0.4) < 1e-9,
              fmt("(0.2,0.4,0.6) -> (%g,%g,%g)", steel.h, steel.s, steel.l));
    for_grid([&](Srgb8 c) {
        const EncodedRgb e = normalize(c);
        const double mx = std::max({e.r, e.g, e.b}), mn = std::min({e.r, e.g, e.b});
        o.require(rgb_to_hsl(e).l == (mx + mn) / 2, "L != (MAX+MIN)/2 at " + to_hex(c));
    });
    return o;
}

Outcome criterion6(double& check_ms) {
    Outcome o;
    const Srgb8 red{255, 0, 0};
    const LabColor red_lab = srgb_to_lab(red);
    const LabColor red_sim = srgb_to_lab(simulate_color(red, Dichromacy::Protanopia));
    Srgb8 best{};
    double best_de = INFINITY;
    for_grid([&](Srgb8 c) {
        if (delta_e(srgb_to_lab(c), red_lab) <= 40) return;
        const double de = delta_e(srgb_to_lab(simulate_color(c, Dichromacy::Protanopia)), red_sim);
        if (de < best_de) {
            best_de = de;
            best = c;
        }
    });
    const std::vector<ColorToken> tokens{{"subject", red}, {"partner", best}};
    const std::vector<AdjacencyPair> adjacency{{"subject", "partner"}};
    const auto t0 = Clock::now();
    const auto reports = detect_conflicts(tokens, adjacency, DichromacySet::all(), {});
    check_ms = ms_since(t0);
    const bool flagged = reports.size() == 1 && reports[0].conflicting_kinds.contains(Dichromacy::Protanopia);
    o.require(flagged, "oracle pair " + to_hex(best) + " not flagged");
    o.require(check_ms < 1.0, fmt("check took %.3f ms", check_ms));
    o.detail = fmt("partner %s, protan dE %.3f, check %.3f ms", to_hex(best).c_str(), best_de, check_ms);
    return o;
}

Outcome criterion7(const fs::path& dir) {
    Outcome o;
    const std::string adapted = (dir / "red_green_adapted.css").string();
    o.require(cli_run({"adapt", "--css", fixture("red_green.css"), "--out", adapted}) == 0, "adapt red/green");
    o.require(cli_run({"check", "--css", adapted}) == 0, "check after adapt");

    const std::string same = (dir / "conflict_free_out.css").string();
    o.require(cli_run({"adapt", "--css", fixture("conflict_free.css"), "--out", same}) == 0, "adapt conflict-free");
    o.require(slurp(same) == slurp(fixture("conflict_free.css")), "conflict-free output changed");

    const std::string plan = (dir / "unresolvable_plan.json").string();
    o.require(cli_run({"adapt", "--css", fixture("red_green.css"), "--out", (dir / "unresolvable.css").string(),
                       "--plan", plan, "--hue-step", "1", "--max-rotation", "1", "--lightness-steps", "0"}) == 2,
              "unresolvable exit code");
    o.require(slurp(plan).find("\"unresolved\": []") == std::string::npos, "unresolved list empty");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t replaced = 0;
    for (const char* name : {"red_green.css", "conflict_free.css", "mixed.css"}) {
        const std::string css = slurp(fixture(name));
        const auto occ = scan_stylesheet(css).occurrences;
        const StyleGraph graph = derive_adjacency(occ);
        const RemapPlan plan = resolve(graph.tokens, graph.adjacency, DichromacySet::all(), {}, {});
        const std::string out = rewrite_stylesheet(css, occ, plan);
        const auto again = scan_stylesheet(out).occurrences;
        if (again.size() != occ.size()) {
            o.require(false, std::string(name) + ": occurrence count changed");
            continue;
        }
        std::size_t in_at = 0, out_at = 0;
        for (std::size_t i = 0; i < occ.size(); ++i) {
            o.require(css.compare(in_at, occ[i].span.start - in_at, out, out_at, again[i].span.start - out_at) == 0,
                      std::string(name) + ": bytes changed outside a colour span");
            if (occ[i].color != again[i].color) ++replaced;
            in_at = occ[i].span.end;
            out_at = again[i].span.end;
        }
        o.require(css.compare(in_at, std::string::npos, out, out_at, std::string::npos) == 0,
                  std::string(name) + ": trailing bytes changed");
    }
    if (o.ok) o.detail = fmt("%zu literals rewritten", replaced);
    return o;
}

Outcome criterion9() {
    Outcome o;
    // 64x32 card: red left half, green right half.
    Image card{64, 32, 3, {}};
    for (std::uint32_t y = 0; y < card.height; ++y)
        for (std::uint32_t x = 0; x < card.width; ++x) {
            if (x < 32) card.pixels.insert(card.pixels.end(), {255, 0, 0});
            else card.pixels.insert(card.pixels.end(), {0, 102, 0});
        }
    const Image sim = simulate_image(card, Dichromacy::Protanopia);
    const Hsl before = rgb_to_hsl(Srgb8{255, 0, 0});
    for (std::size_t i = 0; i < card.pixel_count(); ++i) {
        if (card.pixels[i * 3] != 255) continue;
        const Srgb8 px{sim.pixels[i * 3], sim.pixels[i * 3 + 1], sim.pixels[i * 3 + 2]};
        const Hsl after = rgb_to_hsl(px);
        o.require(after.h >= 20 && after.h <= 100, "hue " + std::to_string(after.h));
        o.require(after.l <= before.l, "lightness increased");
        if (i == 0) o.detail = fmt("red -> %s, hue %.1f, L %.3f", to_hex(px).c_str(), after.h, after.l);
    }
    return o;
}

Outcome criterion10(const fs::path& dir, double& sim_ms) {
    Outcome o;
    Image img{1000, 1000, 3, {}};
    img.pixels.resize(img.pixel_count() * 3);
    std::mt19937 rng(10);
    for (auto& v : img.pixels) v = static_cast<std::uint8_t>(rng());
    const std::string in = (dir / "mp.png").string();
    write_png(in, img);

    const std::string out1 = (dir / "mp_a.png").string(), out2 = (dir / "mp_b.png").string();
    const auto t0 = Clock::now();
    o.require(cli_run({"simulate", "--type", "deutan", "--input", in, "--output", out1}) == 0, "simulate failed");
    sim_ms = ms_since(t0);
    o.require(sim_ms < 1000, fmt("1 MP took %.0f ms", sim_ms));
    cli_run({"simulate", "--type", "deutan", "--input", in, "--output", out2});
    o.require(slurp(out1) == slurp(out2), "simulate output differs between runs");

    std::string a, b;
    cli_run({"check", "--css", fixture("mixed.css"), "--format", "json"}, &a);
    cli_run({"check", "--css", fixture("mixed.css"), "--format", "json"}, &b);
    o.require(a == b, "check output differs between runs");
    for (int i = 0; i < 2; ++i) {
        const std::string n = std::to_string(i);
        cli_run({"adapt", "--css", fixture("mixed.css"), "--out", (dir / ("m" + n + ".css")).string(), "--plan",
                 (dir / ("m" + n + ".json")).string()});
    }
    o.require(slurp(dir / "m0.css") == slurp(dir / "m1.css") && slurp(dir / "m0.json") == slurp(dir / "m1.json"),
              "adapt output differs between runs");
    o.detail = fmt("1 MP in %.0f ms with %s kernel", sim_ms, kernel_name(best_kernel()));
    return o;
}

}  // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / "cvd_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    struct Criterion {
        int id;
        const char* title;
        double budget_ms;
        std::function<Outcome()> run;
    };
    double check_ms = 0, sim_ms = 0;
    const std::vector<Criterion> criteria{
        {1, "projection coefficients are exact", 1, criterion1},
        {2, "projections are idempotent", 5000, criterion2},
        {3, "grays and white are fixed points", 1000, criterion3},
        {4, "conversion round trips", 10000, criterion4},
        {5, "HSL formula conformance", 1000, criterion5},
        {6, "brute-force confusion partner is flagged", 60000, [&] { return criterion6(check_ms); }},
        {7, "adapt then check end to end", 3000, [&] { return criterion7(dir); }},
        {8, "rewrite touches only colour spans", 1000, criterion8},
        {9, "protan red turns darker olive", 1000, criterion9},
        {10, "1 MP simulate under 1 s, runs deterministic", 10000, [&] { return criterion10(dir, sim_ms); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double ms = ms_since(t0);
        o.require(ms < c.budget_ms, fmt("took %.1f ms, budget %.0f ms", ms, c.budget_ms));
        if (!o.ok) ++failed;
        std::printf("%s criterion %d: %s (%.1f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, ms,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    fs::remove_all(dir);
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
