#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "orbiflow/error.hpp"
#include "orbiflow/torusmap.hpp"
#include "orbiflow/verify.hpp"
#include "render.hpp"

namespace {

using namespace orbiflow;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
    fmt::print(stderr, "orbiflow: {}\n", msg);
    return kExitUsage;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

int cmd_verify(const std::string& filter, const std::string& json_path, int depth, double tol, bool reversed,
               bool sequential) {
    verify::Config cfg;
    cfg.depth = depth;
    cfg.tol = hyp2::Tolerances::scaled(tol);
    cfg.convention = reversed ? surgery::SeifertConvention::Reversed : surgery::SeifertConvention::Standard;
    cfg.parallel = !sequential;
    auto ids = verify::parse_case_filter(filter);
    auto report = verify::run(ids, cfg);
    fmt::print("{}", verify::to_text(report));
    if (!json_path.empty() && !write_file(json_path, verify::to_json(report)))
        return usage_error("cannot write report to " + json_path);
    if (report.has_errors()) {
        for (const auto& c : report.cases)
            if (c.error) fmt::print(stderr, "orbiflow: case {}: {}\n", case_name(c.id), *c.error);
        return kExitUsage;
    }
    return report.pass() ? kExitPass : kExitFail;
}

int cmd_tiling(const std::string& name, int depth, double tol, const std::string& out) {
    auto id = parse_case(name);
    if (!id) return usage_error("unknown case '" + name + "'");
    cli::SvgStats stats;
    std::string svg = cli::render_tiling_svg(*id, depth, hyp2::Tolerances::scaled(tol), &stats);
    if (!write_file(out, svg)) return usage_error("cannot write " + out);
    fmt::print("wrote {}: {} cells, {} highlighted, {} lines, {} axes\n", out, stats.cells, stats.highlighted,
               stats.lines, stats.axes);
    return kExitPass;
}

int cmd_catmap(int period) {
    using namespace orbiflow::torusmap;
    const auto A = cat();
    const long long expected = periodic_point_count(A, period);
    long long total = 0;
    fmt::print("period dividing {}: |det(A^n - I)| = {}\n", period, expected);
    fmt::print("{:>6}  {:>6}  {}\n", "orbit", "period", "points");
    int k = 0;
    for (const auto& o : periodic_orbits(A, period)) {
        std::string pts;
        for (const auto& p : o.points) pts += (pts.empty() ? "" : " ") + p.str();
        fmt::print("{:>6}  {:>6}  {}\n", k++, o.period(), pts);
        total += o.period();
    }
    fmt::print("{} points in {} orbits\n", total, k);
    return total == expected ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification of the five triangle-orbifold surgeries on the cat-map suspension"};
    app.require_subcommand(1);

    std::string filter = "all", json_path;
    int depth = trigroup::kAdjacencyDepth;
    double tol = hyp2::Tolerances{}.det;
    bool reversed = false, sequential = false;
    auto* verify = app.add_subcommand("verify", "run the verification chain");
    verify->add_option("--case", filter, "case id or all")->capture_default_str();
    verify->add_option("--json", json_path, "write the JSON report to PATH");
    verify->add_option("--depth", depth, "word length of the group ball")->envname("ORBIFLOW_DEPTH")->capture_default_str();
    verify->add_option("--tol", tol, "base tolerance; class and angle tolerances are 100x")
        ->envname("ORBIFLOW_TOL")
        ->capture_default_str();
    verify->add_flag("--reversed-seifert", reversed, "use the orientation-reversed Seifert convention");
    verify->add_flag("--sequential", sequential, "verify cases one after another");

    std::string tiling_case = "237", out;
    int tiling_depth = trigroup::kTilingDepth;
    double tiling_tol = hyp2::Tolerances{}.det;
    auto* tiling = app.add_subcommand("tiling", "render the arrangement of one case as SVG");
    tiling->add_option("--case", tiling_case, "case id")->capture_default_str();
    tiling->add_option("--depth", tiling_depth, "word length of the group ball")
        ->envname("ORBIFLOW_DEPTH")
        ->capture_default_str();
    tiling->add_option("--tol", tiling_tol, "base tolerance")->envname("ORBIFLOW_TOL")->capture_default_str();
    tiling->add_option("--out", out, "output SVG path")->required();

    int period = 2;
    auto* catmap = app.add_subcommand("catmap", "periodic orbits of the cat map");
    catmap->add_option("--period", period, "list points of period dividing N (1..12)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (depth < 1) return usage_error("depth must be at least 1");
            if (!(tol > 0)) return usage_error("tolerance must be positive");
            return cmd_verify(filter, json_path, depth, tol, reversed, sequential);
        }
        if (tiling->parsed()) {
            if (tiling_depth < 1) return usage_error("depth must be at least 1");
            if (!(tiling_tol > 0)) return usage_error("tolerance must be positive");
            return cmd_tiling(tiling_case, tiling_depth, tiling_tol, out);
        }
        if (catmap->parsed()) {
            if (period < 1 || period > 12) return usage_error("period must lie in 1..12");
            return cmd_catmap(period);
        }
    } catch (const Error& e) {
        return usage_error(fmt::format("{} ({})", e.what(), to_string(e.kind())));
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return kExitUsage;
}
