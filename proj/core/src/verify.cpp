#include "orbiflow/verify.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "orbiflow/sections.hpp"
#include "orbiflow/snf.hpp"
#include "orbiflow/torusmap.hpp"

namespace orbiflow::verify {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string pair_str(long long a, long long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string rational_str(const boost::rational<long long>& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct Checks {
    std::string prefix;
    std::vector<Check>* out;

    void add(const std::string& id, const std::string& expected, const std::string& actual) {
        out->push_back({prefix + id, expected, actual, expected == actual});
    }
    void add(const std::string& id, long long expected, long long actual) {
        add(id, std::to_string(expected), std::to_string(actual));
    }
    void flag(const std::string& id, bool ok) { add(id, "true", ok ? "true" : "false"); }
};

long long brute_force_fixed(const torusmap::TorusMatrix& A) {
    long long N = std::llabs(torusmap::det_minus_identity(A));
    long long count = 0;
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j) {
            long long x = ((A.a % N) * i + (A.b % N) * j) % N;
            long long y = ((A.c % N) * i + (A.d % N) * j) % N;
            if (((x - i) % N + N) % N == 0 && ((y - j) % N + N) % N == 0) ++count;
        }
    return count;
}

const char* convention_name(surgery::SeifertConvention c) {
    return c == surgery::SeifertConvention::Standard ? "standard" : "reversed";
}

std::optional<ErrorKind> parse_error_kind(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(ErrorKind::NotPeriodic); ++k)
        if (s == to_string(static_cast<ErrorKind>(k))) return static_cast<ErrorKind>(k);
    return std::nullopt;
}

ordered_json check_json(const Check& c) {
    return {{"check_id", c.check_id}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

Check check_from(const ordered_json& j) {
    return {j.at("check_id").get<std::string>(), j.at("expected").get<std::string>(),
            j.at("actual").get<std::string>(), j.at("pass").get<bool>()};
}

bool same_tol(const hyp2::Tolerances& a, const hyp2::Tolerances& b) {
    return a.det == b.det && a.pt == b.pt && a.geo == b.geo && a.cls == b.cls && a.ang == b.ang &&
           a.sign == b.sign && a.dedup == b.dedup;
}

}  // namespace

bool CaseRecord::pass() const {
    if (error) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

bool Report::pass() const {
    for (const auto& c : cases)
        if (!c.pass()) return false;
    for (const auto& c : global)
        if (!c.pass) return false;
    return true;
}

bool Report::has_errors() const {
    for (const auto& c : cases)
        if (c.error) return true;
    return false;
}

bool Report::operator==(const Report& o) const {
    const Config &a = config, &b = o.config;
    return schema_version == o.schema_version && a.depth == b.depth && same_tol(a.tol, b.tol) &&
           a.trace3_length == b.trace3_length && a.catmap_max_period == b.catmap_max_period &&
           a.convention == b.convention && cases == o.cases && global == o.global;
}

Expected expected_for(CaseId id) {
    using surgery::SlopeCoefficient;
    switch (id) {
        case CaseId::C237:
            return {7, 5, 2, 2, -1, {{1, 1}}, {1, 1}, std::nullopt, 0, {1, 1}, false, 1};
        case CaseId::C245:
            return {5, 3, 2, 2, -1, {{2, 1}}, {2, 1}, std::nullopt, 0, {1, 2}, false, 2};
        case CaseId::C246:
            return {4, 3, 1, 0, -2, {{1, 1}, {1, 1}}, {2, 2}, std::nullopt, 1, {1, 1}, true, 4};
        case CaseId::C334:
            return {4, 2, 2, 2, -1, {{3, 1}}, {3, 1}, -1, 0, {1, 3}, false, 3};
        case CaseId::C344:
            return {3, 2, 1, 0, -2, {{2, 1}, {2, 1}}, {4, 2}, -2, 1, {1, 2}, true, 8};
    }
    throw Error(ErrorKind::InvalidArgument, "verify", "unknown case");
}

CaseRecord verify_case(CaseId id, const Config& cfg) {
    const auto t0 = Clock::now();
    CaseRecord rec;
    rec.id = id;
    Checks chk{case_name(id) + ".", &rec.checks};
    const Expected ex = expected_for(id);
    try {
        // fixed points of the first return map, read off the tiling
        auto G = trigroup::build_group(id);
        auto C = trigroup::curve_system(G, id);
        auto A = trigroup::build_arrangement(G, C, cfg.depth, cfg.tol);
        auto adj = trigroup::adjacency_isometries(A);
        chk.add("adjacency.elements", ex.elements, static_cast<long long>(adj.elements.size()));
        chk.add("adjacency.stabilizer", ex.elements, adj.stabilizer_order);
        chk.add("adjacency.elliptic", ex.elliptic, adj.elliptic);
        chk.add("adjacency.hyperbolic", ex.hyperbolic, adj.hyperbolic);
        chk.add("adjacency.parabolic", 0, adj.parabolic);
        chk.add("adjacency.boundary_axes", ex.boundary_axes, adj.boundary_axes);

        std::vector<int> crossings;
        for (const auto& e : adj.elements)
            crossings.push_back(e.cls.kind == hyp2::Kind::Hyperbolic ? trigroup::crossing_count(A, e.element.matrix)
                                                                      : 0);
        if (id == CaseId::C334 || id == CaseId::C344 || id == CaseId::C246) {
            std::string want, got;
            for (std::size_t i = 0; i < adj.elements.size(); ++i) {
                if (adj.elements[i].cls.kind != hyp2::Kind::Hyperbolic) continue;
                want += (want.empty() ? "" : " ") + std::string(id == CaseId::C334 ? "2" : "1");
                got += (got.empty() ? "" : " ") + std::to_string(crossings[i]);
            }
            chk.add("crossings.hyperbolic", want, got);
        }

        // section combinatorics
        auto S = sections::section(id);
        auto comps = sections::boundary_components(S);
        chk.add("section.euler_characteristic", ex.chi, sections::euler_characteristic(S));
        chk.flag("section.orientable", sections::orientable(S));
        chk.add("section.components", static_cast<long long>(ex.directions.size()),
                static_cast<long long>(comps.size()));
        std::string want_dirs, got_dirs;
        for (auto [a, b] : ex.directions) want_dirs += (want_dirs.empty() ? "" : " ") + pair_str(a, b);
        for (const auto& c : comps)
            got_dirs += (got_dirs.empty() ? "" : " ") + pair_str(c.a * c.multiplicity, c.b * c.multiplicity);
        chk.add("section.directions", want_dirs, got_dirs);
        auto total = sections::total_direction(comps);
        chk.add("section.total_direction", pair_str(ex.total_direction.first, ex.total_direction.second),
                pair_str(total.a, total.b));
        chk.add("section.blow_down_genus", 1, sections::blow_down_genus(S));
        auto turning = sections::meridional_turning(S);
        if (ex.turning) {
            chk.add("section.turning", std::to_string(*ex.turning),
                    turning.applicable ? rational_str(turning.value) : "n/a");
            chk.add("section.turning_vs_direction", rational_str(-total.b), rational_str(turning.value));
        } else {
            chk.add("section.turning", "n/a", turning.applicable ? rational_str(turning.value) : "n/a");
        }
        std::string want_sep, got_sep;
        for (auto [a, b] : ex.directions) want_sep += (want_sep.empty() ? "" : " ") + std::to_string(2 * b);
        for (int s : sections::separatrix_count(S)) got_sep += (got_sep.empty() ? "" : " ") + std::to_string(s);
        chk.add("section.separatrices", want_sep, got_sep);

        std::string slopes;
        for (const auto& c : comps)
            slopes += (slopes.empty() ? "" : " ") + surgery::section_to_slope(c.a, c.b).str();
        std::string want_slopes;
        for (std::size_t i = 0; i < comps.size(); ++i) want_slopes += (i ? " " : "") + ex.slope.str();
        chk.add("section.slope", want_slopes, slopes);

        auto fr = sections::first_return_summary(S, adj, crossings);
        chk.add("first_return.interior_fixed_points", ex.interior_fixed_points, fr.interior_fixed_points);
        chk.add("first_return.boundary_cycle", static_cast<long long>(comps.size()),
                fr.boundary_fixed_points == 1 ? 1 : fr.boundary_cycle_period);
        chk.add("first_return.total_fixed_points", 1, fr.total_fixed_points);

        // a trace-(2 + #Fix) class; trace 3 is certified unique
        auto scan = torusmap::trace3_scan(cfg.trace3_length);
        std::string cls = "uncertified";
        if (fr.total_fixed_points == 1 && scan.unique && scan.monotone)
            cls = torusmap::xy_normal_form(torusmap::word_from_letters("XY").product()).str();
        chk.add("first_return.class", torusmap::xy_normal_form(torusmap::cat()).str(), cls);

        // homology on both sides of the surgery correspondence
        Triple tr = triple_of(id);
        auto orbit = ex.second_orbit ? surgery::gamma2() : surgery::gamma1();
        auto surgered = surgery::surgered_h1({orbit, ex.slope});
        auto seifert = surgery::seifert_h1(tr.p, tr.q, tr.r, cfg.convention);
        chk.add("homology.match", seifert.str(), surgered.str());
        chk.add("homology.order", std::to_string(ex.h1_order),
                surgered.order() ? std::to_string(*surgered.order()) : "infinite");
    } catch (const Error& e) {
        rec.error = e.what();
        rec.error_kind = e.kind();
    }
    rec.seconds = seconds_since(t0);
    return rec;
}

std::vector<Check> verify_global(const Config& cfg) {
    std::vector<Check> out;
    Checks chk{"", &out};
    try {
        auto scan = torusmap::trace3_scan(cfg.trace3_length);
        chk.flag("torusmap.trace3_unique", scan.unique);
        chk.flag("torusmap.trace3_monotone", scan.monotone);
        chk.add("torusmap.cat_normal_form", "XY", torusmap::xy_normal_form(torusmap::cat()).str());

        const auto cat = torusmap::cat();
        for (int n = 1; n <= cfg.catmap_max_period; ++n) {
            auto An = cat.pow(n);
            long long det = std::llabs(torusmap::det_minus_identity(An));
            chk.add("catmap.fix.n" + std::to_string(n) + ".brute_force", det, brute_force_fixed(An));
            chk.add("catmap.fix.n" + std::to_string(n) + ".smith", det,
                    static_cast<long long>(torusmap::fixed_points(An).size()));
            long long partition = 0;
            for (const auto& o : torusmap::periodic_orbits(cat, n)) partition += o.period();
            chk.add("catmap.fix.n" + std::to_string(n) + ".orbit_partition", det, partition);
        }
        auto g1 = surgery::gamma1();
        auto a = torusmap::orbit_of(cat, torusmap::RationalPoint::make(3, 1, 5));
        auto b = torusmap::orbit_of(cat, torusmap::RationalPoint::make(1, 2, 5));
        chk.add("catmap.gamma1.period", 1, g1.period());
        chk.add("catmap.orbit(3/5,1/5).period", 2, a.period());
        chk.add("catmap.orbit(1/5,2/5).period", 2, b.period());
        chk.flag("catmap.period2_orbits_distinct", !a.contains(b.points.front()));

        chk.add("surgery.mapping_torus_h1", "Z", surgery::mapping_torus_h1(cat).str());
        for (const auto& row : surgery::verify_theorem_h1(cfg.convention)) {
            std::string id = "surgery." + row.orbit + "." + row.slope.str() + "." + case_name(row.target);
            chk.add(id + ".h1", row.seifert.str(), row.surgered.str());
            chk.add(id + ".h1_negated_slope", row.seifert.str(), row.surgered_negated.str());
            chk.add(id + ".h1_reversed_convention", row.seifert.str(), row.seifert_reversed.str());
        }
        for (long long den = 1; den <= 10; ++den) {
            auto s = surgery::SlopeCoefficient::make(1, den);
            auto pos = surgery::surgered_h1({g1, s}).order(), neg = surgery::surgered_h1({g1, s.negated()}).order();
            auto str = [](std::optional<long long> o) { return o ? std::to_string(*o) : std::string("infinite"); };
            chk.add("surgery.gamma1.order.a" + std::to_string(den), std::to_string(den) + " " + std::to_string(den),
                    str(pos) + " " + str(neg));
        }
    } catch (const Error& e) {
        out.push_back({"global.error", "none", e.what(), false});
    }
    return out;
}

Report run(const std::vector<CaseId>& ids, const Config& cfg) {
    Report r;
    r.config = cfg;
    std::vector<std::future<CaseRecord>> futures;
    const auto policy = cfg.parallel ? std::launch::async : std::launch::deferred;
    for (CaseId id : ids) futures.push_back(std::async(policy, verify_case, id, cfg));
    const auto t0 = Clock::now();
    r.global = verify_global(cfg);
    r.global_seconds = seconds_since(t0);
    for (auto& f : futures) r.cases.push_back(f.get());
    return r;
}

std::vector<CaseId> parse_case_filter(const std::string& filter) {
    if (filter == "all") return {kAllCases.begin(), kAllCases.end()};
    if (auto id = parse_case(filter)) return {*id};
    throw Error(ErrorKind::InvalidArgument, "verify", "unknown case '" + filter + "'");
}

std::string to_json(const Report& r, int indent) {
    ordered_json j;
    j["schema_version"] = r.schema_version;
    const auto& t = r.config.tol;
    j["config"] = {{"depth", r.config.depth},
                   {"tolerances",
                    {{"det", t.det},
                     {"pt", t.pt},
                     {"geo", t.geo},
                     {"cls", t.cls},
                     {"ang", t.ang},
                     {"sign", t.sign},
                     {"dedup", t.dedup}}},
                   {"trace3_length", r.config.trace3_length},
                   {"catmap_max_period", r.config.catmap_max_period},
                   {"seifert_convention", convention_name(r.config.convention)}};
    j["pass"] = r.pass();
    j["cases"] = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json cj;
        cj["case"] = case_name(c.id);
        cj["pass"] = c.pass();
        cj["error"] = c.error ? ordered_json(*c.error) : ordered_json(nullptr);
        cj["error_kind"] = c.error_kind ? ordered_json(to_string(*c.error_kind)) : ordered_json(nullptr);
        cj["checks"] = ordered_json::array();
        for (const auto& k : c.checks) cj["checks"].push_back(check_json(k));
        j["cases"].push_back(std::move(cj));
    }
    j["global"] = ordered_json::array();
    for (const auto& k : r.global) j["global"].push_back(check_json(k));
    return j.dump(indent) + "\n";
}

Report from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::InvalidArgument, "verify", std::string("malformed report: ") + e.what());
    }
    try {
        Report r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kSchemaVersion)
            throw Error(ErrorKind::InvalidArgument, "verify", "unsupported schema version");
        const auto& cj = j.at("config");
        r.config.depth = cj.at("depth").get<int>();
        const auto& tj = cj.at("tolerances");
        r.config.tol = {tj.at("det").get<double>(), tj.at("pt").get<double>(),   tj.at("geo").get<double>(),
                        tj.at("cls").get<double>(), tj.at("ang").get<double>(),  tj.at("sign").get<double>(),
                        tj.at("dedup").get<double>()};
        r.config.trace3_length = cj.at("trace3_length").get<int>();
        r.config.catmap_max_period = cj.at("catmap_max_period").get<int>();
        r.config.convention = cj.at("seifert_convention").get<std::string>() == "reversed"
                                  ? surgery::SeifertConvention::Reversed
                                  : surgery::SeifertConvention::Standard;
        for (const auto& c : j.at("cases")) {
            CaseRecord rec;
            auto id = parse_case(c.at("case").get<std::string>());
            if (!id) throw Error(ErrorKind::InvalidArgument, "verify", "unknown case in report");
            rec.id = *id;
            if (!c.at("error").is_null()) rec.error = c.at("error").get<std::string>();
            if (!c.at("error_kind").is_null()) rec.error_kind = parse_error_kind(c.at("error_kind").get<std::string>());
            for (const auto& k : c.at("checks")) rec.checks.push_back(check_from(k));
            r.cases.push_back(std::move(rec));
        }
        for (const auto& k : j.at("global")) r.global.push_back(check_from(k));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, "verify", std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "depth %d, tolerance det %.3g / cls %.3g, trace-3 scan length %d\n",
                  r.config.depth, r.config.tol.det, r.config.tol.cls, r.config.trace3_length);
    os << buf;
    for (const auto& c : r.cases) {
        std::snprintf(buf, sizeof buf, "case %s  %s  (%.2f s)\n", case_name(c.id).c_str(),
                      c.pass() ? "PASS" : "FAIL", c.seconds);
        os << buf;
        if (c.error) os << "  error: " << *c.error << "\n";
        for (const auto& k : c.checks)
            os << "  " << (k.pass ? "ok  " : "FAIL") << " " << k.check_id << "  expected " << k.expected
               << "  actual " << k.actual << "\n";
    }
    std::snprintf(buf, sizeof buf, "global  (%.2f s)\n", r.global_seconds);
    os << buf;
    for (const auto& k : r.global)
        os << "  " << (k.pass ? "ok  " : "FAIL") << " " << k.check_id << "  expected " << k.expected << "  actual "
           << k.actual << "\n";
    os << "homology agreement is a consistency check; the fixed-point chain is the certificate\n";
    os << (r.pass() ? "all checks passed\n" : "verification FAILED\n");
    return os.str();
}

}  // namespace orbiflow::verify
