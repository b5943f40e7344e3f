#include "orbiflow/sections.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "orbiflow/error.hpp"

namespace orbiflow::sections {

namespace {

Error inconsistent(const std::string& what) { return Error(ErrorKind::InconsistentComplex, "sections", what); }

Side next_side(const SectionComplex& S, Side s) { return {s.polygon, (s.index + 1) % S.polygons[s.polygon]}; }

std::map<Side, Side> partner_map(const SectionComplex& S) {
    std::map<Side, Side> partner;
    for (const auto& p : S.pairings) {
        partner[p.a] = p.b;
        partner[p.b] = p.a;
    }
    return partner;
}

struct UnionFind {
    std::map<Side, Side> parent;
    Side find(Side x) {
        auto it = parent.find(x);
        if (it == parent.end()) return parent[x] = x;
        if (it->second == x) return x;
        return it->second = find(it->second);
    }
    void unite(Side a, Side b) { parent[find(a)] = find(b); }
};

BoundaryLabel label(Rational lon, Rational mer, LabelKind kind, std::string name) {
    return {0, lon, mer, kind, std::move(name)};
}

// rectangle whose two vertical sides are cut into n pieces each; sides run
// bottom, right pieces upward, top, left pieces downward
SectionComplex rectangle(CaseId id, int n, const std::vector<std::pair<int, int>>& right_to_left, Rational lon,
                         Rational mer) {
    SectionComplex S;
    S.id = id;
    S.polygons = {2 * n + 2};
    for (auto [r, l] : right_to_left) S.pairings.push_back({{0, 1 + r}, {0, n + 2 + (n - 1 - l)}, true});
    S.boundary.push_back({{0, 0}, label(lon, mer, LabelKind::FiberTwist, "bottom")});
    S.boundary.push_back({{0, n + 1}, label(lon, mer, LabelKind::FiberTwist, "top")});
    return S;
}

}  // namespace

const BoundaryLabel* SectionComplex::label(Side s) const {
    for (const auto& [side, lab] : boundary)
        if (side == s) return &lab;
    return nullptr;
}

void validate(const SectionComplex& S) {
    std::map<Side, int> uses;
    auto use = [&](Side s) {
        if (s.polygon < 0 || s.polygon >= static_cast<int>(S.polygons.size()) || s.index < 0 ||
            s.index >= S.polygons[s.polygon])
            throw inconsistent("side out of range");
        if (++uses[s] > 1) throw inconsistent("side used twice");
    };
    for (const auto& p : S.pairings) {
        use(p.a);
        use(p.b);
    }
    for (const auto& [side, lab] : S.boundary) use(side);
    for (int f = 0; f < static_cast<int>(S.polygons.size()); ++f)
        for (int i = 0; i < S.polygons[f]; ++i)
            if (!uses.count({f, i})) throw inconsistent("side neither paired nor labelled");
}

SectionComplex section(CaseId id) {
    SectionComplex S;
    const Rational half(1, 2);
    switch (id) {
        case CaseId::C237:
            // lower right against upper left, upper right against lower left
            S = rectangle(id, 2, {{0, 1}, {1, 0}}, -half, -half);
            S.name = "S237";
            S.fiber_fraction = 0.5;
            break;
        case CaseId::C245:
            S = rectangle(id, 2, {{0, 1}, {1, 0}}, Rational(-1), -half);
            S.name = "S245";
            break;
        case CaseId::C246:
            S = rectangle(id, 3, {{0, 2}, {1, 1}, {2, 0}}, Rational(-1), Rational(-1));
            S.name = "S246";
            break;
        case CaseId::C334: {
            // hexagons H_P (0) and H_Q (1); odd sides glued, even sides on the orbit
            S.id = id;
            S.name = "S334";
            S.polygons = {6, 6};
            for (int i : {1, 3, 5}) S.pairings.push_back({{0, i}, {1, i}, true});
            const char* names = "abcdef";
            for (int k = 0; k < 6; ++k) {
                Side s{k / 3, 2 * (k % 3)};
                Rational mer = k < 4 ? -half : half;
                S.boundary.push_back({s, label(-half, mer, LabelKind::TurningPoint, std::string(1, names[k]))});
            }
            break;
        }
        case CaseId::C344: {
            // octagons H_Q (0) and H_R (1); odd sides glued, even sides on the orbit
            S.id = id;
            S.name = "S344";
            S.polygons = {8, 8};
            for (int i : {1, 3, 5, 7}) S.pairings.push_back({{0, i}, {1, i}, true});
            const std::vector<std::pair<Side, std::string>> order{{{0, 4}, "a"}, {{0, 6}, "b"}, {{1, 0}, "c"},
                                                                  {{1, 2}, "d"}, {{1, 4}, "e"}, {{1, 6}, "f"},
                                                                  {{0, 0}, "g"}, {{0, 2}, "h"}};
            for (const auto& [s, n] : order) {
                Rational mer = (n == "g" || n == "h") ? half : -half;
                S.boundary.push_back({s, label(-half, mer, LabelKind::TurningPoint, n)});
            }
            break;
        }
        default:
            throw Error(ErrorKind::InvalidArgument, "sections", "unknown case");
    }
    validate(S);
    return S;
}

int vertex_count(const SectionComplex& S) {
    UnionFind uf;
    for (const auto& p : S.pairings) {
        if (p.reversed) {
            uf.unite(p.a, next_side(S, p.b));
            uf.unite(next_side(S, p.a), p.b);
        } else {
            uf.unite(p.a, p.b);
            uf.unite(next_side(S, p.a), next_side(S, p.b));
        }
    }
    std::set<Side> roots;
    for (int f = 0; f < static_cast<int>(S.polygons.size()); ++f)
        for (int i = 0; i < S.polygons[f]; ++i) roots.insert(uf.find({f, i}));
    return static_cast<int>(roots.size());
}

int edge_count(const SectionComplex& S) {
    return static_cast<int>(S.pairings.size() + S.boundary.size());
}

int euler_characteristic(const SectionComplex& S) {
    return vertex_count(S) - edge_count(S) + static_cast<int>(S.polygons.size());
}

bool orientable(const SectionComplex& S) {
    const int n = static_cast<int>(S.polygons.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const auto& p : S.pairings) {
        int flip = p.reversed ? 0 : 1;
        adj[p.a.polygon].push_back({p.b.polygon, flip});
        adj[p.b.polygon].push_back({p.a.polygon, flip});
    }
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, flip] : adj[u]) {
                int want = color[u] ^ flip;
                if (color[v] < 0) {
                    color[v] = want;
                    q.push(v);
                } else if (color[v] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<BoundaryComponent> boundary_components(const SectionComplex& S) {
    validate(S);
    if (!orientable(S)) throw inconsistent("boundary walk needs an orientable complex");
    const auto partner = partner_map(S);
    std::set<Side> seen;
    std::vector<BoundaryComponent> out;
    for (const auto& [start, lab0] : S.boundary) {
        if (seen.count(start)) continue;
        BoundaryComponent comp;
        comp.orbit = lab0.orbit;
        Rational lon(0), mer(0);
        for (Side cur = start; !seen.count(cur);) {
            seen.insert(cur);
            comp.sides.push_back(cur);
            const BoundaryLabel* lab = S.label(cur);
            if (lab->orbit != comp.orbit) throw inconsistent("boundary component spans two orbits");
            lon += lab->longitudinal;
            mer += lab->meridional;
            if (lab->kind == LabelKind::TurningPoint) comp.turning += lab->meridional;
            Side nxt = next_side(S, cur);
            for (int guard = 0; partner.count(nxt); ++guard) {
                if (guard > static_cast<int>(partner.size())) throw inconsistent("boundary walk does not close");
                nxt = next_side(S, partner.at(nxt));
            }
            cur = nxt;
        }
        if (lon.denominator() != 1 || mer.denominator() != 1)
            throw inconsistent("boundary winding is not integral");
        long long A = -lon.numerator(), B = -mer.numerator();
        if (B == 0) throw inconsistent("boundary direction has b = 0");
        if (B < 0) {
            A = -A;
            B = -B;
        }
        long long g = std::gcd(A < 0 ? -A : A, B);
        comp.a = A / g;
        comp.b = B / g;
        comp.multiplicity = g;
        out.push_back(std::move(comp));
    }
    return out;
}

Direction total_direction(const std::vector<BoundaryComponent>& comps) {
    Direction d;
    for (const auto& c : comps) {
        d.a += c.a * c.multiplicity;
        d.b += c.b * c.multiplicity;
    }
    return d;
}

Turning meridional_turning(const SectionComplex& S) {
    Turning t;
    for (const auto& [side, lab] : S.boundary)
        if (lab.kind == LabelKind::TurningPoint) {
            t.applicable = true;
            t.value += lab.meridional;
        }
    return t;
}

int blow_down_genus(const SectionComplex& S) {
    int twice = 2 - euler_characteristic(S) - static_cast<int>(boundary_components(S).size());
    if (twice < 0 || twice % 2 != 0) throw inconsistent("capped surface has non-integral genus");
    return twice / 2;
}

std::vector<int> separatrix_count(const SectionComplex& S) {
    std::vector<int> out;
    for (const auto& c : boundary_components(S)) out.push_back(static_cast<int>(2 * c.b * c.multiplicity));
    return out;
}

int section_hits(const SectionComplex& S, int crossings) {
    double hits = crossings * S.fiber_fraction;
    if (std::abs(hits - std::round(hits)) > 1e-12)
        throw inconsistent("crossing count is incompatible with the fiber fraction");
    return static_cast<int>(std::lround(hits));
}

FirstReturnSummary first_return_summary(const SectionComplex& S, const trigroup::AdjacencyReport& adjacency,
                                        const std::vector<int>& crossings) {
    if (adjacency.parabolic != 0) throw inconsistent("adjacency report contains parabolic elements");
    if (crossings.size() != adjacency.elements.size())
        throw Error(ErrorKind::InvalidArgument, "sections", "one crossing count per adjacency element expected");
    FirstReturnSummary s;
    s.id = S.id;
    s.boundary_orbit_components = static_cast<int>(boundary_components(S).size());
    if (s.boundary_orbit_components == 1) s.boundary_fixed_points = 1;
    else s.boundary_cycle_period = s.boundary_orbit_components;
    for (std::size_t i = 0; i < adjacency.elements.size(); ++i) {
        const auto& e = adjacency.elements[i];
        if (e.cls.kind != hyp2::Kind::Hyperbolic || e.on_boundary) continue;
        if (section_hits(S, crossings[i]) == 1) ++s.interior_fixed_points;
    }
    s.total_fixed_points = s.interior_fixed_points + s.boundary_fixed_points;
    return s;
}

FirstReturnSummary first_return_summary(const SectionComplex& S, const trigroup::Arrangement& A) {
    if (A.curves.id != S.id) throw Error(ErrorKind::InvalidArgument, "sections", "arrangement is for another case");
    auto report = trigroup::adjacency_isometries(A);
    std::vector<int> crossings;
    for (const auto& e : report.elements)
        crossings.push_back(e.cls.kind == hyp2::Kind::Hyperbolic ? trigroup::crossing_count(A, e.element.matrix) : 0);
    return first_return_summary(S, report, crossings);
}

}  // namespace orbiflow::sections
