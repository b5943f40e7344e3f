#include "orbiflow/trigroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "orbiflow/error.hpp"

namespace orbiflow::trigroup {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKeepRadius = 9.0;

struct KeyHash {
    std::size_t operator()(const std::array<long long, 4>& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (long long v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

// Tolerance-aware lookup of sign-normalized matrices.
class MatrixIndex {
public:
    explicit MatrixIndex(double eps) : eps_(eps), h_(std::max(1e-5, 100 * eps)) {}

    // index of an element within eps of m or -m, -1 if none
    int find(const std::array<double, 4>& m, const std::vector<GroupElement>& store) const {
        for (double sgn : {1.0, -1.0}) {
            std::array<double, 4> v{sgn * m[0], sgn * m[1], sgn * m[2], sgn * m[3]};
            std::array<std::array<long long, 2>, 4> cells;
            std::array<int, 4> n{};
            for (int k = 0; k < 4; ++k) {
                double s = v[k] / h_;
                long long c = static_cast<long long>(std::floor(s));
                double frac = s - static_cast<double>(c);
                cells[k][0] = c;
                n[k] = 1;
                double margin = 10 * eps_ / h_;
                if (frac < margin) cells[k][n[k]++] = c - 1;
                else if (frac > 1 - margin) cells[k][n[k]++] = c + 1;
            }
            for (int i0 = 0; i0 < n[0]; ++i0)
                for (int i1 = 0; i1 < n[1]; ++i1)
                    for (int i2 = 0; i2 < n[2]; ++i2)
                        for (int i3 = 0; i3 < n[3]; ++i3) {
                            std::array<long long, 4> key{cells[0][i0], cells[1][i1], cells[2][i2], cells[3][i3]};
                            auto it = buckets_.find(key);
                            if (it == buckets_.end()) continue;
                            for (int idx : it->second) {
                                const auto& e = store[idx].matrix.entries();
                                double d = 0.0;
                                for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(e[k] - v[k]));
                                if (d <= eps_) return idx;
                                if (d < 10 * eps_)
                                    throw Error(ErrorKind::DedupAmbiguity, "trigroup",
                                                "matrix gap " + std::to_string(d) + " inside the dedup guard band");
                            }
                        }
        }
        return -1;
    }

    void insert(const std::array<double, 4>& m, int idx) {
        std::array<long long, 4> key;
        for (int k = 0; k < 4; ++k) key[k] = static_cast<long long>(std::floor(m[k] / h_));
        buckets_[key].push_back(idx);
    }

private:
    double eps_;
    double h_;
    std::unordered_map<std::array<long long, 4>, std::vector<int>, KeyHash> buckets_;
};

// Tolerance-aware lookup of points by hyperbolic distance, hashed in the disc.
class PointIndex {
public:
    explicit PointIndex(double eps) : eps_(eps) {}

    int find(HPoint p, const std::vector<HPoint>& store) const {
        auto w = hyp2::to_disc(p);
        long long cx = static_cast<long long>(std::floor(w.real() / kQuantum));
        long long cy = static_cast<long long>(std::floor(w.imag() / kQuantum));
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = buckets_.find(key(cx + dx, cy + dy));
                if (it == buckets_.end()) continue;
                for (int idx : it->second)
                    if (hyp2::distance(store[idx], p) <= eps_) return idx;
            }
        return -1;
    }

    void insert(HPoint p, int idx) {
        auto w = hyp2::to_disc(p);
        buckets_[key(static_cast<long long>(std::floor(w.real() / kQuantum)),
                     static_cast<long long>(std::floor(w.imag() / kQuantum)))]
            .push_back(idx);
    }

private:
    static constexpr double kQuantum = 1e-6;
    static long long key(long long x, long long y) { return x * 4000003LL + y; }
    double eps_;
    std::unordered_map<long long, std::vector<int>> buckets_;
};

// Lines hashed under the boundary angle of each endpoint.
class LineIndex {
public:
    explicit LineIndex(double eps) : eps_(eps), n_(static_cast<long long>(std::ceil(2 * kPi / kQuantum))) {}

    int find(const Geodesic& l, const std::vector<Geodesic>& store) const {
        long long b = bucket(l.u);
        for (long long d = -1; d <= 1; ++d) {
            auto it = buckets_.find(((b + d) % n_ + n_) % n_);
            if (it == buckets_.end()) continue;
            for (int idx : it->second) {
                if (hyp2::same_geodesic(store[idx], l, eps_)) return idx;
                if (hyp2::same_geodesic(store[idx], l, 10 * eps_))
                    throw Error(ErrorKind::DedupAmbiguity, "trigroup", "line endpoints inside the dedup guard band");
            }
        }
        return -1;
    }

    void insert(const Geodesic& l, int idx) {
        buckets_[bucket(l.u)].push_back(idx);
        long long bv = bucket(l.v);
        if (bv != bucket(l.u)) buckets_[bv].push_back(idx);
    }

private:
    static constexpr double kQuantum = 1e-5;
    long long bucket(hyp2::Ideal u) const {
        return static_cast<long long>(std::floor(hyp2::boundary_angle(u) / kQuantum)) % n_;
    }
    double eps_;
    long long n_;
    std::unordered_map<long long, std::vector<int>> buckets_;
};

double direction_from(HPoint p, HPoint q) {
    std::complex<double> z((q.x - p.x) / p.y, q.y / p.y);
    const std::complex<double> i(0.0, 1.0);
    return std::arg((z - i) / (z + i));
}

std::vector<std::pair<HPoint, const GroupElement*>> orbit_points(const Arrangement& A, HPoint x, double radius) {
    std::vector<HPoint> pts;
    std::vector<const GroupElement*> wit;
    PointIndex index(1e-6);
    for (const auto& g : A.ball) {
        HPoint y = hyp2::apply(g.matrix, x);
        if (hyp2::distance(y, A.curves.center) > radius) continue;
        if (index.find(y, pts) >= 0) continue;
        index.insert(y, static_cast<int>(pts.size()));
        pts.push_back(y);
        wit.push_back(&g);
    }
    std::vector<std::pair<HPoint, const GroupElement*>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.emplace_back(pts[i], wit[i]);
    return out;
}

struct Touch {
    bool touching = false;
    bool across_vertex = false;
    double reach = 0.0;  // radius around c the verdict depends on
};

Touch touching(const std::vector<const Geodesic*>& lines, HPoint c, HPoint cc, double eps) {
    Touch t;
    t.reach = hyp2::distance(c, cc);
    std::vector<const Geodesic*> sep;
    for (const Geodesic* l : lines) {
        int a = hyp2::side(*l, c), b = hyp2::side(*l, cc);
        if (a != b) sep.push_back(l);
        if (sep.size() > 2) return t;
    }
    if (sep.size() == 1) {
        t.touching = true;
        return t;
    }
    if (sep.size() != 2) return t;
    auto x = hyp2::intersection(*sep[0], *sep[1]);
    if (!x) return t;
    t.reach = std::max(t.reach, hyp2::distance(c, *x));
    for (const Geodesic* l : lines) {
        int s = hyp2::side(*l, *x, eps);
        if (s == 0) continue;
        if (s != hyp2::side(*l, c) || s != hyp2::side(*l, cc)) return t;
    }
    t.touching = true;
    t.across_vertex = true;
    return t;
}

[[noreturn]] void too_shallow(const Arrangement& A, const std::string& what, double need, double have) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s needs radius %.3f but depth %d saturates only %.3f", what.c_str(), need,
                  A.depth, have);
    throw Error(ErrorKind::DepthInsufficient, "trigroup", "case " + case_name(A.curves.id) + ": " + buf);
}

struct Candidate {
    HPoint center;
    const GroupElement* witness;
    double dist;
    bool across_vertex;
};

std::vector<Candidate> nearest_touching(const Arrangement& A) {
    const HPoint c = A.curves.center;
    auto orbit = orbit_points(A, c, A.point_saturation);
    std::sort(orbit.begin(), orbit.end(), [&](const auto& x, const auto& y) {
        return hyp2::distance(c, x.first) < hyp2::distance(c, y.first);
    });
    auto lines = A.lines_near(c, A.line_saturation);
    std::vector<Candidate> out;
    for (const auto& [cc, w] : orbit) {
        double d = hyp2::distance(c, cc);
        if (d < 1e-6) continue;
        if (!out.empty() && d > out.front().dist + 1e-6) break;
        Touch t = touching(lines, c, cc, 1e-7);
        if (t.reach > A.line_saturation) too_shallow(A, "neighbour search", t.reach, A.line_saturation);
        if (t.touching) out.push_back({cc, w, d, t.across_vertex});
    }
    if (out.empty())
        throw Error(ErrorKind::NeighborNotFound, "trigroup",
                    "no neighbouring cell of case " + case_name(A.curves.id) + " within depth " +
                        std::to_string(A.depth));
    const HPoint origin{0.0, 1.0};
    std::sort(out.begin(), out.end(), [&](const Candidate& x, const Candidate& y) {
        double dx = hyp2::distance(origin, x.center), dy = hyp2::distance(origin, y.center);
        if (std::abs(dx - dy) > 1e-9) return dx < dy;
        return x.center.x < y.center.x;
    });
    return out;
}

// Isometry M (possibly orientation reversing) with M(u) = 0, M(v) = inf.
struct Mobius {
    double a, b, c, d;

    hyp2::Ideal operator()(hyp2::Ideal z) const {
        if (z.inf) return c == 0.0 ? hyp2::Ideal::infinity() : hyp2::Ideal::real(a / c);
        double den = c * z.x + d;
        if (den == 0.0) return hyp2::Ideal::infinity();
        return hyp2::Ideal::real((a * z.x + b) / den);
    }
    std::complex<double> operator()(HPoint p) const {
        std::complex<double> z(p.x, p.y);
        return (a * z + b) / (c * z + d);
    }
};

Mobius straighten(const Geodesic& axis) {
    if (axis.v.inf) return {1.0, -axis.u.x, 0.0, 1.0};
    if (axis.u.inf) return {0.0, -1.0, 1.0, -axis.v.x};
    return {1.0, -axis.u.x, 1.0, -axis.v.x};
}

}  // namespace

std::string word_string(const std::vector<Gen>& word) {
    if (word.empty()) return "1";
    static constexpr char kLetters[] = {'P', 'p', 'Q', 'q', 'R', 'r'};
    std::string s;
    for (Gen g : word) s += kLetters[static_cast<int>(g)];
    return s;
}

TriangleGroup build_group(int p, int q, int r) {
    TriangleGroup G;
    G.p = p;
    G.q = q;
    G.r = r;
    G.tri = hyp2::triangle_from_angles(p, q, r);
    G.gP = hyp2::rotation_about(G.tri.P, 2 * kPi / p);
    G.gQ = hyp2::rotation_about(G.tri.Q, 2 * kPi / q);
    G.gR = hyp2::rotation_about(G.tri.R, 2 * kPi / r);
    return G;
}

TriangleGroup build_group(CaseId id) {
    Triple t = triple_of(id);
    return build_group(t.p, t.q, t.r);
}

Isometry generator(const TriangleGroup& G, Gen g) {
    switch (g) {
        case Gen::P: return G.gP;
        case Gen::PInv: return G.gP.inverse();
        case Gen::Q: return G.gQ;
        case Gen::QInv: return G.gQ.inverse();
        case Gen::R: return G.gR;
        case Gen::RInv: return G.gR.inverse();
    }
    return {};
}

Isometry evaluate(const TriangleGroup& G, const std::vector<Gen>& word) {
    Isometry m;
    for (Gen g : word) m = m * generator(G, g);
    return m;
}

std::vector<GroupElement> enumerate_elements(const TriangleGroup& G, int max_len, const Tolerances& tol) {
    if (max_len < 0) throw Error(ErrorKind::InvalidArgument, "trigroup", "negative word length");
    std::array<Isometry, 6> gens;
    for (int k = 0; k < 6; ++k) gens[k] = generator(G, static_cast<Gen>(k));
    std::vector<GroupElement> out{GroupElement{{}, Isometry{}}};
    MatrixIndex index(tol.dedup);
    index.insert(out[0].matrix.entries(), 0);
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (int k = 0; k < 6; ++k) {
                Isometry m = out[i].matrix * gens[k];
                if (index.find(m.entries(), out) >= 0) continue;
                GroupElement e{out[i].word, m};
                e.word.push_back(static_cast<Gen>(k));
                index.insert(m.entries(), static_cast<int>(out.size()));
                out.push_back(std::move(e));
            }
        }
        begin = end;
    }
    return out;
}

CurveSystem curve_system(const TriangleGroup& G, CaseId id) {
    const auto& [P, Q, R] = G.tri;
    CurveSystem C;
    C.id = id;
    switch (id) {
        case CaseId::C237: {
            HPoint foot_side = hyp2::reflect(hyp2::geodesic_through(Q, R), P);
            C.curve_name = "h";
            C.base_lines = {hyp2::geodesic_through(P, foot_side)};
            C.center = R;
            C.center_vertex = 'R';
            C.k = G.r;
            C.fiber_fraction = 0.5;
            break;
        }
        case CaseId::C245:
            C.curve_name = "b";
            C.base_lines = {hyp2::geodesic_through(P, Q)};
            C.center = R;
            C.center_vertex = 'R';
            C.k = G.r;
            break;
        case CaseId::C246:
            C.curve_name = "c";
            C.base_lines = {hyp2::geodesic_through(P, R)};
            C.center = Q;
            C.center_vertex = 'Q';
            C.k = G.q;
            break;
        case CaseId::C334:
            C.curve_name = "gamma8";
            C.base_lines = {hyp2::axis_of(G.gP * G.gQ.inverse())};
            C.center = R;
            C.center_vertex = 'R';
            C.k = G.r;
            break;
        case CaseId::C344:
            C.curve_name = "gamma8";
            C.base_lines = {hyp2::axis_of(G.gQ * G.gR.inverse())};
            C.center = P;
            C.center_vertex = 'P';
            C.k = G.p;
            break;
    }
    Triple t = triple_of(id);
    if (t.p != G.p || t.q != G.q || t.r != G.r)
        throw Error(ErrorKind::InvalidArgument, "trigroup", "group does not match case " + case_name(id));
    return C;
}

std::vector<const Geodesic*> Arrangement::lines_near(HPoint p, double radius) const {
    std::vector<const Geodesic*> out;
    for (const auto& l : lines)
        if (hyp2::distance_to_geodesic(p, l) <= radius) out.push_back(&l);
    return out;
}

bool Arrangement::on_lift(const Geodesic& l) const {
    for (const auto& m : lines)
        if (hyp2::same_geodesic(l, m, tol.dedup)) return true;
    return false;
}

Arrangement build_arrangement(const TriangleGroup& G, const CurveSystem& C, int depth, const Tolerances& tol) {
    if (depth < 1) throw Error(ErrorKind::InvalidArgument, "trigroup", "depth must be at least 1");
    Arrangement A;
    A.group = G;
    A.curves = C;
    A.depth = depth;
    A.tol = tol;
    A.ball = enumerate_elements(G, depth, tol);
    LineIndex index(tol.dedup);
    for (const auto& g : A.ball) {
        for (const auto& base : C.base_lines) {
            Geodesic l = hyp2::apply(g.matrix, base);
            if (hyp2::distance_to_geodesic(C.center, l) > kKeepRadius) continue;
            int len = static_cast<int>(g.word.size());
            int at = index.find(l, A.lines);
            if (at >= 0) {
                A.line_depth[at] = std::min(A.line_depth[at], len);
                continue;
            }
            index.insert(l, static_cast<int>(A.lines.size()));
            A.lines.push_back(l);
            A.line_depth.push_back(len);
        }
    }
    A.line_saturation = kKeepRadius;
    for (std::size_t i = 0; i < A.lines.size(); ++i)
        if (A.line_depth[i] > depth - 2)
            A.line_saturation = std::min(A.line_saturation, hyp2::distance_to_geodesic(C.center, A.lines[i]));
    A.point_saturation = kKeepRadius;
    for (const auto& [p, w] : orbit_points(A, C.center, kKeepRadius))
        if (static_cast<int>(w->word.size()) > depth - 2)
            A.point_saturation = std::min(A.point_saturation, hyp2::distance(C.center, p));
    return A;
}

std::vector<Cell> cell_tiling(const Arrangement& A) {
    return orbit_cells(A, A.curves.center, std::numeric_limits<double>::infinity());
}

std::vector<Cell> orbit_cells(const Arrangement& A, HPoint x, double radius) {
    std::vector<Cell> out;
    for (const auto& [p, w] : orbit_points(A, x, radius)) out.push_back({p, *w});
    return out;
}

std::vector<Cell> cell_tiling(const TriangleGroup& G, const CurveSystem& C, int depth, const Tolerances& tol) {
    Arrangement A;
    A.group = G;
    A.curves = C;
    A.depth = depth;
    A.tol = tol;
    if (depth < 1) throw Error(ErrorKind::InvalidArgument, "trigroup", "depth must be at least 1");
    A.ball = enumerate_elements(G, depth, tol);
    return cell_tiling(A);
}

std::vector<HPoint> cell_polygon(const Arrangement& A, HPoint x, double reach) {
    auto lines = A.lines_near(x, reach);
    std::vector<HPoint> verts;
    PointIndex index(1e-7);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto v = hyp2::intersection(*lines[i], *lines[j]);
            if (!v || hyp2::distance(x, *v) > reach) continue;
            bool inside = true;
            for (const Geodesic* l : lines) {
                int s = hyp2::side(*l, *v, 1e-9);
                if (s != 0 && s != hyp2::side(*l, x)) {
                    inside = false;
                    break;
                }
            }
            if (!inside || index.find(*v, verts) >= 0) continue;
            index.insert(*v, static_cast<int>(verts.size()));
            verts.push_back(*v);
        }
    if (verts.size() < 3) return {};
    std::sort(verts.begin(), verts.end(),
              [&](HPoint a, HPoint b) { return direction_from(x, a) < direction_from(x, b); });
    // closed iff consecutive vertices are less than pi apart as seen from x
    for (std::size_t i = 0; i < verts.size(); ++i) {
        double a = direction_from(x, verts[i]);
        double b = direction_from(x, verts[(i + 1) % verts.size()]);
        double gap = b - a;
        if (gap <= 0) gap += 2 * kPi;
        if (gap >= kPi) return {};
    }
    return verts;
}

std::vector<TypedCell> typed_cells(const Arrangement& A, double radius) {
    std::vector<TypedCell> out;
    const auto& tri = A.group.tri;
    for (auto [vertex, pt] : {std::pair{'P', tri.P}, std::pair{'Q', tri.Q}, std::pair{'R', tri.R}}) {
        for (const auto& [c, w] : orbit_points(A, pt, radius)) {
            bool on_line = false;
            for (const Geodesic* l : A.lines_near(c, 1e-7)) {
                (void)l;
                on_line = true;
                break;
            }
            if (!on_line) out.push_back({c, vertex});
        }
    }
    return out;
}

int touching_neighbor_count(const Arrangement& A) {
    return static_cast<int>(nearest_touching(A).size());
}

AdjacencyReport adjacency_isometries(const Arrangement& A, int rank) {
    const HPoint c = A.curves.center;
    auto candidates = nearest_touching(A);
    if (rank < 0 || rank >= static_cast<int>(candidates.size()))
        throw Error(ErrorKind::NeighborNotFound, "trigroup", "neighbour rank out of range");
    const Candidate& nb = candidates[rank];

    AdjacencyReport rep;
    rep.base_center = c;
    rep.neighbor_center = nb.center;
    rep.neighbor_witness = *nb.witness;
    rep.across_vertex = nb.across_vertex;
    for (const auto& g : A.ball) {
        HPoint y = hyp2::apply(g.matrix, c);
        if (hyp2::distance(y, c) <= A.tol.pt) ++rep.stabilizer_order;
        if (hyp2::distance(y, nb.center) > A.tol.pt) continue;
        AdjacentElement e{g, hyp2::classify(g.matrix, A.tol), false};
        switch (e.cls.kind) {
            case hyp2::Kind::Elliptic: ++rep.elliptic; break;
            case hyp2::Kind::Hyperbolic:
                ++rep.hyperbolic;
                e.on_boundary = A.on_lift(*e.cls.axis);
                rep.boundary_axes += e.on_boundary;
                break;
            case hyp2::Kind::Parabolic: ++rep.parabolic; break;
            case hyp2::Kind::Identity: break;
        }
        rep.elements.push_back(std::move(e));
    }
    if (rep.stabilizer_order != A.curves.k)
        throw Error(ErrorKind::DepthInsufficient, "trigroup",
                    "stabilizer of the base center has " + std::to_string(rep.stabilizer_order) +
                        " elements in the ball, expected " + std::to_string(A.curves.k));
    if (static_cast<int>(rep.elements.size()) != rep.stabilizer_order)
        throw Error(ErrorKind::NeighborNotFound, "trigroup",
                    "only " + std::to_string(rep.elements.size()) + " transporting elements found within depth " +
                        std::to_string(A.depth));
    return rep;
}

AdjacencyReport adjacency_isometries(const TriangleGroup& G, const CurveSystem& C, int depth,
                                     const Tolerances& tol) {
    return adjacency_isometries(build_arrangement(G, C, depth, tol));
}

int crossing_count(const Arrangement& A, const Isometry& g) {
    auto cls = hyp2::classify(g, A.tol);
    if (cls.kind != hyp2::Kind::Hyperbolic)
        throw Error(ErrorKind::NonHyperbolic, "trigroup", "crossing count needs a hyperbolic element");
    const Geodesic axis = *cls.axis;
    const double L = cls.translation_length;
    Mobius M = straighten(axis);
    std::complex<double> cz = M(A.curves.center);
    const double t_center = std::log(std::abs(cz));
    double need = hyp2::distance_to_geodesic(A.curves.center, axis) + 1.5 * L + 0.1;
    if (need > A.line_saturation) too_shallow(A, "crossing count", need, A.line_saturation);

    std::vector<double> ts;
    for (const auto& l : A.lines) {
        if (hyp2::same_geodesic(l, axis, A.tol.dedup)) continue;
        hyp2::Ideal a = M(l.u), b = M(l.v);
        if (a.inf || b.inf || std::abs(a.x) < A.tol.geo || std::abs(b.x) < A.tol.geo)
            throw Error(ErrorKind::Tangency, "trigroup", "curve lift asymptotic to the axis");
        if (a.x * b.x < 0) ts.push_back(0.5 * std::log(-a.x * b.x));
    }
    std::sort(ts.begin(), ts.end());

    auto count_window = [&](double lo) {
        double hi = lo + L;
        int n = 0;
        double last = -std::numeric_limits<double>::infinity();
        for (double t : ts) {
            if (t < lo - A.tol.geo || t >= hi - A.tol.geo) continue;
            if (t - last > A.tol.geo) ++n;
            last = t;
        }
        return n;
    };
    double lo = t_center - L / 2;
    int n0 = count_window(lo - L), n1 = count_window(lo), n2 = count_window(lo + L);
    if (n0 != n1 || n1 != n2)
        throw Error(ErrorKind::DepthInsufficient, "trigroup",
                    "crossings along the axis are not periodic at depth " + std::to_string(A.depth));
    return n1;
}

int crossing_count(const TriangleGroup& G, const CurveSystem& C, const GroupElement& g, int depth,
                   const Tolerances& tol) {
    return crossing_count(build_arrangement(G, C, depth, tol), g.matrix);
}

}  // namespace orbiflow::trigroup
