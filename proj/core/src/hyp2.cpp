#include "orbiflow/hyp2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbiflow/error.hpp"

namespace orbiflow::hyp2 {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 4> sign_normalized(std::array<double, 4> m, double eps_sign) {
    for (double v : m) {
        if (std::abs(v) > eps_sign) {
            if (v < 0)
                for (double& e : m) e = -e;
            break;
        }
    }
    return m;
}

std::complex<double> cayley(std::complex<double> z) {
    const std::complex<double> i(0.0, 1.0);
    return (z - i) / (z + i);
}

// p -> i, then Cayley: direction of q as seen from p.
double direction_from(HPoint p, HPoint q) {
    std::complex<double> z((q.x - p.x) / p.y, q.y / p.y);
    return std::arg(cayley(z)) + kPi / 2;
}

struct Circle {
    bool vertical;
    double m;  // center, or abscissa for vertical lines
    double r;
};

Circle circle_of(const Geodesic& l) {
    if (l.u.inf) return {true, l.v.x, 0.0};
    if (l.v.inf) return {true, l.u.x, 0.0};
    return {false, 0.5 * (l.u.x + l.v.x), 0.5 * std::abs(l.u.x - l.v.x)};
}

double wrap_angle(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a;
}

}  // namespace

Tolerances Tolerances::scaled(double base) {
    Tolerances t;
    t.det = t.pt = t.geo = t.sign = base;
    t.cls = t.ang = t.dedup = 100 * base;
    return t;
}

bool approx_equal(HPoint p, HPoint q, double eps) {
    return distance(p, q) <= eps;
}

Isometry::Isometry(std::array<double, 4> m, double eps_sign) : m_(sign_normalized(m, eps_sign)) {}

Isometry Isometry::from_entries(double a, double b, double c, double d, double eps_det, double eps_sign) {
    double det = a * d - b * c;
    if (!(std::abs(det - 1.0) <= eps_det))
        throw Error(ErrorKind::InvalidArgument, "hyp2", "matrix determinant " + std::to_string(det) + " is not 1");
    return Isometry({a, b, c, d}, eps_sign);
}

Isometry Isometry::inverse() const {
    return Isometry({m_[3], -m_[1], -m_[2], m_[0]}, 1e-9);
}

Isometry Isometry::negated() const {
    Isometry g;
    g.m_ = {-m_[0], -m_[1], -m_[2], -m_[3]};
    return g;
}

Isometry Isometry::operator*(const Isometry& o) const {
    const auto& x = m_;
    const auto& y = o.m_;
    return Isometry({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]},
                    1e-9);
}

Isometry Isometry::pow(int n) const {
    Isometry base = n < 0 ? inverse() : *this;
    Isometry out;
    for (int k = std::abs(n); k > 0; --k) out = out * base;
    return out;
}

double Isometry::distance_to(const Isometry& o) const {
    double plus = 0.0, minus = 0.0;
    for (int k = 0; k < 4; ++k) {
        plus = std::max(plus, std::abs(m_[k] - o.m_[k]));
        minus = std::max(minus, std::abs(m_[k] + o.m_[k]));
    }
    return std::min(plus, minus);
}

bool Isometry::approx_identity(double eps) const {
    return distance_to(Isometry{}) <= eps;
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::Identity: return "identity";
        case Kind::Elliptic: return "elliptic";
        case Kind::Parabolic: return "parabolic";
        case Kind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

HPoint apply(const Isometry& g, HPoint p) {
    std::complex<double> z(p.x, p.y);
    std::complex<double> w = (g.a() * z + g.b()) / (g.c() * z + g.d());
    return {w.real(), w.imag()};
}

Ideal apply(const Isometry& g, Ideal u) {
    if (u.inf) {
        if (g.c() == 0.0) return Ideal::infinity();
        return Ideal::real(g.a() / g.c());
    }
    double den = g.c() * u.x + g.d();
    if (den == 0.0) return Ideal::infinity();
    return Ideal::real((g.a() * u.x + g.b()) / den);
}

Geodesic apply(const Isometry& g, const Geodesic& l) {
    return {apply(g, l.u), apply(g, l.v)};
}

double distance(HPoint p, HPoint q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    double s = (dx * dx + dy * dy) / (2 * p.y * q.y);
    // acosh(1 + s), stable for small s
    return std::log1p(s + std::sqrt(s * (s + 2)));
}

double angle_at(HPoint p, HPoint q, HPoint r, double eps_ang) {
    if (distance(p, q) == 0.0 || distance(p, r) == 0.0)
        throw Error(ErrorKind::DegenerateTriangle, "hyp2", "coincident triangle vertices");
    double a = std::abs(wrap_angle(direction_from(p, q)) - wrap_angle(direction_from(p, r)));
    if (a > kPi) a = 2 * kPi - a;
    if (a < eps_ang || a > kPi - eps_ang)
        throw Error(ErrorKind::DegenerateTriangle, "hyp2", "collinear triangle vertices");
    return a;
}

Isometry rotation_about(HPoint p, double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    double sy = std::sqrt(p.y);
    // T = [[sy, x/sy], [0, 1/sy]] sends i to p
    Isometry T = Isometry::from_entries(sy, p.x / sy, 0.0, 1.0 / sy);
    Isometry R = Isometry::from_entries(c, s, -s, c);
    return T * R * T.inverse();
}

IsometryClass classify(const Isometry& g, const Tolerances& tol) {
    IsometryClass out;
    double t = std::abs(g.trace());
    if (g.approx_identity(tol.cls)) {
        out.kind = Kind::Identity;
        out.order = 1;
        return out;
    }
    if (t > 2 + tol.cls) {
        out.kind = Kind::Hyperbolic;
        out.translation_length = 2 * std::acosh(t / 2);
        out.axis = axis_of(g, tol);
        return out;
    }
    if (t < 2 - tol.cls) {
        out.kind = Kind::Elliptic;
        double alpha = 2 * std::acos(t / 2);
        for (int n = 2; n <= 1000; ++n) {
            double turns = n * alpha / (2 * kPi);
            if (std::abs(turns - std::round(turns)) < tol.ang * n) {
                out.order = n;
                break;
            }
        }
        return out;
    }
    out.kind = Kind::Parabolic;
    return out;
}

Geodesic axis_of(const Isometry& g, const Tolerances& tol) {
    double t = g.trace();
    if (!(std::abs(t) > 2 + tol.cls))
        throw Error(ErrorKind::NonHyperbolic, "hyp2", "axis requested for a non-hyperbolic isometry");
    double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    double disc = std::sqrt(t * t - 4);
    if (c == 0.0) {
        Ideal fin = Ideal::real(b / (d - a));
        bool inf_attracting = std::abs(a) > std::abs(d);
        return inf_attracting ? Geodesic{fin, Ideal::infinity()} : Geodesic{Ideal::infinity(), fin};
    }
    // roots of c x^2 + (d - a) x - b = 0
    double e = d - a;
    double q = -0.5 * (e + std::copysign(disc, e));
    Ideal r1 = Ideal::real(q / c), r2 = Ideal::real(-b / q);
    bool first_attracting = std::abs(c * r1.x + d) > std::abs(c * r2.x + d);
    return first_attracting ? Geodesic{r2, r1} : Geodesic{r1, r2};
}

bool is_hyperbolic_triple(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) return false;
    long long P = p, Q = q, R = r;
    return Q * R + P * R + P * Q < P * Q * R;
}

Triangle triangle_from_angles(int p, int q, int r) {
    if (!is_hyperbolic_triple(p, q, r))
        throw Error(ErrorKind::NonHyperbolic, "hyp2",
                    "triple (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                        ") is not hyperbolic");
    double a = kPi / p, b = kPi / q, c = kPi / r;
    double pq = std::acosh((std::cos(a) * std::cos(b) + std::cos(c)) / (std::sin(a) * std::sin(b)));
    double pr = std::acosh((std::cos(a) * std::cos(c) + std::cos(b)) / (std::sin(a) * std::sin(c)));
    HPoint P{0.0, 1.0};
    return {P, point_at(P, 0.0, pq), point_at(P, a, pr)};
}

HPoint point_at(HPoint p, double phi, double d) {
    std::complex<double> w = std::tanh(d / 2) * std::polar(1.0, phi - kPi / 2);
    std::complex<double> z = std::complex<double>(0.0, 1.0) * (1.0 + w) / (1.0 - w);
    z = p.y * z + p.x;
    return {z.real(), z.imag()};
}

Geodesic geodesic_through(HPoint p, HPoint q) {
    double dx = q.x - p.x;
    if (std::abs(dx) <= 1e-12 * (std::abs(p.x) + std::abs(q.x) + p.y + q.y)) {
        if (q.y > p.y) return {Ideal::real(p.x), Ideal::infinity()};
        return {Ideal::infinity(), Ideal::real(p.x)};
    }
    double m = ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y)) / (2 * dx);
    double r = std::hypot(p.x - m, p.y);
    if (dx > 0) return {Ideal::real(m - r), Ideal::real(m + r)};
    return {Ideal::real(m + r), Ideal::real(m - r)};
}

HPoint midpoint(HPoint p, HPoint q) {
    return point_at(p, direction_from(p, q), distance(p, q) / 2);
}

HPoint reflect(const Geodesic& l, HPoint p) {
    Circle k = circle_of(l);
    if (k.vertical) return {2 * k.m - p.x, p.y};
    std::complex<double> z(p.x - k.m, p.y);
    std::complex<double> w = k.m + k.r * k.r / std::conj(z);
    return {w.real(), w.imag()};
}

double distance_to_geodesic(HPoint p, const Geodesic& l) {
    Circle k = circle_of(l);
    double s;
    if (k.vertical) {
        s = std::abs(p.x - k.m) / p.y;
    } else {
        double dx = p.x - k.m;
        s = std::abs(dx * dx + p.y * p.y - k.r * k.r) / (2 * k.r * p.y);
    }
    return std::asinh(s);
}

int side(const Geodesic& l, HPoint p, double eps) {
    if (eps > 0.0 && distance_to_geodesic(p, l) <= eps) return 0;
    Circle k = circle_of(l);
    double v;
    if (k.vertical) {
        v = p.x - k.m;
    } else {
        double dx = p.x - k.m;
        v = dx * dx + p.y * p.y - k.r * k.r;
    }
    return (v > 0) - (v < 0);
}

double boundary_angle(Ideal u) {
    if (u.inf) return 0.0;
    return wrap_angle(std::arg(cayley({u.x, 0.0})));
}

bool same_ideal(Ideal a, Ideal b, double eps) {
    double d = std::abs(boundary_angle(a) - boundary_angle(b));
    return std::min(d, 2 * kPi - d) <= eps;
}

bool same_geodesic(const Geodesic& l, const Geodesic& m, double eps) {
    return (same_ideal(l.u, m.u, eps) && same_ideal(l.v, m.v, eps)) ||
           (same_ideal(l.u, m.v, eps) && same_ideal(l.v, m.u, eps));
}

std::optional<HPoint> intersection(const Geodesic& l, const Geodesic& m) {
    Circle a = circle_of(l), b = circle_of(m);
    if (a.vertical && b.vertical) return std::nullopt;
    if (a.vertical) std::swap(a, b);
    double x;
    if (b.vertical) {
        x = b.m;
    } else {
        if (a.m == b.m) return std::nullopt;
        x = (a.r * a.r - b.r * b.r + b.m * b.m - a.m * a.m) / (2 * (b.m - a.m));
    }
    double y2 = a.r * a.r - (x - a.m) * (x - a.m);
    if (!(y2 > 0)) return std::nullopt;
    return HPoint{x, std::sqrt(y2)};
}

std::complex<double> to_disc(HPoint p) {
    return cayley({p.x, p.y});
}

}  // namespace orbiflow::hyp2
