#include "orbiflow/surgery.hpp"

#include <cmath>
#include <numeric>

#include "orbiflow/error.hpp"

namespace orbiflow::surgery {

using torusmap::CatOrbit;
using torusmap::RationalPoint;
using torusmap::TorusMatrix;

namespace {

struct Vec {
    Rational x, y;
};

Vec operator+(const Vec& u, const Vec& v) { return {u.x + v.x, u.y + v.y}; }
Vec operator-(const Vec& u, const Vec& v) { return {u.x - v.x, u.y - v.y}; }
Vec operator*(const Rational& s, const Vec& v) { return {s * v.x, s * v.y}; }
Rational cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
Vec apply(const TorusMatrix& A, const Vec& v) { return {A.a * v.x + A.b * v.y, A.c * v.x + A.d * v.y}; }
Vec lift(const RationalPoint& p) { return {Rational(p.nx, p.den), Rational(p.ny, p.den)}; }

long long floor_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

using Path = std::vector<Vec>;
struct Segment {
    Vec from, to;
};

// signed transverse crossing of open segments; endpoints touching is a
// degenerate configuration and rejected
int segment_crossing(const Vec& p0, const Vec& p1, const Vec& q0, const Vec& q1) {
    Vec d = p1 - p0, e = q1 - q0;
    const Rational zero(0), one(1);
    Rational den = cross(d, e);
    if (den == zero) {
        if (cross(q0 - p0, d) == zero)
            throw Error(ErrorKind::Tangency, "surgery", "fiber curve overlaps a puncture arc");
        return 0;
    }
    Rational t = cross(q0 - p0, e) / den, u = cross(q0 - p0, d) / den;
    if (t > zero && t < one && u > zero && u < one) return den > zero ? 1 : -1;
    if (t >= zero && t <= one && u >= zero && u <= one)
        throw Error(ErrorKind::Tangency, "surgery", "fiber curve meets a puncture arc at an endpoint");
    return 0;
}

// algebraic intersection of a polyline in R^2 with all integer translates of an arc
long long intersection(const Path& path, const Segment& arc) {
    Rational lox = path[0].x, hix = lox, loy = path[0].y, hiy = loy;
    for (const auto& v : path) {
        lox = std::min(lox, v.x);
        hix = std::max(hix, v.x);
        loy = std::min(loy, v.y);
        hiy = std::max(hiy, v.y);
    }
    long long total = 0;
    for (long long i = floor_of(lox) - 2; i <= floor_of(hix) + 2; ++i)
        for (long long j = floor_of(loy) - 2; j <= floor_of(hiy) + 2; ++j) {
            Vec s{Rational(i), Rational(j)};
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                total += segment_crossing(path[k], path[k + 1], arc.from + s, arc.to + s);
        }
    return total;
}

long long to_integer(const Rational& r) {
    if (r.denominator() != 1) throw Error(ErrorKind::InconsistentComplex, "surgery", "non-integral homology class");
    return r.numerator();
}

void require_orbit(const TorusMatrix& A, const CatOrbit& o) {
    if (o.points.empty()) throw Error(ErrorKind::InvalidArgument, "surgery", "empty orbit");
    for (std::size_t i = 0; i < o.points.size(); ++i) {
        const auto& next = o.points[(i + 1) % o.points.size()];
        if (!(torusmap::act(A, o.points[i]) == next))
            throw Error(ErrorKind::NotPeriodic, "surgery", "points do not form a periodic orbit");
        for (std::size_t j = 0; j < i; ++j)
            if (o.points[j] == o.points[i]) throw Error(ErrorKind::NotPeriodic, "surgery", "orbit repeats a point");
    }
}

// Fiber coordinates of closed curves on the torus punctured at the orbit. The
// puncture p_c is joined to every other puncture p_i by a straight arc k_i;
// intersections with the arcs read off the meridian coordinates.
struct FiberCoordinates {
    std::vector<Segment> arcs;
    std::vector<long long> arc_x, arc_y, arc_m;

    FiberCoordinates(const CatOrbit& o, const Path& x_curve, const Path& y_curve) {
        const int c = o.period();
        Vec pc = lift(o.points[c - 1]);
        for (int i = 0; i + 1 < c; ++i) {
            Vec pi = lift(o.points[i]);
            arcs.push_back({pc, pi});
            arc_x.push_back(intersection(x_curve, arcs.back()));
            arc_y.push_back(intersection(y_curve, arcs.back()));
            const Rational e(1, 1000);
            Path square{pi + Vec{e, -e}, pi + Vec{e, e}, pi + Vec{-e, e}, pi + Vec{-e, -e}, pi + Vec{e, -e}};
            arc_m.push_back(intersection(square, arcs.back()));
        }
    }

    // homology class (x, y, m_1 .. m_{c-1}) of a closed path whose lift
    // displacement is shift
    std::vector<long long> of(const Path& path, const Vec& shift) const {
        std::vector<long long> v{to_integer(shift.x), to_integer(shift.y)};
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            long long val = intersection(path, arcs[i]) - v[0] * arc_x[i] - v[1] * arc_y[i];
            if (arc_m[i] == 0 || val % arc_m[i] != 0)
                throw Error(ErrorKind::InconsistentComplex, "surgery", "meridian coordinate is not integral");
            v.push_back(val / arc_m[i]);
        }
        return v;
    }
};

}  // namespace

SlopeCoefficient SlopeCoefficient::make(long long b, long long a) {
    if (a < 0) {
        a = -a;
        b = -b;
    }
    if (a == 0) {
        if (b != 1 && b != -1) throw Error(ErrorKind::InvalidArgument, "surgery", "slope 1/0 needs b = +-1");
        b = 1;
    }
    if (std::gcd(a, b < 0 ? -b : b) != 1)
        throw Error(ErrorKind::InvalidArgument, "surgery", "slope coefficients must be coprime");
    return {b, a};
}

std::string SlopeCoefficient::str() const {
    if (a == 1) return std::to_string(b);
    return std::to_string(b) + "/" + std::to_string(a);
}

Rational SeifertData::euler_number() const {
    Rational e = -(Rational(b0) + Rational(1, p) + Rational(1, q) + Rational(1, r));
    return convention == SeifertConvention::Standard ? e : -e;
}

IntMatrix SeifertData::relation_matrix() const {
    long long h = convention == SeifertConvention::Standard ? 1 : -1;
    return {{p, 0, 0, h}, {0, q, 0, h}, {0, 0, r, h}, {1, 1, 1, -b0 * h}};
}

SeifertData seifert_data(int p, int q, int r, SeifertConvention convention) {
    if (p < 2 || q < 2 || r < 2) throw Error(ErrorKind::InvalidArgument, "surgery", "cone orders must be at least 2");
    if (!(Rational(1, p) + Rational(1, q) + Rational(1, r) < Rational(1)))
        throw Error(ErrorKind::NonHyperbolic, "surgery", "orbifold is not hyperbolic");
    return {p, q, r, -1, convention};
}

AbelianGroup seifert_h1(int p, int q, int r, SeifertConvention convention) {
    return cokernel(transpose(seifert_data(p, q, r, convention).relation_matrix()));
}

AbelianGroup mapping_torus_h1(const TorusMatrix& A) {
    return cokernel({{A.a - 1, A.b}, {A.c, A.d - 1}, {0, 0}});
}

SurgeryPresentation surgery_presentation(const SurgerySpec& spec, const TorusMatrix& A, int stable_power) {
    if (A.trace() <= 2) throw Error(ErrorKind::NonHyperbolic, "surgery", "monodromy must be hyperbolic");
    require_orbit(A, spec.orbit);
    const CatOrbit& o = spec.orbit;
    const int c = o.period();
    const std::size_t n = static_cast<std::size_t>(c) + 1;  // fiber rank: x, y, m_1 .. m_{c-1}

    const Rational y0 = Rational(1, 2) + Rational(1, 97), x0(1, 89);
    const Path x_curve{{Rational(0), y0}, {Rational(1), y0}};
    const Path y_curve{{x0, Rational(0)}, {x0, Rational(1)}};
    FiberCoordinates fc(o, x_curve, y_curve);

    std::vector<std::vector<long long>> images;
    images.push_back(fc.of({apply(A, x_curve[0]), apply(A, x_curve[1])}, apply(A, {Rational(1), Rational(0)})));
    images.push_back(fc.of({apply(A, y_curve[0]), apply(A, y_curve[1])}, apply(A, {Rational(0), Rational(1)})));
    // the monodromy carries the loop around p_j to the loop around p_{j+1}
    for (int j = 1; j < c; ++j) {
        std::vector<long long> v(n, 0);
        if (j + 1 < c) v[2 + j] = 1;
        else
            for (std::size_t i = 2; i < n; ++i) v[i] = -1;
        images.push_back(v);
    }

    SurgeryPresentation P;
    P.relations.assign(n + 1, {});
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<long long> col = images[g];
        col[g] -= 1;
        col.push_back(0);
        for (std::size_t i = 0; i <= n; ++i) P.relations[i].push_back(col[i]);
    }

    P.longitude.assign(n + 1, 0);
    if (c == 1) {
        P.longitude[n] = 1;
    } else {
        TorusMatrix Ac = A.pow(c);
        TorusMatrix back = A.pow(-stable_power);
        Vec w{Rational(back.a), Rational(back.c)};
        Vec p1 = lift(o.points[0]);
        Vec q = p1 + Rational(1, 200) * w;
        Vec shift = apply(Ac, p1) - p1;
        Path loop{q, {Rational(0), Rational(0)}, apply(Ac, q), q + shift};
        auto v = fc.of(loop, shift);
        for (std::size_t i = 0; i < n; ++i) P.longitude[i] = v[i];
        P.longitude[n] = c;
    }
    P.meridian.assign(n + 1, 0);
    if (c > 1) P.meridian[2] = 1;

    const auto& s = spec.slope;
    P.zero_surgery = s.a == 0;
    for (std::size_t i = 0; i <= n; ++i) P.relations[i].push_back(s.a * P.longitude[i] + s.b * P.meridian[i]);
    return P;
}

AbelianGroup surgered_h1(const SurgerySpec& spec, const TorusMatrix& A, int stable_power) {
    return cokernel(surgery_presentation(spec, A, stable_power).relations);
}

CatOrbit gamma1() { return torusmap::orbit_of(torusmap::cat(), RationalPoint::make(0, 0, 1)); }
CatOrbit gamma2() { return torusmap::orbit_of(torusmap::cat(), RationalPoint::make(3, 1, 5)); }

std::vector<TheoremRow> verify_theorem_h1(SeifertConvention convention) {
    struct Row {
        bool second;
        long long b, a;
        CaseId id;
    };
    const Row rows[] = {{false, 1, 1, CaseId::C237},
                        {false, 1, 2, CaseId::C245},
                        {false, 1, 3, CaseId::C334},
                        {true, 1, 1, CaseId::C246},
                        {true, 1, 2, CaseId::C344}};
    std::vector<TheoremRow> out;
    for (const auto& r : rows) {
        TheoremRow t;
        t.orbit = r.second ? "gamma2" : "gamma1";
        t.slope = SlopeCoefficient::make(r.b, r.a);
        t.target = r.id;
        CatOrbit o = r.second ? gamma2() : gamma1();
        t.surgered = surgered_h1({o, t.slope});
        t.surgered_negated = surgered_h1({o, t.slope.negated()});
        Triple tr = triple_of(r.id);
        t.seifert = seifert_h1(tr.p, tr.q, tr.r, convention);
        t.seifert_reversed = seifert_h1(tr.p, tr.q, tr.r,
                                        convention == SeifertConvention::Standard ? SeifertConvention::Reversed
                                                                                 : SeifertConvention::Standard);
        t.match = t.surgered == t.seifert && t.surgered_negated == t.seifert && t.seifert_reversed == t.seifert;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ExceptionalSlope> exceptional_slope_table() {
    return {
        {"gamma1", {0, 1}, false, "mapping torus, 0-surgery context", std::nullopt},
        {"gamma1", {1, 1}, true, "T1 S237", CaseId::C237},
        {"gamma1", {1, 2}, true, "T1 S245", CaseId::C245},
        {"gamma1", {1, 3}, true, "T1 S334", CaseId::C334},
        {"gamma1", {1, 4}, true, "graph manifold", std::nullopt},
        {"gamma2", {1, 1}, true, "T1 S246", CaseId::C246},
        {"gamma2", {1, 2}, true, "T1 S344", CaseId::C344},
    };
}

SlopeCoefficient section_to_slope(long long a, long long b) {
    if (b <= 0) throw Error(ErrorKind::InvalidArgument, "surgery", "boundary direction needs b > 0");
    return SlopeCoefficient::make(b, a);
}

}  // namespace orbiflow::surgery
