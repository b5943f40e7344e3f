#pragma once

#include <array>
#include <complex>
#include <optional>

namespace orbiflow::hyp2 {

struct Tolerances {
    double det = 1e-9;
    double pt = 1e-9;
    double geo = 1e-9;
    double cls = 1e-7;
    double ang = 1e-7;
    double sign = 1e-9;
    double dedup = 1e-7;

    // base scales det/pt/geo/sign; cls/ang/dedup follow at 100x
    static Tolerances scaled(double base);
};

struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

bool approx_equal(HPoint p, HPoint q, double eps);

// Projective 2x2 matrix of unit determinant, sign-normalized.
class Isometry {
public:
    Isometry() = default;

    // Throws InvalidArgument unless |ad - bc - 1| <= eps_det.
    static Isometry from_entries(double a, double b, double c, double d,
                                 double eps_det = 1e-9, double eps_sign = 1e-9);
    static Isometry identity() { return {}; }

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    const std::array<double, 4>& entries() const { return m_; }

    double trace() const { return m_[0] + m_[3]; }
    double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    Isometry inverse() const;
    Isometry negated() const;
    Isometry operator*(const Isometry& o) const;
    Isometry pow(int n) const;

    // max-abs entrywise distance between projective classes (min over sign)
    double distance_to(const Isometry& o) const;
    bool approx_identity(double eps) const;

private:
    explicit Isometry(std::array<double, 4> m, double eps_sign);
    std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };
const char* to_string(Kind k);

// Boundary point of the half-plane: a real number or infinity.
struct Ideal {
    double x = 0.0;
    bool inf = false;

    static Ideal infinity() { return {0.0, true}; }
    static Ideal real(double v) { return {v, false}; }
};

struct Geodesic {
    Ideal u;  // repelling end for axes
    Ideal v;  // attracting end for axes
};

struct IsometryClass {
    Kind kind = Kind::Identity;
    std::optional<int> order;  // elliptic rotation order, when recognised
    double translation_length = 0.0;
    std::optional<Geodesic> axis;
};

HPoint apply(const Isometry& g, HPoint p);
Ideal apply(const Isometry& g, Ideal u);
Geodesic apply(const Isometry& g, const Geodesic& l);

double distance(HPoint p, HPoint q);

// Interior angle at p of the triangle pqr, in (0, pi).
double angle_at(HPoint p, HPoint q, HPoint r, double eps_ang = 1e-7);

// Counterclockwise rotation by theta about p.
Isometry rotation_about(HPoint p, double theta);

IsometryClass classify(const Isometry& g, const Tolerances& tol = {});
Geodesic axis_of(const Isometry& g, const Tolerances& tol = {});

struct Triangle {
    HPoint P, Q, R;
};
bool is_hyperbolic_triple(int p, int q, int r);
Triangle triangle_from_angles(int p, int q, int r);

// Point at distance d from p leaving in direction phi (0 = +x, ccw).
HPoint point_at(HPoint p, double phi, double d);

Geodesic geodesic_through(HPoint p, HPoint q);
HPoint midpoint(HPoint p, HPoint q);
HPoint reflect(const Geodesic& l, HPoint p);

// Signed side of p relative to l; 0 when within eps of the line (hyperbolic distance).
int side(const Geodesic& l, HPoint p, double eps = 0.0);
double distance_to_geodesic(HPoint p, const Geodesic& l);
bool same_geodesic(const Geodesic& l, const Geodesic& m, double eps);
bool same_ideal(Ideal a, Ideal b, double eps);

// Crossing point of two geodesics, if they meet in the interior.
std::optional<HPoint> intersection(const Geodesic& l, const Geodesic& m);

// Cayley map to the Poincare disc; boundary angle of an ideal point.
std::complex<double> to_disc(HPoint p);
double boundary_angle(Ideal u);

}  // namespace orbiflow::hyp2
