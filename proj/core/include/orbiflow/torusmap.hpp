#pragma once

#include <string>
#include <vector>

namespace orbiflow::torusmap {

struct TorusMatrix {
    long long a = 1, b = 0, c = 0, d = 1;

    // Throws InvalidArgument unless ad - bc = 1.
    static TorusMatrix make(long long a, long long b, long long c, long long d);

    long long trace() const { return a + d; }
    TorusMatrix operator*(const TorusMatrix& o) const;
    TorusMatrix inverse() const { return {d, -b, -c, a}; }
    TorusMatrix pow(int n) const;
    bool operator==(const TorusMatrix&) const = default;
    std::string str() const;
};

TorusMatrix cat();
TorusMatrix X();
TorusMatrix Y();

// det(A - I)
long long det_minus_identity(const TorusMatrix& A);

struct RationalPoint {
    long long nx = 0, ny = 0, den = 1;

    // reduces mod 1 and by the common gcd
    static RationalPoint make(long long nx, long long ny, long long den);
    bool operator==(const RationalPoint&) const = default;
    auto operator<=>(const RationalPoint&) const = default;
    std::string str() const;
};

RationalPoint act(const TorusMatrix& A, const RationalPoint& p);

// Solutions of (A - I)x = 0 in R^2/Z^2 via Smith normal form.
std::vector<RationalPoint> fixed_points(const TorusMatrix& A);

long long periodic_point_count(const TorusMatrix& A, int n);

struct CatOrbit {
    std::vector<RationalPoint> points;
    int period() const { return static_cast<int>(points.size()); }
    bool contains(const RationalPoint& p) const;
};

CatOrbit orbit_of(const TorusMatrix& A, const RationalPoint& p);

// Orbits of all points of period dividing n, ordered by least point.
std::vector<CatOrbit> periodic_orbits(const TorusMatrix& A, int n);

struct CyclicXYWord {
    std::vector<int> exponents;  // e1, f1, ..., ek, fk for X^e1 Y^f1 ...

    TorusMatrix product() const;
    std::string str() const;
    bool operator==(const CyclicXYWord&) const = default;
};

// Least rotation by (X, Y) block pairs.
CyclicXYWord canonical_word(std::vector<int> exponents);
CyclicXYWord word_from_letters(const std::string& letters);

CyclicXYWord xy_normal_form(const TorusMatrix& A);
bool conjugate_in_sl2z(const TorusMatrix& A, const TorusMatrix& B);

struct Trace3Scan {
    bool unique = true;     // every trace-3 word is cyclically XY
    bool monotone = true;   // appending a letter to a word with both letters raises the trace
    long long words = 0;    // words enumerated
    long long trace3 = 0;   // of which trace 3
};

Trace3Scan trace3_scan(int max_word_len);
bool trace3_uniqueness(int max_word_len);

}  // namespace orbiflow::torusmap
