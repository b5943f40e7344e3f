#include "orbiflow/torusmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "orbiflow/error.hpp"
#include "orbiflow/snf.hpp"

namespace orbiflow::torusmap {

namespace {

long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "torusmap", "integer overflow");
    return r;
}

long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "torusmap", "integer overflow");
    return r;
}

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long isqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// floor(((a - d) + s * sqrt(D)) / (2c)) for a fixed point of a hyperbolic A; D is never a square
long long floor_fixed_point(const TorusMatrix& A, int s) {
    long long D = add(mul(A.trace(), A.trace()), -4);
    long long P = A.a - A.d, Q = 2 * A.c;
    if (Q < 0) {
        P = -P;
        Q = -Q;
        s = -s;
    }
    long long r = s > 0 ? isqrt(D) : -isqrt(D) - 1;
    return floor_div(P + r, Q);
}

void require_hyperbolic(const TorusMatrix& A, const char* what) {
    if (A.trace() <= 2)
        throw Error(ErrorKind::NonHyperbolic, "torusmap",
                    std::string(what) + " needs trace > 2, got trace " + std::to_string(A.trace()));
}

TorusMatrix conj(const TorusMatrix& P, const TorusMatrix& M) {
    return P * M * P.inverse();
}

}  // namespace

TorusMatrix TorusMatrix::make(long long a, long long b, long long c, long long d) {
    if (add(mul(a, d), -mul(b, c)) != 1)
        throw Error(ErrorKind::InvalidArgument, "torusmap", "matrix is not in SL2(Z)");
    return {a, b, c, d};
}

TorusMatrix TorusMatrix::operator*(const TorusMatrix& o) const {
    return {add(mul(a, o.a), mul(b, o.c)), add(mul(a, o.b), mul(b, o.d)), add(mul(c, o.a), mul(d, o.c)),
            add(mul(c, o.b), mul(d, o.d))};
}

TorusMatrix TorusMatrix::pow(int n) const {
    TorusMatrix base = n < 0 ? inverse() : *this;
    TorusMatrix out;
    for (int k = std::abs(n); k > 0; --k) out = out * base;
    return out;
}

std::string TorusMatrix::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) +
           ")";
}

TorusMatrix cat() { return {2, 1, 1, 1}; }
TorusMatrix X() { return {1, 1, 0, 1}; }
TorusMatrix Y() { return {1, 0, 1, 1}; }

long long det_minus_identity(const TorusMatrix& A) {
    return add(mul(A.a - 1, A.d - 1), -mul(A.b, A.c));
}

RationalPoint RationalPoint::make(long long nx, long long ny, long long den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "torusmap", "zero denominator");
    if (den < 0) {
        nx = -nx;
        ny = -ny;
        den = -den;
    }
    nx = mod(nx, den);
    ny = mod(ny, den);
    long long g = std::gcd(std::gcd(nx, ny), den);
    return {nx / g, ny / g, den / g};
}

std::string RationalPoint::str() const {
    auto coord = [&](long long n) {
        if (n == 0) return std::string("0");
        long long g = std::gcd(n, den);
        return std::to_string(n / g) + (den / g == 1 ? "" : "/" + std::to_string(den / g));
    };
    return "(" + coord(nx) + "," + coord(ny) + ")";
}

RationalPoint act(const TorusMatrix& A, const RationalPoint& p) {
    return RationalPoint::make(add(mul(A.a, p.nx), mul(A.b, p.ny)), add(mul(A.c, p.nx), mul(A.d, p.ny)), p.den);
}

std::vector<RationalPoint> fixed_points(const TorusMatrix& A) {
    if (det_minus_identity(A) == 0)
        throw Error(ErrorKind::InvalidArgument, "torusmap", "A has eigenvalue 1; fixed set is not finite");
    IntMatrix M{{A.a - 1, A.b}, {A.c, A.d - 1}};
    SmithForm S = smith_normal_form(M);
    long long d1 = S.diagonal[0], d2 = S.diagonal[1];
    std::set<RationalPoint> pts;
    // x = V (k1/d1, k2/d2), written over the common denominator d2
    for (long long k1 = 0; k1 < d1; ++k1)
        for (long long k2 = 0; k2 < d2; ++k2) {
            long long y1 = mul(k1, d2 / d1), y2 = k2;
            pts.insert(RationalPoint::make(add(mul(S.V[0][0], y1), mul(S.V[0][1], y2)),
                                           add(mul(S.V[1][0], y1), mul(S.V[1][1], y2)), d2));
        }
    return {pts.begin(), pts.end()};
}

long long periodic_point_count(const TorusMatrix& A, int n) {
    if (std::llabs(A.trace()) <= 2)
        throw Error(ErrorKind::NonHyperbolic, "torusmap", "periodic point count needs |trace| > 2");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "torusmap", "period must be positive");
    return std::llabs(det_minus_identity(A.pow(n)));
}

bool CatOrbit::contains(const RationalPoint& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

CatOrbit orbit_of(const TorusMatrix& A, const RationalPoint& p) {
    CatOrbit o;
    RationalPoint q = RationalPoint::make(p.nx, p.ny, p.den);
    const long long bound = mul(q.den, q.den);
    do {
        o.points.push_back(q);
        q = act(A, q);
        if (static_cast<long long>(o.points.size()) > bound)
            throw Error(ErrorKind::NotPeriodic, "torusmap", "orbit of " + p.str() + " does not close");
    } while (!(q == o.points.front()));
    return o;
}

std::vector<CatOrbit> periodic_orbits(const TorusMatrix& A, int n) {
    std::vector<CatOrbit> out;
    std::set<RationalPoint> seen;
    for (const auto& p : fixed_points(A.pow(n))) {
        if (seen.count(p)) continue;
        CatOrbit o = orbit_of(A, p);
        seen.insert(o.points.begin(), o.points.end());
        out.push_back(std::move(o));
    }
    return out;
}

TorusMatrix CyclicXYWord::product() const {
    TorusMatrix m;
    for (std::size_t i = 0; i < exponents.size(); ++i) m = m * (i % 2 == 0 ? X() : Y()).pow(exponents[i]);
    return m;
}

std::string CyclicXYWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        s += i % 2 == 0 ? 'X' : 'Y';
        if (exponents[i] != 1) s += "^" + std::to_string(exponents[i]);
    }
    return s;
}

CyclicXYWord canonical_word(std::vector<int> e) {
    if (e.empty() || e.size() % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "torusmap", "word needs both letters in alternating blocks");
    for (int x : e)
        if (x < 1) throw Error(ErrorKind::InvalidArgument, "torusmap", "block exponents must be positive");
    std::vector<int> best = e;
    for (std::size_t r = 2; r < e.size(); r += 2) {
        std::vector<int> rot(e.begin() + r, e.end());
        rot.insert(rot.end(), e.begin(), e.begin() + r);
        best = std::min(best, rot);
    }
    return {best};
}

CyclicXYWord word_from_letters(const std::string& letters) {
    std::vector<std::pair<char, int>> blocks;
    for (char ch : letters) {
        if (ch != 'X' && ch != 'Y') throw Error(ErrorKind::InvalidArgument, "torusmap", "letters must be X or Y");
        if (!blocks.empty() && blocks.back().first == ch) ++blocks.back().second;
        else blocks.emplace_back(ch, 1);
    }
    if (blocks.size() > 1 && blocks.front().first == blocks.back().first) {
        blocks.front().second += blocks.back().second;
        blocks.pop_back();
    }
    if (blocks.size() < 2) throw Error(ErrorKind::InvalidArgument, "torusmap", "word needs both letters");
    if (blocks.front().first == 'Y') std::rotate(blocks.begin(), blocks.begin() + 1, blocks.end());
    std::vector<int> e;
    for (auto [ch, n] : blocks) e.push_back(n);
    return canonical_word(e);
}

CyclicXYWord xy_normal_form(const TorusMatrix& A) {
    require_hyperbolic(A, "xy normal form");
    const TorusMatrix T{0, -1, 1, 0};
    TorusMatrix M = A;
    // move the attracting fixed point to (0, inf) and the repelling one to (-inf, 0)
    for (int guard = 0; !(M.b > 0 && M.c > 0); ++guard) {
        if (guard > 100000) throw Error(ErrorKind::Overflow, "torusmap", "reduction did not terminate");
        long long fa = floor_fixed_point(M, +1), fr = floor_fixed_point(M, -1);
        if (fa != fr) {
            long long n = std::max(fa, fr);
            M = conj(TorusMatrix{1, -n, 0, 1}, M);
            if (floor_fixed_point(M, +1) < 0) M = conj(T, M);
        } else {
            M = conj(TorusMatrix{1, -fa, 0, 1}, M);
            M = conj(T, M);
        }
    }
    std::string letters;
    while (!(M == TorusMatrix{})) {
        if (M.a >= M.c && M.b >= M.d) {
            letters += 'X';
            M = {M.a - M.c, M.b - M.d, M.c, M.d};
        } else if (M.c >= M.a && M.d >= M.b) {
            letters += 'Y';
            M = {M.a, M.b, M.c - M.a, M.d - M.b};
        } else {
            throw Error(ErrorKind::InvalidArgument, "torusmap", "positive matrix failed to factor");
        }
    }
    return word_from_letters(letters);
}

bool conjugate_in_sl2z(const TorusMatrix& A, const TorusMatrix& B) {
    return xy_normal_form(A) == xy_normal_form(B);
}

Trace3Scan trace3_scan(int max_word_len) {
    if (max_word_len < 2) throw Error(ErrorKind::InvalidArgument, "torusmap", "word length must be at least 2");
    Trace3Scan scan;
    const CyclicXYWord xy{{1, 1}};
    std::string word;
    // depth-first over positive words, carrying the running product
    auto visit = [&](auto&& self, const TorusMatrix& m) -> void {
        if (static_cast<int>(word.size()) >= 2) {
            ++scan.words;
            if (m.trace() == 3) {
                ++scan.trace3;
                bool both = word.find('X') != std::string::npos && word.find('Y') != std::string::npos;
                if (!both || !(word_from_letters(word) == xy)) scan.unique = false;
            }
        }
        if (static_cast<int>(word.size()) == max_word_len) return;
        bool both = word.find('X') != std::string::npos && word.find('Y') != std::string::npos;
        for (char ch : {'X', 'Y'}) {
            TorusMatrix next = m * (ch == 'X' ? X() : Y());
            if (both && next.trace() <= m.trace()) scan.monotone = false;
            word.push_back(ch);
            self(self, next);
            word.pop_back();
        }
    };
    visit(visit, TorusMatrix{});
    return scan;
}

bool trace3_uniqueness(int max_word_len) {
    Trace3Scan s = trace3_scan(max_word_len);
    return s.unique && s.monotone;
}

}  // namespace orbiflow::torusmap
