#include "orbiflow/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <array>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbiflow/error.hpp"

namespace orbiflow {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "snf", "integer overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "snf", "integer overflow");
    return r;
}

using Big = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<Big>>;

BigMatrix big_identity(std::size_t n) {
    BigMatrix I(n, std::vector<Big>(n));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

long long narrow(const Big& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error(ErrorKind::Overflow, "snf", "integer overflow");
    return v.convert_to<long long>();
}

IntMatrix narrow(const BigMatrix& A) {
    IntMatrix out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (const auto& v : A[i]) out[i].push_back(narrow(v));
    return out;
}

// g = x*a + y*b with g = gcd(a, b) > 0
std::tuple<Big, Big, Big> extended_gcd(Big r0, Big r1) {
    Big x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Big q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        x0 = std::exchange(x1, x0 - q * x1);
        y0 = std::exchange(y1, y0 - q * y1);
    }
    if (r0 < 0) return {-r0, -x0, -y0};
    return {r0, x0, y0};
}

// nearest integer to num / den, den > 0
Big nearest_quotient(const Big& num, const Big& den) {
    Big twice = 2 * num + den, q = twice / (2 * den);
    if (twice < 0 && q * 2 * den != twice) --q;
    return q;
}

// Shrinks the certificate while keeping U M V = D. For i < j with d_i | d_j,
// row i of U may take k * row j if column j of V gives back k * (d_j / d_i)
// of column i, and column i of V may take -k * column j if row j of U takes
// k * (d_j / d_i) of row i.
void size_reduce(BigMatrix& U, BigMatrix& V, const std::vector<Big>& d) {
    const std::size_t r = d.size();
    auto dot = [](const std::vector<Big>& a, const std::vector<Big>& b) {
        Big s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    auto col = [&](std::size_t j) {
        std::vector<Big> c;
        for (const auto& row : V) c.push_back(row[j]);
        return c;
    };
    auto scaled = [](std::vector<Big> v, const Big& k) {
        for (auto& x : v) x *= k;
        return v;
    };
    for (int pass = 0; pass < 64; ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                if (d[i] == 0 || d[j] % d[i] != 0) continue;
                const Big c = d[j] / d[i];
                for (int kind = 0; kind < 2; ++kind) {
                    // minimize |A + kB|^2 + |C + kE|^2 over integers k
                    std::vector<Big> A, B, C, E;
                    if (kind == 0) {
                        A = U[i], B = U[j], C = col(j), E = scaled(col(i), -c);
                    } else {
                        A = U[j], B = scaled(U[i], c), C = col(i), E = scaled(col(j), -1);
                    }
                    Big den = dot(B, B) + dot(E, E);
                    if (den == 0) continue;
                    Big k = -nearest_quotient(dot(A, B) + dot(C, E), den);
                    if (k == 0) continue;
                    moved = true;
                    if (kind == 0) {
                        for (std::size_t x = 0; x < U[i].size(); ++x) U[i][x] += k * U[j][x];
                        for (auto& row : V) row[j] -= k * c * row[i];
                    } else {
                        for (std::size_t x = 0; x < U[j].size(); ++x) U[j][x] += k * c * U[i][x];
                        for (auto& row : V) row[i] -= k * row[j];
                    }
                }
            }
        if (!moved) break;
    }
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix I(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    std::size_t m = A.size(), k = B.size(), n = k ? B[0].size() : 0;
    IntMatrix C(m, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != k) throw Error(ErrorKind::InvalidArgument, "snf", "dimension mismatch");
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < n; ++j) C[i][j] = checked_add(C[i][j], checked_mul(A[i][t], B[t][j]));
    }
    return C;
}

IntMatrix transpose(const IntMatrix& A) {
    if (A.empty()) return {};
    IntMatrix T(A[0].size(), std::vector<long long>(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
    return T;
}

long long determinant(const IntMatrix& A) {
    std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "snf", "determinant of a non-square matrix");
    if (n == 0) return 1;
    BigMatrix M(n, std::vector<Big>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
    Big prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return narrow(sign * M[n - 1][n - 1]);
}

SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    for (const auto& row : M)
        if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "snf", "ragged matrix");
    BigMatrix D(m, std::vector<Big>(n)), U = big_identity(m), V = big_identity(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) D[i][j] = M[i][j];

    // rows (i, j) <- (x*i + y*j, u*i + v*j), xv - yu = 1
    auto rows2 = [&](std::size_t i, std::size_t j, const Big& x, const Big& y, const Big& u, const Big& v) {
        for (BigMatrix* T : {&D, &U}) {
            auto& A = *T;
            for (std::size_t c = 0; c < A[i].size(); ++c) {
                Big a = A[i][c], b = A[j][c];
                A[i][c] = x * a + y * b;
                A[j][c] = u * a + v * b;
            }
        }
    };
    auto cols2 = [&](std::size_t i, std::size_t j, const Big& x, const Big& y, const Big& u, const Big& v) {
        for (BigMatrix* T : {&D, &V})
            for (auto& row : *T) {
                Big a = row[i], b = row[j];
                row[i] = x * a + y * b;
                row[j] = u * a + v * b;
            }
    };
    // unimodular 2x2 sending (a, b) to (g, 0)
    auto eliminator = [](const Big& a, const Big& b) -> std::array<Big, 4> {
        if (b % a == 0) return {1, 0, -(b / a), 1};
        auto [g, x, y] = extended_gcd(a, b);
        return {x, y, -(b / g), a / g};
    };

    std::vector<Big> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) {
            diag.emplace_back(0);
            continue;
        }
        std::swap(D[t], D[pi]);
        std::swap(U[t], U[pi]);
        for (BigMatrix* T : {&D, &V})
            for (auto& row : *T) std::swap(row[t], row[pj]);

        while (true) {
            for (std::size_t i = t + 1; i < m; ++i)
                if (D[i][t] != 0) {
                    auto e = eliminator(D[t][t], D[i][t]);
                    rows2(t, i, e[0], e[1], e[2], e[3]);
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D[t][j] != 0) {
                    auto e = eliminator(D[t][t], D[t][j]);
                    cols2(t, j, e[0], e[1], e[2], e[3]);
                }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) clean = clean && D[i][t] == 0;
            if (!clean) continue;
            // pivot must divide the trailing block; folding in a bad row lowers it to a gcd
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            rows2(t, bad, 1, 1, 0, 1);
        }
        if (D[t][t] < 0) {
            for (auto& v : D[t]) v = -v;
            for (auto& v : U[t]) v = -v;
        }
        diag.push_back(D[t][t]);
    }
    size_reduce(U, V, diag);

    SmithForm S{narrow(U), narrow(D), narrow(V), {}};
    for (const auto& d : diag) S.diagonal.push_back(narrow(d));
    return S;
}

int AbelianGroup::rank() const {
    return static_cast<int>(std::count(factors.begin(), factors.end(), 0LL));
}

std::vector<long long> AbelianGroup::torsion() const {
    std::vector<long long> t;
    for (long long f : factors)
        if (f != 0) t.push_back(f);
    return t;
}

std::optional<long long> AbelianGroup::order() const {
    if (rank() > 0) return std::nullopt;
    long long o = 1;
    for (long long f : factors) o = checked_mul(o, f);
    return o;
}

std::string AbelianGroup::str() const {
    if (factors.empty()) return "0";
    std::string s;
    for (long long f : factors) {
        if (!s.empty()) s += " + ";
        s += f == 0 ? "Z" : "Z/" + std::to_string(f);
    }
    return s;
}

AbelianGroup make_group(std::vector<long long> diagonal, int extra_free) {
    AbelianGroup G;
    int free = extra_free;
    std::vector<long long> tors;
    for (long long d : diagonal) {
        d = std::llabs(d);
        if (d == 0) ++free;
        else if (d > 1) tors.push_back(d);
    }
    // the inputs need not divide one another; gcd/lcm exchange restores the chain
    std::vector<long long> chain;
    if (!tors.empty()) {
        for (std::size_t i = 0; i < tors.size(); ++i)
            for (std::size_t j = i + 1; j < tors.size(); ++j) {
                long long g = std::gcd(tors[i], tors[j]);
                long long l = tors[i] / g * tors[j];
                tors[i] = g;
                tors[j] = l;
            }
        for (long long d : tors)
            if (d > 1) chain.push_back(d);
    }
    G.factors = chain;
    for (int k = 0; k < free; ++k) G.factors.push_back(0);
    return G;
}

AbelianGroup cokernel(const IntMatrix& M) {
    const std::size_t m = M.size();
    SmithForm S = smith_normal_form(M);
    int free = static_cast<int>(m) - static_cast<int>(S.diagonal.size());
    return make_group(S.diagonal, free);
}

}  // namespace orbiflow
