#pragma once

#include <optional>
#include <string>
#include <vector>

namespace orbiflow {

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
IntMatrix transpose(const IntMatrix& A);
long long determinant(const IntMatrix& A);  // Bareiss, exact

// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
// Exact internally; throws Overflow when the certificate leaves 64 bits.
struct SmithForm {
    IntMatrix U, D, V;
    std::vector<long long> diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const IntMatrix& M);

// Finitely generated abelian group as invariant factors: torsion factors
// (each >= 2, divisibility chain) followed by one 0 per free summand.
struct AbelianGroup {
    std::vector<long long> factors;

    int rank() const;
    std::vector<long long> torsion() const;
    std::optional<long long> order() const;  // nullopt when infinite
    std::string str() const;

    bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup make_group(std::vector<long long> diagonal, int extra_free = 0);
// Z^rows modulo the span of the columns of M.
AbelianGroup cokernel(const IntMatrix& M);

}  // namespace orbiflow
