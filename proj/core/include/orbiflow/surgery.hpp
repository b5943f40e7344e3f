#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbiflow/cases.hpp"
#include "orbiflow/snf.hpp"
#include "orbiflow/torusmap.hpp"

namespace orbiflow::surgery {

using Rational = boost::rational<long long>;
using orbiflow::smith_normal_form;

// Surgery coefficient b/a: the new meridian is homologous to a*l + b*m.
struct SlopeCoefficient {
    long long b = 0, a = 1;

    // Normalizes to a >= 0 (b = 1 when a = 0); throws unless gcd(a, b) = 1.
    static SlopeCoefficient make(long long b, long long a);
    SlopeCoefficient negated() const { return {-b, a}; }
    std::string str() const;
    bool operator==(const SlopeCoefficient&) const = default;
};

enum class SeifertConvention { Standard, Reversed };

struct SeifertData {
    int p = 0, q = 0, r = 0;
    long long b0 = -1;
    SeifertConvention convention = SeifertConvention::Standard;

    // -(b0 + 1/p + 1/q + 1/r), negated for the reversed convention
    Rational euler_number() const;
    IntMatrix relation_matrix() const;  // rows are relations over x1, x2, x3, h
};

SeifertData seifert_data(int p, int q, int r, SeifertConvention convention = SeifertConvention::Standard);
AbelianGroup seifert_h1(int p, int q, int r, SeifertConvention convention = SeifertConvention::Standard);

// Z + coker(A - I)
AbelianGroup mapping_torus_h1(const torusmap::TorusMatrix& A);

struct SurgerySpec {
    torusmap::CatOrbit orbit;
    SlopeCoefficient slope;
};

// Generators x, y, m_1 .. m_{c-1}, t; columns are relations.
struct SurgeryPresentation {
    IntMatrix relations;
    std::vector<long long> longitude;
    std::vector<long long> meridian;
    bool zero_surgery = false;  // a = 0: the filling returns the closed mapping torus
};

// stable_power k picks the rational near-stable direction A^{-k}(1,0) used to
// push the orbit off itself when building the longitude.
SurgeryPresentation surgery_presentation(const SurgerySpec& spec, const torusmap::TorusMatrix& A = torusmap::cat(),
                                         int stable_power = 3);
AbelianGroup surgered_h1(const SurgerySpec& spec, const torusmap::TorusMatrix& A = torusmap::cat(),
                         int stable_power = 3);

// gamma_1: the fixed point (0,0); gamma_2: the period-2 orbit through (3/5,1/5).
torusmap::CatOrbit gamma1();
torusmap::CatOrbit gamma2();

struct TheoremRow {
    std::string orbit;  // "gamma1" or "gamma2"
    SlopeCoefficient slope;
    CaseId target = CaseId::C237;
    AbelianGroup surgered;
    AbelianGroup surgered_negated;
    AbelianGroup seifert;
    AbelianGroup seifert_reversed;
    bool match = false;
};

std::vector<TheoremRow> verify_theorem_h1(SeifertConvention convention = SeifertConvention::Standard);

struct ExceptionalSlope {
    std::string orbit;
    SlopeCoefficient slope;
    bool both_signs = true;
    std::string identification;
    std::optional<CaseId> target;
};

std::vector<ExceptionalSlope> exceptional_slope_table();

// Boundary direction (a, b) with b > 0 to the coefficient b/a.
SlopeCoefficient section_to_slope(long long a, long long b);

}  // namespace orbiflow::surgery
