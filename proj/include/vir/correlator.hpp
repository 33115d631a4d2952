#ifndef VIR_CORRELATOR_HPP
#define VIR_CORRELATOR_HPP

#include <map>
#include <string>
#include <vector>

#include "vir/casimir.hpp"
#include "vir/laurent.hpp"

namespace vir {

struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerator ansatz G = sum_j g_j (xy)^{2h-j} (x-y)^{2j} of the two-point
// function F(a,b;x,y) = G / (x^{2h} y^{2h} (x-y)^{2h}); homogeneous of
// degree 4h and x<->y symmetric by construction.
struct GAnsatz {
    int weight = 0;
    std::vector<RatFunc> coeffs;  // g_0 .. g_{2h}

    static GAnsatz symbolic(int h);  // coeffs are the symbols g0..g{2h}
};

// Expansion of F y^{2h} after the exact substitution x = y(1+t),
// t = (x-y)/y: a Laurent series t^{-2h}(c_0 + c_1 t + ...). The returned
// series holds c_n at exponent n - 2h for all n <= order.
LaurentSeries expansion_casimir_side(const GAnsatz& g, int order);

// Expansion of F y^{2h} after the exact substitution x = y(w-1)/w,
// w = -y/(x-y): a Taylor series e_0 + e_1 w + ...; e_m at exponent m.
LaurentSeries expansion_mode_side(const GAnsatz& g, int order);

// Known mode-side coefficients (normalized by <a,b>): m=0 -> (-1)^h;
// for h >= 2 also m=1 -> 0 (dim V^(1) = 0). Higher orders are outputs,
// not inputs.
std::vector<std::pair<int, Rat>> mode_side_data(int h);

// One linear constraint sum_u lhs[u] * u = rhs over Q(C).
struct LinearEquation {
    std::map<std::string, RatFunc> lhs;
    RatFunc rhs;
    std::string provenance;  // "casimir-side level n" / "mode-side order m"
};

struct ConstraintSystem {
    int weight = 0;
    std::vector<std::string> unknowns;  // g0..g{2h}, d_h
    std::vector<LinearEquation> equations;
};

// Equations {c_n = casimir_zero_mode(h,n) : n <= max_casimir_level}
// together with the known mode-side values.
ConstraintSystem assemble_system(int h, int max_casimir_level);

struct LinearSolution {
    bool consistent = false;
    std::map<std::string, RatFunc> values;
    std::vector<std::string> free_unknowns;  // no pivot: parametrized
};

// Gaussian elimination over the rational-function field for the listed
// unknowns; unknowns of the system not listed are carried symbolically.
LinearSolution solve_system(const ConstraintSystem& sys,
                            const std::vector<std::string>& solve_for);

struct DerivedForm {
    std::string name;  // killing | trace | d_of_C | d2_of_C | d3_of_C | G_polynomial
    RatFunc value;
    GAnsatz ansatz;  // populated for G_polynomial only
};

// G coefficients in terms of (C, d_h), using casimir levels up to the
// g-determining level (h=1: 2, h=2: 4, h=3: 8).
GAnsatz solved_g(int h);

DerivedForm derive_killing();           // h=1: K/<a,b> = -2(d/C - 1)
DerivedForm derive_dimension(int h);    // d_h as a rational function of C
DerivedForm derive_g_polynomial();      // h=2 explicit G
DerivedForm derive_trace_form();        // h=2: Tr((a.b)_0)/<a,b> over V^(2)

// Polynomial condition on (C, d_h) from matching the level-`level`
// casimir-side coefficient against the already-determined F; the zero
// polynomial means no new constraint.
MultiPoly consistency_constraint(int h, int level);

// Positive rational roots in C of consistency_constraint(h, level) after
// substituting d_h = derive_dimension(h); empty if the constraint has
// become identically zero (no new information).
std::vector<Rat> constraint_charges(int h, int level);

}  // namespace vir

#endif
