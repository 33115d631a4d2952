#ifndef VIR_CASIMIR_HPP
#define VIR_CASIMIR_HPP

#include <string>
#include <vector>

#include "vir/verma.hpp"

namespace vir {

// Scalar in L_m lambda_h^(n) = descent_coefficient(h,m,n) lambda_h^(n-m).
Rat descent_coefficient(const Rat& h, int m, int n);

struct CasimirSolution {
    Rat weight;   // h
    int level = 0;  // n
    // Coefficients are rational functions of C, scaled linearly by the
    // symbol d_h ("d", "d2" or "d3" according to the weight).
    VermaVector vector;
    std::vector<Rat> poles;  // C values where the Gram solve degenerates
    std::vector<std::string> assumptions;
};

// Name of the dimension symbol for weight h: "d", "d2", "d3".
std::string dim_symbol(const Rat& h);

// Casimir vector of weight h at level n in the vacuum module, determined
// by pairing conditions <w, x> derived from the descent relations.
// Cached; throws SingularMatrix if det M^(n) vanishes identically.
const CasimirSolution& solve_casimir(const Rat& h, int n);

struct ZeroModeValue {
    Word word;
    RatFunc weight;  // h, possibly symbolic
    RatFunc value;   // epsilon with <a, (state)_0 b> = epsilon <a,b>
};

// Zero-mode eigenvalue of the vacuum descendant L_{-n1}...L_{-nk}1 on a
// pair of weight-h primaries. `h` may be a numeric rational or the
// symbol h. Production route: Ward-identity recursion on the correlator
// <a, Y(v,y) b> (zero_mode_ward). The independent mode-product route
// expands the zero mode through the iterate (Borcherds) formula inside a
// generic weight-h primary module; the central charge enters and must
// cancel, which makes it a strong cross-check.
ZeroModeValue zero_mode_eigenvalue(const Word& w, const RatFunc& h);
RatFunc zero_mode_ward(const Word& w, const RatFunc& h);
RatFunc zero_mode_mode_product(const Word& w, const RatFunc& h);

// Sum over the level-n Casimir solution of coefficient x zero-mode
// eigenvalue; linear in the symbol d_h.
RatFunc casimir_zero_mode(const Rat& h, int n);

}  // namespace vir

#endif
