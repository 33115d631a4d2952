#ifndef VIR_MULTIPOLY_HPP
#define VIR_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vir/rational.hpp"

namespace vir {

// Graded lexicographic order on exponent vectors: compare total degree
// first, then exponents left to right (variables are kept sorted by name,
// so the leftmost exponent belongs to the alphabetically first variable).
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over Q with a canonical representation:
// variables sorted ascending by name, no zero coefficients, no variable
// with identically zero exponent. Equality is structural.
class MultiPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rat, GrlexLess>;

    MultiPoly() = default;  // zero
    static MultiPoly constant(const Rat& c);
    static MultiPoly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Requires is_constant(); zero polynomial gives 0.
    Rat constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& name) const;
    bool depends_on(const std::string& name) const { return degree_in(name) > 0; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    // Total order usable as a map key (grlex-based, deterministic).
    bool operator<(const MultiPoly& o) const;

    MultiPoly pow(int e) const;
    MultiPoly derivative(const std::string& name) const;

    // Dense coefficient list in `name`: result[k] is the coefficient of
    // name^k, a polynomial in the remaining variables.
    std::vector<MultiPoly> coefficients_in(const std::string& name) const;

    MultiPoly substitute(const std::string& name, const Rat& value) const;
    MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
    // Requires every variable to be assigned.
    Rat eval(const std::map<std::string, Rat>& assignment) const;

    // Leading coefficient/monomial in the grlex order.
    Rat leading_coeff() const;  // 0 for the zero polynomial

    // Positive rational c with p = c * (integer-primitive poly); carries the
    // sign of the grlex-leading coefficient. content(0) = 0.
    Rat content() const;
    // p / content(): integer coefficients, gcd 1, positive leading coeff.
    MultiPoly primitive_part() const;

    std::string to_string() const;

    // Rebuilds canonical form from raw data (sorts vars, drops zeros).
    static MultiPoly make(std::vector<std::string> vars, TermMap terms);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void normalize();
    friend void unify(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, MultiPoly::TermMap& ta,
                      MultiPoly::TermMap& tb);
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// Exact division: returns a/b when b | a in Q[vars], nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Polynomial gcd, normalized integer-primitive with positive leading
// coefficient; gcd(0, 0) = 0, gcd of nonzero constants is 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

struct Factorization {
    Rat unit;  // scalar such that unit * prod factors^mult == input
    std::vector<std::pair<MultiPoly, int>> factors;  // primitive, ascending

    MultiPoly expand() const;
    std::string to_string() const;
};

// Factors out all rational roots of a univariate polynomial (in `name`
// if given, else the single variable present). Linear factors come out
// integer-primitive with positive leading coefficient; any rootless
// residual of degree >= 2 is kept as a single factor.
Factorization factor_rational_roots(const MultiPoly& p,
                                    const std::string& name = "");

}  // namespace vir

#endif
