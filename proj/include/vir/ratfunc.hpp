#ifndef VIR_RATFUNC_HPP
#define VIR_RATFUNC_HPP

#include <map>
#include <optional>
#include <string>

#include "vir/multipoly.hpp"

namespace vir {

// Rational function num/den in canonical form: gcd(num, den) = 1, den is
// integer-primitive with positive grlex-leading coefficient. Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
    RatFunc(const Rat& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc var(const std::string& name) { return RatFunc(MultiPoly::var(name)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_ == MultiPoly::constant(1); }
    bool depends_on(const std::string& name) const {
        return num_.depends_on(name) || den_.depends_on(name);
    }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws on division by zero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
    }

    RatFunc pow(int e) const;  // negative e inverts
    RatFunc derivative(const std::string& name) const;
    RatFunc substitute(const std::string& name, const RatFunc& value) const;
    // Evaluates one variable at a rational point; throws PoleError if the
    // denominator vanishes there while the numerator does not (and
    // reduces the fraction first, so removable points are fine).
    RatFunc eval_at(const std::string& name, const Rat& value) const;

    std::string to_string() const;

private:
    MultiPoly num_, den_;
    void reduce();
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c) * f; }

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vir

#endif
