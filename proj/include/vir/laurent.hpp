#ifndef VIR_LAURENT_HPP
#define VIR_LAURENT_HPP

#include <string>
#include <vector>

#include "vir/ratfunc.hpp"

namespace vir {

// Truncated Laurent series in one parameter; coefficients are rational
// functions in the remaining variables. Coefficients are stored for
// exponents lead .. order and are exact in that window.
class LaurentSeries {
public:
    LaurentSeries(std::string param, int order)
        : param_(std::move(param)), lead_(order + 1), order_(order) {}

    const std::string& param() const { return param_; }
    int order() const { return order_; }
    // Lowest stored exponent; for the zero series this is order + 1.
    int lead() const { return lead_; }
    bool is_zero() const;

    // Coefficient of param^k; requires k <= order.
    RatFunc coeff(int k) const;
    void set_coeff(int k, RatFunc v);  // requires k <= order

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scale(const RatFunc& c) const;  // c free of param
    // Equality of all coefficients up to min(order, o.order).
    bool agrees_with(const LaurentSeries& o) const;

    std::string to_string() const;

private:
    std::string param_;
    int lead_;
    int order_;
    std::vector<RatFunc> c_;  // c_[i] = coeff of param^(lead_ + i)
    void trim();
};

// Exact expansion of f around param = 0 through the given order.
// Throws std::invalid_argument if f has an essential obstruction (the
// denominator's lowest coefficient in param must be invertible, which
// for rational functions always holds).
LaurentSeries laurent_expand(const RatFunc& f, const std::string& param,
                             int order);

}  // namespace vir

#endif
