#include "vir/ratfunc.hpp"

#include <stdexcept>

namespace vir {

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(1);
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!(g == MultiPoly::constant(1))) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    // Canonical scale: denominator integer-primitive, positive lead.
    Rat c = den_.content();
    if (c != 1) {
        Rat inv = Rat(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-reduce before multiplying to keep intermediates small.
    MultiPoly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
    return RatFunc(*divide_exact(num_, g1) * *divide_exact(o.num_, g2),
                   *divide_exact(den_, g2) * *divide_exact(o.den_, g1));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rat c = inv.den_.content();
    if (c != 1) {
        Rat s = Rat(1) / c;
        inv.num_ = inv.num_ * s;
        inv.den_ = inv.den_ * s;
    }
    return *this * inv;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return RatFunc(1) / pow(-e);
    RatFunc r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::derivative(const std::string& name) const {
    return RatFunc(num_.derivative(name) * den_ - num_ * den_.derivative(name),
                   den_ * den_);
}

RatFunc RatFunc::substitute(const std::string& name, const RatFunc& value) const {
    if (!depends_on(name)) return *this;
    auto horner = [&](const MultiPoly& p) {
        auto coeffs = p.coefficients_in(name);
        RatFunc r;
        for (size_t k = coeffs.size(); k-- > 0;)
            r = r * value + RatFunc(coeffs[k]);
        return r;
    };
    RatFunc d = horner(den_);
    if (d.is_zero()) throw PoleError("substitute: denominator vanishes identically");
    return horner(num_) / d;
}

RatFunc RatFunc::eval_at(const std::string& name, const Rat& value) const {
    if (!depends_on(name)) return *this;
    RatFunc v(value);
    auto horner = [&](const MultiPoly& p) {
        auto coeffs = p.coefficients_in(name);
        MultiPoly r;
        for (size_t k = coeffs.size(); k-- > 0;)
            r = r * MultiPoly::constant(value) + coeffs[k];
        return r;
    };
    MultiPoly d = horner(den_);
    if (d.is_zero())
        throw PoleError("eval_at: pole at " + name + " = " + vir::to_string(value));
    return RatFunc(horner(num_), d);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + " / " + d;
}

}  // namespace vir
