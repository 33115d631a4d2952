#include "vir/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace vir {

void LaurentSeries::trim() {
    size_t drop = 0;
    while (drop < c_.size() && c_[drop].is_zero()) ++drop;
    if (drop) {
        c_.erase(c_.begin(), c_.begin() + drop);
        lead_ += static_cast<int>(drop);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) lead_ = order_ + 1;
}

bool LaurentSeries::is_zero() const { return c_.empty(); }

RatFunc LaurentSeries::coeff(int k) const {
    if (k > order_)
        throw std::out_of_range("LaurentSeries::coeff beyond truncation order");
    if (k < lead_ || k >= lead_ + static_cast<int>(c_.size())) return RatFunc();
    return c_[k - lead_];
}

void LaurentSeries::set_coeff(int k, RatFunc v) {
    if (k > order_)
        throw std::out_of_range("LaurentSeries::set_coeff beyond truncation order");
    if (c_.empty()) {
        lead_ = k;
        c_.push_back(std::move(v));
    } else if (k < lead_) {
        c_.insert(c_.begin(), lead_ - k, RatFunc());
        lead_ = k;
        c_[0] = std::move(v);
    } else {
        if (k >= lead_ + static_cast<int>(c_.size()))
            c_.resize(k - lead_ + 1);
        c_[k - lead_] = std::move(v);
    }
    trim();
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (param_ != o.param_)
        throw std::invalid_argument("LaurentSeries: parameter mismatch");
    LaurentSeries r(param_, std::min(order_, o.order_));
    int lo = std::min(lead_, o.lead_);
    for (int k = lo; k <= r.order_; ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + o.scale(RatFunc(Rat(-1)));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (param_ != o.param_)
        throw std::invalid_argument("LaurentSeries: parameter mismatch");
    // Truncation: the product is exact through min over the windows.
    int ord = std::min(order_ + o.lead_, o.order_ + lead_);
    LaurentSeries r(param_, ord);
    if (is_zero() || o.is_zero()) return r;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        for (int j = 0; j < static_cast<int>(o.c_.size()); ++j) {
            int k = lead_ + i + o.lead_ + j;
            if (k > ord) continue;
            r.set_coeff(k, r.coeff(k) + c_[i] * o.c_[j]);
        }
    return r;
}

LaurentSeries LaurentSeries::scale(const RatFunc& s) const {
    LaurentSeries r(param_, order_);
    r.lead_ = lead_;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    if (param_ != o.param_) return false;
    int ord = std::min(order_, o.order_);
    int lo = std::min(lead_, o.lead_);
    for (int k = lo; k <= ord; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = lead_; k < lead_ + static_cast<int>(c_.size()); ++k) {
        const RatFunc& v = c_[k - lead_];
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ")";
        if (k != 0) os << "*" << param_ << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << param_ << "^" << (order_ + 1) << ")";
    return os.str();
}

LaurentSeries laurent_expand(const RatFunc& f, const std::string& param,
                             int order) {
    LaurentSeries r(param, order);
    if (f.is_zero()) return r;
    auto ncs = f.num().coefficients_in(param);
    auto dcs = f.den().coefficients_in(param);
    size_t a = 0, b = 0;
    while (ncs[a].is_zero()) ++a;
    while (dcs[b].is_zero()) ++b;
    int lead = static_cast<int>(a) - static_cast<int>(b);
    size_t terms = static_cast<size_t>(std::max(0, order - lead + 1));
    if (terms == 0) return r;
    // s = N / D with N = num/param^a, D = den/param^b; D0 != 0.
    auto N = [&](size_t k) {
        return a + k < ncs.size() ? RatFunc(ncs[a + k]) : RatFunc();
    };
    auto D = [&](size_t k) {
        return b + k < dcs.size() ? RatFunc(dcs[b + k]) : RatFunc();
    };
    RatFunc d0 = D(0);
    std::vector<RatFunc> s(terms);
    for (size_t k = 0; k < terms; ++k) {
        RatFunc acc = N(k);
        for (size_t j = 1; j <= k; ++j) acc -= D(j) * s[k - j];
        s[k] = acc / d0;
        r.set_coeff(lead + static_cast<int>(k), s[k]);
    }
    return r;
}

}  // namespace vir
