#include "vir/rational.hpp"

#include <stdexcept>

namespace vir {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        Int n(ns), d(ds);
        if (d == 0) return std::nullopt;
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rat rat_gcd(const std::vector<Rat>& xs) {
    Int num = 0, den = 1;
    for (const auto& x : xs) {
        if (x == 0) continue;
        num = gcd(num, x.get_num());
        den = lcm(den, x.get_den());
    }
    if (num == 0) return Rat(0);
    Rat g(num, den);
    g.canonicalize();
    return g;
}

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n <= 0) throw std::invalid_argument("factor_integer: need n > 0");
    std::vector<std::pair<Int, int>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Rat binomial(long n, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) {
        r *= Rat(n - i, i + 1);
        r.canonicalize();
    }
    return r;
}

}  // namespace vir
