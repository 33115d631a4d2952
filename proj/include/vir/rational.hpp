#ifndef VIR_RATIONAL_HPP
#define VIR_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace vir {

// Arbitrary-precision rational. mpq_class keeps gcd(|num|, den) = 1 and
// den >= 1 after canonicalize(), which our helpers always call.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serialized as "p/q", or just "p" when q = 1.
std::string to_string(const Rat& r);

// Parses "p/q" or "p". Returns nullopt on malformed input.
std::optional<Rat> rat_from_string(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int numerator(const Rat& r) { return r.get_num(); }
inline Int denominator(const Rat& r) { return r.get_den(); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// gcd of a list of rationals: gcd(nums)/lcm(dens); gcd({}) = 0.
Rat rat_gcd(const std::vector<Rat>& xs);

// Prime factorization of a positive integer by trial division.
// Adequate for the table data handled here (largest prime factor 71).
std::vector<std::pair<Int, int>> factor_integer(Int n);

// binomial(n, k) for possibly negative n, k >= 0.
Rat binomial(long n, long k);

}  // namespace vir

#endif
