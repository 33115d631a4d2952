#ifndef VIR_NUMEROLOGY_HPP
#define VIR_NUMEROLOGY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vir/rational.hpp"

namespace vir {

struct AuditFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundDerivationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Compiled-in order data for the three finite simple groups whose prime
// divisors are matched against Kac-determinant factors.
struct GroupFacts {
    std::string name;
    Int order;                                    // literal order
    std::vector<std::pair<Int, int>> order_factorization;  // prime -> exponent
    std::vector<Int> notable_dims;

    bool divides_order(const Int& prime) const;
};

// Monster, Baby Monster, O10+(2), in that order.
const std::vector<GroupFacts>& group_facts();
const GroupFacts& group_by_name(const std::string& name);

struct DeligneEntry {
    std::string algebra;
    long h_vee = 0;
    long d = 0;
    Rat C;
};

// The eight exceptional-series entries A1..E8, each re-verified against
// the derived d(C) and the dual-Coxeter form 6(2+C)/(10-C).
std::vector<DeligneEntry> deligne_table();

// Closed forms evaluated at a rational charge.
Rat d1_closed_form(const Rat& C);    // C(5C+22)/(10-C)
Rat d2_closed_form(const Rat& C);    // (5C+22)(2C-1)(7C+68)/(2(C^2-55C+748))
Rat hvee_closed_form(const Rat& C);  // 6(2+C)/(10-C)

struct EnumerationResult {
    int weight = 0;
    std::vector<std::pair<Rat, Int>> solutions;  // (C, d_h), sorted by C
    std::vector<std::pair<Rat, Int>> flagged;    // integral but d_h <= 0
    std::map<std::string, std::string> method_audit;
};

// All positive rational C with d(C) a positive integer, via the
// perfect-square discriminant / divisor-pair argument. Count: 21.
EnumerationResult enumerate_integral_d1();

// All positive rational C with d2(C) an integer and positive, via the
// denominator-divides-70 bound and an exhaustive numerator window whose
// finiteness certificate is recorded in method_audit. Count: 36;
// integral solutions with d2 <= 0 are reported in `flagged`.
EnumerationResult enumerate_integral_d2();

// Independent oracle: scan C = a/b over b <= max_den, a/b < 10, returning
// every C with d(C) a positive integer. Cross-checks enumerate_integral_d1.
std::vector<Rat> brute_force_d1_scan(long max_den, bool parallel = true);

struct AuditCell {
    std::string claim;     // what the source asserts
    std::string computed;  // what this library computed
    bool pass = false;
};

struct AuditReport {
    std::string table;
    std::vector<AuditCell> cells;
    bool pass = false;
};

// table 1: Deligne rows and the "prime divisors of d divide num(C) or
// num(5C+22)" claim; tables 2/3/4: Kac-determinant factor rows at
// C = 24, 47/2, 8 against the Monster, Baby Monster, O10+(2) orders.
AuditReport prime_divisor_audit(int table);

// d2(24), d3(24), the dimension sum 21493760 and both factorizations.
AuditReport moonshine_dimension_check();

// h_vee = d/C - 1 for each entry (Kac-Moody level 1).
AuditReport kacmoody_ratio_check(const std::vector<DeligneEntry>& entries);

}  // namespace vir

#endif
