#include "vir/numerology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <mutex>
#include <sstream>

#include "vir/correlator.hpp"
#include "vir/verma.hpp"

namespace vir {

namespace {

std::string factorization_string(const std::vector<std::pair<Int, int>>& fs) {
    if (fs.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : fs) {
        if (!first) os << "*";
        os << p.get_str();
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

Int expand_factorization(const std::vector<std::pair<Int, int>>& fs) {
    Int n = 1;
    for (const auto& [p, e] : fs)
        for (int i = 0; i < e; ++i) n *= p;
    return n;
}

AuditCell make_cell(const std::string& claim, const std::string& computed) {
    return AuditCell{claim, computed, claim == computed};
}

void finish(AuditReport& report) {
    report.pass = std::all_of(report.cells.begin(), report.cells.end(),
                              [](const AuditCell& c) { return c.pass; });
}

}  // namespace

bool GroupFacts::divides_order(const Int& prime) const {
    return order % prime == 0;
}

const std::vector<GroupFacts>& group_facts() {
    static const std::vector<GroupFacts> facts = [] {
        std::vector<GroupFacts> g;
        g.push_back(GroupFacts{
            "Monster",
            Int("808017424794512875886459904961710757005754368000000000"),
            {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1},
             {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1},
             {71, 1}},
            {Int(196883), Int(21296876)}});
        g.push_back(GroupFacts{
            "Baby Monster",
            Int("4154781481226426191177580544000000"),
            {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1},
             {19, 1}, {23, 1}, {31, 1}, {47, 1}},
            {}});
        g.push_back(GroupFacts{"O10+(2)",
                               Int("23499295948800"),
                               {{2, 20}, {3, 5}, {5, 2}, {7, 1}, {17, 1}, {31, 1}},
                               {}});
        for (const auto& f : g)
            if (expand_factorization(f.order_factorization) != f.order)
                throw AuditFailure("group order literal does not round-trip: " +
                                   f.name);
        return g;
    }();
    return facts;
}

const GroupFacts& group_by_name(const std::string& name) {
    for (const auto& g : group_facts())
        if (g.name == name) return g;
    throw std::invalid_argument("unknown group: " + name);
}

Rat d1_closed_form(const Rat& C) {
    return C * (5 * C + 22) / (10 - C);
}

Rat d2_closed_form(const Rat& C) {
    return (5 * C + 22) * (2 * C - 1) * (7 * C + 68) /
           (2 * (C * C - 55 * C + 748));
}

Rat hvee_closed_form(const Rat& C) {
    return 6 * (2 + C) / (10 - C);
}

std::vector<DeligneEntry> deligne_table() {
    static const std::vector<DeligneEntry> table = [] {
        std::vector<DeligneEntry> t = {
            {"A1", 2, 3, Rat(1)},        {"A2", 3, 8, Rat(2)},
            {"G2", 4, 14, rat(14, 5)},   {"D4", 6, 28, Rat(4)},
            {"F4", 9, 52, rat(26, 5)},   {"E6", 12, 78, Rat(6)},
            {"E7", 18, 133, Rat(7)},     {"E8", 30, 248, Rat(8)}};
        const RatFunc d_of_C = derive_dimension(1).value;
        for (const auto& e : t) {
            if (d_of_C.eval_at("C", e.C).constant_value() != e.d)
                throw AuditFailure("deligne_table: derived d(C) mismatch at " +
                                   e.algebra);
            if (hvee_closed_form(e.C) != e.h_vee)
                throw AuditFailure("deligne_table: h_vee mismatch at " +
                                   e.algebra);
            // Uniform exceptional-series dimension formula.
            long h = e.h_vee;
            if (Rat(2 * (5 * h - 6) * (h + 1)) != Rat(e.d) * (h + 6))
                throw AuditFailure("deligne_table: uniform formula fails at " +
                                   e.algebra);
        }
        return t;
    }();
    return table;
}

EnumerationResult enumerate_integral_d1() {
    // d(C) = C(5C+22)/(10-C) = d rearranges to 5C^2 + (22+d)C - 10d = 0,
    // whose positive root is rational iff (d+122)^2 - 14400 is a perfect
    // square s^2; then (d+122-s)(d+122+s) = 14400 enumerates d.
    EnumerationResult out;
    out.weight = 1;
    std::map<Rat, Int> found;
    long pairs = 0;
    for (long u = 1; u * u <= 14400; ++u) {
        if (14400 % u != 0) continue;
        long v = 14400 / u;
        if ((u + v) % 2 != 0) continue;
        ++pairs;
        long d = (u + v) / 2 - 122;
        long s = (v - u) / 2;
        if (d <= 0) continue;
        Rat C = rat(s - 22 - d, 10);
        if (C <= 0) continue;
        if (d1_closed_form(C) != d)
            throw AuditFailure("enumerate_integral_d1: candidate fails exact check");
        found[C] = d;
    }
    out.solutions.assign(found.begin(), found.end());
    out.method_audit["rearrangement"] = "5C^2 + (22+d)C - 10d = 0";
    out.method_audit["discriminant"] = "(d+122)^2 - 14400 must be a square";
    out.method_audit["factor_pairs_same_parity"] = std::to_string(pairs);
    out.method_audit["count"] = std::to_string(out.solutions.size());
    return out;
}

EnumerationResult enumerate_integral_d2() {
    // 2 d2 (C^2 - 55C + 748) = (5C+22)(2C-1)(7C+68) is an integer cubic in C
    // with leading coefficient 70, so a rational C in lowest terms a/b needs
    // b | 70. Polynomial division gives
    //   2 d2 = 70C + 4803 + (214303 C - 3594140)/(C^2 - 55C + 748),
    // so for C = a/b the divisibility D | b^2 (214303 a - 3594140 b) with
    // D = a^2 - 55ab + 748 b^2 is necessary. Multiplying the right factor by
    // its conjugate 214303 a - 8192525 b eliminates a modulo D:
    //   (214303a - 3594140b)(214303a - 8192525b) = 214303^2 D + c b^2
    // for a constant c, hence D | c b^4. Candidates therefore come from the
    // divisors of c b^4 via a = (55b +- sqrt(33 b^2 + 4D))/2, plus a direct
    // scan of the short strip where D <= 0. Every candidate is re-verified
    // exactly, so the heuristic identity only gates completeness, and the
    // identity itself is checked symbolically below.
    static std::mutex mtx;
    static std::optional<EnumerationResult> cached;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (cached) return *cached;
    }
    EnumerationResult out;
    out.weight = 2;

    // Symbolic certificate of the conjugate identity and of c itself.
    Int c;
    {
        MultiPoly A = MultiPoly::var("a"), B = MultiPoly::var("b");
        MultiPoly D = A * A - A * B * 55 + B * B * 748;
        long conj = 55L * 214303 - 3594140;  // makes the ab coefficient vanish
        MultiPoly lhs = (A * 214303 - B * 3594140) * (A * 214303 - B * conj);
        MultiPoly diff = lhs - D * (Int(214303) * 214303);
        // diff must be a pure multiple of b^2.
        auto quot = divide_exact(diff, B * B);
        if (!quot || !quot->is_constant())
            throw BoundDerivationFailure(
                "enumerate_integral_d2: conjugate identity failed");
        Rat cr = quot->constant_value();
        if (cr.get_den() != 1 || cr == 0)
            throw BoundDerivationFailure(
                "enumerate_integral_d2: degenerate conjugate constant");
        c = Int(cr.get_num());
    }
    auto c_factors = factor_integer(abs(c));

    std::map<Rat, Int> positive, nonpositive;
    std::ostringstream windows;
    auto consider = [&](long a, long b) {
        if (a < 1 || std::gcd(a, b) != 1) return;
        Int A(a), B(b);
        Int N = (5 * A + 22 * B) * (2 * A - B) * (7 * A + 68 * B);
        Int den = 2 * B * (A * A - 55 * A * B + 748 * B * B);
        if (den == 0 || N % den != 0) return;
        Int d2 = N / den;
        Rat C = rat(a, b);
        if (d2_closed_form(C) != Rat(d2))
            throw AuditFailure("enumerate_integral_d2: candidate fails exact check");
        (d2 > 0 ? positive : nonpositive)[C] = d2;
    };
    for (long b : {1, 2, 5, 7, 10, 14, 35, 70}) {
        // Divisors of |c| b^4, assembled from the prime factorizations.
        auto fs = c_factors;
        for (const auto& [p, e] : factor_integer(Int(b))) {
            bool merged = false;
            for (auto& [q, f] : fs)
                if (q == p) { f += 4 * e; merged = true; break; }
            if (!merged) fs.emplace_back(p, 4 * e);
        }
        std::vector<Int> divisors{1};
        for (const auto& [p, e] : fs) {
            size_t n = divisors.size();
            Int pk = 1;
            for (int i = 1; i <= e; ++i) {
                pk *= p;
                for (size_t j = 0; j < n; ++j) divisors.push_back(divisors[j] * pk);
            }
        }
        long count = 0;
        for (const Int& D : divisors) {
            Int disc = 33 * Int(b) * b + 4 * D;
            Int s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            if (s * s != disc) continue;
            for (int sign : {-1, 1}) {
                Int a2 = 55 * Int(b) + sign * s;
                if (a2 <= 0 || a2 % 2 != 0) continue;
                Int half = a2 / 2;
                if (!half.fits_slong_p()) continue;
                consider(half.get_si(), b);
                ++count;
            }
        }
        // Strip where D = a^2 - 55ab + 748b^2 <= 0: a/b between the roots
        // (55 +- sqrt(33))/2, a short interval scanned directly.
        for (long a = (49 * b) / 2; a <= (61 * b) / 2 + 1; ++a) consider(a, b);
        windows << "b=" << b << ":divisors=" << divisors.size()
                << ",roots=" << count << " ";
    }
    out.solutions.assign(positive.begin(), positive.end());
    out.flagged.assign(nonpositive.begin(), nonpositive.end());
    out.method_audit["denominator_bound"] = "b | 70 (leading coefficient of the integer cubic)";
    out.method_audit["remainder_form"] =
        "2 d2 = 70C + 4803 + (214303C - 3594140)/(C^2 - 55C + 748)";
    out.method_audit["divisor_certificate"] =
        "(214303a-3594140b)(214303a-8192525b) = 214303^2 D + (" + c.get_str() +
        ") b^2, so D | c b^4; identity verified symbolically";
    out.method_audit["windows"] = windows.str();
    out.method_audit["count_positive"] = std::to_string(out.solutions.size());
    out.method_audit["count_flagged"] = std::to_string(out.flagged.size());
    {
        std::lock_guard<std::mutex> lock(mtx);
        cached = out;
    }
    return out;
}

std::vector<Rat> brute_force_d1_scan(long max_den, bool parallel) {
    // d(a/b) = a(5a+22b) / (b(10b-a)); both sides positive for 0 < a < 10b.
    std::vector<Rat> found;
#ifdef VIR_HAVE_OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<Rat> mine;
#pragma omp for schedule(dynamic, 16) nowait
        for (long b = 1; b <= max_den; ++b) {
            for (long a = 1; a < 10 * b; ++a) {
                unsigned long long num = (unsigned long long)a * (5ULL * a + 22ULL * b);
                unsigned long long den = (unsigned long long)b * (10ULL * b - a);
                if (num % den != 0) continue;
                if (std::gcd(a, b) != 1) continue;
                mine.push_back(rat(a, b));
            }
        }
#pragma omp critical
        found.insert(found.end(), mine.begin(), mine.end());
    }
#else
    (void)parallel;
    for (long b = 1; b <= max_den; ++b)
        for (long a = 1; a < 10 * b; ++a) {
            unsigned long long num = (unsigned long long)a * (5ULL * a + 22ULL * b);
            unsigned long long den = (unsigned long long)b * (10ULL * b - a);
            if (num % den != 0) continue;
            if (std::gcd(a, b) != 1) continue;
            found.push_back(rat(a, b));
        }
#endif
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

namespace {

// One factor-row table: the distinct Kac-determinant factors at `level`
// evaluated at charge C, audited against the claimed factorizations and
// the prime divisors of `group`.
AuditReport factor_row_audit(const std::string& table_name, int level,
                             const Rat& C, const std::string& group_name,
                             const std::vector<std::string>& claimed) {
    AuditReport report;
    report.table = table_name;
    const GroupFacts& group = group_by_name(group_name);

    Factorization kd = kac_det_factored(level);
    std::map<std::string, MultiPoly> factors;
    for (const auto& [f, mult] : kd.factors)
        if (!f.is_constant()) factors.emplace(f.to_string(), f);
    report.cells.push_back(make_cell(
        std::to_string(claimed.size()) + " independent factors",
        std::to_string(factors.size()) + " independent factors"));
    // Claims keep the paper's column order; each names a factor polynomial
    // and its prime-factored value at the charge.
    for (const auto& claim : claimed) {
        std::string key = claim.substr(0, claim.find(" = "));
        auto it = factors.find(key);
        if (it == factors.end()) {
            report.cells.push_back(AuditCell{claim, "factor " + key + " absent", false});
            continue;
        }
        Rat value = it->second.eval({{"C", C}});
        Int num = value.get_num(), den = value.get_den();
        std::string shown = factorization_string(factor_integer(num));
        if (den != 1) shown += "/" + den.get_str();
        report.cells.push_back(make_cell(claim, key + " = " + shown));
        // Every prime of the evaluated numerator must divide the group order.
        for (const auto& [p, e] : factor_integer(num)) {
            std::ostringstream pc;
            pc << p.get_str() << " | |" << group.name << "|";
            report.cells.push_back(AuditCell{
                pc.str(), pc.str(), group.divides_order(p)});
        }
    }
    finish(report);
    return report;
}

}  // namespace

AuditReport prime_divisor_audit(int table) {
    switch (table) {
        case 1: {
            AuditReport report;
            report.table = "Table 1";
            struct Row {
                const char* algebra;
                const char* d_claim;
                const char* c_claim;
                const char* f_claim;  // 5C+22
            };
            const std::vector<Row> rows = {
                {"A1", "3", "1", "3^3"},      {"A2", "2^3", "2", "2^5"},
                {"G2", "2*7", "2*7/5", "2^2*3^2"}, {"D4", "2^2*7", "2^2", "2*3*7"},
                {"F4", "2^2*13", "2*13/5", "2^4*3"}, {"E6", "2*3*13", "2*3", "2^2*13"},
                {"E7", "7*19", "7", "3*19"},  {"E8", "2^3*31", "2^3", "2*31"}};
            auto entries = deligne_table();
            for (size_t i = 0; i < entries.size(); ++i) {
                const DeligneEntry& e = entries[i];
                const Row& row = rows[i];
                std::string d_str = factorization_string(factor_integer(Int(e.d)));
                report.cells.push_back(make_cell(
                    std::string(row.algebra) + " d = " + row.d_claim,
                    std::string(e.algebra) + " d = " + d_str));
                Int cn = e.C.get_num(), cd = e.C.get_den();
                std::string c_str = factorization_string(factor_integer(cn));
                if (cd != 1) c_str += "/" + cd.get_str();
                report.cells.push_back(make_cell(
                    std::string(row.algebra) + " C = " + row.c_claim,
                    std::string(e.algebra) + " C = " + c_str));
                Rat f = 5 * e.C + 22;
                report.cells.push_back(make_cell(
                    std::string(row.algebra) + " 5C+22 = " + row.f_claim,
                    std::string(e.algebra) + " 5C+22 = " +
                        factorization_string(factor_integer(f.get_num()))));
                // Each prime of d divides num(C) or num(5C+22).
                for (const auto& [p, mult] : factor_integer(Int(e.d))) {
                    std::ostringstream claim;
                    claim << p.get_str() << " | num(C) or num(5C+22) for "
                          << e.algebra;
                    bool ok = cn % p == 0 || f.get_num() % p == 0;
                    report.cells.push_back(AuditCell{claim.str(), claim.str(), ok});
                }
            }
            finish(report);
            return report;
        }
        case 2:
            return factor_row_audit(
                "Table 2", 10, Rat(24), "Monster",
                {"C = 2^3*3", "5*C + 22 = 2*71", "2*C - 1 = 47",
                 "7*C + 68 = 2^2*59", "3*C + 46 = 2*59", "5*C + 3 = 3*41",
                 "11*C + 232 = 2^4*31"});
        case 3:
            return factor_row_audit(
                "Table 3", 6, rat(47, 2), "Baby Monster",
                {"C = 47/2", "5*C + 22 = 3^2*31/2", "2*C - 1 = 2*23",
                 "7*C + 68 = 3*5*31/2"});
        case 4:
            return factor_row_audit(
                "Table 4", 6, Rat(8), "O10+(2)",
                {"C = 2^3", "5*C + 22 = 2*31", "2*C - 1 = 3*5",
                 "7*C + 68 = 2^2*31"});
        default:
            throw std::invalid_argument("prime_divisor_audit: table must be 1..4");
    }
}

AuditReport moonshine_dimension_check() {
    AuditReport report;
    report.table = "Moonshine dimensions";
    Rat d2 = derive_dimension(2).value.eval_at("C", Rat(24)).constant_value();
    Rat d3 = derive_dimension(3).value.eval_at("C", Rat(24)).constant_value();
    report.cells.push_back(make_cell("d2(24) = 196883", "d2(24) = " + to_string(d2)));
    report.cells.push_back(make_cell("d3(24) = 21296876", "d3(24) = " + to_string(d3)));
    report.cells.push_back(make_cell(
        "1 + d2(24) + d3(24) = 21493760",
        "1 + d2(24) + d3(24) = " + to_string(1 + d2 + d3)));
    report.cells.push_back(make_cell(
        "196883 = 47*59*71",
        "196883 = " + factorization_string(factor_integer(Int(196883)))));
    report.cells.push_back(make_cell(
        "21296876 = 2^2*31*41*59*71",
        "21296876 = " + factorization_string(factor_integer(Int(21296876)))));
    finish(report);
    return report;
}

AuditReport kacmoody_ratio_check(const std::vector<DeligneEntry>& entries) {
    AuditReport report;
    report.table = "Kac-Moody ratio";
    for (const auto& e : entries) {
        Rat ratio = Rat(e.d) / e.C - 1;
        std::ostringstream claim, computed;
        claim << e.algebra << ": h_vee = " << e.h_vee;
        computed << e.algebra << ": d/C - 1 = " << to_string(ratio);
        report.cells.push_back(AuditCell{
            claim.str(), computed.str(), ratio == e.h_vee});
    }
    finish(report);
    return report;
}

}  // namespace vir
