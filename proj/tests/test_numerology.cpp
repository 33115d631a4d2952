#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "vir/numerology.hpp"

using namespace vir;

TEST_CASE("group order literals round-trip their prime factorizations") {
    const auto& groups = group_facts();
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].name == "Monster");
    CHECK(groups[0].order ==
          Int("808017424794512875886459904961710757005754368000000000"));
    CHECK(groups[1].name == "Baby Monster");
    CHECK(groups[1].order == Int("4154781481226426191177580544000000"));
    CHECK(groups[2].name == "O10+(2)");
    CHECK(groups[2].order == Int("23499295948800"));
    for (const auto& g : groups) {
        Int prod = 1;
        for (const auto& [p, e] : g.order_factorization)
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == g.order);
    }
    CHECK(group_by_name("Monster").divides_order(71));
    CHECK(!group_by_name("Baby Monster").divides_order(71));
    CHECK(group_by_name("Monster").notable_dims ==
          std::vector<Int>{Int(196883), Int(21296876)});
    CHECK_THROWS_AS(group_by_name("nope"), std::invalid_argument);
}

TEST_CASE("Deligne table entries and closed forms") {
    auto table = deligne_table();
    REQUIRE(table.size() == 8);
    std::vector<std::string> names = {"A1", "A2", "G2", "D4",
                                      "F4", "E6", "E7", "E8"};
    std::vector<long> hv = {2, 3, 4, 6, 9, 12, 18, 30};
    std::vector<long> dim = {3, 8, 14, 28, 52, 78, 133, 248};
    std::vector<Rat> charges = {Rat(1),      Rat(2), rat(14, 5), Rat(4),
                                rat(26, 5), Rat(6), Rat(7),     Rat(8)};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(table[i].algebra == names[i]);
        CHECK(table[i].h_vee == hv[i]);
        CHECK(table[i].d == dim[i]);
        CHECK(table[i].C == charges[i]);
        CHECK(d1_closed_form(table[i].C) == dim[i]);
        CHECK(hvee_closed_form(table[i].C) == hv[i]);
    }
    CHECK(hvee_closed_form(Rat(7)) == 18);  // E7 via 6(2+C)/(10-C)
}

TEST_CASE("d2 closed form at the named charges") {
    CHECK(d2_closed_form(Rat(24)) == 196883);
    CHECK(d2_closed_form(rat(47, 2)) == 96255);
    CHECK(d2_closed_form(Rat(8)) == 155);
    CHECK(d2_closed_form(rat(1, 2)) == 0);
}

TEST_CASE("enumerate_integral_d1: the 21 positive-integer-dimension charges") {
    EnumerationResult r = enumerate_integral_d1();
    CHECK(r.weight == 1);
    CHECK(r.solutions.size() == 21);
    CHECK(r.flagged.empty());
    CHECK(std::is_sorted(r.solutions.begin(), r.solutions.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; }));
    for (const auto& [C, d] : r.solutions) {
        CHECK(C > 0);
        CHECK(d > 0);
        CHECK(d1_closed_form(C) == Rat(d));
        Int den = C.get_den();
        CHECK((den == 1 || den == 5));
    }
    // All eight Deligne values are among the 21.
    for (const auto& e : deligne_table()) {
        auto it = std::find_if(r.solutions.begin(), r.solutions.end(),
                               [&](const auto& s) { return s.first == e.C; });
        REQUIRE(it != r.solutions.end());
        CHECK(it->second == e.d);
    }
    CHECK(r.method_audit.at("count") == "21");
}

TEST_CASE("enumerate_integral_d1 agrees with the brute-force denominator scan") {
    EnumerationResult r = enumerate_integral_d1();
    std::vector<Rat> scanned = brute_force_d1_scan(10000);
    std::vector<Rat> listed;
    for (const auto& [C, d] : r.solutions) listed.push_back(C);
    CHECK(scanned == listed);
    // Serial reference agrees with the parallel scan on a smaller window.
    CHECK(brute_force_d1_scan(500, false) == brute_force_d1_scan(500, true));
}

TEST_CASE("enumerate_integral_d2: 36 positive solutions, nonpositive flagged") {
    EnumerationResult r = enumerate_integral_d2();
    CHECK(r.weight == 2);
    CHECK(r.solutions.size() == 36);
    for (const auto& [C, d2] : r.solutions) {
        CHECK(C > 0);
        CHECK(d2 > 0);
        CHECK(d2_closed_form(C) == Rat(d2));
        CHECK((Int(70) % C.get_den() == 0));
    }
    for (const auto& [C, d2] : r.flagged) {
        CHECK(C > 0);
        CHECK(d2 <= 0);
        CHECK(d2_closed_form(C) == Rat(d2));
    }
    auto has = [&](const Rat& C, long d2) {
        auto it = std::find_if(r.solutions.begin(), r.solutions.end(),
                               [&](const auto& s) { return s.first == C; });
        return it != r.solutions.end() && it->second == d2;
    };
    CHECK(has(Rat(24), 196883));
    CHECK(has(rat(47, 2), 96255));
    CHECK(has(Rat(8), 155));
    // C = 1/2 is integral but d2 = 0: flagged, not counted.
    auto half = std::find_if(r.flagged.begin(), r.flagged.end(),
                             [](const auto& s) { return s.first == rat(1, 2); });
    REQUIRE(half != r.flagged.end());
    CHECK(half->second == 0);
    // The method audit records the completeness certificate.
    CHECK(r.method_audit.count("denominator_bound") == 1);
    CHECK(r.method_audit.count("windows") == 1);
    CHECK(r.method_audit.at("count_positive") == "36");
}

TEST_CASE("prime divisor audits for Tables 1-4") {
    for (int t = 1; t <= 4; ++t) {
        AuditReport r = prime_divisor_audit(t);
        CHECK(r.pass);
        CHECK(!r.cells.empty());
        for (const auto& c : r.cells) {
            INFO(r.table, ": ", c.claim, " vs ", c.computed);
            CHECK(c.pass);
        }
    }
    AuditReport t2 = prime_divisor_audit(2);
    bool found = false;
    for (const auto& c : t2.cells)
        if (c.claim == "11*C + 232 = 2^4*31") found = c.pass;
    CHECK(found);
    // Table 2 checks all seven independent factors of det M^(10).
    int factor_cells = 0;
    for (const auto& c : t2.cells)
        if (c.claim.find(" = ") != std::string::npos &&
            c.claim.find("|") == std::string::npos &&
            c.claim.find("factors") == std::string::npos)
            ++factor_cells;
    CHECK(factor_cells == 7);
    CHECK_THROWS_AS(prime_divisor_audit(5), std::invalid_argument);
}

TEST_CASE("Kac-Moody ratio h_vee = d/C - 1 across the Deligne series") {
    AuditReport r = kacmoody_ratio_check(deligne_table());
    CHECK(r.pass);
    CHECK(r.cells.size() == 8);
    // A deliberately wrong entry is caught.
    auto bad = deligne_table();
    bad[0].h_vee = 3;
    CHECK(!kacmoody_ratio_check(bad).pass);
}

TEST_CASE("Moonshine dimension check") {
    AuditReport r = moonshine_dimension_check();
    CHECK(r.pass);
    for (const auto& c : r.cells) {
        INFO(c.claim, " vs ", c.computed);
        CHECK(c.pass);
    }
}
