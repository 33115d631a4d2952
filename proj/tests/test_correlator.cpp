#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "vir/correlator.hpp"

using namespace vir;

namespace {

const RatFunc Cf = RatFunc::var("C");
const RatFunc one{Rat(1)};

RatFunc lin(long a, long b) {  // aC + b
    return Cf * Rat(a) + RatFunc(Rat(b));
}

RatFunc d1_expected() {  // C(5C+22)/(10-C)
    return Cf * lin(5, 22) / lin(-1, 10);
}

RatFunc d2_expected() {  // (5C+22)(2C-1)(7C+68) / (2(C^2-55C+748))
    return lin(5, 22) * lin(2, -1) * lin(7, 68) /
           ((Cf * Cf - Cf * Rat(55) + RatFunc(Rat(748))) * Rat(2));
}

RatFunc d3_expected() {  // p(C)/q(C)
    RatFunc p = Cf * Rat(5) * lin(5, 22) * lin(2, -1) * lin(7, 68) *
                lin(3, 46) * lin(5, 3) * lin(11, 232);
    RatFunc q = Cf.pow(6) * Rat(75) - Cf.pow(5) * Rat(9945) +
                Cf.pow(4) * Rat(472404) - Cf.pow(3) * Rat(9055068) +
                Cf.pow(2) * Rat(39649632) + Cf * Rat(438468672) +
                RatFunc(Rat(2976768));
    return p / q;
}

Rat eval_c(const RatFunc& f, const Rat& c) {
    return f.eval_at("C", c).constant_value();
}

}  // namespace

TEST_CASE("mode side data") {
    CHECK(mode_side_data(1) == std::vector<std::pair<int, Rat>>{{0, Rat(-1)}});
    CHECK(mode_side_data(2) ==
          std::vector<std::pair<int, Rat>>{{0, Rat(1)}, {1, Rat(0)}});
    CHECK(mode_side_data(3) ==
          std::vector<std::pair<int, Rat>>{{0, Rat(-1)}, {1, Rat(0)}});
    CHECK_THROWS_AS(mode_side_data(4), UnsupportedWeight);
}

TEST_CASE("casimir-side expansion of pure (x-y)^4 at h=1") {
    GAnsatz g;
    g.weight = 1;
    g.coeffs = {RatFunc(), RatFunc(), one};  // G = (x-y)^4
    // F y^2 = (x-y)^2/x^2 = t^2/(1+t)^2 = t^2 - 2t^3 + 3t^4 - ...
    LaurentSeries s = expansion_casimir_side(g, 4);
    CHECK(s.coeff(-2).is_zero());      // c_0
    CHECK(s.coeff(-1).is_zero());      // c_1
    CHECK(s.coeff(0).is_zero());       // c_2
    CHECK(s.coeff(1).is_zero());       // c_3
    CHECK(s.coeff(2) == one);          // c_4
}

TEST_CASE("mode-side expansion of pure (xy)^2 at h=1") {
    GAnsatz g;
    g.weight = 1;
    g.coeffs = {one, RatFunc(), RatFunc()};  // G = (xy)^2
    LaurentSeries s = expansion_mode_side(g, 3);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2) == one);
}

TEST_CASE("mode-side leading coefficients e0 = g_{2h}, e1 = 2h g_{2h} - g_{2h-1}") {
    GAnsatz g = GAnsatz::symbolic(2);
    LaurentSeries s = expansion_mode_side(g, 1);
    CHECK(s.coeff(0) == RatFunc::var("g4"));
    CHECK(s.coeff(1) ==
          RatFunc::var("g4") * Rat(4) - RatFunc::var("g3"));
}

TEST_CASE("h=1 dictionary (g0, g1, g2) = (-d, K-2, -1)") {
    GAnsatz g = solved_g(1);
    RatFunc d = RatFunc::var("d");
    CHECK(g.coeffs[0] == -d);
    CHECK(g.coeffs[1] == -(d * Rat(2)) / Cf);  // K - 2 with K = -2(d/C - 1)
    CHECK(g.coeffs[2] == RatFunc(Rat(-1)));
}

TEST_CASE("killing form") {
    DerivedForm k = derive_killing();
    RatFunc d = RatFunc::var("d");
    CHECK(k.value == (one - d / Cf) * Rat(2));  // -2(d/C - 1)
    CHECK(eval_c(k.value.substitute("d", RatFunc(Rat(248))), rat(8)) == rat(-60));
    CHECK(k.value.substitute("d", Cf).is_zero());  // degenerate at d = C
}

TEST_CASE("dimension formula d(C)") {
    DerivedForm d = derive_dimension(1);
    CHECK(d.value == d1_expected());
}

TEST_CASE("deligne evaluations of d(C)") {
    RatFunc d = derive_dimension(1).value;
    std::vector<std::pair<Rat, Rat>> table = {
        {rat(1), rat(3)},      {rat(2), rat(8)},   {rat(14, 5), rat(14)},
        {rat(4), rat(28)},     {rat(26, 5), rat(52)}, {rat(6), rat(78)},
        {rat(7), rat(133)},    {rat(8), rat(248)}};
    for (const auto& [c, dim] : table) CHECK(eval_c(d, c) == dim);
}

TEST_CASE("dimension formula d2(C)") {
    DerivedForm d = derive_dimension(2);
    CHECK(d.value == d2_expected());
    CHECK(eval_c(d.value, rat(24)) == rat(196883));
    CHECK(eval_c(d.value, rat(47, 2)) == rat(96255));
    CHECK(eval_c(d.value, rat(8)) == rat(155));
}

TEST_CASE("dimension formula d3(C)") {
    DerivedForm d = derive_dimension(3);
    CHECK(d.value == d3_expected());
    CHECK(eval_c(d.value, rat(24)) == rat(21296876));
}

TEST_CASE("dimension numerator roots lie in the singular charge set") {
    std::map<int, int> det_level{{1, 4}, {2, 6}, {3, 10}};
    for (int h = 1; h <= 3; ++h) {
        RatFunc d = derive_dimension(h).value;
        auto charges = singular_charges(det_level[h]);
        for (const auto& [f, m] :
             factor_rational_roots(d.num(), "C").factors) {
            if (f.degree_in("C") != 1) continue;
            auto cs = f.coefficients_in("C");
            Rat root = -cs[0].constant_value() / cs[1].constant_value();
            CHECK(std::find(charges.begin(), charges.end(), root) !=
                  charges.end());
        }
    }
}

TEST_CASE("explicit G polynomial at h=2") {
    GAnsatz g = derive_g_polynomial().ansatz;
    RatFunc d2 = RatFunc::var("d2");
    REQUIRE(g.coeffs.size() == 5);
    CHECK(g.coeffs[0] == d2);
    CHECK(g.coeffs[1] == d2 * Rat(8) / Cf);
    CHECK(g.coeffs[2] == d2 * Rat(4) * lin(-1, 44) / (Cf * lin(5, 22)));
    CHECK(g.coeffs[3] == RatFunc(Rat(4)));
    CHECK(g.coeffs[4] == one);
    // Conversion of the displayed spanning set: the last two terms
    // 2(x^2+y^2)(x-y)^6 - (x-y)^8 equal 4xy(x-y)^6 + (x-y)^8.
    MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
    MultiPoly displayed = (x.pow(2) + y.pow(2)) * (x - y).pow(6) * 2 -
                          (x - y).pow(8);
    MultiPoly canonical = x * y * (x - y).pow(6) * 4 + (x - y).pow(8);
    CHECK(displayed == canonical);
    // C = 24 is pole-free for every coefficient.
    for (const auto& c : g.coeffs) CHECK_NOTHROW(c.eval_at("C", rat(24)));
}

TEST_CASE("solved G is symmetric in x and y") {
    for (int h : {1, 2}) {
        GAnsatz g = solved_g(h);
        RatFunc x = RatFunc::var("x"), y = RatFunc::var("y");
        RatFunc G;
        for (int j = 0; j <= 2 * h; ++j)
            G += g.coeffs[j] * (x * y).pow(2 * h - j) * (x - y).pow(2 * j);
        RatFunc swapped = G.substitute("x", RatFunc::var("u"))
                              .substitute("y", x)
                              .substitute("u", y);
        CHECK(G == swapped);
    }
}

TEST_CASE("reconstruction round trip") {
    for (int h : {1, 2}) {
        GAnsatz g = solved_g(h);
        int glev = h == 1 ? 2 : 4;
        LaurentSeries cas = expansion_casimir_side(g, glev);
        for (int n = 0; n <= glev; ++n)
            CHECK(cas.coeff(n - 2 * h) == casimir_zero_mode(Rat(h), n));
        LaurentSeries mode = expansion_mode_side(g, 1);
        for (const auto& [m, val] : mode_side_data(h))
            CHECK(mode.coeff(m) == RatFunc(val));
    }
}

TEST_CASE("level-5 casimir matching gives no constraint beyond d(C)") {
    // The first level past the h=1 determining set reproduces d(C): after
    // substituting d = d(C) the constraint is identically zero.
    CHECK(constraint_charges(1, 5).empty());
}

TEST_CASE("level-6 constraint intersected with the Deligne list") {
    MultiPoly con = consistency_constraint(1, 6);
    RatFunc d = derive_dimension(1).value;
    std::vector<Rat> deligne = {rat(1),     rat(2), rat(14, 5), rat(4),
                                rat(26, 5), rat(6), rat(7),     rat(8)};
    std::vector<Rat> survivors;
    for (const Rat& c : deligne) {
        Rat dv = eval_c(d, c);
        Rat v = RatFunc(con).eval_at("d", dv).eval_at("C", c).constant_value();
        if (v == 0) survivors.push_back(c);
    }
    CHECK(survivors == std::vector<Rat>{rat(1), rat(8)});
}

TEST_CASE("h=2 constraints at levels 7..10 single out C=24") {
    // Level 7 carries no information beyond d2(C): the constraint reduces
    // to zero identically, like level 5 at h = 1.
    MultiPoly con7 = consistency_constraint(2, 7);
    CHECK(!con7.is_zero());
    CHECK(RatFunc(con7).substitute("d2", d2_expected()).is_zero());
    CHECK(constraint_charges(2, 7).empty());
    // Levels 8-10 each keep C = 24; their intersection is {1/2, 24}, and
    // C = 1/2 is the degenerate charge with d2 = 0 (no weight-2 primaries).
    CHECK(constraint_charges(2, 8) ==
          std::vector<Rat>{rat(1, 2), rat(24), rat(142, 5)});
    std::vector<Rat> common = constraint_charges(2, 8);
    for (int level = 9; level <= 10; ++level) {
        auto roots = constraint_charges(2, level);
        CHECK(std::find(roots.begin(), roots.end(), rat(24)) != roots.end());
        std::vector<Rat> next;
        for (const Rat& r : common)
            if (std::find(roots.begin(), roots.end(), r) != roots.end())
                next.push_back(r);
        common = next;
    }
    CHECK(common == std::vector<Rat>{rat(1, 2), rat(24)});
    // Rational d2 > 0 at the surviving charges: only C = 24 remains.
    CHECK(eval_c(d2_expected(), rat(1, 2)) == 0);
    CHECK(eval_c(d2_expected(), rat(24)) == rat(196883));
}

TEST_CASE("h=2 levels 11 and 12 rule out the remaining solution") {
    bool survives_11_12 = true;
    for (int level : {11, 12}) {
        MultiPoly con = consistency_constraint(2, level);
        Rat v = RatFunc(con)
                    .eval_at("d2", rat(196883))
                    .eval_at("C", rat(24))
                    .constant_value();
        if (v != 0) survives_11_12 = false;
    }
    CHECK(!survives_11_12);
}

TEST_CASE("trace form") {
    DerivedForm t = derive_trace_form();
    RatFunc d2 = RatFunc::var("d2");
    CHECK(t.value == (d2 + one) * Rat(8) / Cf);
    CHECK(eval_c(t.value.substitute("d2", RatFunc(Rat(196883))), rat(24)) ==
          rat(65628));
    CHECK(eval_c(t.value.substitute("d2", RatFunc(Rat(155))), rat(8)) ==
          rat(156));
}

TEST_CASE("assemble_system provenance and linearity") {
    ConstraintSystem sys = assemble_system(1, 4);
    REQUIRE(sys.unknowns ==
            std::vector<std::string>{"g0", "g1", "g2", "d"});
    REQUIRE(sys.equations.size() == 6);  // levels 0..4 plus mode order 0
    CHECK(sys.equations[0].provenance == "casimir-side level 0");
    CHECK(sys.equations[5].provenance == "mode-side order 0");
    for (const auto& eq : sys.equations)
        for (const auto& [name, coef] : eq.lhs) {
            CHECK(!coef.depends_on("d"));
            CHECK(!coef.depends_on("g0"));
        }
}
