#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vir/verma.hpp"

using namespace vir;

namespace {

std::mt19937 rng(4871);

const MultiPoly C = MultiPoly::var("C");

MultiPoly det_expected(int n) {
    MultiPoly f1 = C * 5 + MultiPoly::constant(22);
    MultiPoly f2 = C * 2 - MultiPoly::constant(1);
    MultiPoly f3 = C * 7 + MultiPoly::constant(68);
    MultiPoly f4 = C * 3 + MultiPoly::constant(46);
    MultiPoly f5 = C * 5 + MultiPoly::constant(3);
    MultiPoly f6 = C * 11 + MultiPoly::constant(232);
    switch (n) {
        case 0: return MultiPoly::constant(1);
        case 2: return C * rat(1, 2);
        case 4: return C.pow(2) * f1 * rat(1, 2);
        case 6: return C.pow(4) * f1.pow(2) * f2 * f3 * rat(3, 4);
        case 8: return C.pow(7) * f1.pow(4) * f2.pow(2) * f3.pow(2) * f4 * f5 * 3;
        case 10:
            return C.pow(12) * f1.pow(8) * f2.pow(5) * f3.pow(4) * f4.pow(2) *
                   f5.pow(2) * f6 * rat(225, 2);
        default: throw std::logic_error("no reference determinant");
    }
}

VermaVector random_vector(int level) {
    auto basis = vacuum_basis(level);
    std::uniform_int_distribution<int> coeff(-5, 5);
    VermaVector v;
    for (const auto& w : basis) {
        int c = coeff(rng);
        if (c != 0) v.terms[w] = RatFunc(Rat(c));
    }
    v.prune();
    return v;
}

}  // namespace

TEST_CASE("vacuum basis dimensions and ordering") {
    CHECK(vacuum_dim(0) == 1);
    CHECK(vacuum_dim(1) == 0);
    CHECK(vacuum_dim(2) == 1);
    CHECK(vacuum_dim(3) == 1);
    CHECK(vacuum_dim(4) == 2);
    CHECK(vacuum_dim(6) == 4);
    CHECK(vacuum_dim(8) == 7);
    CHECK(vacuum_dim(10) == 12);
    auto b4 = vacuum_basis(4);
    CHECK(b4 == std::vector<Word>{{2, 2}, {4}});
    auto b6 = vacuum_basis(6);
    CHECK(b6 == std::vector<Word>{{2, 2, 2}, {3, 3}, {4, 2}, {6}});
    for (const auto& w : vacuum_basis(9)) {
        CHECK(word_level(w) == 9);
        for (size_t i = 0; i < w.size(); ++i) {
            CHECK(w[i] >= 2);
            if (i) CHECK(w[i - 1] >= w[i]);
        }
    }
}

TEST_CASE("mode action annihilates the vacuum appropriately") {
    VermaVector vac{Word{}};
    for (int m = -1; m <= 3; ++m) CHECK(apply_mode(m, vac).is_zero());
    VermaVector v = apply_mode(-2, vac);
    REQUIRE(v.terms.size() == 1);
    CHECK(v.terms.count(Word{2}) == 1);
    // L_0 measures the level.
    for (int n : {2, 3, 4, 5}) {
        for (const auto& w : vacuum_basis(n)) {
            VermaVector x{w};
            CHECK(apply_mode(0, x) == x * RatFunc(Rat(n)));
        }
    }
}

TEST_CASE("normal ordering yields descending words with parts >= 2") {
    VermaVector v{Word{}};
    for (int m : {-2, -3, -2, -5, -2}) v = apply_mode(m, v);
    CHECK(!v.is_zero());
    for (const auto& [w, c] : v.terms) {
        CHECK(word_level(w) == 14);
        for (size_t i = 0; i < w.size(); ++i) {
            CHECK(w[i] >= 2);
            if (i) CHECK(w[i - 1] >= w[i]);
        }
    }
}

TEST_CASE("virasoro bracket self-consistency on random vectors") {
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> mode(-4, 4);
        int m = mode(rng), n = mode(rng);
        std::uniform_int_distribution<int> lev(2, 7);
        VermaVector v = random_vector(lev(rng));
        if (v.is_zero()) continue;
        VermaVector lhs =
            apply_mode(m, apply_mode(n, v)) - apply_mode(n, apply_mode(m, v));
        VermaVector rhs = apply_mode(m + n, v) * RatFunc(Rat(m - n));
        if (m == -n) {
            long mm = m;
            RatFunc central = RatFunc(C) * rat(mm * mm * mm - mm, 12);
            rhs = rhs + v * central;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pairing adjointness <L_{-n} u, v> = <u, L_n v>") {
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> nd(2, 4), lev(2, 6);
        int n = nd(rng);
        int l = lev(rng);
        VermaVector u = random_vector(l);
        VermaVector v = random_vector(l + n);
        CHECK(pairing(apply_mode(-n, u), v) == pairing(u, apply_mode(n, v)));
    }
}

TEST_CASE("level-2 and level-4 gram matrices") {
    const GramData& g2 = gram(2);
    REQUIRE(g2.basis == std::vector<Word>{{2}});
    CHECK(g2.entries(0, 0) == C * rat(1, 2));
    const GramData& g4 = gram(4);
    REQUIRE(g4.basis == std::vector<Word>{{2, 2}, {4}});
    CHECK(g4.entries(0, 0) == C.pow(2) * rat(1, 2) + C * 4);
    CHECK(g4.entries(0, 1) == C * 3);
    CHECK(g4.entries(1, 0) == C * 3);
    CHECK(g4.entries(1, 1) == C * 5);
}

TEST_CASE("kac determinants match reference closed forms") {
    for (int n : {0, 2, 4, 6, 8, 10}) CHECK(kac_det(n) == det_expected(n));
}

TEST_CASE("kac determinant factorization round trip") {
    for (int n : {4, 6, 8}) {
        Factorization f = kac_det_factored(n);
        CHECK(f.expand() == kac_det(n));
        for (const auto& [fac, m] : f.factors) CHECK(fac.degree_in("C") == 1);
    }
}

TEST_CASE("singular charges at level 6") {
    auto roots = singular_charges(6);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == rat(-68, 7));
    CHECK(roots[1] == rat(-22, 5));
    CHECK(roots[2] == rat(0));
    CHECK(roots[3] == rat(1, 2));
}

TEST_CASE("gram symmetry through level 12") {
    for (int n = 2; n <= 12; ++n) {
        const GramData& g = gram(n);
        for (size_t i = 0; i < g.basis.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                CHECK(g.entries(i, j) == g.entries(j, i));
    }
}

TEST_CASE("parallel gram equals serial reference") {
    for (int n : {4, 6, 8, 10}) {
        GramData s = gram_serial(n);
        const GramData& p = gram(n);
        CHECK(s.basis == p.basis);
        CHECK(s.entries == p.entries);
    }
}

TEST_CASE("pairing vanishes across levels") {
    CHECK(vacuum_engine().pairing(Word{2}, Word{3}).is_zero());
    CHECK(vacuum_engine().pairing(Word{2, 2}, Word{3, 3}) ==
          vacuum_engine().pairing(Word{3, 3}, Word{2, 2}));
}

TEST_CASE("symbolic-weight primary module engine") {
    ModuleEngine prim{MultiPoly::var("h"), 1};
    // <L_{-1} b, L_{-1} b> = 2h.
    CHECK(prim.pairing(Word{1}, Word{1}) == MultiPoly::var("h") * 2);
    // <L_{-2} b, L_{-2} b> = 4h + C/2.
    CHECK(prim.pairing(Word{2}, Word{2}) ==
          MultiPoly::var("h") * 4 + C * rat(1, 2));
    // L_0 eigenvalue is h + level.
    auto r = prim.apply(0, Word{2, 1});
    REQUIRE(r.size() == 1);
    CHECK(r[Word{2, 1}] == MultiPoly::var("h") + MultiPoly::constant(3));
}
