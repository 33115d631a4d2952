#include "vir/casimir.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace vir {

Rat descent_coefficient(const Rat& h, int m, int n) {
    if (m < 1) throw std::invalid_argument("descent_coefficient: need m >= 1");
    return (h - 1) * m + n - h;
}

std::string dim_symbol(const Rat& h) {
    if (h == 1) return "d";
    if (h == 2) return "d2";
    if (h == 3) return "d3";
    return "d_" + to_string(h);
}

namespace {

// <w, lambda_h^(n)>, n = level(w), obtained by peeling the first part of
// w through the descent relations down to the level-0 and level-1 base
// cases. The result is (rational in h) x d_h.
Rat descent_rhs_scalar(const Rat& h, const Word& w) {
    int n = word_level(w);
    Rat acc = 1;
    Word cur = w;
    while (!cur.empty()) {
        int m = cur[0];
        acc *= descent_coefficient(h, m, n);
        if (acc == 0) return Rat(0);
        n -= m;
        cur.erase(cur.begin());
        if (n == 1) return Rat(0);  // lambda^(1) = 0
    }
    // <1, lambda^(0)> = (-1)^h d_h (d_h factored out by the caller).
    bool odd = is_integer(h) && (numerator(h) % 2 != 0);
    return odd ? -acc : acc;
}

std::map<std::pair<Rat, int>, CasimirSolution> casimir_cache;
std::mutex casimir_cache_mutex;

CasimirSolution compute_casimir(const Rat& h, int n) {
    CasimirSolution sol;
    sol.weight = h;
    sol.level = n;
    if (h == 3 || n >= 1) sol.assumptions.push_back("lambda1_zero");
    RatFunc dh = RatFunc::var(dim_symbol(h));
    if (n == 0) {
        bool odd = is_integer(h) && (numerator(h) % 2 != 0);
        Word empty;
        sol.vector.terms[empty] = odd ? -dh : dh;
        return sol;
    }
    const GramData& g = gram(n);
    size_t dim = g.basis.size();
    if (dim == 0) return sol;  // levels with no states (n = 1)
    Matrix<RatFunc> a(dim, dim);
    std::vector<RatFunc> rhs(dim);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) a(i, j) = RatFunc(g.entries(i, j));
        rhs[i] = RatFunc(descent_rhs_scalar(h, g.basis[i])) * dh;
    }
    std::vector<RatFunc> x = linear_solve(a, rhs);
    for (size_t i = 0; i < dim; ++i)
        if (!x[i].is_zero()) sol.vector.terms[g.basis[i]] = x[i];
    // Poles: C values where some coefficient denominator vanishes.
    std::vector<Rat> poles;
    for (const auto& [w, c] : sol.vector.terms) {
        if (!c.den().depends_on("C")) continue;
        for (const auto& [f, m] : factor_rational_roots(c.den(), "C").factors) {
            if (f.degree_in("C") != 1) continue;
            auto cs = f.coefficients_in("C");
            poles.push_back(-cs[0].constant_value() / cs[1].constant_value());
        }
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    sol.poles = std::move(poles);
    return sol;
}

}  // namespace

const CasimirSolution& solve_casimir(const Rat& h, int n) {
    std::pair<Rat, int> key{h, n};
    {
        std::lock_guard lock(casimir_cache_mutex);
        auto it = casimir_cache.find(key);
        if (it != casimir_cache.end()) return it->second;
    }
    CasimirSolution sol = compute_casimir(h, n);
    std::lock_guard lock(casimir_cache_mutex);
    return casimir_cache.emplace(std::move(key), std::move(sol)).first->second;
}

// ---------------------------------------------------------------------
// Route 2 (production): Ward-identity recursion on <a, Y(v, y) b> for
// weight-h primaries a, b. For v = L_{-j} w with j >= 2 the correlator
// obeys
//   Phi_v(y) = h * binom(-2, j-2) y^{-j} Phi_w(y) + (-1)^{j-1} y^{1-j} Phi_w'(y),
// with Phi_1(y) = 1; the mode-sum tower terms vanish for j >= 2 because
// positive modes annihilate the primaries. Phi_v(y) = eps * y^{-level}.
// ---------------------------------------------------------------------

namespace {

RatFunc ward_phi(const Word& w, const RatFunc& h) {
    if (w.empty()) return RatFunc(Rat(1));
    int j = w[0];
    if (j < 2)
        throw std::invalid_argument("zero_mode_ward: vacuum words need parts >= 2");
    Word rest(w.begin() + 1, w.end());
    RatFunc phi = ward_phi(rest, h);
    RatFunc y = RatFunc::var("y");
    RatFunc term1 = h * binomial(-2, j - 2) * y.pow(-j) * phi;
    RatFunc term2 = Rat((j % 2 == 0) ? -1 : 1) * y.pow(1 - j) * phi.derivative("y");
    return term1 + term2;
}

}  // namespace

RatFunc zero_mode_ward(const Word& w, const RatFunc& h) {
    RatFunc phi = ward_phi(w, h);
    RatFunc eps = phi * RatFunc::var("y").pow(word_level(w));
    if (eps.depends_on("y"))
        throw std::logic_error("zero_mode_ward: correlator not homogeneous");
    return eps;
}

// ---------------------------------------------------------------------
// Route 1 (cross-check): expand the zero mode of v = L_{-j} w through the
// iterate formula
//   (a_(p) b)_(m) = sum_i (-1)^i binom(p,i)
//                   [ a_(p-i) b_(m+i) - (-1)^p b_(p+m-i) a_(i) ]
// with a = omega, p = 1 - j (so a_(k) = L_{k-1}), acting inside a generic
// weight-h primary Verma module. The central charge C enters through the
// Virasoro relations and must cancel in the final scalar.
// ---------------------------------------------------------------------

namespace {

class ModeProductEngine {
public:
    explicit ModeProductEngine(MultiPoly h)
        : h_(std::move(h)), module_(h_, 1) {}

    // Scalar <b, v_(m) b> component: coefficient of the empty word after
    // applying the mode v_(m) of the vacuum word v to the cyclic vector.
    MultiPoly zero_mode(const Word& v) {
        ModuleEngine::PolyVec start;
        start[Word{}] = MultiPoly::constant(1);
        auto r = state_mode(v, word_level(v) - 1, Word{});
        auto it = r.find(Word{});
        return it == r.end() ? MultiPoly() : it->second;
    }

private:
    MultiPoly h_;
    ModuleEngine module_;
    std::map<std::tuple<Word, int, Word>, ModuleEngine::PolyVec> memo_;
    std::shared_mutex mutex_;

    // v_(m) applied to the module basis word x.
    ModuleEngine::PolyVec state_mode(const Word& v, int m, const Word& x) {
        std::tuple<Word, int, Word> key{v, m, x};
        {
            std::shared_lock lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        ModuleEngine::PolyVec out = state_mode_uncached(v, m, x);
        std::unique_lock lock(mutex_);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    ModuleEngine::PolyVec state_mode(const Word& v, int m,
                                     const ModuleEngine::PolyVec& xs) {
        ModuleEngine::PolyVec out;
        for (const auto& [x, c] : xs) {
            auto r = state_mode(v, m, x);
            for (const auto& [wrd, cc] : r) {
                auto [it, fresh] = out.emplace(wrd, cc * c);
                if (!fresh) {
                    it->second += cc * c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    }

    ModuleEngine::PolyVec state_mode_uncached(const Word& v, int m,
                                              const Word& x) {
        ModuleEngine::PolyVec out;
        if (v.empty()) {
            // Identity state: 1_(m) = delta_{m,-1} id.
            if (m == -1) out[x] = MultiPoly::constant(1);
            return out;
        }
        int j = v[0];
        Word w(v.begin() + 1, v.end());
        int xlev = word_level(x);
        // First sum: L_{-j-i} (w_(m+i) x). w_(q) x lives at weight
        // h + xlev + |w| - q - 1, which is empty below weight h.
        int imax1 = xlev + word_level(w) - 1 - m;
        for (int i = 0; i <= imax1; ++i) {
            Rat coef = binomial(i + j - 2, i);  // = (-1)^i binom(1-j, i)
            if (coef == 0) continue;
            auto inner = state_mode(w, m + i, x);
            if (inner.empty()) continue;
            auto lifted = module_.apply(-j - i, inner);
            for (const auto& [wrd, c] : lifted) {
                auto [it, fresh] = out.emplace(wrd, c * coef);
                if (!fresh) {
                    it->second += c * coef;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        // Second sum: -(-1)^{1-j} w_(1-j+m-i) (L_{i-1} x); L_{i-1} x
        // vanishes for i - 1 > xlev.
        Rat sign = (j % 2 == 0) ? 1 : -1;  // -(-1)^{1-j}
        for (int i = 0; i <= xlev + 1; ++i) {
            Rat coef = binomial(i + j - 2, i) * sign;
            if (coef == 0) continue;
            auto lx = module_.apply(i - 1, x);
            if (lx.empty()) continue;
            auto inner = state_mode(w, 1 - j + m - i, lx);
            for (const auto& [wrd, c] : inner) {
                auto [it, fresh] = out.emplace(wrd, c * coef);
                if (!fresh) {
                    it->second += c * coef;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    }
};

std::map<MultiPoly, ModeProductEngine> mode_engines;
std::mutex mode_engines_mutex;

}  // namespace

RatFunc zero_mode_mode_product(const Word& w, const RatFunc& h) {
    if (!h.is_polynomial())
        throw std::invalid_argument(
            "zero_mode_mode_product: weight must be a number or the symbol h");
    MultiPoly hp = h.num();
    ModeProductEngine* engine;
    {
        std::lock_guard lock(mode_engines_mutex);
        engine = &mode_engines.try_emplace(hp, hp).first->second;
    }
    MultiPoly eps = engine->zero_mode(w);
    if (eps.depends_on("C"))
        throw std::logic_error(
            "zero_mode_mode_product: central charge failed to cancel");
    return RatFunc(eps);
}

ZeroModeValue zero_mode_eigenvalue(const Word& w, const RatFunc& h) {
    ZeroModeValue z;
    z.word = w;
    z.weight = h;
    z.value = zero_mode_ward(w, h);
    return z;
}

RatFunc casimir_zero_mode(const Rat& h, int n) {
    const CasimirSolution& sol = solve_casimir(h, n);
    RatFunc acc;
    for (const auto& [w, c] : sol.vector.terms)
        acc += c * zero_mode_ward(w, RatFunc(h));
    return acc;
}

}  // namespace vir
