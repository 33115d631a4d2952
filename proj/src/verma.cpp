#include "vir/verma.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace vir {

namespace {

void add_scaled(ModuleEngine::PolyVec& acc, const ModuleEngine::PolyVec& v,
                const MultiPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [w, x] : v) {
        auto [it, fresh] = acc.emplace(w, x * c);
        if (!fresh) {
            it->second += x * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

}  // namespace

void VermaVector::prune() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

VermaVector VermaVector::operator+(const VermaVector& o) const {
    VermaVector r = *this;
    for (const auto& [w, c] : o.terms) {
        auto [it, fresh] = r.terms.emplace(w, c);
        if (!fresh) it->second += c;
    }
    r.prune();
    return r;
}

VermaVector VermaVector::operator-(const VermaVector& o) const {
    return *this + o * RatFunc(Rat(-1));
}

VermaVector VermaVector::operator*(const RatFunc& c) const {
    VermaVector r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms) r.terms[w] = x * c;
    r.prune();
    return r;
}

int VermaVector::level() const {
    if (terms.empty()) throw std::logic_error("level of zero vector undefined");
    int n = word_level(terms.begin()->first);
    for (const auto& [w, c] : terms)
        if (word_level(w) != n)
            throw std::logic_error("level of inhomogeneous vector undefined");
    return n;
}

std::string VermaVector::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*";
        if (w.empty()) {
            os << "1";
        } else {
            for (size_t i = 0; i < w.size(); ++i) os << "L(-" << w[i] << ")";
            os << "1";
        }
    }
    return os.str();
}

ModuleEngine::PolyVec ModuleEngine::apply(int m, const Word& w) {
    std::pair<int, Word> key{m, w};
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    PolyVec r = apply_uncached(m, w);
    {
        std::unique_lock lock(mutex_);
        memo_.emplace(std::move(key), r);
    }
    return r;
}

ModuleEngine::PolyVec ModuleEngine::apply(int m, const PolyVec& v) {
    PolyVec out;
    for (const auto& [w, c] : v) add_scaled(out, apply(m, w), c);
    return out;
}

ModuleEngine::PolyVec ModuleEngine::prepend(int n, const PolyVec& v) {
    return apply(-n, v);
}

ModuleEngine::PolyVec ModuleEngine::apply_uncached(int m, const Word& w) {
    PolyVec out;
    if (m <= -min_part_) {
        int n = -m;
        if (w.empty() || n >= w[0]) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(n);
            nw.insert(nw.end(), w.begin(), w.end());
            out[nw] = MultiPoly::constant(1);
            return out;
        }
        // L_{-n} L_{-p} rest = L_{-p} L_{-n} rest + (p - n) L_{-(n+p)} rest
        int p = w[0];
        Word rest(w.begin() + 1, w.end());
        out = prepend(p, apply(-n, rest));
        add_scaled(out, apply(-(n + p), rest), MultiPoly::constant(p - n));
        return out;
    }
    // Raising/weight sector: m > -min_part_.
    if (w.empty()) {
        // L_m acts on the cyclic vector: zero unless m = 0 (weight).
        if (m == 0 && !h_.is_zero()) out[w] = h_;
        return out;
    }
    // L_m L_{-p} rest = L_{-p} L_m rest + (m + p) L_{m-p} rest
    //                 + delta_{m,p} (m^3 - m) C/12 rest
    int p = w[0];
    Word rest(w.begin() + 1, w.end());
    out = prepend(p, apply(m, rest));
    if (m + p != 0)
        add_scaled(out, apply(m - p, rest), MultiPoly::constant(m + p));
    if (m == p && m > 1) {
        MultiPoly central =
            MultiPoly::var("C") * rat(static_cast<long>(m) * m * m - m, 12);
        PolyVec rv;
        rv[rest] = MultiPoly::constant(1);
        add_scaled(out, rv, central);
    }
    return out;
}

MultiPoly ModuleEngine::pairing(const Word& u, const Word& v) {
    if (word_level(u) != word_level(v)) return MultiPoly();
    PolyVec cur;
    cur[v] = MultiPoly::constant(1);
    // <L_{-u0} L_{-u1} ... b, v> = <b, L_{uk} ... L_{u0} v> applied
    // leftmost first.
    for (int p : u) {
        cur = apply(p, cur);
        if (cur.empty()) return MultiPoly();
    }
    auto it = cur.find(Word{});
    return it == cur.end() ? MultiPoly() : it->second;
}

ModuleEngine& vacuum_engine() {
    static ModuleEngine engine{MultiPoly(), 2};
    return engine;
}

std::vector<Word> vacuum_basis(int n) {
    if (n < 0) throw std::invalid_argument("vacuum_basis: negative level");
    std::vector<Word> out;
    Word cur;
    // Descending part lists, parts >= 2.
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 2; --p) {
            if (rem - p == 1) continue;  // cannot finish with a part of 1
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

long vacuum_dim(int n) { return static_cast<long>(vacuum_basis(n).size()); }

VermaVector apply_mode(int m, const VermaVector& v) {
    VermaVector out;
    for (const auto& [w, c] : v.terms) {
        auto pv = vacuum_engine().apply(m, w);
        for (const auto& [nw, x] : pv) {
            auto [it, fresh] = out.terms.emplace(nw, RatFunc(x) * c);
            if (!fresh) it->second += RatFunc(x) * c;
        }
    }
    out.prune();
    return out;
}

RatFunc pairing(const VermaVector& u, const VermaVector& v) {
    RatFunc out;
    for (const auto& [uw, uc] : u.terms)
        for (const auto& [vw, vc] : v.terms) {
            if (word_level(uw) != word_level(vw)) continue;
            MultiPoly p = vacuum_engine().pairing(uw, vw);
            if (!p.is_zero()) out += uc * vc * RatFunc(p);
        }
    return out;
}

namespace {

std::map<int, GramData> gram_cache;
std::mutex gram_cache_mutex;

GramData compute_gram(int n, ModuleEngine& engine, bool parallel) {
    GramData g;
    g.level = n;
    g.basis = vacuum_basis(n);
    size_t dim = g.basis.size();
    g.entries = Matrix<MultiPoly>(dim, dim);
    // Upper triangle as a flat work list; the matrix is symmetric because
    // the pairing is contravariant.
    std::vector<std::pair<size_t, size_t>> cells;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i; j < dim; ++j) cells.emplace_back(i, j);
#ifdef VIR_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < static_cast<long>(cells.size()); ++k) {
            auto [i, j] = cells[k];
            g.entries(i, j) = engine.pairing(g.basis[i], g.basis[j]);
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (auto [i, j] : cells)
            g.entries(i, j) = engine.pairing(g.basis[i], g.basis[j]);
    }
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < i; ++j) g.entries(i, j) = g.entries(j, i);
    return g;
}

}  // namespace

const GramData& gram(int n) {
    {
        std::lock_guard lock(gram_cache_mutex);
        auto it = gram_cache.find(n);
        if (it != gram_cache.end()) return it->second;
    }
    GramData g = compute_gram(n, vacuum_engine(), true);
    std::lock_guard lock(gram_cache_mutex);
    return gram_cache.emplace(n, std::move(g)).first->second;
}

GramData gram_serial(int n) {
    // Independent engine: no shared memo with the parallel path.
    ModuleEngine engine{MultiPoly(), 2};
    return compute_gram(n, engine, false);
}

MultiPoly kac_det(int n) { return determinant(gram(n).entries); }

Factorization kac_det_factored(int n) {
    return factor_rational_roots(kac_det(n), "C");
}

std::vector<Rat> singular_charges(int n) {
    std::vector<Rat> roots;
    for (const auto& [f, m] : kac_det_factored(n).factors) {
        if (f.degree_in("C") != 1) continue;
        auto cs = f.coefficients_in("C");
        Rat a = cs[1].constant_value();
        Rat b = cs.size() > 1 && !cs[0].is_zero() ? cs[0].constant_value() : Rat(0);
        roots.push_back(-b / a);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace vir
