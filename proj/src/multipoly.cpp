#include "vir/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vir {

bool GrlexLess::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    // Drop variables whose exponent is zero in every term.
    std::vector<size_t> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool any = false;
        for (const auto& [e, c] : terms_)
            if (e[i] != 0) {
                any = true;
                break;
            }
        if (any) used.push_back(i);
    }
    if (used.size() == vars_.size()) return;
    std::vector<std::string> nv;
    nv.reserve(used.size());
    for (size_t i : used) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exps ne(used.size());
        for (size_t k = 0; k < used.size(); ++k) ne[k] = e[used[k]];
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly MultiPoly::make(std::vector<std::string> vars, TermMap terms) {
    MultiPoly p;
    // Sort variables and remap exponents if needed.
    std::vector<size_t> order(vars.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return vars[a] < vars[b]; });
    bool sorted = true;
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] != i) sorted = false;
    if (sorted) {
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
    } else {
        p.vars_.reserve(vars.size());
        for (size_t i : order) p.vars_.push_back(vars[i]);
        for (const auto& [e, c] : terms) {
            Exps ne(order.size());
            for (size_t k = 0; k < order.size(); ++k) ne[k] = e[order[k]];
            auto [it, fresh] = p.terms_.emplace(std::move(ne), c);
            if (!fresh) it->second += c;
        }
    }
    p.normalize();
    return p;
}

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

MultiPoly MultiPoly::var(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = 1;
    return p;
}

Rat MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value: not constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;  // grlex-largest term
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int MultiPoly::degree_in(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return 0;
    size_t idx = it - vars_.begin();
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

// Merges variable lists of a and b and remaps both term maps onto the
// merged exponent layout.
void unify(const MultiPoly& a, const MultiPoly& b,
           std::vector<std::string>& vars, MultiPoly::TermMap& ta,
           MultiPoly::TermMap& tb) {
    vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                   b.vars_.end(), std::back_inserter(vars));
    auto remap = [&](const MultiPoly& p, MultiPoly::TermMap& out) {
        std::vector<size_t> pos(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i)
            pos[i] = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) -
                     vars.begin();
        for (const auto& [e, c] : p.terms_) {
            MultiPoly::Exps ne(vars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            out[std::move(ne)] = c;
        }
    };
    remap(a, ta);
    remap(b, tb);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    std::vector<std::string> vars;
    TermMap ta, tb;
    unify(*this, o, vars, ta, tb);
    for (const auto& [e, c] : tb) {
        auto [it, fresh] = ta.emplace(e, c);
        if (!fresh) it->second += c;
    }
    return make(std::move(vars), std::move(ta));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return MultiPoly();
    std::vector<std::string> vars;
    TermMap ta, tb;
    unify(*this, o, vars, ta, tb);
    TermMap prod;
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) {
            Exps e(vars.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = prod.emplace(std::move(e), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    return make(std::move(vars), std::move(prod));
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (c == 0) return MultiPoly();
    MultiPoly p(*this);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (vars_ != o.vars_) return vars_ < o.vars_;
    auto ia = terms_.begin(), ib = o.terms_.begin();
    GrlexLess less;
    for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == terms_.end() && ib != o.terms_.end();
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r = constant(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return MultiPoly();
    size_t idx = it - vars_.begin();
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exps ne = e;
        ne[idx] -= 1;
        nt[ne] = c * e[idx];
    }
    return make(vars_, std::move(nt));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
    int d = degree_in(name);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        out[0] = *this;
        return out;
    }
    size_t idx = it - vars_.begin();
    std::vector<TermMap> maps(out.size());
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        int k = ne[idx];
        ne[idx] = 0;
        maps[k][ne] = c;
    }
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = make(vars_, std::move(maps[k]));
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rat& value) const {
    return substitute(name, constant(value));
}

MultiPoly MultiPoly::substitute(const std::string& name,
                                const MultiPoly& value) const {
    if (!depends_on(name)) return *this;
    auto coeffs = coefficients_in(name);
    MultiPoly r;  // Horner evaluation
    for (size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
    return r;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& assignment) const {
    MultiPoly p = *this;
    for (const auto& name : vars_) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw std::invalid_argument("eval: missing variable " + name);
        p = p.substitute(name, it->second);
    }
    if (!p.is_constant()) throw std::logic_error("eval: unresolved variables");
    return p.constant_value();
}

Rat MultiPoly::leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
}

Rat MultiPoly::content() const {
    std::vector<Rat> cs;
    cs.reserve(terms_.size());
    for (const auto& [e, c] : terms_) cs.push_back(c);
    Rat g = rat_gcd(cs);
    if (g != 0 && leading_coeff() < 0) g = -g;
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    Rat c = content();
    if (c == 0) return MultiPoly();
    return *this * (Rat(1) / c);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::vector<std::string> parts;
        bool has_var = false;
        for (size_t i = 0; i < vars_.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            has_var = true;
            parts.push_back(e == 1 ? vars_[i]
                                   : vars_[i] + "^" + std::to_string(e));
        }
        if (!has_var) {
            os << vir::to_string(c);
        } else {
            if (c != 1) os << vir::to_string(c) << "*";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return MultiPoly();
    std::vector<std::string> vars;
    MultiPoly::TermMap ta, tb;
    unify(a, b, vars, ta, tb);
    MultiPoly rem = MultiPoly::make(vars, std::move(ta));
    MultiPoly div = MultiPoly::make(vars, std::move(tb));
    // Re-pad onto the unified variable layout.
    const auto& uvars = vars;
    auto pad = [&](const MultiPoly& p) {
        MultiPoly::TermMap t;
        std::vector<size_t> pos(p.vars().size());
        for (size_t i = 0; i < p.vars().size(); ++i)
            pos[i] = std::lower_bound(uvars.begin(), uvars.end(), p.vars()[i]) -
                     uvars.begin();
        for (const auto& [e, c] : p.terms()) {
            MultiPoly::Exps ne(uvars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            t[std::move(ne)] = c;
        }
        return t;
    };
    MultiPoly::TermMap rt = pad(rem), dt = pad(div);
    if (dt.empty()) return std::nullopt;
    const auto& lt_e = dt.rbegin()->first;
    const Rat& lt_c = dt.rbegin()->second;
    MultiPoly::TermMap qt;
    // Leading-term reduction; exact division succeeds iff remainder
    // reaches zero without a failed monomial division.
    while (!rt.empty()) {
        const auto& re = rt.rbegin()->first;
        MultiPoly::Exps qe(uvars.size());
        for (size_t i = 0; i < uvars.size(); ++i) {
            qe[i] = re[i] - lt_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rat qc = rt.rbegin()->second / lt_c;
        qt[qe] = qc;
        for (const auto& [e, c] : dt) {
            MultiPoly::Exps ne(uvars.size());
            for (size_t i = 0; i < uvars.size(); ++i) ne[i] = qe[i] + e[i];
            auto [it, fresh] = rt.emplace(std::move(ne), -qc * c);
            if (!fresh) {
                it->second -= qc * c;
                if (it->second == 0) rt.erase(it);
            } else if (it->second == 0) {
                rt.erase(it);
            }
        }
    }
    return MultiPoly::make(uvars, std::move(qt));
}

namespace {

// Pseudo-remainder of a by b viewed as polynomials in `name`.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, const std::string& name) {
    int db = b.degree_in(name);
    MultiPoly lb = b.coefficients_in(name)[db];
    MultiPoly x = MultiPoly::var(name);
    while (!a.is_zero() && a.degree_in(name) >= db) {
        int da = a.degree_in(name);
        MultiPoly la = a.coefficients_in(name)[da];
        a = a * lb - b * la * x.pow(da - db);
    }
    return a;
}

// Largest monomial dividing every term of p, as a (var -> exponent) map.
std::map<std::string, int> common_monomial(const MultiPoly& p) {
    std::map<std::string, int> m;
    const auto& vars = p.vars();
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            for (size_t i = 0; i < vars.size(); ++i)
                if (e[i] > 0) m[vars[i]] = e[i];
            first = false;
        } else {
            for (auto it = m.begin(); it != m.end();) {
                size_t i = std::lower_bound(vars.begin(), vars.end(), it->first) - vars.begin();
                it->second = std::min(it->second, e[i]);
                if (it->second == 0) it = m.erase(it); else ++it;
            }
        }
        if (m.empty()) break;
    }
    return m;
}

MultiPoly monomial_of(const std::map<std::string, int>& m) {
    MultiPoly p = MultiPoly::constant(1);
    for (const auto& [v, e] : m) p *= MultiPoly::var(v).pow(e);
    return p;
}

// ---- modular coprimality certificate -------------------------------------
//
// Reduce both polynomials to univariate images in the main variable by
// evaluating every other variable at a fixed pseudo-random point modulo a
// word-size prime. If the image gcd is constant (and at least one leading
// coefficient survived the evaluation), the true gcd is constant too; the
// converse can fail, in which case we fall through to an exact method.

constexpr std::uint64_t kModulus = 0xffffffff00000001ULL;  // 2^64 - 2^32 + 1

std::uint64_t addm(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 s = (unsigned __int128)a + b;
    return (std::uint64_t)(s >= kModulus ? s - kModulus : s);
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % kModulus);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invm(std::uint64_t a) { return powm(a, kModulus - 2); }

std::uint64_t mod_of_rat(const Rat& q, bool& ok) {
    std::uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), kModulus);
    std::uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), kModulus);
    if (d == 0) {
        ok = false;
        return 0;
    }
    return mulm(n, invm(d));
}

// Dense univariate image (coefficients by degree in `name`); empty on failure.
std::vector<std::uint64_t> modular_image(
    const MultiPoly& p, const std::string& name,
    const std::map<std::string, std::uint64_t>& point) {
    const auto& vars = p.vars();
    std::vector<std::uint64_t> img(p.degree_in(name) + 1, 0);
    size_t main_idx = std::lower_bound(vars.begin(), vars.end(), name) - vars.begin();
    for (const auto& [e, c] : p.terms()) {
        bool ok = true;
        std::uint64_t v = mod_of_rat(c, ok);
        if (!ok) return {};
        int deg = 0;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i == main_idx && vars[i] == name) {
                deg = e[i];
                continue;
            }
            if (e[i]) v = mulm(v, powm(point.at(vars[i]), e[i]));
        }
        img[deg] = addm(img[deg], v);
    }
    return img;
}

void trim_image(std::vector<std::uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool modular_coprime(const MultiPoly& a, const MultiPoly& b,
                     const std::string& name) {
    std::map<std::string, std::uint64_t> point;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (const auto& p : {&a, &b})
        for (const auto& v : p->vars())
            if (v != name && !point.count(v))
                point[v] = rng() % (kModulus - 2) + 1;
    std::vector<std::uint64_t> fa = modular_image(a, name, point);
    std::vector<std::uint64_t> fb = modular_image(b, name, point);
    if (fa.empty() || fb.empty()) return false;
    // The certificate needs a surviving leading coefficient on one side.
    bool lead_ok = (fa.back() != 0 && (int)fa.size() == a.degree_in(name) + 1) ||
                   (fb.back() != 0 && (int)fb.size() == b.degree_in(name) + 1);
    trim_image(fa);
    trim_image(fb);
    if (!lead_ok || fa.empty() || fb.empty()) return false;
    // Euclid on the images.
    while (!fb.empty()) {
        if (fb.size() == 1) return true;  // constant image gcd
        std::uint64_t linv = invm(fb.back());
        while (fa.size() >= fb.size()) {
            std::uint64_t f = mulm(fa.back(), linv);
            size_t off = fa.size() - fb.size();
            for (size_t i = 0; i < fb.size(); ++i)
                fa[off + i] = addm(fa[off + i], kModulus - mulm(f, fb[i]));
            trim_image(fa);
            if (fa.empty()) break;
        }
        std::swap(fa, fb);
    }
    return fa.size() == 1;
}

// ---- heuristic gcd (evaluate / reconstruct / verify) -----------------------
//
// Evaluate the main variable at a point xi exceeding twice the coefficient
// bound, gcd the images recursively, reconstruct a candidate from the
// balanced base-xi expansion and verify it by exact division. The
// verification makes the result unconditionally correct.

Int int_maxnorm(const MultiPoly& p) {
    Int m = 0;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

// Exact division over Z: the quotient must exist and have integer
// coefficients. Rational division alone cannot certify the integer content,
// which carries the gcd of the lower variables through the recursion.
std::optional<MultiPoly> divide_exact_z(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) return std::nullopt;
    for (const auto& [e, c] : q->terms())
        if (c.get_den() != 1) return std::nullopt;
    return q;
}

// Full integer gcd (content included) of two integer-coefficient polys.
std::optional<MultiPoly> heugcd_full(const MultiPoly& a, const MultiPoly& b,
                                     int depth);

std::optional<MultiPoly> heugcd_full(const MultiPoly& a, const MultiPoly& b,
                                     int depth) {
    if (depth > 8) return std::nullopt;
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.is_constant() && b.is_constant()) {
        Int g = gcd(Int(a.constant_value().get_num()),
                    Int(b.constant_value().get_num()));
        return MultiPoly::constant(Rat(g));
    }
    std::string name = a.vars().empty() ? b.vars().back() : a.vars().back();
    if (!b.vars().empty() && b.vars().back() > name) name = b.vars().back();

    Int na = int_maxnorm(a), nb = int_maxnorm(b);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MultiPoly fa = a.substitute(name, Rat(xi));
        MultiPoly fb = b.substitute(name, Rat(xi));
        if (!fa.is_zero() && !fb.is_zero()) {
            auto gi = heugcd_full(fa, fb, depth + 1);
            if (gi && !gi->is_zero()) {
                // Balanced base-xi reconstruction, coefficient-polys as digits.
                MultiPoly g;
                MultiPoly rest = *gi;
                MultiPoly x = MultiPoly::var(name);
                Rat half_num = Rat(xi) / 2;
                for (int k = 0; !rest.is_zero(); ++k) {
                    if (k > a.degree_in(name) + b.degree_in(name) + 2) {
                        g = MultiPoly();
                        break;
                    }
                    MultiPoly::TermMap digit_terms;
                    for (const auto& [e, c] : rest.terms()) {
                        Int r;
                        mpz_fdiv_r(r.get_mpz_t(), Int(c.get_num()).get_mpz_t(),
                                   xi.get_mpz_t());
                        if (2 * r > xi) r -= xi;
                        if (r != 0) digit_terms[e] = Rat(r);
                    }
                    MultiPoly digit = MultiPoly::make(rest.vars(), std::move(digit_terms));
                    g = g + digit * x.pow(k);
                    rest = (rest - digit) * MultiPoly::constant(rat(1, 1) / Rat(xi));
                }
                if (!g.is_zero()) {
                    // Keep the integer content: it is the image of the gcd's
                    // lower-variable part and must survive the recursion.
                    if (divide_exact_z(a, g) && divide_exact_z(b, g)) return g;
                }
            }
        }
        xi = xi * 73794 / 27011 + 37;
    }
    return std::nullopt;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(1);
    // Fast paths: pull out the common monomial factor of each operand first.
    // gcd(m_a * a', m_b * b') = gcd(m_a, m_b) * gcd(a', b'), and the stripped
    // cores often live in disjoint variables or degenerate to constants.
    std::map<std::string, int> ma = common_monomial(a), mb = common_monomial(b);
    std::map<std::string, int> shared;
    for (const auto& [v, e] : ma) {
        auto it = mb.find(v);
        if (it != mb.end()) shared[v] = std::min(e, it->second);
    }
    if (!ma.empty() || !mb.empty()) {
        MultiPoly ga = *divide_exact(a, monomial_of(ma));
        MultiPoly gb = *divide_exact(b, monomial_of(mb));
        return (monomial_of(shared) * poly_gcd(ga, gb)).primitive_part();
    }
    {
        // Disjoint variable sets: primitive parts can share no nonconstant factor.
        const auto& va = a.vars();
        const auto& vb = b.vars();
        bool overlap = false;
        for (const auto& v : va)
            if (std::binary_search(vb.begin(), vb.end(), v)) { overlap = true; break; }
        if (!overlap) return MultiPoly::constant(1);
    }
    // Main variable: alphabetically largest variable appearing in either.
    std::string name = a.vars().back();
    if (!b.vars().empty() && b.vars().back() > name) name = b.vars().back();
    if (!a.depends_on(name) || !b.depends_on(name)) {
        // One side is free of the main variable: gcd divides its coefficients.
        const MultiPoly& flat = a.depends_on(name) ? b : a;
        const MultiPoly& other = a.depends_on(name) ? a : b;
        MultiPoly g = flat;
        for (const auto& c : other.coefficients_in(name)) {
            g = poly_gcd(g, c);
            if (g.is_constant()) return MultiPoly::constant(1);
        }
        return g;
    }
    auto poly_content = [&](const MultiPoly& p) {
        auto cs = p.coefficients_in(name);
        MultiPoly g;
        for (const auto& c : cs) g = poly_gcd(g, c);
        return g;
    };
    MultiPoly ca = poly_content(a), cb = poly_content(b);
    MultiPoly pa = divide_exact(a, ca)->primitive_part();
    MultiPoly pb = divide_exact(b, cb)->primitive_part();
    // Cheap certificate first: coprime images mean a constant primitive gcd.
    if (modular_coprime(pa, pb, name))
        return poly_gcd(ca, cb).primitive_part();
    // Heuristic evaluation gcd; its trial-division check makes it exact.
    if (auto hg = heugcd_full(pa, pb, 0))
        return (poly_gcd(ca, cb) * hg->primitive_part()).primitive_part();
    // Primitive PRS fallback.
    if (pa.degree_in(name) < pb.degree_in(name)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, name);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = MultiPoly();
        } else {
            MultiPoly rc = poly_content(r);
            pb = *divide_exact(r, rc);
            pb = pb.primitive_part();
        }
    }
    MultiPoly g = poly_gcd(ca, cb) * pa.primitive_part();
    return g.primitive_part();
}

MultiPoly Factorization::expand() const {
    MultiPoly p = MultiPoly::constant(unit);
    for (const auto& [f, m] : factors) p *= f.pow(m);
    return p;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    bool printed = false;
    if (factors.empty() || unit != 1) {
        os << vir::to_string(unit);
        printed = true;
    }
    for (const auto& [f, m] : factors) {
        if (printed) os << " * ";
        printed = true;
        os << "(" << f.to_string() << ")";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

Factorization factor_rational_roots(const MultiPoly& p, const std::string& name_in) {
    std::string name = name_in;
    if (name.empty()) {
        if (p.vars().size() > 1)
            throw std::invalid_argument(
                "factor_rational_roots: variable required for multivariate input");
        name = p.vars().empty() ? "x" : p.vars()[0];
    }
    if (!p.vars().empty() && (p.vars().size() > 1 || p.vars()[0] != name))
        throw std::invalid_argument("factor_rational_roots: not univariate in " +
                                    name);
    Factorization out;
    out.unit = 1;
    if (p.is_zero()) {
        out.unit = 0;
        return out;
    }
    // Dense integer-primitive coefficient vector.
    Rat cont = p.content();
    out.unit = cont;
    auto mcs = p.primitive_part().coefficients_in(name);
    std::vector<Int> c(mcs.size());
    for (size_t i = 0; i < mcs.size(); ++i)
        c[i] = mcs[i].is_zero() ? Int(0) : mcs[i].constant_value().get_num();

    MultiPoly x = MultiPoly::var(name);
    std::map<std::pair<Int, Int>, int> roots;  // (u, v) for factor v*x - u

    // Strip roots at zero.
    size_t low = 0;
    while (low < c.size() - 1 && c[low] == 0) ++low;
    if (low > 0) {
        roots[{Int(0), Int(1)}] = static_cast<int>(low);
        c.erase(c.begin(), c.begin() + low);
    }

    // Divisors from the prime factorization: the trailing and leading
    // coefficients of Kac determinants and derived-form numerators are huge
    // but smooth, so trial division over divisors up to sqrt(n) would never
    // finish while factoring n is immediate.
    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> ds{1};
        Int rest = n;
        auto push_prime = [&](const Int& p, int e) {
            size_t sz = ds.size();
            Int pk = 1;
            for (int i = 1; i <= e; ++i) {
                pk *= p;
                for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
            }
        };
        for (Int p = 2; p * p <= rest && p < 2000000; p += (p == 2 ? 1 : 2)) {
            if (rest % p != 0) continue;
            int e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            push_prime(p, e);
        }
        if (rest > 1) push_prime(rest, 1);
        std::sort(ds.begin(), ds.end());
        return ds;
    };

    bool progress = true;
    while (c.size() > 1 && progress) {
        progress = false;
        // Cheap filters: a root u/v forces (v - u) | p(1) and (v + u) | p(-1).
        Int p1 = 0, pm1 = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            p1 += c[i];
            pm1 += (i % 2 == 0) ? c[i] : -c[i];
        }
        for (const Int& u_abs : divisors(c.front())) {
            if (progress) break;
            for (const Int& v : divisors(c.back())) {
                if (progress) break;
                for (int s : {1, -1}) {
                    Int u = s * u_abs;
                    if (gcd(abs(u), v) != 1) continue;
                    if (p1 != 0 && v != u && p1 % (v - u) != 0) continue;
                    if (pm1 != 0 && v != -u && pm1 % (v + u) != 0) continue;
                    // Synthetic division by (v*x - u): exact iff root.
                    // Evaluate via Horner at u/v using integers scaled by v.
                    Rat r(u, v);
                    r.canonicalize();
                    Rat acc = 0;
                    for (size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
                    if (acc != 0) continue;
                    // Deflate: p = (v*x - u) * q.
                    std::vector<Int> q(c.size() - 1);
                    Int carry = c.back();
                    for (size_t i = c.size() - 1; i-- > 0;) {
                        q[i] = carry / v;  // exact by Gauss's lemma
                        carry = c[i] + q[i] * u;
                    }
                    c = std::move(q);
                    roots[{u, v}] += 1;
                    progress = true;
                    break;
                }
            }
        }
    }
    for (const auto& [uv, mult] : roots) {
        MultiPoly lin = x * Rat(uv.second) - MultiPoly::constant(Rat(uv.first));
        out.factors.emplace_back(lin, mult);
    }
    // Residual (degree >= 2, no rational roots) or leading constant.
    MultiPoly residual;
    for (size_t i = 0; i < c.size(); ++i)
        residual += x.pow(static_cast<int>(i)) * Rat(c[i]);
    if (residual.is_constant()) {
        out.unit *= residual.constant_value();
    } else {
        Rat rc = residual.content();
        out.unit *= rc;
        out.factors.emplace_back(residual.primitive_part(), 1);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace vir
