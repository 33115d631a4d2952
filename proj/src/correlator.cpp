#include "vir/correlator.hpp"

#include <algorithm>
#include <mutex>

namespace vir {

namespace {

std::string g_name(int j) { return "g" + std::to_string(j); }

// Decomposes a rational function linear in the given symbols into
// per-symbol coefficients plus the symbol-free remainder.
std::pair<std::map<std::string, RatFunc>, RatFunc> linear_decompose(
    const RatFunc& f, const std::vector<std::string>& symbols) {
    std::map<std::string, RatFunc> coeffs;
    RatFunc rest = f;
    for (const auto& s : symbols) {
        RatFunc c = f.derivative(s);
        if (c.depends_on(s))
            throw std::logic_error("linear_decompose: not linear in " + s);
        if (!c.is_zero()) coeffs[s] = c;
        rest = rest.substitute(s, RatFunc());
    }
    return {std::move(coeffs), std::move(rest)};
}

int g_determining_level(int h) {
    switch (h) {
        case 1: return 2;
        case 2: return 4;
        case 3: return 8;
        default: throw UnsupportedWeight("weight must be 1, 2 or 3");
    }
}

int d_determining_level(int h) {
    switch (h) {
        case 1: return 4;
        case 2: return 6;
        case 3: return 10;
        default: throw UnsupportedWeight("weight must be 1, 2 or 3");
    }
}

}  // namespace

GAnsatz GAnsatz::symbolic(int h) {
    GAnsatz g;
    g.weight = h;
    for (int j = 0; j <= 2 * h; ++j) g.coeffs.push_back(RatFunc::var(g_name(j)));
    return g;
}

LaurentSeries expansion_casimir_side(const GAnsatz& g, int order) {
    // x = y(1+t) exactly: F y^{2h} = t^{-2h} sum_j g_j t^{2j} (1+t)^{-j}.
    int h = g.weight;
    RatFunc t = RatFunc::var("t");
    RatFunc s;
    for (int j = 0; j <= 2 * h; ++j)
        s += g.coeffs[j] * t.pow(2 * j) * (RatFunc(Rat(1)) + t).pow(-j);
    return laurent_expand(s * t.pow(-2 * h), "t", order - 2 * h);
}

LaurentSeries expansion_mode_side(const GAnsatz& g, int order) {
    // x = y(w-1)/w exactly: F y^{2h} = sum_j g_j (w-1)^{-j} w^{2h-j}.
    int h = g.weight;
    RatFunc w = RatFunc::var("w");
    RatFunc s;
    for (int j = 0; j <= 2 * h; ++j)
        s += g.coeffs[j] * (w - RatFunc(Rat(1))).pow(-j) * w.pow(2 * h - j);
    return laurent_expand(s, "w", order);
}

std::vector<std::pair<int, Rat>> mode_side_data(int h) {
    if (h < 1 || h > 3) throw UnsupportedWeight("mode_side_data: h in {1,2,3}");
    std::vector<std::pair<int, Rat>> out;
    out.emplace_back(0, (h % 2 == 0) ? Rat(1) : Rat(-1));
    if (h >= 2) out.emplace_back(1, Rat(0));  // b_{2h-2} u_a lands in V^(1) = 0
    return out;
}

ConstraintSystem assemble_system(int h, int max_casimir_level) {
    ConstraintSystem sys;
    sys.weight = h;
    std::vector<std::string> gsyms;
    for (int j = 0; j <= 2 * h; ++j) gsyms.push_back(g_name(j));
    sys.unknowns = gsyms;
    std::string dh = dim_symbol(Rat(h));
    sys.unknowns.push_back(dh);

    GAnsatz sym = GAnsatz::symbolic(h);
    LaurentSeries cas = expansion_casimir_side(sym, max_casimir_level);
    for (int n = 0; n <= max_casimir_level; ++n) {
        auto [lhs, rest] = linear_decompose(cas.coeff(n - 2 * h), gsyms);
        if (!rest.is_zero())
            throw std::logic_error("assemble_system: inhomogeneous expansion");
        // c_n(g) = casimir_zero_mode(h, n): move the d_h part to the left.
        RatFunc z = casimir_zero_mode(Rat(h), n);
        RatFunc dcoef = z.derivative(dh);
        RatFunc zconst = z.substitute(dh, RatFunc());
        LinearEquation eq;
        eq.lhs = std::move(lhs);
        if (!dcoef.is_zero()) eq.lhs[dh] = -dcoef;
        eq.rhs = zconst;
        eq.provenance = "casimir-side level " + std::to_string(n);
        sys.equations.push_back(std::move(eq));
    }
    LaurentSeries mode = expansion_mode_side(sym, 1);
    for (const auto& [m, val] : mode_side_data(h)) {
        auto [lhs, rest] = linear_decompose(mode.coeff(m), gsyms);
        if (!rest.is_zero())
            throw std::logic_error("assemble_system: inhomogeneous expansion");
        LinearEquation eq;
        eq.lhs = std::move(lhs);
        eq.rhs = RatFunc(val);
        eq.provenance = "mode-side order " + std::to_string(m);
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

LinearSolution solve_system(const ConstraintSystem& sys,
                            const std::vector<std::string>& solve_for) {
    size_t rows = sys.equations.size(), cols = solve_for.size();
    // Dense tableau [A | b]; unknowns outside solve_for stay symbolic
    // inside the rational functions.
    std::vector<std::vector<RatFunc>> a(rows, std::vector<RatFunc>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        const LinearEquation& eq = sys.equations[i];
        RatFunc rhs = eq.rhs;
        for (const auto& [name, coef] : eq.lhs) {
            auto it = std::find(solve_for.begin(), solve_for.end(), name);
            if (it != solve_for.end())
                a[i][it - solve_for.begin()] = coef;
            else
                rhs -= coef * RatFunc::var(name);
        }
        a[i][cols] = rhs;
    }
    LinearSolution out;
    std::vector<long> pivot_row(cols, -1);
    size_t next_row = 0;
    for (size_t c = 0; c < cols && next_row < rows; ++c) {
        size_t p = next_row;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[next_row]);
        RatFunc inv = RatFunc(Rat(1)) / a[next_row][c];
        for (size_t k = c; k <= cols; ++k) a[next_row][k] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == next_row || a[r][c].is_zero()) continue;
            RatFunc f = a[r][c];
            for (size_t k = c; k <= cols; ++k) a[r][k] -= f * a[next_row][k];
        }
        pivot_row[c] = static_cast<long>(next_row++);
    }
    out.consistent = true;
    for (size_t r = next_row; r < rows; ++r)
        if (!a[r][cols].is_zero()) out.consistent = false;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] < 0) {
            out.free_unknowns.push_back(solve_for[c]);
            continue;
        }
        // A pivot row may still reference later free columns; substitute
        // them as symbols so the value is explicit.
        RatFunc v = a[pivot_row[c]][cols];
        for (size_t k = c + 1; k < cols; ++k)
            if (!a[pivot_row[c]][k].is_zero())
                v -= a[pivot_row[c]][k] * RatFunc::var(solve_for[k]);
        out.values[solve_for[c]] = v;
    }
    return out;
}

GAnsatz solved_g(int h) {
    ConstraintSystem sys = assemble_system(h, g_determining_level(h));
    std::vector<std::string> gsyms;
    for (int j = 0; j <= 2 * h; ++j) gsyms.push_back(g_name(j));
    LinearSolution sol = solve_system(sys, gsyms);
    if (!sol.consistent)
        throw InconsistentSystem("solved_g: inconsistent system at h=" +
                                 std::to_string(h));
    if (!sol.free_unknowns.empty())
        throw InconsistentSystem("solved_g: underdetermined at h=" +
                                 std::to_string(h));
    GAnsatz g;
    g.weight = h;
    for (int j = 0; j <= 2 * h; ++j) g.coeffs.push_back(sol.values.at(g_name(j)));
    return g;
}

DerivedForm derive_killing() {
    // The Killing form is read off the first subleading mode-side
    // coefficient of the solved h=1 correlator: K/<a,b> = -e_1.
    GAnsatz g = solved_g(1);
    LaurentSeries mode = expansion_mode_side(g, 1);
    DerivedForm out;
    out.name = "killing";
    out.value = -mode.coeff(1);
    return out;
}

DerivedForm derive_dimension(int h) {
    static std::mutex mtx;
    static std::map<int, DerivedForm> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(h);
        if (it != cache.end()) return it->second;
    }
    ConstraintSystem sys = assemble_system(h, d_determining_level(h));
    LinearSolution sol = solve_system(sys, sys.unknowns);
    std::string dh = dim_symbol(Rat(h));
    if (!sol.consistent)
        throw InconsistentSystem("derive_dimension: inconsistent system at h=" +
                                 std::to_string(h));
    if (std::find(sol.free_unknowns.begin(), sol.free_unknowns.end(), dh) !=
        sol.free_unknowns.end())
        throw InconsistentSystem("derive_dimension: " + dh +
                                 " undetermined at h=" + std::to_string(h));
    DerivedForm out;
    out.name = h == 1 ? "d_of_C" : (h == 2 ? "d2_of_C" : "d3_of_C");
    out.value = sol.values.at(dh);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(h, out).first->second;
}

DerivedForm derive_g_polynomial() {
    DerivedForm out;
    out.name = "G_polynomial";
    out.ansatz = solved_g(2);
    return out;
}

DerivedForm derive_trace_form() {
    // Tr((a.b)_0) over V^(2): decompose a.b = sigma omega + (primaries);
    // primary zero modes are traceless, sigma = <a.b, omega>/<omega,omega>
    // with <a.b, omega> = E_omega <a,b> (omega.a = L_0 a), and
    // Tr(L_0 | V^(2)) = E_omega (d2 + 1). Everything is computed: E_omega
    // from the zero-mode engine, <omega,omega> from the level-2 Gram.
    RatFunc e_omega = zero_mode_ward(Word{2}, RatFunc(Rat(2)));
    RatFunc omega_norm{gram(2).entries(0, 0)};  // C/2
    RatFunc d2 = RatFunc::var("d2");
    DerivedForm out;
    out.name = "trace";
    out.value = (e_omega / omega_norm) * e_omega * (d2 + RatFunc(Rat(1)));
    return out;
}

MultiPoly consistency_constraint(int h, int level) {
    if (level <= g_determining_level(h))
        throw std::invalid_argument(
            "consistency_constraint: level must exceed the determining level");
    GAnsatz g = solved_g(h);
    LaurentSeries cas = expansion_casimir_side(g, level);
    RatFunc diff = cas.coeff(level - 2 * h) - casimir_zero_mode(Rat(h), level);
    return diff.num().primitive_part();
}

std::vector<Rat> constraint_charges(int h, int level) {
    MultiPoly constraint = consistency_constraint(h, level);
    std::string dh = dim_symbol(Rat(h));
    RatFunc dval = derive_dimension(h).value;
    RatFunc restricted =
        RatFunc(constraint).substitute(dh, dval);
    std::vector<Rat> roots;
    if (restricted.is_zero()) return roots;
    for (const auto& [f, m] :
         factor_rational_roots(restricted.num().primitive_part(), "C").factors) {
        if (f.degree_in("C") != 1) continue;
        auto cs = f.coefficients_in("C");
        Rat r = -cs[0].constant_value() / cs[1].constant_value();
        if (r > 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace vir
