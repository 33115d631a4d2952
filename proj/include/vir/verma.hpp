#ifndef VIR_VERMA_HPP
#define VIR_VERMA_HPP

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "vir/matrix.hpp"
#include "vir/multipoly.hpp"
#include "vir/ratfunc.hpp"

namespace vir {

// A basis word L_{-n1} ... L_{-nk} applied to the cyclic vector, stored as
// the descending part list [n1 >= n2 >= ... >= nk]. The empty word is the
// cyclic vector itself.
using Word = std::vector<int>;

inline int word_level(const Word& w) {
    int n = 0;
    for (int p : w) n += p;
    return n;
}

// Finite linear combination of basis words with rational-function
// coefficients (functions of the central charge C, and of h where the
// weight is symbolic).
struct VermaVector {
    std::map<Word, RatFunc> terms;

    VermaVector() = default;
    explicit VermaVector(const Word& w) { terms[w] = RatFunc(Rat(1)); }

    bool is_zero() const { return terms.empty(); }
    void prune();
    VermaVector operator+(const VermaVector& o) const;
    VermaVector operator-(const VermaVector& o) const;
    VermaVector operator*(const RatFunc& c) const;
    bool operator==(const VermaVector& o) const { return terms == o.terms; }
    // Homogeneous level; throws if terms sit at mixed levels.
    int level() const;
    std::string to_string() const;
};

// Mode action and contravariant pairing in a highest-weight module with
// lowest weight `h` (a polynomial in C and/or h) and minimal admissible
// part `min_part`: the vacuum module is (h = 0, min_part = 2), a generic
// primary module is (h, min_part = 1). Basis words are kept in normal
// order by the commutation relations
//   [L_m, L_n] = (m - n) L_{m+n} + delta_{m,-n} (m^3 - m) C / 12.
// Thread safe; results are memoized per engine.
class ModuleEngine {
public:
    using PolyVec = std::map<Word, MultiPoly>;

    ModuleEngine(MultiPoly weight, int min_part)
        : h_(std::move(weight)), min_part_(min_part) {}

    int min_part() const { return min_part_; }
    const MultiPoly& weight() const { return h_; }

    // L_m applied to a basis word / linear combination.
    PolyVec apply(int m, const Word& w);
    PolyVec apply(int m, const PolyVec& v);

    // Contravariant (Shapovalov) pairing of two basis words; a polynomial
    // in C (and h for a symbolic-weight engine). Words at different
    // levels pair to zero.
    MultiPoly pairing(const Word& u, const Word& v);

private:
    MultiPoly h_;
    int min_part_;
    std::map<std::pair<int, Word>, PolyVec> memo_;
    std::shared_mutex mutex_;

    PolyVec apply_uncached(int m, const Word& w);
    PolyVec prepend(int n, const PolyVec& v);
};

// Shared engine for the vacuum module V(C, 0).
ModuleEngine& vacuum_engine();

// Basis of the vacuum module at level n: descending part lists with all
// parts >= 2, sorted ascending lexicographically ([2,2] before [4]).
std::vector<Word> vacuum_basis(int n);
long vacuum_dim(int n);

// L_m on a rational-function combination in the vacuum module.
VermaVector apply_mode(int m, const VermaVector& v);

// Pairing extended bilinearly (coefficients in the left slot enter
// without conjugation; everything is rational).
RatFunc pairing(const VermaVector& u, const VermaVector& v);

struct GramData {
    int level = 0;
    std::vector<Word> basis;
    Matrix<MultiPoly> entries;
};

// Gram matrix of the vacuum module at level n. `gram` computes cells in
// parallel (OpenMP when available) and caches per level; `gram_serial`
// is an independent single-threaded reference sharing no cache with it.
const GramData& gram(int n);
GramData gram_serial(int n);

MultiPoly kac_det(int n);
Factorization kac_det_factored(int n);

// Rational roots of det M^(n): central charges where the level-n Gram
// matrix degenerates. Sorted ascending; multiplicity dropped.
std::vector<Rat> singular_charges(int n);

}  // namespace vir

#endif
