// The embedding tau into the differential associative algebra and normal
// forms of weight -1 polynomials in the bracket basis.
//
// normalize_greedy eliminates leading terms against tau(standard_bracket(.)).
// The elimination tolerates expansions whose side terms exceed the leading
// word (this happens from degree 5) and guards against the genuinely
// degenerate inputs that have no representation in the bracket basis at all
// (these exist from degree 6, where distinct brackets can be equal modulo
// identity (1) and the basis fails to span): a per-word pick limit and a
// step budget turn divergence into NormalizationError.
//
// normalize_solve is the order-free oracle: per degree-and-generator-sequence
// class it solves the exact linear system over the enumerated basis, using
// back-substitution when the matrix is verified unitriangular and full
// elimination otherwise. A singular class matrix falsifies the basis theorem
// for that class and raises TheoremViolation.
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "nnov/bracketing.hpp"
#include "nnov/poly.hpp"

namespace nnov {

struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TreePoly {
public:
    using TermMap = std::map<TreeMon, Rational, TreeMonLess>;

    TreePoly() = default;
    static TreePoly monomial(TreeMon t, Rational c = Rational(1)) {
        TreePoly p;
        p.add_term(std::move(t), std::move(c));
        return p;
    }

    void add_term(TreeMon t, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(t), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    friend bool operator==(const TreePoly&, const TreePoly&) = default;

    friend TreePoly operator+(const TreePoly& a, const TreePoly& b) {
        TreePoly r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, c);
        return r;
    }
    friend TreePoly operator-(const TreePoly& a, const TreePoly& b) {
        TreePoly r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, -c);
        return r;
    }

private:
    TermMap terms_;
};

// tau(leaf) is the plain generator; tau(a prec b) = tau(a) d(tau(b));
// tau(a succ b) = d(tau(a)) tau(b). Every monomial of tau(T) has weight -1,
// degree = leaf count, positive integer coefficient, and the leaf generator
// sequence of T.
DiffPoly tau(const TreeMon& t);
DiffPoly tau(const TreePoly& p);

TreePoly normalize_greedy(const DiffPoly& p);
TreePoly normalize_solve(const DiffPoly& p);

// Largest class degree the linear solver will enumerate.
inline constexpr int kMaxSolveDegree = 8;

// Novikov products on normal forms: combines the tau images per the
// derived operations and renormalizes greedily.
TreePoly nov_product(const TreePoly& a, const TreePoly& b, TreeOp op);

void clear_normalform_caches();

}  // namespace nnov
