// Exact-rational linear combinations of differential words: the free
// associative algebra with derivation, restricted to what the rest of the
// library needs (derivation, concatenation, linear combinations).
//
// Terms are kept in a map ordered by the monomial order of the bracketing
// module, degree-descending across degrees, so iteration order is canonical.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "nnov/bracketing.hpp"
#include "nnov/rational.hpp"
#include "nnov/terms.hpp"

namespace nnov {

class DiffPoly {
public:
    using TermMap = std::map<DiffWord, Rational, WordGreater>;

    DiffPoly() = default;
    static DiffPoly monomial(DiffWord w, Rational c = Rational(1)) {
        DiffPoly p;
        p.add_term(std::move(w), std::move(c));
        return p;
    }

    void add_term(DiffWord w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_scaled(const DiffPoly& p, const Rational& c) {
        if (c == 0) return;
        for (const auto& [w, v] : p.terms_) add_term(w, v * c);
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Greatest monomial under the word order (terms_ is descending).
    const TermMap::value_type& leading() const { return *terms_.begin(); }

    const Rational* coeff(const DiffWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r = a;
        r.add_scaled(b, Rational(1));
        return r;
    }
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r = a;
        r.add_scaled(b, Rational(-1));
        return r;
    }
    friend DiffPoly operator*(const Rational& c, const DiffPoly& p) {
        DiffPoly r;
        r.add_scaled(p, c);
        return r;
    }

private:
    TermMap terms_;
};

// Sum of scalar_i * poly_i; the sequences must have equal length.
DiffPoly linear_combine(std::span<const Rational> scalars, std::span<const DiffPoly> polys);

// Leibniz derivation: each word maps to the sum of its letter-wise order
// increments; extended linearly.
DiffPoly derive(const DiffPoly& p);

// Bilinear extension of word concatenation.
DiffPoly concat(const DiffPoly& p, const DiffPoly& q);

}  // namespace nnov
