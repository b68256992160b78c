#include "nnov/poly.hpp"

#include <stdexcept>

namespace nnov {

DiffPoly linear_combine(std::span<const Rational> scalars, std::span<const DiffPoly> polys) {
    if (scalars.size() != polys.size())
        throw std::invalid_argument("linear_combine: scalar/poly length mismatch");
    DiffPoly out;
    for (size_t i = 0; i < scalars.size(); ++i) out.add_scaled(polys[i], scalars[i]);
    return out;
}

DiffPoly derive(const DiffPoly& p) {
    DiffPoly out;
    for (const auto& [w, c] : p.terms()) {
        for (int j = 0; j < w.degree(); ++j) out.add_term(w.with_order_incremented(j), c);
    }
    return out;
}

DiffPoly concat(const DiffPoly& p, const DiffPoly& q) {
    DiffPoly out;
    for (const auto& [w1, c1] : p.terms()) {
        for (const auto& [w2, c2] : q.terms()) out.add_term(w1 + w2, c1 * c2);
    }
    return out;
}

}  // namespace nnov
