#include "nnov/koszul.hpp"

#include <stdexcept>

#include "nnov/linalg.hpp"

namespace nnov {

DualMon DualMon::leaf() {
    static const DualMon l = [] {
        auto n = std::make_shared<Node>();
        n->arity = 1;
        return DualMon(std::move(n));
    }();
    return l;
}

DualMon DualMon::node(DualOp op, DualMon left, DualMon right) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->left = left.node_;
    n->right = right.node_;
    n->arity = left.arity() + right.arity();
    return DualMon(std::move(n));
}

DualMon DualMon::substitute_leaf(int i, const DualMon& sub) const {
    if (is_leaf()) return sub;
    const int nl = left().arity();
    if (i < nl) return node(op(), left().substitute_leaf(i, sub), right());
    return node(op(), left(), right().substitute_leaf(i - nl, sub));
}

int DualMon::struct_compare(const DualMon& a, const DualMon& b) {
    if (a.node_ == b.node_) return 0;
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
    const bool al = a.is_leaf(), bl = b.is_leaf();
    if (al != bl) return al ? -1 : 1;
    if (al) return 0;
    if (a.op() != b.op()) return a.op() == DualOp::Dashv ? -1 : 1;
    if (int c = struct_compare(a.left(), b.left()); c != 0) return c;
    return struct_compare(a.right(), b.right());
}

std::vector<DualMon> enumerate_dual(int arity) {
    if (arity < 1) throw std::invalid_argument("enumerate_dual: arity must be >= 1");
    if (arity == 1) return {DualMon::leaf()};
    std::vector<DualMon> out;
    for (int k = 1; k < arity; ++k) {
        for (const auto& l : enumerate_dual(k)) {
            for (const auto& r : enumerate_dual(arity - k)) {
                out.push_back(DualMon::node(DualOp::Dashv, l, r));
                out.push_back(DualMon::node(DualOp::Vdash, l, r));
            }
        }
    }
    return out;
}

namespace {

DualMon m3(DualOp outer, bool right_shape, DualOp inner) {
    const DualMon x = DualMon::leaf();
    const DualMon pair = DualMon::node(inner, x, x);
    return right_shape ? DualMon::node(outer, x, pair) : DualMon::node(outer, pair, x);
}

std::vector<RelationVector> arity3_relations() {
    using enum DualOp;
    std::vector<RelationVector> rels;
    // x1 -| (x2 -| x3) = 0 and (x1 |- x2) |- x3 = 0
    rels.push_back({{m3(Dashv, true, Dashv), Rational(1)}});
    rels.push_back({{m3(Vdash, false, Vdash), Rational(1)}});
    // x1 |- (x2 -| x3) = (x1 |- x2) -| x3
    rels.push_back({{m3(Vdash, true, Dashv), Rational(1)}, {m3(Dashv, false, Vdash), Rational(-1)}});
    // the four-term chain, anchored on x1 -| (x2 |- x3)
    const DualMon anchor = m3(Dashv, true, Vdash);
    for (const DualMon& other :
         {m3(Vdash, true, Vdash), m3(Dashv, false, Dashv), m3(Vdash, false, Dashv)}) {
        rels.push_back({{anchor, Rational(1)}, {other, Rational(-1)}});
    }
    return rels;
}

RationalMatrix relation_matrix(const std::vector<RelationVector>& rels,
                               const std::vector<DualMon>& monos) {
    std::map<DualMon, size_t, DualMonLess> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RationalMatrix m(rels.size(), monos.size());
    for (size_t r = 0; r < rels.size(); ++r) {
        for (const auto& [t, c] : rels[r]) m.set(r, index.at(t), c);
    }
    return m;
}

// Row-reduced spanning subset (span-preserving; keeps higher arities small).
std::vector<RelationVector> reduced_relations(int arity);

std::vector<RelationVector> generate_relations(int arity) {
    if (arity == 3) return arity3_relations();
    std::vector<RelationVector> out;
    const DualMon x = DualMon::leaf();
    for (const auto& rel : reduced_relations(arity - 1)) {
        // (a) substitute a binary generator into each slot
        for (int i = 0; i < arity - 1; ++i) {
            for (DualOp op : {DualOp::Dashv, DualOp::Vdash}) {
                const DualMon gen = DualMon::node(op, x, x);
                RelationVector nr;
                for (const auto& [t, c] : rel) {
                    DualMon nt = t.substitute_leaf(i, gen);
                    auto [it, ins] = nr.try_emplace(nt, c);
                    if (!ins) it->second += c;
                }
                out.push_back(std::move(nr));
            }
        }
        // (b) graft under a binary generator on either side
        for (DualOp op : {DualOp::Dashv, DualOp::Vdash}) {
            RelationVector left_graft, right_graft;
            for (const auto& [t, c] : rel) {
                left_graft.emplace(DualMon::node(op, t, x), c);
                right_graft.emplace(DualMon::node(op, x, t), c);
            }
            out.push_back(std::move(left_graft));
            out.push_back(std::move(right_graft));
        }
    }
    return out;
}

std::vector<RelationVector> reduced_relations(int arity) {
    auto rels = generate_relations(arity);
    auto monos = enumerate_dual(arity);
    std::map<DualMon, size_t, DualMonLess> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    std::map<size_t, std::map<size_t, Rational>> pivots;
    std::vector<RelationVector> basis;
    for (const auto& rel : rels) {
        std::map<size_t, Rational> row;
        for (const auto& [t, c] : rel) {
            if (c != 0) row.emplace(index.at(t), c);
        }
        bool is_new = false;
        while (!row.empty()) {
            const size_t lead = row.begin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                is_new = true;
                break;
            }
            const Rational f = row.begin()->second / p->second.begin()->second;
            for (const auto& [c, v] : p->second) {
                auto it = row.find(c);
                Rational nv = (it == row.end() ? Rational(0) : it->second) - f * v;
                if (nv == 0) {
                    if (it != row.end()) row.erase(it);
                } else if (it == row.end()) {
                    row.emplace(c, std::move(nv));
                } else {
                    it->second = std::move(nv);
                }
            }
        }
        if (is_new) basis.push_back(rel);
    }
    return basis;
}

}  // namespace

std::vector<RelationVector> dual_relations(int arity) {
    if (arity < 3) throw std::invalid_argument("dual_relations: arity must be >= 3");
    return generate_relations(arity);
}

int dual_dim(int arity) {
    if (arity < 1) throw std::invalid_argument("dual_dim: arity must be >= 1");
    if (arity == 1) return 1;
    if (arity == 2) return 2;
    const auto monos = enumerate_dual(arity);
    const auto rels = dual_relations(arity);
    const auto m = relation_matrix(rels, monos);
    return static_cast<int>(monos.size() - rank(m));
}

}  // namespace nnov
