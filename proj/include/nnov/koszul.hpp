// The Koszul dual operad: monomials are planar binary trees over the ordered
// leaves x_1 ... x_n with nodes labeled by the dual operations, relations are
// the dual defining identities closed under operadic composition. The dual is
// nonsymmetric (leaf order fixed), so dimensions are monomial counts minus
// relation ranks.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "nnov/rational.hpp"

namespace nnov {

enum class DualOp : std::uint8_t { Dashv, Vdash };  // left / right dual products

class DualMon {
public:
    DualMon() = default;
    static DualMon leaf();
    static DualMon node(DualOp op, DualMon left, DualMon right);

    bool is_leaf() const { return node_->left == nullptr; }
    DualOp op() const { return node_->op; }
    DualMon left() const { return DualMon(node_->left); }
    DualMon right() const { return DualMon(node_->right); }
    int arity() const { return node_->arity; }

    // Replace leaf number i (0-based, left to right).
    DualMon substitute_leaf(int i, const DualMon& sub) const;

    static int struct_compare(const DualMon& a, const DualMon& b);
    friend bool operator==(const DualMon& a, const DualMon& b) {
        return struct_compare(a, b) == 0;
    }

private:
    struct Node {
        DualOp op = DualOp::Dashv;
        std::shared_ptr<const Node> left, right;
        int arity = 1;
    };
    explicit DualMon(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct DualMonLess {
    bool operator()(const DualMon& a, const DualMon& b) const {
        return DualMon::struct_compare(a, b) < 0;
    }
};

using RelationVector = std::map<DualMon, Rational, DualMonLess>;

// All Catalan(n-1) * 2^(n-1) labeled trees, deterministic order.
std::vector<DualMon> enumerate_dual(int arity);

// Arity 3: the six transcribed defining relations. Higher arity: the closure
// of the reduced arity-(n-1) relations under substituting a binary generator
// into any slot and grafting under a binary generator on either side.
std::vector<RelationVector> dual_relations(int arity);

int dual_dim(int arity);

}  // namespace nnov
