// Standard bracketing of weight -1 differential words.
//
// Every weight -1 word u gets a planar binary tree [u] with internal nodes
// labeled by the two products. The base form x^p x^(k) x^(k-p) maps to p
// nested prec around a left comb of k-p succ starting at the head leaf; any
// other word collapses its shortest leftmost proper weight -1 subword of
// length > 1 to a single letter, recurses, and substitutes the subword's
// bracket back at the collapsed leaf.
//
// The canonical factorization u = u_1 ... u_t x^(t+l) u_{t+1} ... u_{t+l}
// (prefix blocks on the prec spine, suffix blocks on the succ comb, the head
// in between) defines rho = head position and h = head order, the keys of
// the monomial order implemented by compare().
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nnov/terms.hpp"

namespace nnov {

enum class TreeOp : std::uint8_t { Prec, Succ };  // prec = a d(b), succ = d(a) b

class TreeMon {
public:
    TreeMon() = default;

    static TreeMon leaf(std::int32_t gen);
    static TreeMon node(TreeOp op, TreeMon left, TreeMon right);

    bool is_leaf() const { return node_->left == nullptr; }
    std::int32_t gen() const { return node_->gen; }
    TreeOp op() const { return node_->op; }
    TreeMon left() const { return TreeMon(node_->left); }
    TreeMon right() const { return TreeMon(node_->right); }
    int leaf_count() const { return node_->leaf_count; }
    size_t hash() const { return node_->hash; }

    // Leaf generator ids in left-to-right order.
    std::vector<std::int32_t> leaf_gens() const;

    friend bool operator==(const TreeMon& a, const TreeMon& b) {
        if (a.node_ == b.node_) return true;
        if (!a.node_ || !b.node_) return false;
        return structural_equal(*a.node_, *b.node_);
    }

    // Cheap structural total order for map keys (not the monomial order).
    static int struct_compare(const TreeMon& a, const TreeMon& b);

private:
    struct Node {
        TreeOp op = TreeOp::Prec;
        std::int32_t gen = 0;
        std::shared_ptr<const Node> left, right;
        int leaf_count = 1;
        size_t hash = 0;
    };

    explicit TreeMon(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static bool structural_equal(const Node& a, const Node& b);

    std::shared_ptr<const Node> node_;
};

struct TreeMonHash {
    size_t operator()(const TreeMon& t) const { return t.hash(); }
};
struct TreeMonLess {
    bool operator()(const TreeMon& a, const TreeMon& b) const {
        return TreeMon::struct_compare(a, b) < 0;
    }
};

// Location of a subword; start is 1-based to match head positions.
struct BlockRef {
    int start = 0;
    int length = 0;
    friend bool operator==(const BlockRef&, const BlockRef&) = default;
};

struct Factorization {
    std::vector<DiffWord> prefix_blocks;  // u_1 ... u_t
    int head_pos = 0;                     // rho, 1-based
    int head_order = 0;                   // h = t + l
    std::vector<DiffWord> suffix_blocks;  // u_{t+1} ... u_{t+l}

    int t() const { return static_cast<int>(prefix_blocks.size()); }
    int l() const { return static_cast<int>(suffix_blocks.size()); }
};

// Shortest proper weight -1 subword of length > 1 (ties to the smallest
// start); empty exactly on the base form x^p x^(k) x^(k-p).
std::optional<BlockRef> shortest_leftmost_block(const DiffWord& u);

TreeMon standard_bracket(const DiffWord& u);

const Factorization& factorize(const DiffWord& u);

// Monomial order: degree first (larger greater), identical derivation
// skeletons by generator sequence, otherwise rho ascending, head order
// descending, then blockwise recursion. Returns +1 / 0 / -1.
int compare_3way(const DiffWord& u, const DiffWord& v);

enum class Ordering { Greater, Less };

// Spec-facing comparison; equal inputs are a usage error.
Ordering compare(const DiffWord& u, const DiffWord& v);

struct WordGreater {
    bool operator()(const DiffWord& a, const DiffWord& b) const {
        return compare_3way(a, b) > 0;
    }
};

enum class EnumMode { Single, Multilinear };

// All weight -1 words of the given degree, sorted descending by compare.
// Single mode uses the first alphabet generator; Multilinear crosses the
// derivation compositions with all orderings of the alphabet and requires
// |alphabet| == degree.
std::vector<DiffWord> enumerate_words(int degree, const std::vector<std::int32_t>& alphabet,
                                      EnumMode mode);
std::vector<TreeMon> enumerate_basis(int degree, const std::vector<std::int32_t>& alphabet,
                                     EnumMode mode);

// Clears the thread-local bracket/factorization caches (mainly for tests).
void clear_bracketing_caches();

}  // namespace nnov
