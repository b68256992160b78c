#include "nnov/bracketing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace nnov {

namespace {

size_t mix(size_t h, size_t v) {
    return (h ^ v) * 1099511628211ull + 0x9e3779b97f4a7c15ull;
}

}  // namespace

TreeMon TreeMon::leaf(std::int32_t gen) {
    auto n = std::make_shared<Node>();
    n->gen = gen;
    n->leaf_count = 1;
    n->hash = mix(14695981039346656037ull, static_cast<size_t>(gen) * 2 + 1);
    return TreeMon(std::move(n));
}

TreeMon TreeMon::node(TreeOp op, TreeMon left, TreeMon right) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->left = left.node_;
    n->right = right.node_;
    n->leaf_count = left.leaf_count() + right.leaf_count();
    size_t h = op == TreeOp::Prec ? 0x517cc1b727220a95ull : 0x2545f4914f6cdd1dull;
    h = mix(h, left.hash());
    n->hash = mix(h, right.hash());
    return TreeMon(std::move(n));
}

bool TreeMon::structural_equal(const Node& a, const Node& b) {
    if (a.hash != b.hash || a.leaf_count != b.leaf_count) return false;
    if (!a.left) return !b.left && a.gen == b.gen;
    if (!b.left) return false;
    if (a.op != b.op) return false;
    return structural_equal(*a.left, *b.left) && structural_equal(*a.right, *b.right);
}

int TreeMon::struct_compare(const TreeMon& a, const TreeMon& b) {
    if (a.node_ == b.node_) return 0;
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count() ? -1 : 1;
    const bool al = a.is_leaf(), bl = b.is_leaf();
    if (al != bl) return al ? -1 : 1;
    if (al) {
        if (a.gen() != b.gen()) return a.gen() < b.gen() ? -1 : 1;
        return 0;
    }
    if (a.op() != b.op()) return a.op() == TreeOp::Prec ? -1 : 1;
    if (int c = struct_compare(a.left(), b.left()); c != 0) return c;
    return struct_compare(a.right(), b.right());
}

std::vector<std::int32_t> TreeMon::leaf_gens() const {
    std::vector<std::int32_t> out;
    out.reserve(static_cast<size_t>(leaf_count()));
    struct Walk {
        static void go(const TreeMon& t, std::vector<std::int32_t>& out) {
            if (t.is_leaf()) {
                out.push_back(t.gen());
                return;
            }
            go(t.left(), out);
            go(t.right(), out);
        }
    };
    Walk::go(*this, out);
    return out;
}

std::optional<BlockRef> shortest_leftmost_block(const DiffWord& u) {
    if (u.weight() != -1) throw std::domain_error("shortest_leftmost_block: word weight is not -1");
    const int n = u.degree();
    for (int len = 2; len < n; ++len) {
        for (int s = 0; s + len <= n; ++s) {
            int w = 0;
            for (int i = s; i < s + len; ++i) w += u.at(i).order;
            if (w - len == -1) return BlockRef{s + 1, len};
        }
    }
    return std::nullopt;
}

namespace {

// Replace leaf number i (0-based) of t by sub.
TreeMon substitute_leaf(const TreeMon& t, int i, const TreeMon& sub) {
    if (t.is_leaf()) return sub;
    const int nl = t.left().leaf_count();
    if (i < nl) return TreeMon::node(t.op(), substitute_leaf(t.left(), i, sub), t.right());
    return TreeMon::node(t.op(), t.left(), substitute_leaf(t.right(), i - nl, sub));
}

thread_local std::unordered_map<DiffWord, TreeMon, DiffWordHash> g_bracket_cache;
thread_local std::unordered_map<DiffWord, Factorization, DiffWordHash> g_factor_cache;

TreeMon bracket_impl(const DiffWord& u) {
    const int n = u.degree();
    if (n == 1) return TreeMon::leaf(u.at(0).gen);

    auto blk = shortest_leftmost_block(u);
    if (!blk) {
        // Base form x^p x^(k) x^(k-p): left comb of succ from the head,
        // wrapped in p prec with leaf left arguments.
        int p = 0;
        while (u.at(p).order == 0) ++p;
        const int k = u.at(p).order;
        TreeMon t = TreeMon::leaf(u.at(p).gen);
        for (int j = 0; j < k - p; ++j) t = TreeMon::node(TreeOp::Succ, t, TreeMon::leaf(u.at(p + 1 + j).gen));
        for (int j = p - 1; j >= 0; --j) t = TreeMon::node(TreeOp::Prec, TreeMon::leaf(u.at(j).gen), t);
        return t;
    }

    const int s0 = blk->start - 1;
    DiffWord v = u.subword(s0, blk->length);
    // Collapse v to a single undifferentiated letter (weight -1 either way).
    std::vector<DiffLetter> wl;
    wl.reserve(static_cast<size_t>(n - blk->length + 1));
    for (int i = 0; i < s0; ++i) wl.push_back(u.at(i));
    wl.push_back(DiffLetter{u.at(s0).gen, 0});
    for (int i = s0 + blk->length; i < n; ++i) wl.push_back(u.at(i));
    TreeMon w = standard_bracket(DiffWord(std::move(wl)));
    return substitute_leaf(w, s0, standard_bracket(v));
}

Factorization factorize_impl(const DiffWord& u) {
    TreeMon t = standard_bracket(u);
    Factorization f;
    int pos = 0;  // leaf offset of the current subtree
    while (!t.is_leaf() && t.op() == TreeOp::Prec) {
        const int nl = t.left().leaf_count();
        f.prefix_blocks.push_back(u.subword(pos, nl));
        pos += nl;
        t = t.right();
    }
    std::vector<DiffWord> suffix_rev;
    while (!t.is_leaf() && t.op() == TreeOp::Succ) {
        const int nr = t.right().leaf_count();
        suffix_rev.push_back(u.subword(pos + t.leaf_count() - nr, nr));
        t = t.left();
    }
    f.suffix_blocks.assign(suffix_rev.rbegin(), suffix_rev.rend());
    f.head_pos = pos + 1;
    f.head_order = u.at(pos).order;
    if (f.head_order != f.t() + f.l())
        throw std::logic_error("factorize: head order differs from block count");
    return f;
}

}  // namespace

TreeMon standard_bracket(const DiffWord& u) {
    if (u.weight() != -1) throw std::domain_error("standard_bracket: word weight is not -1");
    if (auto it = g_bracket_cache.find(u); it != g_bracket_cache.end()) return it->second;
    TreeMon t = bracket_impl(u);
    g_bracket_cache.emplace(u, t);
    return t;
}

const Factorization& factorize(const DiffWord& u) {
    if (u.weight() != -1) throw std::domain_error("factorize: word weight is not -1");
    if (auto it = g_factor_cache.find(u); it != g_factor_cache.end()) return it->second;
    return g_factor_cache.emplace(u, factorize_impl(u)).first->second;
}

int compare_3way(const DiffWord& u, const DiffWord& v) {
    if (u == v) return 0;
    if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;

    const int n = u.degree();
    bool same_skeleton = true;
    for (int i = 0; i < n && same_skeleton; ++i)
        same_skeleton = u.at(i).order == v.at(i).order;
    if (same_skeleton) {
        // Identical derivation skeletons: generator sequences decide,
        // lexicographically smaller sequence compares greater.
        for (int i = 0; i < n; ++i) {
            if (u.at(i).gen != v.at(i).gen) return u.at(i).gen < v.at(i).gen ? 1 : -1;
        }
        return 0;  // unreachable: u != v
    }

    // The head/block order lives on the weight -1 component; elsewhere
    // (intermediate derivation results, arbitrary user input) fall back to a
    // plain positionwise order so polynomial storage stays totally ordered.
    const int wu = u.weight(), wv = v.weight();
    if (wu != wv) return wu > wv ? 1 : -1;
    if (wu != -1) {
        for (int i = 0; i < n; ++i) {
            if (u.at(i).order != v.at(i).order) return u.at(i).order > v.at(i).order ? 1 : -1;
            if (u.at(i).gen != v.at(i).gen) return u.at(i).gen < v.at(i).gen ? 1 : -1;
        }
        return 0;  // unreachable
    }

    const Factorization& fu = factorize(u);
    const Factorization& fv = factorize(v);
    if (fu.head_pos != fv.head_pos) return fu.head_pos < fv.head_pos ? 1 : -1;
    if (fu.head_order != fv.head_order) return fu.head_order > fv.head_order ? 1 : -1;

    // Equal head order means equal block counts; walk the combined sequence.
    auto block = [](const Factorization& f, int i) -> const DiffWord& {
        const int t = f.t();
        return i < t ? f.prefix_blocks[static_cast<size_t>(i)]
                     : f.suffix_blocks[static_cast<size_t>(i - t)];
    };
    const int total = fu.head_order;
    for (int i = 0; i < total; ++i) {
        if (int c = compare_3way(block(fu, i), block(fv, i)); c != 0) return c;
    }
    throw std::logic_error("compare: distinct words exhausted all comparison keys");
}

Ordering compare(const DiffWord& u, const DiffWord& v) {
    if (u == v) throw std::invalid_argument("compare: words are equal");
    if (u.weight() != -1 || v.weight() != -1)
        throw std::domain_error("compare: words must have weight -1");
    return compare_3way(u, v) > 0 ? Ordering::Greater : Ordering::Less;
}

namespace {

// All order compositions (n_1,...,n_k) with sum = k - 1, emitted recursively.
void compositions(int remaining, int parts, std::vector<std::int32_t>& acc,
                  const std::function<void(const std::vector<std::int32_t>&)>& emit) {
    if (parts == 1) {
        acc.push_back(remaining);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= remaining; ++first) {
        acc.push_back(first);
        compositions(remaining - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<DiffWord> enumerate_words(int degree, const std::vector<std::int32_t>& alphabet,
                                      EnumMode mode) {
    if (degree < 1) throw std::invalid_argument("enumerate_words: degree must be >= 1");
    if (alphabet.empty()) throw std::invalid_argument("enumerate_words: empty alphabet");
    if (mode == EnumMode::Multilinear && static_cast<int>(alphabet.size()) != degree)
        throw std::invalid_argument("enumerate_words: multilinear mode needs |alphabet| == degree");

    std::vector<DiffWord> out;
    std::vector<std::int32_t> acc;
    acc.reserve(static_cast<size_t>(degree));

    if (mode == EnumMode::Single) {
        const std::int32_t g = alphabet.front();
        compositions(degree - 1, degree, acc, [&](const std::vector<std::int32_t>& orders) {
            std::vector<DiffLetter> ls(orders.size());
            for (size_t i = 0; i < orders.size(); ++i) ls[i] = DiffLetter{g, orders[i]};
            out.emplace_back(std::move(ls));
        });
    } else {
        std::vector<std::int32_t> perm = alphabet;
        std::sort(perm.begin(), perm.end());
        do {
            compositions(degree - 1, degree, acc, [&](const std::vector<std::int32_t>& orders) {
                std::vector<DiffLetter> ls(orders.size());
                for (size_t i = 0; i < orders.size(); ++i) ls[i] = DiffLetter{perm[i], orders[i]};
                out.emplace_back(std::move(ls));
            });
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::sort(out.begin(), out.end(), WordGreater{});
    return out;
}

std::vector<TreeMon> enumerate_basis(int degree, const std::vector<std::int32_t>& alphabet,
                                     EnumMode mode) {
    auto words = enumerate_words(degree, alphabet, mode);
    std::vector<TreeMon> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(standard_bracket(w));
    return out;
}

void clear_bracketing_caches() {
    g_bracket_cache.clear();
    g_factor_cache.clear();
}

}  // namespace nnov
