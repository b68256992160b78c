#include "nnov/normalform.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "nnov/linalg.hpp"

namespace nnov {

namespace {

// Expansions are memoized only up to this degree; term counts grow fast and
// the large top-level expansions are rarely reused.
constexpr int kTauMemoMaxDegree = 8;

constexpr int kPickLimit = 64;          // greedy picks per word (legit max seen: 6)
constexpr std::uint64_t kStepBudget = 4'000'000;

thread_local std::unordered_map<TreeMon, DiffPoly, TreeMonHash> g_tau_cache;
thread_local std::unordered_map<DiffWord, DiffPoly, DiffWordHash> g_tau_bracket_cache;

DiffPoly tau_impl(const TreeMon& t) {
    if (t.is_leaf()) return DiffPoly::monomial(DiffWord::single(t.gen()));
    DiffPoly a = tau(t.left());
    DiffPoly b = tau(t.right());
    return t.op() == TreeOp::Prec ? concat(a, derive(b)) : concat(derive(a), b);
}

const DiffPoly& tau_of_bracket(const DiffWord& u) {
    auto it = g_tau_bracket_cache.find(u);
    if (it != g_tau_bracket_cache.end()) return it->second;
    return g_tau_bracket_cache.emplace(u, tau(standard_bracket(u))).first->second;
}

std::string describe_class(const DiffWord& w) {
    std::ostringstream os;
    os << "degree " << w.degree() << ", generator sequence (";
    for (int i = 0; i < w.degree(); ++i) os << (i ? " " : "") << w.at(i).gen;
    os << ")";
    return os.str();
}

// Greedy leading-term elimination within one degree/generator-sequence
// class. Side terms of an expansion may exceed the eliminated word (the
// order is not triangular from degree 5), so a word can legitimately be
// picked a handful of times; unbounded re-picking means the input has no
// representation in the bracket basis (possible from degree 6).
TreePoly greedy_class(DiffPoly p) {
    TreePoly out;
    std::unordered_map<DiffWord, int, DiffWordHash> picks;
    std::uint64_t steps = 0;
    while (!p.is_zero()) {
        if (++steps > kStepBudget)
            throw NormalizationError("normalize_greedy: step budget exhausted in class " +
                                     describe_class(p.leading().first));
        const auto& [u, lam] = p.leading();
        if (++picks[u] > kPickLimit)
            throw NormalizationError(
                "normalize_greedy: leading-term elimination cycled in class " +
                describe_class(u) +
                "; the input has no representation in the bracket basis "
                "(the basis fails to span this class)");
        const Rational c = lam;
        const DiffWord w = u;
        out.add_term(standard_bracket(w), c);
        p.add_scaled(tau_of_bracket(w), -c);
        if (p.coeff(w) != nullptr)
            throw NormalizationError("normalize_greedy: leading term failed to cancel at " +
                                     describe_class(w));
    }
    return out;
}

struct ClassKey {
    int degree;
    std::vector<std::int32_t> gens;
    friend bool operator<(const ClassKey& a, const ClassKey& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.gens < b.gens;
    }
};

ClassKey class_of(const DiffWord& w) {
    ClassKey k{w.degree(), {}};
    k.gens.reserve(static_cast<size_t>(w.degree()));
    for (const auto& l : w.letters()) k.gens.push_back(l.gen);
    return k;
}

// tau preserves degree and the generator sequence, so classes never interact.
std::map<ClassKey, DiffPoly> split_classes(const DiffPoly& p) {
    std::map<ClassKey, DiffPoly> classes;
    for (const auto& [w, c] : p.terms()) {
        if (w.weight() != -1)
            throw std::domain_error("normalize: monomial of weight != -1");
        classes[class_of(w)].add_term(w, c);
    }
    return classes;
}

// All weight -1 words with the given generator sequence, descending.
std::vector<DiffWord> class_words(const ClassKey& key) {
    std::vector<DiffWord> out;
    std::vector<std::int32_t> acc;
    std::function<void(int, int)> rec = [&](int remaining, int parts) {
        if (parts == 1) {
            acc.push_back(remaining);
            std::vector<DiffLetter> ls(acc.size());
            for (size_t i = 0; i < acc.size(); ++i) ls[i] = DiffLetter{key.gens[i], acc[i]};
            out.emplace_back(std::move(ls));
            acc.pop_back();
            return;
        }
        for (int first = 0; first <= remaining; ++first) {
            acc.push_back(first);
            rec(remaining - first, parts - 1);
            acc.pop_back();
        }
    };
    rec(key.degree - 1, key.degree);
    std::sort(out.begin(), out.end(), WordGreater{});
    return out;
}

TreePoly solve_class(const ClassKey& key, const DiffPoly& p) {
    if (key.degree > kMaxSolveDegree)
        throw std::invalid_argument("normalize_solve: class degree " + std::to_string(key.degree) +
                                    " exceeds the solver cap of " +
                                    std::to_string(kMaxSolveDegree));
    const std::vector<DiffWord> words = class_words(key);
    const size_t n = words.size();
    std::map<DiffWord, size_t, WordGreater> index;
    for (size_t i = 0; i < n; ++i) index.emplace(words[i], i);

    // M[i][j] = coefficient of word i in tau([word j]); rows and columns in
    // descending word order.
    RationalMatrix m(n, n);
    for (size_t j = 0; j < n; ++j) {
        for (const auto& [w, c] : tau_of_bracket(words[j]).terms()) m.set(index.at(w), j, c);
    }

    std::vector<Rational> rhs(n, Rational(0));
    for (const auto& [w, c] : p.terms()) rhs[index.at(w)] = c;

    std::vector<Rational> coeffs;
    std::vector<size_t> natural(n);
    for (size_t i = 0; i < n; ++i) natural[i] = i;
    if (is_unitriangular(m, natural)) {
        // Forward substitution: row k involves only columns <= k.
        coeffs.assign(n, Rational(0));
        for (size_t k = 0; k < n; ++k) {
            Rational sum(0);
            for (const auto& [j, v] : m.row(k)) {
                if (j < k) sum += v * coeffs[j];
            }
            coeffs[k] = rhs[k] - sum;
        }
    } else {
        auto sol = solve(m, rhs);
        if (!sol)
            throw TheoremViolation(
                "normalize_solve: the tau change-of-basis matrix is singular in class " +
                describe_class(words.front()) +
                " (the bracket set is not a basis there); rank " +
                std::to_string(rank(m)) + " of " + std::to_string(n));
        coeffs = std::move(*sol);
    }

    TreePoly out;
    for (size_t j = 0; j < n; ++j) {
        if (coeffs[j] != 0) out.add_term(standard_bracket(words[j]), coeffs[j]);
    }
    return out;
}

}  // namespace

DiffPoly tau(const TreeMon& t) {
    if (t.leaf_count() > kTauMemoMaxDegree) return tau_impl(t);
    auto it = g_tau_cache.find(t);
    if (it != g_tau_cache.end()) return it->second;
    return g_tau_cache.emplace(t, tau_impl(t)).first->second;
}

DiffPoly tau(const TreePoly& p) {
    DiffPoly out;
    for (const auto& [t, c] : p.terms()) out.add_scaled(tau(t), c);
    return out;
}

TreePoly normalize_greedy(const DiffPoly& p) {
    TreePoly out;
    for (auto& [key, cls] : split_classes(p)) {
        TreePoly q = greedy_class(std::move(cls));
        for (const auto& [t, c] : q.terms()) out.add_term(t, c);
    }
    return out;
}

TreePoly normalize_solve(const DiffPoly& p) {
    TreePoly out;
    for (const auto& [key, cls] : split_classes(p)) {
        TreePoly q = solve_class(key, cls);
        for (const auto& [t, c] : q.terms()) out.add_term(t, c);
    }
    return out;
}

TreePoly nov_product(const TreePoly& a, const TreePoly& b, TreeOp op) {
    DiffPoly ta = tau(a);
    DiffPoly tb = tau(b);
    DiffPoly combined = op == TreeOp::Prec ? concat(ta, derive(tb)) : concat(derive(ta), tb);
    return normalize_greedy(combined);
}

void clear_normalform_caches() {
    g_tau_cache.clear();
    g_tau_bracket_cache.clear();
}

}  // namespace nnov
