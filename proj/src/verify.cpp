#include "nnov/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "nnov/koszul.hpp"
#include "nnov/linalg.hpp"
#include "nnov/normalform.hpp"
#include "nnov/textio.hpp"

namespace nnov {

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["params"] = params;
    j["checked"] = checked;
    auto& f = j["failures"] = nlohmann::ordered_json::array();
    for (const auto& fail : failures) {
        f.push_back({{"witness", fail.witness}, {"detail", fail.detail}});
    }
    j["millis"] = 0;  // wall time is intentionally excluded from JSON
    return j;
}

std::string Report::text(size_t max_failures_shown) const {
    std::ostringstream os;
    os << "suite " << suite << "  params " << params.dump() << "\n";
    os << "checked " << checked << ", failures " << failures.size() << ", " << millis << " ms: "
       << (pass() ? "PASS" : "FAIL") << "\n";
    size_t shown = 0;
    for (const auto& f : failures) {
        if (shown++ >= max_failures_shown) {
            os << "  ... and " << failures.size() - max_failures_shown << " more\n";
            break;
        }
        os << "  witness: " << f.witness << "\n    " << f.detail << "\n";
    }
    return os.str();
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
    return splitmix64(s);
}

std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    for (;;) {
        std::uint64_t v = splitmix64(state);
        if (v < limit) return v % n;
    }
}

int default_jobs() {
    if (const char* env = std::getenv("NNOV_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc >= 1 ? static_cast<int>(hc) : 1;
}

std::vector<Failure> run_indexed(std::uint64_t n_items, int jobs,
                                 const std::function<std::vector<Failure>(std::uint64_t)>& fn) {
    if (jobs <= 0) jobs = default_jobs();
    std::vector<std::vector<Failure>> results(n_items);
    if (jobs == 1 || n_items <= 1) {
        for (std::uint64_t i = 0; i < n_items; ++i) results[i] = fn(i);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= n_items) return;
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int width = static_cast<int>(std::min<std::uint64_t>(n_items, static_cast<std::uint64_t>(jobs)));
        pool.reserve(static_cast<size_t>(width));
        for (int t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<Failure> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

const Alphabet& display_alphabet() {
    static const Alphabet a = Alphabet::single_x();
    return a;
}

std::vector<std::int32_t> single_gen() { return {0}; }

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

Report check_triangularity(int degree, int jobs) {
    if (degree < 1) throw std::invalid_argument("check_triangularity: degree must be >= 1");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "triangularity";
    rep.params = {{"degree", degree}};

    const auto words = enumerate_words(degree, single_gen(), EnumMode::Single);
    const Alphabet& alpha = display_alphabet();

    rep.failures = run_indexed(words.size(), jobs, [&](std::uint64_t i) {
        std::vector<Failure> fails;
        const DiffWord& u = words[i];
        const DiffPoly expansion = tau(standard_bracket(u));
        const Rational* self = expansion.coeff(u);
        if (!self || *self != 1) {
            fails.push_back({format_word(u, alpha),
                             "coefficient of the word in its own expansion is " +
                                 (self ? rational_text(*self) : std::string("0")) + ", not 1"});
        }
        const Factorization& fu = factorize(u);
        for (const auto& [v, c] : expansion.terms()) {
            if (v == u) continue;
            if (compare_3way(u, v) <= 0) {
                fails.push_back({format_word(u, alpha),
                                 "expansion term " + format_word(v, alpha) +
                                     " is not smaller in the monomial order"});
            }
            const Factorization& fv = factorize(v);
            const bool positional =
                fv.head_pos > fu.head_pos ||
                (fv.head_pos == fu.head_pos && fv.head_order <= fu.head_order);
            if (!positional) {
                fails.push_back({format_word(u, alpha),
                                 "expansion term " + format_word(v, alpha) +
                                     " violates the positional head bound (rho " +
                                     std::to_string(fv.head_pos) + " < " +
                                     std::to_string(fu.head_pos) + ")"});
            }
        }
        return fails;
    });

    rep.checked = words.size();
    rep.millis = ms_since(start);
    return rep;
}

Report check_basis_rank(int degree) {
    if (degree < 1) throw std::invalid_argument("check_basis_rank: degree must be >= 1");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "basis-rank";
    rep.params = {{"degree", degree}};

    const auto words = enumerate_words(degree, single_gen(), EnumMode::Single);
    const size_t n = words.size();
    std::map<DiffWord, size_t, WordGreater> index;
    for (size_t i = 0; i < n; ++i) index.emplace(words[i], i);

    RationalMatrix m(n, n);
    for (size_t j = 0; j < n; ++j) {
        const DiffPoly expansion = tau(standard_bracket(words[j]));
        for (const auto& [w, c] : expansion.terms()) m.set(index.at(w), j, c);
    }

    std::vector<size_t> natural(n);
    for (size_t i = 0; i < n; ++i) natural[i] = i;
    if (!is_unitriangular(m, natural)) {
        rep.failures.push_back(
            {"degree " + std::to_string(degree),
             "tau matrix is not unitriangular in the descending comparator order"});
    }
    const size_t rk = rank(m);
    if (rk != n) {
        rep.failures.push_back({"degree " + std::to_string(degree),
                                "tau matrix rank is " + std::to_string(rk) + ", expected " +
                                    std::to_string(n) +
                                    " (the bracket set is linearly dependent)"});
    }

    rep.checked = n;
    rep.millis = ms_since(start);
    return rep;
}

Report check_dims(int max_degree, bool multilinear) {
    if (max_degree < 1) throw std::invalid_argument("check_dims: max degree must be >= 1");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "dims";
    rep.params = {{"max_degree", max_degree}, {"multilinear", multilinear}};

    for (int n = 1; n <= max_degree; ++n) {
        std::vector<std::int32_t> alphabet;
        if (multilinear) {
            for (int i = 0; i < n; ++i) alphabet.push_back(i);
        } else {
            alphabet = single_gen();
        }
        const auto words =
            enumerate_words(n, alphabet, multilinear ? EnumMode::Multilinear : EnumMode::Single);
        Integer expected = binomial(2 * n - 2, n - 1);
        if (multilinear) expected *= factorial(n);
        if (Integer(words.size()) != expected) {
            rep.failures.push_back({"degree " + std::to_string(n),
                                    "count " + std::to_string(words.size()) + " != formula " +
                                        expected.str()});
        }
    }

    rep.checked = static_cast<std::uint64_t>(max_degree);
    rep.millis = ms_since(start);
    return rep;
}

namespace {

// Random basis tree of degree uniform in [1, max_degree].
TreeMon random_basis_tree(std::uint64_t& rng, int max_degree) {
    const int d = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_degree)));
    static thread_local std::map<int, std::vector<DiffWord>> cache;
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, enumerate_words(d, single_gen(), EnumMode::Single)).first;
    const auto& words = it->second;
    return standard_bracket(words[uniform_below(rng, words.size())]);
}

}  // namespace

Report check_identities(int degree, std::uint64_t trials, std::uint64_t seed, int jobs) {
    if (degree < 1 || trials < 1)
        throw std::invalid_argument("check_identities: degree and trials must be >= 1");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "identities";
    rep.params = {{"degree", degree}, {"trials", trials}, {"seed", seed}};
    const Alphabet& alpha = display_alphabet();

    // (i) symbolic multilinear check on three distinct generators through tau
    {
        const TreeMon a = TreeMon::leaf(0), b = TreeMon::leaf(1), c = TreeMon::leaf(2);
        const TreeMon lhs1 = TreeMon::node(TreeOp::Succ, a, TreeMon::node(TreeOp::Prec, b, c));
        const TreeMon rhs1 = TreeMon::node(TreeOp::Prec, TreeMon::node(TreeOp::Succ, a, b), c);
        if (!(tau(lhs1) == tau(rhs1))) {
            rep.failures.push_back({"symbolic identity (1)", "tau expansions differ"});
        }
        const DiffPoly l2 = tau(TreeMon::node(TreeOp::Succ, TreeMon::node(TreeOp::Prec, a, b), c)) -
                            tau(TreeMon::node(TreeOp::Succ, a, TreeMon::node(TreeOp::Succ, b, c)));
        const DiffPoly r2 = tau(TreeMon::node(TreeOp::Prec, a, TreeMon::node(TreeOp::Succ, b, c))) -
                            tau(TreeMon::node(TreeOp::Prec, TreeMon::node(TreeOp::Prec, a, b), c));
        if (!(l2 == r2)) {
            rep.failures.push_back({"symbolic identity (2)", "tau expansions differ"});
        }
    }

    // (ii) seeded random basis-element triples through nov_product
    Alphabet tri_alpha;  // names for witnesses only
    tri_alpha.intern("x");
    auto trial_fails = run_indexed(trials, jobs, [&](std::uint64_t i) {
        std::vector<Failure> fails;
        std::uint64_t rng = item_seed(seed, i);
        const TreeMon a = random_basis_tree(rng, degree);
        const TreeMon b = random_basis_tree(rng, degree);
        const TreeMon c = random_basis_tree(rng, degree);
        const std::string witness = "trial " + std::to_string(i) + ": a=" + format_tree(a, alpha) +
                                    "  b=" + format_tree(b, alpha) + "  c=" + format_tree(c, alpha);
        const TreePoly pa = TreePoly::monomial(a), pb = TreePoly::monomial(b),
                       pc = TreePoly::monomial(c);
        try {
            // (1)  a succ (b prec c) == (a succ b) prec c
            const TreePoly l1 = nov_product(pa, nov_product(pb, pc, TreeOp::Prec), TreeOp::Succ);
            const TreePoly r1 = nov_product(nov_product(pa, pb, TreeOp::Succ), pc, TreeOp::Prec);
            if (!(l1 == r1)) fails.push_back({witness, "identity (1) normal forms differ"});
            // (2)  (a prec b) succ c - a succ (b succ c) == a prec (b succ c) - (a prec b) prec c
            const TreePoly ab = nov_product(pa, pb, TreeOp::Prec);
            const TreePoly bc = nov_product(pb, pc, TreeOp::Succ);
            const TreePoly lhs = nov_product(ab, pc, TreeOp::Succ) - nov_product(pa, bc, TreeOp::Succ);
            const TreePoly rhs = nov_product(pa, bc, TreeOp::Prec) - nov_product(ab, pc, TreeOp::Prec);
            if (!(lhs == rhs)) fails.push_back({witness, "identity (2) normal forms differ"});
        } catch (const NormalizationError& e) {
            fails.push_back({witness, std::string("normalization failed: ") + e.what()});
        } catch (const TheoremViolation& e) {
            fails.push_back({witness, std::string("normalization failed: ") + e.what()});
        }
        return fails;
    });
    rep.failures.insert(rep.failures.end(), trial_fails.begin(), trial_fails.end());

    rep.checked = 2 + trials;
    rep.millis = ms_since(start);
    return rep;
}

Report check_comparator(int degree, int jobs) {
    if (degree < 1) throw std::invalid_argument("check_comparator: degree must be >= 1");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "comparator";
    rep.params = {{"degree", degree}};
    const Alphabet& alpha = display_alphabet();

    const auto words = enumerate_words(degree, single_gen(), EnumMode::Single);
    const size_t n = words.size();

    // trichotomy + antisymmetry over all distinct pairs, sharded by first index
    auto pair_fails = run_indexed(n, jobs, [&](std::uint64_t i) {
        std::vector<Failure> fails;
        for (size_t j = i + 1; j < n; ++j) {
            const int c1 = compare_3way(words[i], words[j]);
            const int c2 = compare_3way(words[j], words[i]);
            if (c1 == 0 || c2 == 0 || c1 != -c2) {
                fails.push_back({format_word(words[i], alpha) + " vs " + format_word(words[j], alpha),
                                 "not antisymmetric/trichotomous: " + std::to_string(c1) + ", " +
                                     std::to_string(c2)});
            }
        }
        return fails;
    });
    rep.failures = std::move(pair_fails);

    // transitivity on sampled triples (deterministic seed from the degree)
    const std::uint64_t samples = n >= 3 ? 10000 : 0;
    std::uint64_t rng = item_seed(0x6e6f76ull, static_cast<std::uint64_t>(degree));
    std::uint64_t transitive_checked = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const size_t a = uniform_below(rng, n), b = uniform_below(rng, n), c = uniform_below(rng, n);
        if (a == b || b == c || a == c) continue;
        ++transitive_checked;
        const int ab = compare_3way(words[a], words[b]);
        const int bc = compare_3way(words[b], words[c]);
        const int ac = compare_3way(words[a], words[c]);
        if ((ab > 0 && bc > 0 && ac <= 0) || (ab < 0 && bc < 0 && ac >= 0)) {
            rep.failures.push_back({format_word(words[a], alpha) + ", " +
                                        format_word(words[b], alpha) + ", " +
                                        format_word(words[c], alpha),
                                    "transitivity violated"});
        }
    }

    rep.checked = (n * (n - 1)) / 2 + transitive_checked;
    rep.millis = ms_since(start);
    return rep;
}

Report check_koszul(int max_arity) {
    if (max_arity < 3) throw std::invalid_argument("check_koszul: max arity must be >= 3");
    const auto start = Clock::now();
    Report rep;
    rep.suite = "koszul-dual";
    rep.params = {{"max_arity", max_arity}};

    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (int n = 2; n <= max_arity; ++n) {
        const int d = dual_dim(n);
        dims.push_back(d);
        const int expected = n <= 3 ? 2 : 0;
        if (d != expected) {
            rep.failures.push_back({"arity " + std::to_string(n),
                                    "dual dimension " + std::to_string(d) + " != expected " +
                                        std::to_string(expected)});
        }
    }
    rep.params["dims_from_arity_2"] = dims;

    rep.checked = static_cast<std::uint64_t>(max_arity - 1);
    rep.millis = ms_since(start);
    return rep;
}

}  // namespace nnov
