// nnov - free noncommutative Novikov algebra toolkit.
//
// Exit codes: 0 success / all checks pass, 1 verification failure or
// normalization impossibility, 2 usage or parse error.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nnov/bracketing.hpp"
#include "nnov/koszul.hpp"
#include "nnov/normalform.hpp"
#include "nnov/textio.hpp"
#include "nnov/verify.hpp"

namespace {

using nnov::Alphabet;

struct GlobalOpts {
    std::string format = "text";
    std::string alphabet = "x";
    int jobs = 0;  // 0 = default

    bool json() const { return format == "json"; }
    Alphabet make_alphabet() const { return Alphabet::from_list(alphabet); }
};

void emit(const GlobalOpts& g, const nlohmann::ordered_json& j, const std::string& text) {
    if (g.json())
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

int run_bracket(const GlobalOpts& g, const std::string& word_text) {
    Alphabet alpha = g.make_alphabet();
    nnov::DiffWord w = nnov::parse_word(word_text, alpha);
    if (w.weight() != -1) {
        std::cerr << "error: word has weight " << w.weight() << ", bracketing needs weight -1\n";
        return 2;
    }
    nnov::TreeMon t = nnov::standard_bracket(w);
    emit(g, nnov::poly_to_json(nnov::TreePoly::monomial(t), alpha), nnov::format_tree(t, alpha));
    return 0;
}

int run_expand(const GlobalOpts& g, const std::string& poly_text) {
    Alphabet alpha = g.make_alphabet();
    nnov::TreePoly p = nnov::parse_tree_poly(poly_text, alpha);
    nnov::DiffPoly expansion = nnov::tau(p);
    emit(g, nnov::poly_to_json(expansion, alpha), nnov::format_poly(expansion, alpha));
    return 0;
}

int run_normalize(const GlobalOpts& g, const std::string& poly_text, const std::string& method) {
    Alphabet alpha = g.make_alphabet();
    nnov::DiffPoly p = nnov::parse_diff_poly(poly_text, alpha);
    if (method == "greedy" || method == "solve") {
        nnov::TreePoly q =
            method == "greedy" ? nnov::normalize_greedy(p) : nnov::normalize_solve(p);
        emit(g, nnov::poly_to_json(q, alpha), nnov::format_poly(q, alpha));
        return 0;
    }
    // both: disagreement is a verification failure
    nnov::TreePoly qg = nnov::normalize_greedy(p);
    nnov::TreePoly qs = nnov::normalize_solve(p);
    const bool agree = qg == qs;
    if (g.json()) {
        nlohmann::ordered_json j;
        j["kind"] = "normalize-both";
        j["agree"] = agree;
        j["greedy"] = nnov::poly_to_json(qg, alpha);
        j["solve"] = nnov::poly_to_json(qs, alpha);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "greedy: " << nnov::format_poly(qg, alpha) << "\n";
        std::cout << "solve:  " << nnov::format_poly(qs, alpha) << "\n";
        if (!agree) std::cout << "DISAGREEMENT\n";
    }
    return agree ? 0 : 1;
}

int run_basis(const GlobalOpts& g, int degree, bool multilinear) {
    Alphabet alpha = g.make_alphabet();
    const nnov::EnumMode mode = multilinear ? nnov::EnumMode::Multilinear : nnov::EnumMode::Single;
    const auto words = nnov::enumerate_words(degree, alpha.all_ids(), mode);
    if (g.json()) {
        nlohmann::ordered_json j;
        j["kind"] = "basis";
        j["degree"] = degree;
        j["mode"] = multilinear ? "multilinear" : "single";
        j["count"] = words.size();
        auto& entries = j["entries"] = nlohmann::ordered_json::array();
        for (const auto& w : words) {
            entries.push_back({{"word", nnov::format_word(w, alpha)},
                               {"tree", nnov::format_tree(nnov::standard_bracket(w), alpha)}});
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& w : words) {
            std::cout << nnov::format_word(w, alpha) << "  ->  "
                      << nnov::format_tree(nnov::standard_bracket(w), alpha) << "\n";
        }
    }
    return 0;
}

int run_dims(const GlobalOpts& g, int max_degree, bool multilinear) {
    nnov::Report rep = nnov::check_dims(max_degree, multilinear);
    // re-derive the table for display
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::string text;
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<std::int32_t> ids;
        if (multilinear) {
            for (int i = 0; i < n; ++i) ids.push_back(i);
        } else {
            ids.push_back(0);
        }
        const auto words = nnov::enumerate_words(
            n, ids, multilinear ? nnov::EnumMode::Multilinear : nnov::EnumMode::Single);
        rows.push_back({{"degree", n}, {"count", words.size()}});
        text += "degree " + std::to_string(n) + ": " + std::to_string(words.size()) + "\n";
    }
    if (g.json()) {
        nlohmann::ordered_json j;
        j["kind"] = "dims";
        j["multilinear"] = multilinear;
        j["rows"] = rows;
        j["pass"] = rep.pass();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text << (rep.pass() ? "all counts match the closed formula\n"
                                         : "MISMATCH with the closed formula\n");
    }
    return rep.pass() ? 0 : 1;
}

int run_order(const GlobalOpts& g, const std::string& wa, const std::string& wb) {
    Alphabet alpha = g.make_alphabet();
    nnov::DiffWord a = nnov::parse_word(wa, alpha);
    nnov::DiffWord b = nnov::parse_word(wb, alpha);
    if (a == b) {
        std::cerr << "error: the words are equal\n";
        return 2;
    }
    const char* result = nnov::compare(a, b) == nnov::Ordering::Greater ? "GREATER" : "LESS";
    if (g.json()) {
        nlohmann::ordered_json j;
        j["kind"] = "order";
        j["result"] = result;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite, int degree, std::uint64_t trials,
               std::uint64_t seed) {
    nnov::Report rep;
    if (suite == "triangularity") {
        rep = nnov::check_triangularity(degree > 0 ? degree : 7, g.jobs);
    } else if (suite == "basis-rank") {
        rep = nnov::check_basis_rank(degree > 0 ? degree : 7);
    } else if (suite == "identities") {
        rep = nnov::check_identities(degree > 0 ? degree : 3, trials, seed, g.jobs);
    } else if (suite == "comparator") {
        rep = nnov::check_comparator(degree > 0 ? degree : 6, g.jobs);
    } else if (suite == "koszul-dual") {
        rep = nnov::check_koszul(degree > 0 ? degree : 5);
    } else if (suite == "dims") {
        rep = nnov::check_dims(degree > 0 ? degree : 10, false);
    } else {
        std::cerr << "error: unknown verify suite '" << suite << "'\n";
        return 2;
    }
    if (g.json())
        std::cout << rep.to_json().dump() << "\n";
    else
        std::cout << rep.text();
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free noncommutative Novikov algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--alphabet", g.alphabet, "Comma-separated generator names")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads for verification (0 = auto)");

    std::string word_text, poly_text, method = "greedy", wa, wb, suite;
    int degree = 0, max_degree = 10;
    bool multilinear = false;
    std::uint64_t trials = 1000, seed = 42;

    auto* cmd_bracket = app.add_subcommand("bracket", "Standard bracketing of a weight -1 word");
    cmd_bracket->add_option("word", word_text, "Differential word")->required();

    auto* cmd_expand = app.add_subcommand("expand", "Expand a tree polynomial through tau");
    cmd_expand->add_option("poly", poly_text, "Tree polynomial")->required();

    auto* cmd_normalize =
        app.add_subcommand("normalize", "Normal form of a weight -1 differential polynomial");
    cmd_normalize->add_option("poly", poly_text, "Differential polynomial")->required();
    cmd_normalize->add_option("--method", method, "greedy | solve | both")
        ->check(CLI::IsMember({"greedy", "solve", "both"}))
        ->capture_default_str();

    auto* cmd_basis = app.add_subcommand("basis", "Monomial basis words and trees of a degree");
    cmd_basis->add_option("--degree", degree, "Degree")->required();
    cmd_basis->add_flag("--multilinear", multilinear, "Multilinear mode (|alphabet| = degree)");

    auto* cmd_dims = app.add_subcommand("dims", "Basis counts against the closed formulas");
    cmd_dims->add_option("--max-degree", max_degree, "Largest degree")->capture_default_str();
    cmd_dims->add_flag("--multilinear", multilinear, "Multilinear mode");

    auto* cmd_order = app.add_subcommand("order", "Compare two words in the monomial order");
    cmd_order->add_option("word1", wa, "First word")->required();
    cmd_order->add_option("word2", wb, "Second word")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    cmd_verify
        ->add_option("suite", suite,
                     "triangularity | basis-rank | identities | comparator | koszul-dual | dims")
        ->required();
    cmd_verify->add_option("--degree", degree, "Degree / bound (suite-specific default)");
    cmd_verify->add_option("--trials", trials, "Random trials")->capture_default_str();
    cmd_verify->add_option("--seed", seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_bracket->parsed()) return run_bracket(g, word_text);
        if (cmd_expand->parsed()) return run_expand(g, poly_text);
        if (cmd_normalize->parsed()) return run_normalize(g, poly_text, method);
        if (cmd_basis->parsed()) return run_basis(g, degree, multilinear);
        if (cmd_dims->parsed()) return run_dims(g, max_degree, multilinear);
        if (cmd_order->parsed()) return run_order(g, wa, wb);
        if (cmd_verify->parsed()) return run_verify(g, suite, degree, trials, seed);
    } catch (const nnov::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nnov::NormalizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nnov::TheoremViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
