#include "nnov/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nnov {

namespace {

std::string make_message(size_t position, const std::string& expected, const std::string& found) {
    std::ostringstream os;
    os << "syntax error at byte " << position << ": expected " << expected << ", found " << found;
    return os.str();
}

}  // namespace

SyntaxError::SyntaxError(size_t position_, std::string expected_, std::string found_)
    : std::runtime_error(make_message(position_, expected_, found_)),
      position(position_),
      expected(std::move(expected_)),
      found(std::move(found_)) {}

Rational rational_parse(std::string_view text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](Integer& out) {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed rational: " + std::string(text));
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };
    Integer num, den = 1;
    digits(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        digits(den);
        if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    }
    if (i != text.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    Rational r(num, den);
    return neg ? -r : r;
}

namespace {

// Cursor over the input; all positions reported 1-based.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return text_[pos_]; }
    size_t offset() const { return pos_; }
    size_t position() const { return pos_ + 1; }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_utf8(std::string_view seq) {
        if (text_.substr(pos_, seq.size()) == seq) {
            pos_ += seq.size();
            return true;
        }
        return false;
    }

    std::string found_here() const {
        if (pos_ >= text_.size()) return "end of input";
        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (c < 0x80) return std::string("'") + text_[pos_] + "'";
        // take the whole UTF-8 sequence
        size_t len = 1;
        while (pos_ + len < text_.size() &&
               (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80)
            ++len;
        return "'" + std::string(text_.substr(pos_, len)) + "'";
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(position(), expected, found_here());
    }

    bool ident_ahead() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z';
    }

    std::string ident() {
        skip_ws();
        if (!ident_ahead()) fail("identifier");
        size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("unsigned integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    bool digit_ahead() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
};

constexpr std::string_view kPrecGlyph = "\xE2\x89\xBA";  // U+227A
constexpr std::string_view kSuccGlyph = "\xE2\x89\xBB";  // U+227B

DiffLetter scan_letter(Scanner& s, Alphabet& alphabet) {
    std::string name = s.ident();
    std::int32_t gen = alphabet.intern(name);
    std::int32_t order = 0;
    if (s.consume('\'')) {
        order = 1;
        while (s.consume('\'')) ++order;
    } else if (s.consume('^')) {
        if (!s.consume('(')) s.fail("'(' after '^'");
        order = static_cast<std::int32_t>(s.uint());
        if (!s.consume(')')) s.fail("')'");
    }
    return DiffLetter{gen, order};
}

DiffWord scan_word(Scanner& s, Alphabet& alphabet) {
    std::vector<DiffLetter> letters;
    letters.push_back(scan_letter(s, alphabet));
    while (s.ident_ahead()) letters.push_back(scan_letter(s, alphabet));
    return DiffWord(std::move(letters));
}

TreeMon scan_tree(Scanner& s, Alphabet& alphabet) {
    s.skip_ws();
    if (s.consume('(')) {
        TreeMon left = scan_tree(s, alphabet);
        s.skip_ws();
        TreeOp op;
        if (s.consume('<') || s.consume_utf8(kPrecGlyph))
            op = TreeOp::Prec;
        else if (s.consume('>') || s.consume_utf8(kSuccGlyph))
            op = TreeOp::Succ;
        else
            s.fail("'<' or '>'");
        TreeMon right = scan_tree(s, alphabet);
        s.skip_ws();
        if (!s.consume(')')) s.fail("')'");
        return TreeMon::node(op, left, right);
    }
    if (s.ident_ahead()) return TreeMon::leaf(alphabet.intern(s.ident()));
    s.fail("'(' or identifier");
}

// poly := [sign] term (sign term)*; empty / "0" is the zero polynomial.
template <typename Poly, typename ScanAtom>
Poly scan_poly(Scanner& s, ScanAtom&& scan_atom) {
    Poly out;
    if (s.at_end()) return out;
    s.skip_ws();
    // bare "0"
    if (s.digit_ahead()) {
        Scanner probe = s;
        if (probe.uint() == 0 && probe.at_end()) return out;
    }
    bool negative = false;
    if (s.consume('-'))
        negative = true;
    else
        s.consume('+');
    for (;;) {
        Rational coeff(1);
        if (s.digit_ahead()) {
            const size_t at = s.position();
            Integer num(s.uint());
            Integer den(1);
            if (s.consume('/')) {
                den = Integer(s.uint());
                if (den == 0) throw SyntaxError(at, "nonzero denominator", "0");
            }
            coeff = Rational(num, den);
            s.skip_ws();
            if (!s.consume('*')) s.fail("'*' after coefficient");
        }
        if (negative) coeff = -coeff;
        out.add_term(scan_atom(s), coeff);
        if (s.at_end()) return out;
        if (s.consume('-'))
            negative = true;
        else if (s.consume('+'))
            negative = false;
        else
            s.fail("'+', '-' or end of input");
    }
}

std::string format_letter(const DiffLetter& l, const Alphabet& alphabet) {
    std::string s = alphabet.name(l.gen);
    if (l.order <= 3) {
        s.append(static_cast<size_t>(l.order), '\'');
    } else {
        s += "^(" + std::to_string(l.order) + ")";
    }
    return s;
}

std::string format_coeff_prefix(const Rational& c) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (a == 1) return "";
    return rational_text(a) + " * ";
}

template <typename TermSeq, typename FormatAtom>
std::string format_terms(const TermSeq& terms, FormatAtom&& format_atom) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [atom, coeff] : terms) {
        if (first) {
            if (coeff < 0) out += '-';
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += format_coeff_prefix(coeff);
        out += format_atom(atom);
    }
    return out;
}

// Display order for tree polynomials: degree descending, then the leading
// word of the tau image descending, then the printed form. Distinct trees can
// share a tau leading word (identity (1) pairs), hence the final tiebreak.
std::vector<std::pair<TreeMon, Rational>> sorted_tree_terms(const TreePoly& p,
                                                            const Alphabet& alphabet) {
    std::vector<std::pair<TreeMon, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (a.first.leaf_count() != b.first.leaf_count())
            return a.first.leaf_count() > b.first.leaf_count();
        const DiffWord& la = tau(a.first).leading().first;
        const DiffWord& lb = tau(b.first).leading().first;
        if (int c = compare_3way(la, lb); c != 0) return c > 0;
        return format_tree(a.first, alphabet) < format_tree(b.first, alphabet);
    });
    return terms;
}

}  // namespace

DiffWord parse_word(std::string_view text, Alphabet& alphabet) {
    Scanner s(text);
    DiffWord w = scan_word(s, alphabet);
    if (!s.at_end()) s.fail("letter or end of input");
    return w;
}

std::string format_word(const DiffWord& w, const Alphabet& alphabet) {
    std::string out;
    for (int i = 0; i < w.degree(); ++i) {
        if (i) out += ' ';
        out += format_letter(w.at(i), alphabet);
    }
    return out;
}

TreeMon parse_tree(std::string_view text, Alphabet& alphabet) {
    Scanner s(text);
    TreeMon t = scan_tree(s, alphabet);
    if (!s.at_end()) s.fail("end of input");
    return t;
}

std::string format_tree(const TreeMon& t, const Alphabet& alphabet, bool pretty) {
    if (t.is_leaf()) return alphabet.name(t.gen());
    const char* op = t.op() == TreeOp::Prec ? (pretty ? "\xE2\x89\xBA" : "<")
                                            : (pretty ? "\xE2\x89\xBB" : ">");
    return "(" + format_tree(t.left(), alphabet, pretty) + " " + op + " " +
           format_tree(t.right(), alphabet, pretty) + ")";
}

DiffPoly parse_diff_poly(std::string_view text, Alphabet& alphabet) {
    Scanner s(text);
    return scan_poly<DiffPoly>(s, [&](Scanner& sc) { return scan_word(sc, alphabet); });
}

TreePoly parse_tree_poly(std::string_view text, Alphabet& alphabet) {
    Scanner s(text);
    return scan_poly<TreePoly>(s, [&](Scanner& sc) { return scan_tree(sc, alphabet); });
}

std::string format_poly(const DiffPoly& p, const Alphabet& alphabet) {
    return format_terms(p.terms(), [&](const DiffWord& w) { return format_word(w, alphabet); });
}

std::string format_poly(const TreePoly& p, const Alphabet& alphabet) {
    return format_terms(sorted_tree_terms(p, alphabet),
                        [&](const TreeMon& t) { return format_tree(t, alphabet); });
}

nlohmann::ordered_json poly_to_json(const DiffPoly& p, const Alphabet& alphabet) {
    nlohmann::ordered_json j;
    j["kind"] = "diffpoly";
    int degree = 0;
    for (const auto& [w, c] : p.terms()) degree = std::max(degree, w.degree());
    j["degree"] = degree;
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [w, c] : p.terms()) {
        terms.push_back({{"coeff", rational_fraction_text(c)}, {"atom", format_word(w, alphabet)}});
    }
    return j;
}

nlohmann::ordered_json poly_to_json(const TreePoly& p, const Alphabet& alphabet) {
    nlohmann::ordered_json j;
    j["kind"] = "treepoly";
    int degree = 0;
    for (const auto& [t, c] : p.terms()) degree = std::max(degree, t.leaf_count());
    j["degree"] = degree;
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [t, c] : sorted_tree_terms(p, alphabet)) {
        terms.push_back({{"coeff", rational_fraction_text(c)}, {"atom", format_tree(t, alphabet)}});
    }
    return j;
}

DiffPoly diff_poly_from_json(const nlohmann::ordered_json& j, Alphabet& alphabet) {
    if (j.at("kind") != "diffpoly") throw std::invalid_argument("expected kind \"diffpoly\"");
    DiffPoly p;
    for (const auto& t : j.at("terms")) {
        p.add_term(parse_word(t.at("atom").get<std::string>(), alphabet),
                   rational_parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

TreePoly tree_poly_from_json(const nlohmann::ordered_json& j, Alphabet& alphabet) {
    if (j.at("kind") != "treepoly") throw std::invalid_argument("expected kind \"treepoly\"");
    TreePoly p;
    for (const auto& t : j.at("terms")) {
        p.add_term(parse_tree(t.at("atom").get<std::string>(), alphabet),
                   rational_parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace nnov
