// Text grammar and JSON serialization.
//
//   word    := letter (WS letter)*
//   letter  := IDENT prime* | IDENT "^(" UINT ")"
//   tree    := IDENT | "(" tree WS? op WS? tree ")"    (parentheses mandatory)
//   op      := "<" | ">"                                (unicode prec/succ accepted)
//   poly    := [sign] term (sign term)* | "0" | ""
//   term    := [coef "*"] atom
//   coef    := UINT | UINT "/" UINT
//
// The printer uses primes up to order 3 and ^(k) above, emits terms in
// canonical comparator order with explicit signs, and round-trips exactly.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nnov/normalform.hpp"
#include "nnov/poly.hpp"
#include "nnov/terms.hpp"

namespace nnov {

struct SyntaxError : std::runtime_error {
    SyntaxError(size_t position, std::string expected, std::string found);
    size_t position;  // 1-based byte offset, at most input length + 1
    std::string expected;
    std::string found;
};

DiffWord parse_word(std::string_view text, Alphabet& alphabet);
std::string format_word(const DiffWord& w, const Alphabet& alphabet);

TreeMon parse_tree(std::string_view text, Alphabet& alphabet);
// ASCII form "(a < b)"; pretty=true uses the prec/succ glyphs instead.
std::string format_tree(const TreeMon& t, const Alphabet& alphabet, bool pretty = false);

DiffPoly parse_diff_poly(std::string_view text, Alphabet& alphabet);
TreePoly parse_tree_poly(std::string_view text, Alphabet& alphabet);
std::string format_poly(const DiffPoly& p, const Alphabet& alphabet);
std::string format_poly(const TreePoly& p, const Alphabet& alphabet);

// JSON schema: {"kind": ..., "degree": ..., "terms": [{"coeff": "p/q", "atom": ...}]}
nlohmann::ordered_json poly_to_json(const DiffPoly& p, const Alphabet& alphabet);
nlohmann::ordered_json poly_to_json(const TreePoly& p, const Alphabet& alphabet);
DiffPoly diff_poly_from_json(const nlohmann::ordered_json& j, Alphabet& alphabet);
TreePoly tree_poly_from_json(const nlohmann::ordered_json& j, Alphabet& alphabet);

}  // namespace nnov
