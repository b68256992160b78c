// Differential letters and words.
//
// A letter is a generator with a derivation order: x^(n) is the generator x
// derived n times. A word is a nonempty sequence of letters; its degree is
// its length and its weight is (sum of orders) - degree, so every plain
// generator has weight -1 and applying the derivation raises weight by 1.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nnov {

struct DiffLetter {
    std::int32_t gen = 0;    // interned generator id
    std::int32_t order = 0;  // derivation degree, >= 0

    friend bool operator==(const DiffLetter&, const DiffLetter&) = default;
    friend auto operator<=>(const DiffLetter&, const DiffLetter&) = default;
};

class DiffWord {
public:
    DiffWord() = default;
    explicit DiffWord(std::vector<DiffLetter> letters) : letters_(std::move(letters)) {}

    static DiffWord single(std::int32_t gen, std::int32_t order = 0) {
        return DiffWord({DiffLetter{gen, order}});
    }

    int degree() const { return static_cast<int>(letters_.size()); }
    int weight() const {
        int w = 0;
        for (const auto& l : letters_) w += l.order;
        return w - degree();
    }

    bool empty() const { return letters_.empty(); }
    const std::vector<DiffLetter>& letters() const { return letters_; }
    const DiffLetter& at(int pos0) const { return letters_.at(static_cast<size_t>(pos0)); }

    // Contiguous subword, 0-based start.
    DiffWord subword(int start0, int length) const {
        auto b = letters_.begin() + start0;
        return DiffWord(std::vector<DiffLetter>(b, b + length));
    }

    DiffWord with_order_incremented(int pos0) const {
        DiffWord w(*this);
        ++w.letters_[static_cast<size_t>(pos0)].order;
        return w;
    }

    friend DiffWord operator+(const DiffWord& a, const DiffWord& b) {
        std::vector<DiffLetter> v;
        v.reserve(a.letters_.size() + b.letters_.size());
        v.insert(v.end(), a.letters_.begin(), a.letters_.end());
        v.insert(v.end(), b.letters_.begin(), b.letters_.end());
        return DiffWord(std::move(v));
    }

    friend bool operator==(const DiffWord&, const DiffWord&) = default;

    size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& l : letters_) {
            h = (h ^ static_cast<std::uint64_t>(l.gen)) * 1099511628211ull;
            h = (h ^ static_cast<std::uint64_t>(l.order)) * 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    std::vector<DiffLetter> letters_;
};

struct DiffWordHash {
    size_t operator()(const DiffWord& w) const { return w.hash(); }
};

inline int word_weight(const DiffWord& u) { return u.weight(); }
inline int word_degree(const DiffWord& u) { return u.degree(); }

// User-facing generator name table. Ids are dense and assigned in intern order.
class Alphabet {
public:
    Alphabet() = default;

    static Alphabet single_x() {
        Alphabet a;
        a.intern("x");
        return a;
    }

    // Comma-separated list, e.g. "a,b,c".
    static Alphabet from_list(const std::string& list);

    std::int32_t intern(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        auto id = static_cast<std::int32_t>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    const std::string& name(std::int32_t id) const { return names_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(names_.size()); }
    std::vector<std::int32_t> all_ids() const {
        std::vector<std::int32_t> v(names_.size());
        for (size_t i = 0; i < names_.size(); ++i) v[i] = static_cast<std::int32_t>(i);
        return v;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::int32_t> ids_;
};

}  // namespace nnov
