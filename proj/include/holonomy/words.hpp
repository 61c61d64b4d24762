#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holonomy/graph.hpp"

namespace holonomy {

/// Reduced word in the free product of four order-two groups generated by
/// A, B, C, D. Letters are stored as written, leftmost first: the word
/// "AB" acts by B first, then A. The empty word is the identity.
class Word {
public:
    Word() = default;

    /// Parses a string over "ABCD" and reduces it. Throws Error(Config) on
    /// other characters.
    static Word parse(std::string_view text);
    /// Free-product normal form: adjacent equal letters cancel until none remain.
    static Word reduce(std::span<const Color> letters);

    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    std::span<const Color> letters() const { return letters_; }
    /// Letter applied at step i (1-based, right to left): w_i.
    Color applied(std::size_t i) const { return letters_[letters_.size() - i]; }
    bool uses(Color c) const;

    std::string str() const;

    /// Concatenation u·v (v acts first), reduced.
    friend Word operator*(const Word& u, const Word& v);
    bool operator==(const Word&) const = default;
    /// Length first, then lexicographic with A < B < C < D.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Color> letters_;
};

/// n-th nonempty reduced word (n >= 1) in length-then-lexicographic order:
/// A, B, C, D, AB, AC, AD, BA, ...
Word nth_word(std::uint64_t n);

/// Position of a nonempty reduced word in that order (inverse of nth_word).
std::uint64_t word_rank(const Word& w);

/// All reduced words over `alphabet` with length in [1, max_length], in
/// length-then-lexicographic order.
std::vector<Word> reduced_words(ColorMask alphabet, std::size_t max_length);

}  // namespace holonomy
