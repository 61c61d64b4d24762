#include "holonomy/words.hpp"

#include <algorithm>

#include "holonomy/errors.hpp"

namespace holonomy {

Word Word::parse(std::string_view text) {
    std::vector<Color> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        auto c = color_from_char(ch);
        if (!c) fail(ErrorKind::Config, "invalid letter '" + std::string(1, ch) + "' in word");
        letters.push_back(*c);
    }
    return reduce(letters);
}

Word Word::reduce(std::span<const Color> letters) {
    // Stack-based cancellation yields the unique normal form.
    Word w;
    for (Color c : letters) {
        if (!w.letters_.empty() && w.letters_.back() == c)
            w.letters_.pop_back();
        else
            w.letters_.push_back(c);
    }
    return w;
}

bool Word::uses(Color c) const { return std::find(letters_.begin(), letters_.end(), c) != letters_.end(); }

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Color c : letters_) s.push_back(to_char(c));
    return s;
}

Word operator*(const Word& u, const Word& v) {
    std::vector<Color> joined(u.letters_);
    joined.insert(joined.end(), v.letters_.begin(), v.letters_.end());
    return Word::reduce(joined);
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                  other.letters_.end());
}

namespace {

// 4 * 3^(len-1) reduced words of each length len >= 1.
std::uint64_t words_of_length(std::size_t len) {
    std::uint64_t count = 4;
    for (std::size_t i = 1; i < len; ++i) count *= 3;
    return count;
}

}  // namespace

Word nth_word(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::Config, "word enumeration starts at 1");
    std::uint64_t rank = n - 1;
    std::size_t len = 1;
    while (rank >= words_of_length(len)) {
        rank -= words_of_length(len);
        ++len;
    }
    // Mixed-radix digits: 4 choices for the first letter, 3 for each later
    // one (the previous letter is skipped), most significant first.
    std::uint64_t tail = words_of_length(len) / 4;
    std::vector<Color> letters;
    letters.reserve(len);
    letters.push_back(static_cast<Color>(rank / tail));
    rank %= tail;
    for (std::size_t i = 1; i < len; ++i) {
        tail /= 3;
        auto digit = static_cast<int>(rank / tail);
        rank %= tail;
        if (digit >= index(letters.back())) ++digit;
        letters.push_back(static_cast<Color>(digit));
    }
    return Word::reduce(letters);
}

std::uint64_t word_rank(const Word& w) {
    if (w.is_identity()) fail(ErrorKind::Config, "the identity is not enumerated");
    std::uint64_t rank = 0;
    for (std::size_t len = 1; len < w.length(); ++len) rank += words_of_length(len);
    auto letters = w.letters();
    std::uint64_t within = static_cast<std::uint64_t>(index(letters[0]));
    for (std::size_t i = 1; i < letters.size(); ++i) {
        int digit = index(letters[i]);
        if (digit > index(letters[i - 1])) --digit;
        within = within * 3 + static_cast<std::uint64_t>(digit);
    }
    return rank + within + 1;
}

std::vector<Word> reduced_words(ColorMask alphabet, std::size_t max_length) {
    std::vector<Word> out;
    std::vector<std::vector<Color>> frontier{{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<std::vector<Color>> next;
        for (const auto& prefix : frontier) {
            for (Color c : kColors) {
                if (!alphabet.contains(c) || (!prefix.empty() && prefix.back() == c)) continue;
                auto extended = prefix;
                extended.push_back(c);
                out.push_back(Word::reduce(extended));
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace holonomy
