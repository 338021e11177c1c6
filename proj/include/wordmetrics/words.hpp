#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmetrics/errors.hpp"

namespace wordmetrics {

/// Index of a symbol within an alphabet.
using Symbol = std::uint8_t;

/// Default guard for exhaustive enumeration: at most this many words.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// An ordered set of distinct single-character symbols.
///
/// Words store symbol indices, not characters; the alphabet provides the
/// mapping in both directions. Alphabets are immutable after construction
/// and safe to share across threads.
class Alphabet {
public:
    /// Builds an alphabet from a string of distinct characters.
    /// Throws InvalidAlphabetError if empty or if a character repeats.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }

    char symbol(Symbol index) const { return symbols_.at(index); }

    /// Index of a character, or -1 if the character is not in the alphabet.
    int index_of(char c) const noexcept { return lookup_[static_cast<unsigned char>(c)]; }

    const std::string& symbols() const noexcept { return symbols_; }

    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    int lookup_[256];
};

/// A finite sequence of symbol indices; length 0 is the empty word.
///
/// Comparison is shortlex: first by length, then lexicographically by
/// symbol index. Shortlex is the canonical order for enumeration and for
/// every "minimal witness" reported by the verifiers.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Symbol operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Symbol> letters() const noexcept { return letters_; }

    std::string to_string(const Alphabet& alphabet) const;

    bool operator==(const Word& other) const noexcept = default;

    std::strong_ordering operator<=>(const Word& other) const noexcept
    {
        if (letters_.size() != other.letters_.size())
            return letters_.size() <=> other.letters_.size();
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_[i] != other.letters_[i])
                return letters_[i] <=> other.letters_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<Symbol> letters_;
};

/// Parses a literal string over the alphabet into a Word.
/// The empty string parses to the empty word.
/// Throws UnknownSymbolError for the first character not in the alphabet.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// All words of exactly the given length, in lexicographic order.
/// Throws CapExceededError if N^length exceeds the cap.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// All words of length 0..max_len in shortlex order.
/// Throws CapExceededError if the total word count exceeds the cap.
std::vector<Word> enumerate_language(const Alphabet& alphabet, std::size_t max_len,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Number of words of exactly the given length, saturated at cap + 1.
std::uint64_t count_words(std::size_t alphabet_size, std::size_t length,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Number of words of length 0..max_len, saturated at cap + 1.
std::uint64_t count_language(std::size_t alphabet_size, std::size_t max_len,
                             std::uint64_t cap = kDefaultEnumerationCap);

} // namespace wordmetrics
