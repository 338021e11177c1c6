#include "wordmetrics/words.hpp"

#include <algorithm>

namespace wordmetrics {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols)
{
    if (symbols_.empty())
        throw InvalidAlphabetError("alphabet must contain at least one symbol");
    std::fill(std::begin(lookup_), std::end(lookup_), -1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto c = static_cast<unsigned char>(symbols_[i]);
        if (lookup_[c] != -1)
            throw InvalidAlphabetError("alphabet symbols must be distinct: '" +
                                       std::string(1, symbols_[i]) + "' repeats");
        lookup_[c] = static_cast<int>(i);
    }
    if (symbols_.size() > 256)
        throw InvalidAlphabetError("alphabet too large");
}

std::string Word::to_string(const Alphabet& alphabet) const
{
    std::string out;
    out.reserve(letters_.size());
    for (Symbol s : letters_)
        out.push_back(alphabet.symbol(s));
    return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet)
{
    std::vector<Symbol> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        int idx = alphabet.index_of(text[i]);
        if (idx < 0)
            throw UnknownSymbolError(i, text[i]);
        letters.push_back(static_cast<Symbol>(idx));
    }
    return Word(std::move(letters));
}

std::uint64_t count_words(std::size_t alphabet_size, std::size_t length, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (count > cap / alphabet_size)
            return cap + 1;
        count *= alphabet_size;
    }
    return count;
}

std::uint64_t count_language(std::size_t alphabet_size, std::size_t max_len, std::uint64_t cap)
{
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::uint64_t c = count_words(alphabet_size, n, cap);
        if (c > cap || total > cap - c)
            return cap + 1;
        total += c;
    }
    return total;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length, std::uint64_t cap)
{
    std::uint64_t count = count_words(alphabet.size(), length, cap);
    if (count > cap)
        throw CapExceededError(cap);

    std::vector<Word> out;
    out.reserve(count);
    std::vector<Symbol> current(length, 0);
    const auto n = static_cast<Symbol>(alphabet.size() - 1);
    while (true) {
        out.emplace_back(current);
        // odometer increment, most significant position first
        std::size_t pos = length;
        while (pos > 0 && current[pos - 1] == n)
            current[--pos] = 0;
        if (pos == 0)
            break;
        ++current[pos - 1];
    }
    return out;
}

std::vector<Word> enumerate_language(const Alphabet& alphabet, std::size_t max_len, std::uint64_t cap)
{
    std::uint64_t total = count_language(alphabet.size(), max_len, cap);
    if (total > cap)
        throw CapExceededError(cap);

    std::vector<Word> out;
    out.reserve(total);
    for (std::size_t n = 0; n <= max_len; ++n) {
        auto layer = enumerate_words(alphabet, n, cap);
        std::move(layer.begin(), layer.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace wordmetrics
