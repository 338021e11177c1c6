#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordmetrics {

/// A character in the input does not belong to the alphabet.
class UnknownSymbolError : public std::invalid_argument {
public:
    UnknownSymbolError(std::size_t position, char symbol)
      : std::invalid_argument("unknown symbol '" + std::string(1, symbol) +
                              "' at position " + std::to_string(position)),
        position_(position),
        symbol_(symbol)
    {
    }

    std::size_t position() const noexcept { return position_; }
    char symbol() const noexcept { return symbol_; }

private:
    std::size_t position_;
    char symbol_;
};

/// An exhaustive operation would enumerate more words than the cap allows.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(std::uint64_t cap)
      : std::runtime_error("enumeration cap of " + std::to_string(cap) +
                           " words exceeded"),
        cap_(cap)
    {
    }

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

/// Two words of different lengths were given to an equal-length operation.
class LengthMismatchError : public std::invalid_argument {
public:
    LengthMismatchError(std::size_t left, std::size_t right)
      : std::invalid_argument("length mismatch: " + std::to_string(left) +
                              " vs " + std::to_string(right))
    {
    }
};

class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidAlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The distance function provides no admissible length window, so a sphere
/// cannot be enumerated from a finite set of candidate lengths.
class NoLengthBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wordmetrics
