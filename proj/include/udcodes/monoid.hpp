#ifndef UDCODES_MONOID_HPP
#define UDCODES_MONOID_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "udcodes/errors.hpp"

namespace udc {

/// A finite ordered set of distinct single-character symbols. The symbol
/// order fixed here drives every canonical ordering downstream.
class Alphabet {
  public:
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw InvalidValueError("alphabet must be non-empty");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw InvalidValueError(std::string("duplicate alphabet symbol '") +
                                            symbols_[i] + "'");
    }

    unsigned size() const { return static_cast<unsigned>(symbols_.size()); }
    const std::string& symbols() const { return symbols_; }
    char symbol(unsigned i) const { return symbols_.at(i); }

    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }

    /// Position of c in the symbol order; throws if c is not a symbol.
    unsigned index_of(char c) const {
        auto pos = symbols_.find(c);
        if (pos == std::string::npos)
            throw InvalidValueError(std::string("symbol '") + c + "' not in alphabet '" +
                                    symbols_ + "'");
        return static_cast<unsigned>(pos);
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

  private:
    std::string symbols_;
};

/// An element of the free monoid A*: a finite (possibly empty) string over
/// one alphabet. Immutable value with structural equality; the total order
/// is length-first, then lexicographic by alphabet symbol order.
class Word {
  public:
    Word(Alphabet alphabet, std::string text)
        : alphabet_(std::move(alphabet)), text_(std::move(text)) {
        for (char c : text_)
            if (!alphabet_.contains(c))
                throw InvalidValueError(std::string("word character '") + c +
                                        "' not in alphabet '" + alphabet_.symbols() + "'");
    }

    static Word empty(Alphabet alphabet) { return Word(std::move(alphabet), ""); }

    std::size_t length() const { return text_.size(); }
    bool is_empty() const { return text_.empty(); }
    const std::string& text() const { return text_; }
    const Alphabet& alphabet() const { return alphabet_; }

    friend bool operator==(const Word&, const Word&) = default;

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.alphabet_.symbols() <=> b.alphabet_.symbols(); c != 0) return c;
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        for (std::size_t i = 0; i < a.length(); ++i) {
            auto c = a.alphabet_.index_of(a.text_[i]) <=> b.alphabet_.index_of(b.text_[i]);
            if (c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

  private:
    Alphabet alphabet_;
    std::string text_;
};

/// An element of A**: a finite sequence of words over one alphabet.
using WordSequence = std::vector<Word>;

inline std::size_t length(const Word& w) { return w.length(); }

/// con: A** -> A*, left-to-right concatenation. The empty sequence has no
/// alphabet of its own, so it must be supplied.
inline Word concat(std::span<const Word> ws, const Alphabet& alphabet) {
    std::string text;
    for (const Word& w : ws) {
        if (!(w.alphabet() == alphabet))
            throw AlphabetMismatchError("concat: item alphabet '" + w.alphabet().symbols() +
                                        "' differs from '" + alphabet.symbols() + "'");
        text += w.text();
    }
    return Word(alphabet, std::move(text));
}

inline Word concat(const WordSequence& ws, const Alphabet& alphabet) {
    return concat(std::span<const Word>(ws), alphabet);
}

/// Convenience overload for non-empty sequences: the alphabet is taken from
/// the first item.
inline Word concat(const WordSequence& ws) {
    if (ws.empty()) throw PreconditionError("concat of empty sequence needs an explicit alphabet");
    return concat(ws, ws.front().alphabet());
}

} // namespace udc

#endif
