#ifndef UDCODES_CODES_HPP
#define UDCODES_CODES_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udcodes/monoid.hpp"
#include "udcodes/rational.hpp"

namespace udc {

/// A finite set of non-empty words over one alphabet. Whether it is
/// uniquely decipherable is a checked predicate, not a type invariant.
/// Iteration order is the canonical word order.
class Code {
  public:
    Code(Alphabet alphabet, std::vector<Word> words)
        : alphabet_(std::move(alphabet)), words_(std::move(words)) {
        for (const Word& w : words_) {
            if (!(w.alphabet() == alphabet_))
                throw AlphabetMismatchError("codeword '" + w.text() + "' over alphabet '" +
                                            w.alphabet().symbols() + "', expected '" +
                                            alphabet_.symbols() + "'");
            if (w.is_empty())
                throw InvalidValueError("the empty word is not a valid codeword");
        }
        std::sort(words_.begin(), words_.end());
        auto dup = std::adjacent_find(words_.begin(), words_.end());
        if (dup != words_.end())
            throw InvalidValueError("duplicate codeword '" + dup->text() + "'");
    }

    /// Build from plain strings; convenience for tests and the CLI.
    static Code from_strings(const Alphabet& alphabet, const std::vector<std::string>& texts) {
        std::vector<Word> words;
        words.reserve(texts.size());
        for (const auto& t : texts) words.emplace_back(alphabet, t);
        return Code(alphabet, std::move(words));
    }

    /// The code A^1 of all length-1 words.
    static Code full_alphabet(const Alphabet& alphabet) {
        std::vector<Word> words;
        for (char c : alphabet.symbols()) words.emplace_back(alphabet, std::string(1, c));
        return Code(alphabet, std::move(words));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool contains(const Word& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

    friend bool operator==(const Code&, const Code&) = default;

  private:
    Alphabet alphabet_;
    std::vector<Word> words_; // sorted, distinct, non-empty
};

/// K(C) = sum over codewords of r^(-len); exact, 0 for the empty code.
inline BigRational kraft_sum(const Code& c) {
    BigRational sum = 0;
    for (const Word& w : c) sum += kraft_weight(c.alphabet().size(), w.length());
    return sum;
}

/// True iff no codeword is a proper prefix of another.
inline bool is_prefix_code(const Code& c) {
    const auto& ws = c.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j)
            if (i != j && ws[j].text().starts_with(ws[i].text()) &&
                ws[i].length() < ws[j].length())
                return false;
    return true;
}

/// Evidence of an ambiguity: one word with two distinct codeword sequences
/// both concatenating to it.
struct AmbiguityWitness {
    Word word;
    WordSequence parse1;
    WordSequence parse2;
};

struct UdVerdict {
    bool decipherable;
    std::optional<AmbiguityWitness> witness; // present iff not decipherable
};

namespace detail {

// Dangling-suffix state for Sardinas-Patterson. Invariant: con(behind) + suffix
// == con(ahead), and behind/ahead start with different codewords.
struct DanglingState {
    std::string suffix;
    WordSequence behind;
    WordSequence ahead;
};

} // namespace detail

/// Sardinas-Patterson decision with witness reconstruction. Explores the
/// finite set of dangling suffixes breadth-first; each suffix carries the
/// pair of codeword sequences that produced it, so reaching the empty
/// suffix yields a concrete ambiguous word.
inline UdVerdict is_uniquely_decipherable(const Code& c) {
    const Alphabet& a = c.alphabet();
    std::deque<detail::DanglingState> queue;
    std::vector<std::string> seen;

    auto mark_seen = [&](const std::string& s) {
        auto it = std::lower_bound(seen.begin(), seen.end(), s);
        if (it != seen.end() && *it == s) return false;
        seen.insert(it, s);
        return true;
    };

    // Level 1: proper prefix pairs among codewords.
    for (const Word& u : c)
        for (const Word& v : c)
            if (u.length() < v.length() && v.text().starts_with(u.text())) {
                std::string s = v.text().substr(u.length());
                if (mark_seen(s)) queue.push_back({s, {u}, {v}});
            }

    while (!queue.empty()) {
        detail::DanglingState st = std::move(queue.front());
        queue.pop_front();
        for (const Word& w : c) {
            if (st.suffix.starts_with(w.text())) {
                // Codeword consumes a prefix of the dangling suffix.
                std::string rest = st.suffix.substr(w.length());
                WordSequence behind = st.behind;
                behind.push_back(w);
                if (rest.empty())
                    return {false, AmbiguityWitness{concat(st.ahead, a), std::move(behind),
                                                    st.ahead}};
                if (mark_seen(rest))
                    queue.push_back({std::move(rest), std::move(behind), st.ahead});
            } else if (w.text().starts_with(st.suffix) && w.length() > st.suffix.size()) {
                // Codeword overshoots the dangling suffix; roles swap.
                std::string rest = w.text().substr(st.suffix.size());
                WordSequence behind = st.behind;
                behind.push_back(w);
                if (mark_seen(rest))
                    queue.push_back({std::move(rest), st.ahead, std::move(behind)});
            }
        }
    }
    return {true, std::nullopt};
}

/// Checks a claimed witness: both parses concatenate to the word, all blocks
/// are codewords, and the two sequences differ.
inline bool witness_self_verifies(const Code& c, const AmbiguityWitness& w) {
    if (w.parse1 == w.parse2) return false;
    for (const Word& b : w.parse1)
        if (!c.contains(b)) return false;
    for (const Word& b : w.parse2)
        if (!c.contains(b)) return false;
    return concat(w.parse1, c.alphabet()) == w.word && concat(w.parse2, c.alphabet()) == w.word;
}

/// Kraft converse: canonical prefix code with the given length multiset.
/// Lengths are assigned ascending, codewords by counting in base r.
inline Code construct_prefix_code(std::vector<unsigned> lengths, const Alphabet& alphabet) {
    const unsigned r = alphabet.size();
    BigRational sum = 0;
    for (unsigned l : lengths) {
        if (l == 0) throw InvalidValueError("codeword lengths must be positive");
        sum += kraft_weight(r, l);
    }
    if (sum > 1)
        throw KraftViolationError("Kraft inequality violated: sum " + to_fraction_string(sum) +
                                      " > 1",
                                  to_fraction_string(sum));

    std::sort(lengths.begin(), lengths.end());
    std::vector<Word> words;
    BigInt counter = 0;
    unsigned prev_len = lengths.empty() ? 0 : lengths.front();
    for (unsigned l : lengths) {
        counter *= ipow(BigInt(r), l - prev_len);
        prev_len = l;
        // counter written in base r with l digits, most significant first
        std::string text(l, alphabet.symbol(0));
        BigInt v = counter;
        for (unsigned pos = l; pos > 0; --pos) {
            text[pos - 1] = alphabet.symbol(static_cast<unsigned>(v % r));
            v /= r;
        }
        words.emplace_back(alphabet, std::move(text));
        counter += 1;
    }
    return Code(alphabet, std::move(words));
}

} // namespace udc

#endif
