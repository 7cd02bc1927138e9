#ifndef UDCODES_FACTORIZATION_HPP
#define UDCODES_FACTORIZATION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/monoid.hpp"
#include "udcodes/rational.hpp"

namespace udc {

/// A sequence of codewords whose concatenation equals a target word.
using Factorization = WordSequence;

inline constexpr std::size_t kDefaultParseCap = 10000;

/// Positions 0..len(word) with an edge (i -> i+len(x)) for every codeword x
/// matching the word at position i. Paths from 0 to len(word) are in
/// bijection with factorizations.
class ParseDag {
  public:
    ParseDag(const Word& word, const Code& code) : word_(word) {
        if (!(word.alphabet() == code.alphabet()))
            throw AlphabetMismatchError("word over '" + word.alphabet().symbols() +
                                        "', code over '" + code.alphabet().symbols() + "'");
        const std::string& t = word.text();
        edges_.resize(t.size() + 1);
        for (std::size_t i = 0; i <= t.size(); ++i)
            for (const Word& x : code)
                if (t.compare(i, x.length(), x.text()) == 0)
                    edges_[i].emplace_back(i + x.length(), x);
        // codewords come sorted from the Code, so edge lists are in canonical order
    }

    const Word& word() const { return word_; }

    const std::vector<std::pair<std::size_t, Word>>& edges_from(std::size_t pos) const {
        return edges_.at(pos);
    }

    /// Number of paths from 0 to len(word); equals the factorization count.
    BigInt path_count() const {
        std::vector<BigInt> paths(edges_.size(), 0);
        paths.back() = 1;
        for (std::size_t i = edges_.size() - 1; i-- > 0;)
            for (const auto& [j, x] : edges_[i]) paths[i] += paths[j];
        return paths.front();
    }

  private:
    Word word_;
    std::vector<std::vector<std::pair<std::size_t, Word>>> edges_;
};

/// All sequences over d concatenating to w, in lexicographic block order.
/// Throws BoundExceededError when more than cap factorizations exist.
inline std::vector<Factorization> all_factorizations(const Word& w, const Code& d,
                                                     std::size_t cap = kDefaultParseCap) {
    ParseDag dag(w, d);
    std::vector<Factorization> out;
    Factorization current;
    auto walk = [&](auto&& self, std::size_t pos) -> void {
        if (pos == w.length()) {
            if (out.size() >= cap)
                throw BoundExceededError("factorization cap exceeded (cap " +
                                             std::to_string(cap) + ")",
                                         out.size());
            out.push_back(current);
            return;
        }
        for (const auto& [next, x] : dag.edges_from(pos)) {
            current.push_back(x);
            self(self, next);
            current.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

/// The unique factorization of w over a UD code d, or absent when w is not
/// in the submonoid generated by d. Uniqueness is verified by enumeration;
/// finding two parses signals a violated UD precondition.
inline std::optional<Factorization> unique_factorization(const Word& w, const Code& d,
                                                         std::size_t cap = kDefaultParseCap) {
    auto all = all_factorizations(w, d, cap);
    if (all.empty()) return std::nullopt;
    if (all.size() > 1)
        throw InternalInconsistencyError("word '" + w.text() + "' has " +
                                         std::to_string(all.size()) +
                                         " factorizations; code is not uniquely decipherable");
    return all.front();
}

/// Per-word parse report for the subcode relation C <= D*.
struct SubcodeReport {
    bool all_parseable;
    std::vector<std::pair<Word, std::optional<Factorization>>> parses; // canonical word order
};

/// Decides whether every word of c is a concatenation of words of d.
/// Precondition: d uniquely decipherable (caller-checked).
inline SubcodeReport is_subcode_of_star(const Code& c, const Code& d,
                                        std::size_t cap = kDefaultParseCap) {
    if (!(c.alphabet() == d.alphabet()))
        throw AlphabetMismatchError("codes over different alphabets: '" +
                                    c.alphabet().symbols() + "' vs '" + d.alphabet().symbols() +
                                    "'");
    SubcodeReport report{true, {}};
    for (const Word& x : c) {
        auto f = unique_factorization(x, d, cap);
        if (!f) report.all_parseable = false;
        report.parses.emplace_back(x, std::move(f));
    }
    return report;
}

/// The depth constant m: the maximum d-block count over the unique
/// d-factorizations of the words of c. Requires c non-empty and every word
/// of c parseable over d.
inline unsigned depth_m(const Code& c, const Code& d, std::size_t cap = kDefaultParseCap) {
    if (c.empty()) throw PreconditionError("depth constant undefined for the empty code");
    auto report = is_subcode_of_star(c, d, cap);
    unsigned m = 0;
    for (const auto& [x, f] : report.parses) {
        if (!f)
            throw PreconditionError("word '" + x.text() +
                                    "' has no factorization over the given code");
        m = std::max<unsigned>(m, static_cast<unsigned>(f->size()));
    }
    return m;
}

} // namespace udc

#endif
