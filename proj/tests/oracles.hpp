// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's ParseDag and Sardinas-Patterson paths.
#ifndef UDCODES_TESTS_ORACLES_HPP
#define UDCODES_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/monoid.hpp"

namespace udc::oracle {

/// Exhaustive collision search: concatenates every sequence of at most
/// max_blocks codewords and reports the first string reachable by two
/// distinct sequences.
inline std::optional<AmbiguityWitness> brute_force_collision(const Code& c,
                                                             unsigned max_blocks) {
    std::map<std::string, WordSequence> seen;
    std::optional<AmbiguityWitness> found;
    WordSequence current;
    std::string text;
    auto rec = [&](auto&& self) -> void {
        if (found) return;
        if (!current.empty()) {
            auto it = seen.find(text);
            if (it != seen.end()) {
                if (it->second != current)
                    found = AmbiguityWitness{Word(c.alphabet(), text), it->second, current};
            } else {
                seen.emplace(text, current);
            }
        }
        if (current.size() == max_blocks || found) return;
        for (const Word& w : c) {
            current.push_back(w);
            text += w.text();
            self(self);
            text.resize(text.size() - w.length());
            current.pop_back();
        }
    };
    rec(rec);
    return found;
}

/// Naive recursive segmentation of w into codewords, no DAG sharing.
inline std::vector<WordSequence> brute_force_factorizations(const Word& w, const Code& c) {
    std::vector<WordSequence> out;
    WordSequence current;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == w.length()) {
            out.push_back(current);
            return;
        }
        for (const Word& x : c) {
            if (w.text().compare(pos, x.length(), x.text()) == 0) {
                current.push_back(x);
                self(self, pos + x.length());
                current.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

/// All non-empty binary codes with at most max_words codewords, each of
/// length at most max_len.
inline std::vector<Code> small_binary_universe(unsigned max_words, unsigned max_len) {
    Alphabet bin("01");
    std::vector<Word> pool;
    for (unsigned len = 1; len <= max_len; ++len)
        for (unsigned v = 0; v < (1u << len); ++v) {
            std::string t(len, '0');
            for (unsigned i = 0; i < len; ++i)
                if (v & (1u << i)) t[len - 1 - i] = '1';
            pool.emplace_back(bin, t);
        }
    std::vector<Code> out;
    std::vector<Word> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) out.emplace_back(bin, pick);
        if (pick.size() == max_words) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace udc::oracle

#endif
