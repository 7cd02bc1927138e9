#ifndef UDCODES_GENERATORS_HPP
#define UDCODES_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/factorization.hpp"
#include "udcodes/monoid.hpp"

namespace udc {

/// splitmix64 (Steele/Lea/Flood): state advances by the golden-ratio
/// constant, output is a finalized mix. Chosen as the instance generator
/// because it is trivially reproducible in any language.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) { // inclusive
        return lo + below(hi - lo + 1);
    }

  private:
    std::uint64_t state_;
};

struct GenConfig {
    std::uint64_t seed = 0;
    Alphabet alphabet{"01"};
    unsigned min_size = 1;
    unsigned max_size = 6;
    unsigned max_len = 6;    // maximum codeword length
    unsigned max_blocks = 3; // blocks per composed word in pairs
};

namespace detail {

// r^depth capped at `cap` to avoid overflow; enough for capacity checks.
inline std::uint64_t capped_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > cap / (base ? base : 1)) return cap;
        v *= base;
    }
    return v;
}

// Grows a trie leaf set by splitting random leaves, then samples `size`
// distinct leaves. Any leaf set of a trie is prefix-free, so the result is
// a prefix code over "digits" 0..arity-1.
inline std::vector<std::vector<unsigned>> random_prefix_leaves(SplitMix64& rng, unsigned arity,
                                                               unsigned max_depth, unsigned size) {
    std::uint64_t capacity = capped_pow(arity, max_depth, 1u << 30);
    if (size > capacity)
        throw UnsatisfiableBoundsError("cannot fit " + std::to_string(size) +
                                       " prefix-free sequences with arity " +
                                       std::to_string(arity) + " and max depth " +
                                       std::to_string(max_depth));

    std::vector<std::vector<unsigned>> leaves;
    for (unsigned s = 0; s < arity; ++s) leaves.push_back({s});

    auto split = [&](std::size_t idx) {
        std::vector<unsigned> base = leaves[idx];
        leaves.erase(leaves.begin() + static_cast<long>(idx));
        for (unsigned s = 0; s < arity; ++s) {
            auto child = base;
            child.push_back(s);
            leaves.push_back(child);
        }
    };

    auto splittable = [&]() {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < leaves.size(); ++i)
            if (leaves[i].size() < max_depth) idx.push_back(i);
        return idx;
    };

    while (leaves.size() < size) {
        auto candidates = splittable();
        if (candidates.empty())
            throw UnsatisfiableBoundsError("exhausted trie capacity while generating");
        split(candidates[rng.below(candidates.size())]);
    }
    // a few extra splits for shape variety, bounded to stay desk-scale
    for (unsigned extra = static_cast<unsigned>(rng.below(3)); extra > 0; --extra) {
        auto candidates = splittable();
        if (candidates.empty() || leaves.size() + arity > 4096) break;
        split(candidates[rng.below(candidates.size())]);
    }

    // partial Fisher-Yates draw of `size` distinct leaves
    std::vector<std::vector<unsigned>> picked;
    for (unsigned i = 0; i < size; ++i) {
        std::size_t j = i + rng.below(leaves.size() - i);
        std::swap(leaves[i], leaves[j]);
        picked.push_back(leaves[i]);
    }
    return picked;
}

} // namespace detail

/// A random prefix code within the configured bounds; deterministic per
/// config.
inline Code random_prefix_code(const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    if (cfg.min_size < 1 || cfg.min_size > cfg.max_size || cfg.max_len < 1)
        throw UnsatisfiableBoundsError("invalid size/length bounds");
    unsigned size = static_cast<unsigned>(rng.in_range(cfg.min_size, cfg.max_size));
    auto leaves = detail::random_prefix_leaves(rng, cfg.alphabet.size(), cfg.max_len, size);
    std::vector<Word> words;
    for (const auto& leaf : leaves) {
        std::string text;
        for (unsigned digit : leaf) text += cfg.alphabet.symbol(digit);
        words.emplace_back(cfg.alphabet, std::move(text));
    }
    return Code(cfg.alphabet, std::move(words));
}

/// A pair (c, d) satisfying the extended-theorem hypotheses: d is a random
/// prefix code, and the words of c are concatenations of d-words whose
/// block sequences form a prefix code over d. Since d is UD, distinct
/// block sequences give distinct words and c inherits unique
/// decipherability from the block-level prefix property.
inline std::pair<Code, Code> random_composed_pair(const GenConfig& cfg) {
    Code d = random_prefix_code(cfg);
    SplitMix64 rng(cfg.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    unsigned c_size = static_cast<unsigned>(rng.in_range(cfg.min_size, cfg.max_size));
    // a size-1 d admits only unary block sequences, which cap |c| at 1
    std::uint64_t capacity =
        detail::capped_pow(d.size(), cfg.max_blocks, 1u << 30);
    c_size = static_cast<unsigned>(std::min<std::uint64_t>(c_size, capacity));
    auto block_seqs = detail::random_prefix_leaves(rng, static_cast<unsigned>(d.size()),
                                                   cfg.max_blocks, c_size);
    std::vector<Word> c_words;
    for (const auto& seq : block_seqs) {
        WordSequence blocks;
        for (unsigned idx : seq) blocks.push_back(d.words()[idx]);
        c_words.push_back(concat(blocks, cfg.alphabet));
    }
    return {Code(cfg.alphabet, std::move(c_words)), std::move(d)};
}

/// A code that provably fails unique decipherability: plants either the
/// {u, uv, vu} collision (u.vu == uv.u) or the {u, uu} power collision,
/// pads with filler words, and verifies the verdict before returning.
inline Code random_non_ud_code(const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed ^ 0x5bd1e995cc9e2d51ULL);
    const Alphabet& a = cfg.alphabet;
    auto random_text = [&](unsigned len) {
        std::string t;
        for (unsigned i = 0; i < len; ++i)
            t += a.symbol(static_cast<unsigned>(rng.below(a.size())));
        return t;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::string> texts;
        if (a.size() == 1 || rng.below(4) == 0) {
            std::string u = random_text(static_cast<unsigned>(rng.in_range(1, 2)));
            texts = {u, u + u};
        } else {
            std::string u = random_text(static_cast<unsigned>(rng.in_range(1, 2)));
            std::string v = random_text(static_cast<unsigned>(rng.in_range(1, 2)));
            if (u + v == v + u) continue;
            texts = {u, u + v, v + u};
        }
        // filler words, skipping duplicates
        unsigned filler = static_cast<unsigned>(rng.below(3));
        for (unsigned i = 0; i < filler; ++i) {
            std::string t = random_text(static_cast<unsigned>(rng.in_range(1, cfg.max_len)));
            if (std::find(texts.begin(), texts.end(), t) == texts.end()) texts.push_back(t);
        }
        Code code = Code::from_strings(a, texts);
        auto verdict = is_uniquely_decipherable(code);
        if (!verdict.decipherable && witness_self_verifies(code, *verdict.witness)) return code;
    }
    throw UnsatisfiableBoundsError("failed to construct a non-UD code within retry budget");
}

} // namespace udc

#endif
