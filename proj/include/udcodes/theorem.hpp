#ifndef UDCODES_THEOREM_HPP
#define UDCODES_THEOREM_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/factorization.hpp"
#include "udcodes/freealg.hpp"
#include "udcodes/monoid.hpp"
#include "udcodes/rational.hpp"

namespace udc {

/// A code failed the unique-decipherability hypothesis; carries the witness.
class NotUdError : public PreconditionError {
  public:
    NotUdError(std::string which_code, AmbiguityWitness w)
        : PreconditionError("code " + which_code + " is not uniquely decipherable; word '" +
                            w.word.text() + "' has two factorizations"),
          code_name(std::move(which_code)), witness(std::move(w)) {}
    std::string code_name;
    AmbiguityWitness witness;
};

/// Some word of C is not a concatenation of words of D.
class SubcodeRelationError : public PreconditionError {
  public:
    explicit SubcodeRelationError(std::vector<Word> unparseable_)
        : PreconditionError(describe(unparseable_)), unparseable(std::move(unparseable_)) {}
    std::vector<Word> unparseable;

  private:
    static std::string describe(const std::vector<Word>& ws) {
        std::string msg = "subcode relation fails; unparseable word(s):";
        for (const Word& w : ws) msg += " '" + w.text() + "'";
        return msg;
    }
};

struct TheoremLimits {
    std::size_t max_tuples = 200000; // total D^l tuples enumerated per call
    unsigned max_mk = 12;            // highest power l in the trace
    std::size_t max_terms = kDefaultTermCap;
    std::size_t max_parses = kDefaultParseCap;
};

namespace detail {

inline void require_ud(const Code& code, const char* name) {
    auto v = is_uniquely_decipherable(code);
    if (!v.decipherable) throw NotUdError(name, std::move(*v.witness));
}

inline void require_subcode(const SubcodeReport& report) {
    if (report.all_parseable) return;
    std::vector<Word> bad;
    for (const auto& [w, f] : report.parses)
        if (!f) bad.push_back(w);
    throw SubcodeRelationError(std::move(bad));
}

inline void check_tuple_budget(std::size_t base, unsigned lo, unsigned hi,
                               const TheoremLimits& limits) {
    BigInt total = 0;
    for (unsigned l = lo; l <= hi; ++l) {
        total += ipow(BigInt(base), l);
        if (total > limits.max_tuples)
            throw BoundExceededError("tuple enumeration bound exceeded (max " +
                                     std::to_string(limits.max_tuples) + " tuples)");
    }
}

/// Enumerates D^l in canonical (odometer) order, invoking fn per tuple.
template <class Fn>
void for_each_tuple(const Code& d, unsigned l, Fn&& fn) {
    const auto& ws = d.words();
    if (ws.empty() && l > 0) return;
    WordSequence tuple;
    tuple.reserve(l);
    auto rec = [&](auto&& self, unsigned depth) -> void {
        if (depth == l) {
            fn(tuple);
            return;
        }
        for (const Word& x : ws) {
            tuple.push_back(x);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Splits D^l into the tuples whose concatenation lies in con[C^k] (first
/// component) and the rest. Membership is decided via c's unique
/// factorization: the concatenation is in con[C^k] iff its c-parse exists
/// and has exactly k blocks.
inline std::pair<std::vector<WordSequence>, std::vector<WordSequence>>
partition_Wl(const Code& c, const Code& d, unsigned k, unsigned l,
             const TheoremLimits& limits = {}) {
    detail::require_ud(c, "C");
    detail::require_ud(d, "D");
    detail::check_tuple_budget(d.size(), l, l, limits);
    std::vector<WordSequence> w1, w2;
    detail::for_each_tuple(d, l, [&](const WordSequence& tuple) {
        Word w = concat(tuple, d.alphabet());
        auto f = unique_factorization(w, c, limits.max_parses);
        if (f && f->size() == k)
            w1.push_back(tuple);
        else
            w2.push_back(tuple);
    });
    return {std::move(w1), std::move(w2)};
}

struct ClassicalVerdict {
    BigRational kraft;
    bool holds; // K(c) <= 1
};

/// McMillan's theorem on one instance: requires UD (typed error with
/// witness otherwise) and reports the exact Kraft sum comparison.
inline ClassicalVerdict check_classical_mcmillan(const Code& c) {
    detail::require_ud(c, "C");
    BigRational k = kraft_sum(c);
    return {k, k <= 1};
}

struct ExtendedVerdict {
    BigRational kraft_c;
    BigRational kraft_d;
    bool holds; // K(c) <= K(d)
    SubcodeReport report;
};

/// The extended inequality K(C) <= K(D) under the hypotheses: C, D both UD
/// and every word of C a concatenation of words of D.
inline ExtendedVerdict check_extended_mcmillan(const Code& c, const Code& d,
                                               const TheoremLimits& limits = {}) {
    detail::require_ud(c, "C");
    detail::require_ud(d, "D");
    auto report = is_subcode_of_star(c, d, limits.max_parses);
    detail::require_subcode(report);
    BigRational kc = kraft_sum(c), kd = kraft_sum(d);
    return {kc, kd, kc <= kd, std::move(report)};
}

struct InequalityVerdict {
    BigRational lhs; // K(C)^k
    BigRational mid; // sum over l in [k, mk] of K(D)^l
    BigRational rhs; // mk * K(D)^k (only for the chained form)
    unsigned m;
    bool holds;
};

/// K(C)^k <= sum_{l=k}^{mk} K(D)^l, exactly.
inline InequalityVerdict check_inequality_7(const Code& c, const Code& d, unsigned k,
                                            const TheoremLimits& limits = {}) {
    if (k == 0) throw PreconditionError("k must be positive");
    detail::require_ud(c, "C");
    detail::require_ud(d, "D");
    unsigned m = depth_m(c, d, limits.max_parses);
    BigRational lhs = rational_pow(kraft_sum(c), k);
    BigRational mid = 0;
    BigRational kd = kraft_sum(d);
    for (unsigned l = k; l <= m * k; ++l) mid += rational_pow(kd, l);
    return {lhs, mid, 0, m, lhs <= mid};
}

/// The chain K(C)^k <= sum_{l=k}^{mk} K(D)^l <= mk * K(D)^k; the upper step
/// needs K(D) <= 1, which is verified first.
inline InequalityVerdict check_inequality_8(const Code& c, const Code& d, unsigned k,
                                            const TheoremLimits& limits = {}) {
    InequalityVerdict v = check_inequality_7(c, d, k, limits);
    BigRational kd = kraft_sum(d);
    if (kd > 1)
        throw PreconditionError("K(D) = " + to_fraction_string(kd) +
                                " > 1; chained inequality needs K(D) <= 1");
    v.rhs = BigRational(v.m * k) * rational_pow(kd, k);
    v.holds = v.lhs <= v.mid && v.mid <= v.rhs;
    return v;
}

/// Explicit form of the congruence step: the map sending each k-tuple of
/// c-words to its flattened d-factorization must be injective with image
/// exactly the union of the W_l1 for l in [k, mk].
inline bool decode_bijection_check(const Code& c, const Code& d, unsigned k,
                                   const TheoremLimits& limits = {}) {
    if (k == 0) throw PreconditionError("k must be positive");
    detail::require_ud(c, "C");
    detail::require_ud(d, "D");
    unsigned m = depth_m(c, d, limits.max_parses);
    detail::check_tuple_budget(c.size(), k, k, limits);
    detail::check_tuple_budget(d.size(), k, m * k, limits);

    std::map<Word, Factorization> table;
    for (const Word& x : c) table.emplace(x, *unique_factorization(x, d, limits.max_parses));

    std::set<WordSequence> image;
    bool injective = true;
    detail::for_each_tuple(c, k, [&](const WordSequence& tuple) {
        WordSequence flat;
        for (const Word& x : tuple) {
            const auto& f = table.at(x);
            flat.insert(flat.end(), f.begin(), f.end());
        }
        if (!image.insert(std::move(flat)).second) injective = false;
    });
    if (!injective) return false;

    std::set<WordSequence> w1_union;
    for (unsigned l = k; l <= m * k; ++l) {
        auto [w1, w2] = partition_Wl(c, d, k, l, limits);
        w1_union.insert(w1.begin(), w1.end());
    }
    return image == w1_union;
}

/// One identity failed while assembling a proof trace; names the numbered
/// expression involved.
class TraceCheckError : public Error {
  public:
    TraceCheckError(std::string expression_, const std::string& detail)
        : Error("proof trace check failed at expression " + expression_ + ": " + detail),
          expression(std::move(expression_)) {}
    std::string expression;
};

struct TraceLevel {
    unsigned l;
    std::size_t w1_count;
    std::size_t w2_count;
    BigRational eval_w1; // evaluation of the W_l1 partial sum
    BigRational eval_w2;
    bool expansion_ok; // power expansion has |D|^l unit-coefficient monomials, one per tuple
    bool partition_ok; // partial sums add back to the power
};

/// Full record of one run of the polynomial argument at fixed k.
struct ProofTrace {
    unsigned k = 0;
    unsigned m = 0;
    BigRational kraft_c;
    BigRational kraft_d;
    std::vector<TraceLevel> levels; // l = k .. mk
    BigRational eval3, eval4, eval5, eval6;
    bool sum_split_ok = false;     // (3) == (4) + (5) as formal polynomials
    bool congruence_ok = false;    // rewrite of (6) equals (4) as formal polynomials
    bool eval_identity_ok = false; // eval(3) == eval(5) + eval(6)
    bool eval5_nonnegative = false;
    InequalityVerdict ineq7;
    InequalityVerdict ineq8;
    bool ineq8_applicable = false; // K(D) <= 1 held, so the chain was checked
    bool all_ok = false;
};

/// Runs every step of the argument at fixed k and verifies each identity
/// exactly. Any failed identity throws a TraceCheckError naming the
/// numbered expression.
inline ProofTrace run_proof_trace(const Code& c, const Code& d, unsigned k,
                                  const TheoremLimits& limits = {}) {
    if (k == 0) throw PreconditionError("k must be positive");
    detail::require_ud(c, "C");
    detail::require_ud(d, "D");
    detail::require_subcode(is_subcode_of_star(c, d, limits.max_parses));
    if (c.empty()) throw PreconditionError("proof trace needs a non-empty code C");

    ProofTrace trace;
    trace.k = k;
    trace.m = depth_m(c, d, limits.max_parses);
    trace.kraft_c = kraft_sum(c);
    trace.kraft_d = kraft_sum(d);

    const unsigned mk = trace.m * k;
    if (mk > limits.max_mk)
        throw BoundExceededError("trace degree bound exceeded: mk = " + std::to_string(mk) +
                                 " > " + std::to_string(limits.max_mk));
    detail::check_tuple_budget(d.size(), k, mk, limits);

    const Alphabet& a = d.alphabet();
    NCPolynomial poly3, poly4, poly5;
    for (unsigned l = k; l <= mk; ++l) {
        NCPolynomial power = code_sum_power(d, l, limits.max_terms);

        // (1): the power expands to one unit-coefficient monomial per tuple in D^l
        NCPolynomial tuple_sum;
        auto [w1, w2] = partition_Wl(c, d, k, l, limits);
        NCPolynomial part1, part2;
        for (const auto& tuple : w1) part1.add_term(Monomial{tuple}, 1);
        for (const auto& tuple : w2) part2.add_term(Monomial{tuple}, 1);
        tuple_sum = part1 + part2;

        TraceLevel level;
        level.l = l;
        level.w1_count = w1.size();
        level.w2_count = w2.size();
        level.eval_w1 = evaluate(part1, a);
        level.eval_w2 = evaluate(part2, a);

        bool unit_coefs = true;
        for (const auto& [mono, coef] : power.terms())
            if (coef != 1) unit_coefs = false;
        BigInt expected = ipow(BigInt(d.size()), l);
        level.expansion_ok =
            unit_coefs && BigInt(power.term_count()) == expected && power == tuple_sum;
        if (!level.expansion_ok)
            throw TraceCheckError("(1)", "power expansion mismatch at l = " + std::to_string(l));

        level.partition_ok = (part1 + part2 == power);
        if (!level.partition_ok)
            throw TraceCheckError("(2)", "partition does not recompose D^" + std::to_string(l));

        trace.levels.push_back(std::move(level));
        poly3 = poly3 + power;
        poly4 = poly4 + part1;
        poly5 = poly5 + part2;
    }

    trace.sum_split_ok = (poly3 == poly4 + poly5);
    if (!trace.sum_split_ok) throw TraceCheckError("(3)", "(3) != (4) + (5) formally");

    // (6) rewritten modulo the ideal must reproduce (4)
    NCPolynomial poly6 = code_sum_power(c, k, limits.max_terms);
    NCPolynomial rewritten = rewrite_mod_ideal(poly6, c, d, limits.max_parses);
    trace.congruence_ok = (rewritten == poly4);
    if (!trace.congruence_ok)
        throw TraceCheckError("(4)~(6)", "rewriting (6) modulo the ideal does not give (4)");

    trace.eval3 = evaluate(poly3, a);
    trace.eval4 = evaluate(poly4, a);
    trace.eval5 = evaluate(poly5, a);
    trace.eval6 = evaluate(poly6, a);
    trace.eval_identity_ok = (trace.eval3 == trace.eval5 + trace.eval6);
    if (!trace.eval_identity_ok)
        throw TraceCheckError("(3)=(5)+(6)", "evaluation identity fails");

    trace.eval5_nonnegative = poly5.is_nonnegative() && trace.eval5 >= 0;
    if (!trace.eval5_nonnegative) throw TraceCheckError("(5)", "negative coefficient in (5)");

    trace.ineq7 = check_inequality_7(c, d, k, limits);
    if (!trace.ineq7.holds) throw TraceCheckError("(7)", "inequality (7) fails");
    if (trace.kraft_d <= 1) {
        trace.ineq8 = check_inequality_8(c, d, k, limits);
        trace.ineq8_applicable = true;
        if (!trace.ineq8.holds) throw TraceCheckError("(8)", "inequality chain (8) fails");
    }

    trace.all_ok = true;
    return trace;
}

} // namespace udc

#endif
