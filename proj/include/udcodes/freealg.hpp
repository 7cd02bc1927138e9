#ifndef UDCODES_FREEALG_HPP
#define UDCODES_FREEALG_HPP

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/factorization.hpp"
#include "udcodes/monoid.hpp"
#include "udcodes/rational.hpp"

namespace udc {

inline constexpr std::size_t kDefaultTermCap = 200000;

/// A product of word-indeterminates. Equality is componentwise sequence
/// equality, never equality of concatenations: ("0","10") and ("01","0")
/// are distinct monomials. The empty sequence is the unit monomial 1.
struct Monomial {
    std::vector<Word> indets;

    static Monomial unit() { return {}; }
    static Monomial of(Word w) { return {{std::move(w)}}; }

    std::size_t degree() const { return indets.size(); }

    Monomial operator*(const Monomial& other) const {
        Monomial out = *this;
        out.indets.insert(out.indets.end(), other.indets.begin(), other.indets.end());
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // degree first, then componentwise word order
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (std::size_t i = 0; i < a.degree(); ++i)
            if (auto c = a.indets[i] <=> b.indets[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

/// An element of the free associative algebra over the rationals with one
/// non-commuting indeterminate per word. Canonical form: no zero
/// coefficients, terms ordered by the monomial order.
class NCPolynomial {
  public:
    NCPolynomial() = default;

    static NCPolynomial zero() { return {}; }
    static NCPolynomial one() { return constant(1); }

    static NCPolynomial constant(BigRational coef) {
        NCPolynomial p;
        p.add_term(Monomial::unit(), std::move(coef));
        return p;
    }

    static NCPolynomial from_monomial(Monomial m, BigRational coef = 1) {
        NCPolynomial p;
        p.add_term(std::move(m), std::move(coef));
        return p;
    }

    static NCPolynomial indeterminate(Word w) { return from_monomial(Monomial::of(std::move(w))); }

    const std::map<Monomial, BigRational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, const BigRational& coef) {
        if (coef == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend NCPolynomial operator+(const NCPolynomial& p, const NCPolynomial& q) {
        NCPolynomial out = p;
        for (const auto& [m, c] : q.terms_) out.add_term(m, c);
        return out;
    }

    friend NCPolynomial operator-(const NCPolynomial& p, const NCPolynomial& q) {
        NCPolynomial out = p;
        for (const auto& [m, c] : q.terms_) out.add_term(m, -c);
        return out;
    }

    friend NCPolynomial operator*(const BigRational& s, const NCPolynomial& p) {
        NCPolynomial out;
        if (s == 0) return out;
        for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
        return out;
    }

    /// Non-commutative product: monomials concatenate as sequences.
    NCPolynomial mul(const NCPolynomial& q, std::size_t max_terms = kDefaultTermCap) const {
        NCPolynomial out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : q.terms_) {
                out.add_term(m1 * m2, c1 * c2);
                if (out.term_count() > max_terms)
                    throw BoundExceededError("polynomial term cap exceeded (cap " +
                                                 std::to_string(max_terms) + ")",
                                             out.term_count());
            }
        return out;
    }

    friend NCPolynomial operator*(const NCPolynomial& p, const NCPolynomial& q) {
        return p.mul(q);
    }

    /// All coefficients nonnegative (and hence the evaluation too).
    bool is_nonnegative() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    /// Canonical debug form: `coef * (w1.w2)` per term, unit monomial as `1`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << to_fraction_string(c) << " * ";
            if (m.degree() == 0) {
                os << "1";
            } else {
                os << "(";
                for (std::size_t i = 0; i < m.degree(); ++i) {
                    if (i) os << ".";
                    os << m.indets[i].text();
                }
                os << ")";
            }
        }
        return os.str();
    }

  private:
    std::map<Monomial, BigRational> terms_;
};

/// The polynomial sum of one degree-1 monomial per codeword.
inline NCPolynomial code_sum(const Code& c) {
    NCPolynomial p;
    for (const Word& x : c) p.add_term(Monomial::of(x), 1);
    return p;
}

/// (code_sum(d))^l: exactly |d|^l monomials, one per tuple in D^l, all with
/// coefficient 1.
inline NCPolynomial code_sum_power(const Code& d, unsigned l,
                                   std::size_t max_terms = kDefaultTermCap) {
    NCPolynomial acc = NCPolynomial::one();
    NCPolynomial base = code_sum(d);
    for (unsigned i = 0; i < l; ++i) acc = acc.mul(base, max_terms);
    return acc;
}

/// The evaluation homomorphism: each indeterminate x maps to r^(-len(x)),
/// so each monomial maps to r^(-sum of lengths), linearly over coefficients.
inline BigRational evaluate(const NCPolynomial& p, const Alphabet& a) {
    BigRational total = 0;
    for (const auto& [m, c] : p.terms()) {
        std::size_t len = 0;
        for (const Word& x : m.indets) {
            if (!(x.alphabet() == a))
                throw AlphabetMismatchError("indeterminate '" + x.text() + "' over alphabet '" +
                                            x.alphabet().symbols() + "', evaluating over '" +
                                            a.symbols() + "'");
            len += x.length();
        }
        total += c * kraft_weight(a.size(), len);
    }
    return total;
}

/// Rewrites p modulo the ideal generated by x - P(w) for x in c with
/// con(w) = x over d: every c-indeterminate is replaced by the monomial of
/// its unique d-factorization, flattening sequences. Requires every
/// indeterminate of p to lie in c and to be parseable over d.
inline NCPolynomial rewrite_mod_ideal(const NCPolynomial& p, const Code& c, const Code& d,
                                      std::size_t cap = kDefaultParseCap) {
    std::map<Word, Factorization> table;
    NCPolynomial out;
    for (const auto& [m, coef] : p.terms()) {
        Monomial rewritten;
        for (const Word& x : m.indets) {
            if (!c.contains(x))
                throw PreconditionError("indeterminate '" + x.text() +
                                        "' is not a codeword of the code being rewritten");
            auto it = table.find(x);
            if (it == table.end()) {
                auto f = unique_factorization(x, d, cap);
                if (!f)
                    throw PreconditionError("codeword '" + x.text() +
                                            "' has no factorization over the target code");
                it = table.emplace(x, std::move(*f)).first;
            }
            rewritten.indets.insert(rewritten.indets.end(), it->second.begin(),
                                    it->second.end());
        }
        out.add_term(std::move(rewritten), coef);
    }
    return out;
}

} // namespace udc

#endif
