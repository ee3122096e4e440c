#pragma once

#include <map>
#include <utility>

#include "rba/scalar.hpp"
#include "rba/word.hpp"

namespace rba {

/// Finite linear combination of words with nonzero exact rational
/// coefficients. Terms are stored descending under compare(), so begin() is
/// the leading term and iteration order is the canonical display order.
class Poly {
 public:
  using TermMap = std::map<Word, Scalar, WordGreater>;

  Poly() = default;
  explicit Poly(Word w) { terms_.emplace(std::move(w), 1); }
  Poly(Scalar c, Word w) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Leading term (greatest word). Throws std::invalid_argument on zero.
  const std::pair<const Word, Scalar>& leading() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return *terms_.begin();
  }
  const Word& leading_word() const { return leading().first; }
  const Scalar& leading_coeff() const { return leading().second; }

  Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    if (this == &o) return *this *= Scalar(2);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Scalar(-1); }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

/// Product of two words under the weight-lambda Rota-Baxter expansion: plain
/// concatenation except at a bracket-bracket seam, where
/// P(a)P(b) = P(P(a)b) + P(aP(b)) + lambda P(ab) applies recursively.
Poly word_product(const Word& u, const Word& v, const Scalar& lambda);

/// Bilinear extension of word_product.
Poly multiply(const Poly& f, const Poly& g, const Scalar& lambda);

/// Wrap every monomial in one bracket: linear extension of w -> P(w).
Poly apply_P(const Poly& f);

/// Substitute word t for the hole of q; bracket collisions at the splice
/// seams resolve through word_product. Result monomials never exceed the
/// combined degree (equality exact when lambda = 0).
Poly substitute(const StarWord& q, const Word& t, const Scalar& lambda);

/// Linear extension of substitute over the monomials of s.
Poly substitute_poly(const StarWord& q, const Poly& s, const Scalar& lambda);

/// Splice t into q only if no bracket-bracket seam arises; nullopt otherwise.
std::optional<Word> substitute_literal(const StarWord& q, const Word& t);

/// Whether q|_s is a normal s-word: substituting the leading word of s yields
/// a genuine word (no collision) that dominates the whole substituted
/// polynomial.
bool is_normal_sword(const StarWord& q, const Poly& s, const Scalar& lambda);

}  // namespace rba
