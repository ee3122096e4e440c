#include "rba/poly.hpp"

#include <cassert>
#include <stdexcept>

namespace rba {

namespace {

// P(a)P(b) = P(P(a)b) + P(aP(b)) + lambda P(ab)
Poly bracket_seam(const Word& a, const Word& b, const Scalar& lambda) {
  Poly out = apply_P(word_product(Word::bracket(a), b, lambda));
  out += apply_P(word_product(a, Word::bracket(b), lambda));
  if (lambda != 0) out += lambda * apply_P(word_product(a, b, lambda));
  return out;
}

Poly prime_product(const Prime& p, const Prime& q, const Scalar& lambda) {
  if (p.is_bracket() && q.is_bracket()) return bracket_seam(p.body(), q.body(), lambda);
  return Poly(Word({p, q}));
}

}  // namespace

Poly word_product(const Word& u, const Word& v, const Scalar& lambda) {
  const auto& up = u.primes();
  const auto& vp = v.primes();
  Poly seam = prime_product(up.back(), vp.front(), lambda);
  if (up.size() == 1 && vp.size() == 1) return seam;
  Poly out;
  for (const auto& [m, c] : seam.terms()) {
    std::vector<Prime> ps(up.begin(), up.end() - 1);
    ps.insert(ps.end(), m.primes().begin(), m.primes().end());
    ps.insert(ps.end(), vp.begin() + 1, vp.end());
    out.add_term(Word(std::move(ps)), c);
  }
  return out;
}

Poly multiply(const Poly& f, const Poly& g, const Scalar& lambda) {
  Poly out;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out += (a * b) * word_product(u, v, lambda);
  return out;
}

Poly apply_P(const Poly& f) {
  Poly out;
  for (const auto& [w, c] : f.terms()) out.add_term(Word::bracket(w), c);
  return out;
}

namespace {

struct HoleSite {
  // Index of the prime that is, or contains, the hole at this level.
  std::size_t index;
  bool direct;  // true: primes[index] is the hole itself
};

HoleSite find_hole(const std::vector<Prime>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].is_hole()) return {i, true};
    if (ps[i].is_bracket() && ps[i].body().hole_count() > 0) return {i, false};
  }
  throw std::logic_error("star word lost its hole");
}

Poly substitute_in(const Word& pat, const Word& t, const Scalar& lambda) {
  const auto& ps = pat.primes();
  HoleSite site = find_hole(ps);
  if (!site.direct) {
    Poly inner = substitute_in(ps[site.index].body(), t, lambda);
    Poly out;
    for (const auto& [w, c] : inner.terms()) {
      std::vector<Prime> np(ps);
      np[site.index] = Prime::bracket(w);
      out.add_term(Word(std::move(np)), c);
    }
    return out;
  }
  Poly acc(t);
  if (site.index > 0) {
    Word left(std::vector<Prime>(ps.begin(), ps.begin() + site.index));
    acc = multiply(Poly(left), acc, lambda);
  }
  if (site.index + 1 < ps.size()) {
    Word right(std::vector<Prime>(ps.begin() + site.index + 1, ps.end()));
    acc = multiply(acc, Poly(right), lambda);
  }
  return acc;
}

std::optional<Word> substitute_literal_in(const Word& pat, const Word& t) {
  const auto& ps = pat.primes();
  HoleSite site = find_hole(ps);
  if (!site.direct) {
    auto inner = substitute_literal_in(ps[site.index].body(), t);
    if (!inner) return std::nullopt;
    std::vector<Prime> np(ps);
    np[site.index] = Prime::bracket(*inner);
    return Word(std::move(np));
  }
  const auto& tp = t.primes();
  if (site.index > 0 && !Word::valid_adjacent(ps[site.index - 1], tp.front()))
    return std::nullopt;
  if (site.index + 1 < ps.size() && !Word::valid_adjacent(tp.back(), ps[site.index + 1]))
    return std::nullopt;
  std::vector<Prime> np(ps.begin(), ps.begin() + site.index);
  np.insert(np.end(), tp.begin(), tp.end());
  np.insert(np.end(), ps.begin() + site.index + 1, ps.end());
  return Word(std::move(np));
}

}  // namespace

Poly substitute(const StarWord& q, const Word& t, const Scalar& lambda) {
  if (t.hole_count() != 0) throw std::invalid_argument("substitution argument has a hole");
  return substitute_in(q.pattern(), t, lambda);
}

Poly substitute_poly(const StarWord& q, const Poly& s, const Scalar& lambda) {
  Poly out;
  for (const auto& [w, c] : s.terms()) out += c * substitute(q, w, lambda);
  return out;
}

std::optional<Word> substitute_literal(const StarWord& q, const Word& t) {
  if (t.hole_count() != 0) throw std::invalid_argument("substitution argument has a hole");
  return substitute_literal_in(q.pattern(), t);
}

bool is_normal_sword(const StarWord& q, const Poly& s, const Scalar& lambda) {
  if (s.is_zero()) throw std::invalid_argument("normality is undefined for the zero polynomial");
  auto literal = substitute_literal(q, s.leading_word());
  if (!literal) return false;
  Poly whole = substitute_poly(q, s, lambda);
  if (whole.is_zero()) return false;
  return whole.leading_word() == *literal;
}

}  // namespace rba
