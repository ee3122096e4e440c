#include "rba/word.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace rba {

Prime Prime::bracket(Word body) {
  return Prime(std::make_shared<const Word>(std::move(body)));
}

DegPair Prime::deg() const {
  if (is_letter()) return {1, 0};
  if (is_hole()) return {0, 0};
  DegPair b = body().deg();
  return {b.total + 1, b.pcount + 1};
}

bool Prime::operator==(const Prime& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_letter()) return letter_index() == o.letter_index();
  if (is_hole()) return true;
  return body() == o.body();
}

Word::Word(std::vector<Prime> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw std::invalid_argument("word must be nonempty");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0 && !valid_adjacent(primes_[i - 1], primes_[i]))
      throw std::invalid_argument("word has two adjacent brackets");
    DegPair d = primes_[i].deg();
    deg_.total += d.total;
    deg_.pcount += d.pcount;
    if (primes_[i].is_hole()) ++holes_;
    if (primes_[i].is_bracket()) holes_ += primes_[i].body().hole_count();
  }
  if (holes_ > 1) throw std::invalid_argument("word has more than one hole");
}

std::optional<std::uint32_t> Word::max_letter() const {
  std::optional<std::uint32_t> m;
  for (const Prime& p : primes_) {
    std::optional<std::uint32_t> q;
    if (p.is_letter()) q = p.letter_index();
    else if (p.is_bracket()) q = p.body().max_letter();
    if (q && (!m || *q > *m)) m = q;
  }
  return m;
}

bool Word::operator==(const Word& o) const {
  if (deg_ != o.deg_ || primes_.size() != o.primes_.size()) return false;
  return std::equal(primes_.begin(), primes_.end(), o.primes_.begin());
}

namespace {

// Rank used only when a prime tuple comparison meets mixed kinds; the Deg
// rule already separates letters from brackets, holes need an explicit slot.
int prime_rank(const Prime& p) { return p.is_hole() ? 0 : (p.is_letter() ? 1 : 2); }

std::strong_ordering compare_primes(const Prime& a, const Prime& b);

std::strong_ordering compare_tuples(const std::vector<Prime>& a, const std::vector<Prime>& b,
                                    bool hole_free) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare_primes(a[i], b[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  if (a.size() == b.size()) return std::strong_ordering::equal;
  // For hole-free words a strict prefix under equal Deg is impossible: the
  // missing primes would change the total degree.
  assert(!hole_free && "prefix tie unreachable for hole-free words of equal Deg");
  (void)hole_free;
  return a.size() <=> b.size();
}

std::strong_ordering compare_primes(const Prime& a, const Prime& b) {
  DegPair da = a.deg(), db = b.deg();
  if (auto c = da <=> db; c != std::strong_ordering::equal) return c;
  if (int ra = prime_rank(a), rb = prime_rank(b); ra != rb) return ra <=> rb;
  if (a.is_hole()) return std::strong_ordering::equal;
  if (a.is_letter()) return a.letter_index() <=> b.letter_index();
  return compare(a.body(), b.body());
}

}  // namespace

std::strong_ordering compare(const Word& a, const Word& b) {
  if (auto c = a.deg() <=> b.deg(); c != std::strong_ordering::equal) return c;
  if (a.size() == 1 && b.size() == 1 && a.primes()[0].is_bracket() && b.primes()[0].is_bracket())
    return compare(a.primes()[0].body(), b.primes()[0].body());
  return compare_tuples(a.primes(), b.primes(),
                        a.hole_count() == 0 && b.hole_count() == 0);
}

StarWord::StarWord(Word pattern) : pat_(std::move(pattern)) {
  if (pat_.hole_count() != 1)
    throw std::invalid_argument("star word must contain exactly one hole");
}

namespace {

void collect_occurrences(const Word& u, const Word& t,
                         const std::function<Word(Word)>& wrap,
                         std::vector<StarWord>& out,
                         std::vector<std::pair<Word, std::function<Word(Word)>>>& deeper) {
  const auto& up = u.primes();
  const auto& tp = t.primes();
  if (tp.size() <= up.size()) {
    for (std::size_t start = 0; start + tp.size() <= up.size(); ++start) {
      if (!std::equal(tp.begin(), tp.end(), up.begin() + start)) continue;
      std::vector<Prime> ctx(up.begin(), up.begin() + start);
      ctx.push_back(Prime::hole());
      ctx.insert(ctx.end(), up.begin() + start + tp.size(), up.end());
      out.push_back(StarWord(wrap(Word(std::move(ctx)))));
    }
  }
  for (std::size_t i = 0; i < up.size(); ++i) {
    if (!up[i].is_bracket()) continue;
    auto body = up[i].body();
    auto wrap_here = [wrap, up, i](Word w) {
      std::vector<Prime> ps(up);
      ps[i] = Prime::bracket(std::move(w));
      return wrap(Word(std::move(ps)));
    };
    deeper.emplace_back(body, wrap_here);
  }
}

}  // namespace

std::vector<StarWord> occurrences(const Word& u, const Word& t) {
  if (t.hole_count() != 0 || u.hole_count() != 0)
    throw std::invalid_argument("occurrences expects hole-free words");
  std::vector<StarWord> out;
  // Breadth-first over nesting levels: outermost contexts first, leftmost
  // within one level.
  std::vector<std::pair<Word, std::function<Word(Word)>>> frontier;
  frontier.emplace_back(u, [](Word w) { return w; });
  while (!frontier.empty()) {
    std::vector<std::pair<Word, std::function<Word(Word)>>> next;
    for (auto& [lvl, wrap] : frontier) collect_occurrences(lvl, t, wrap, out, next);
    frontier = std::move(next);
  }
  return out;
}

namespace {

// Sequences of primes of exact total degree d whose first prime is allowed
// (or not) to be a bracket, over k letters; byDeg[i] lists all words of
// exact total degree i already built.
void sequences(std::uint32_t k, std::uint32_t d, bool bracket_first_ok,
               const std::vector<std::vector<Word>>& byDeg,
               std::vector<std::vector<Prime>>& out) {
  if (d == 0) {
    out.push_back({});
    return;
  }
  for (std::uint32_t l = 0; l < k; ++l) {
    std::vector<std::vector<Prime>> rest;
    sequences(k, d - 1, true, byDeg, rest);
    for (auto& r : rest) {
      std::vector<Prime> seq;
      seq.reserve(r.size() + 1);
      seq.push_back(Prime::letter(l));
      seq.insert(seq.end(), r.begin(), r.end());
      out.push_back(std::move(seq));
    }
  }
  if (bracket_first_ok) {
    for (std::uint32_t db = 1; db + 1 <= d; ++db) {
      for (const Word& body : byDeg[db]) {
        std::vector<std::vector<Prime>> rest;
        sequences(k, d - 1 - db, false, byDeg, rest);
        for (auto& r : rest) {
          std::vector<Prime> seq;
          seq.reserve(r.size() + 1);
          seq.push_back(Prime::bracket(body));
          seq.insert(seq.end(), r.begin(), r.end());
          out.push_back(std::move(seq));
        }
      }
    }
  }
}

}  // namespace

std::vector<Word> enumerate_words(std::uint32_t alphabet_size, std::uint32_t max_total) {
  if (alphabet_size == 0) return {};
  std::vector<std::vector<Word>> byDeg(max_total + 1);
  for (std::uint32_t d = 1; d <= max_total; ++d) {
    std::vector<std::vector<Prime>> seqs;
    sequences(alphabet_size, d, true, byDeg, seqs);
    byDeg[d].reserve(seqs.size());
    for (auto& s : seqs) byDeg[d].emplace_back(std::move(s));
    std::sort(byDeg[d].begin(), byDeg[d].end(), WordLess{});
  }
  std::vector<Word> all;
  for (std::uint32_t d = 1; d <= max_total; ++d)
    for (auto& w : byDeg[d]) all.push_back(std::move(w));
  return all;
}

}  // namespace rba
