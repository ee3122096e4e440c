#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace rba {

/// Degree of a word: (total, pcount) where total counts letters plus P
/// symbols and pcount counts P symbols alone. Compared lexicographically.
struct DegPair {
  std::uint32_t total = 0;
  std::uint32_t pcount = 0;
  friend auto operator<=>(const DegPair&, const DegPair&) = default;
};

class Word;
using WordPtr = std::shared_ptr<const Word>;

/// One prime factor: a generator letter x_i (0-based index), a bracket P(w)
/// around a word, or the substitution hole of a star word.
class Prime {
 public:
  static Prime letter(std::uint32_t index) { return Prime(index); }
  static Prime bracket(Word body);
  static Prime hole() { return Prime(std::monostate{}); }

  bool is_letter() const { return std::holds_alternative<std::uint32_t>(v_); }
  bool is_bracket() const { return std::holds_alternative<WordPtr>(v_); }
  bool is_hole() const { return std::holds_alternative<std::monostate>(v_); }

  std::uint32_t letter_index() const { return std::get<std::uint32_t>(v_); }
  const Word& body() const { return *std::get<WordPtr>(v_); }

  DegPair deg() const;
  bool operator==(const Prime& o) const;

 private:
  explicit Prime(std::uint32_t i) : v_(i) {}
  explicit Prime(std::monostate m) : v_(m) {}
  explicit Prime(WordPtr w) : v_(std::move(w)) {}
  std::variant<std::uint32_t, WordPtr, std::monostate> v_;
};

/// A word of the free Rota-Baxter algebra: a nonempty alternating product of
/// primes with no two adjacent brackets. Immutable value type; bracket bodies
/// are shared. Star words (exactly one hole, at any depth) reuse the same
/// representation; plain-word operations assert hole-freeness.
class Word {
 public:
  explicit Word(std::vector<Prime> primes);

  static Word letter(std::uint32_t index) { return Word({Prime::letter(index)}); }
  static Word bracket(Word body) { return Word({Prime::bracket(std::move(body))}); }
  static Word hole() { return Word({Prime::hole()}); }

  const std::vector<Prime>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  DegPair deg() const { return deg_; }
  std::uint32_t hole_count() const { return holes_; }
  bool is_single_letter() const { return primes_.size() == 1 && primes_[0].is_letter(); }
  bool is_single_bracket() const { return primes_.size() == 1 && primes_[0].is_bracket(); }
  /// Largest letter index used, or nullopt if none. Holes and empty bodies
  /// cannot occur, so this visits every prime.
  std::optional<std::uint32_t> max_letter() const;

  bool operator==(const Word& o) const;

  /// True when a and b may sit next to each other inside one word.
  static bool valid_adjacent(const Prime& a, const Prime& b) {
    return !(a.is_bracket() && b.is_bracket());
  }

 private:
  std::vector<Prime> primes_;
  DegPair deg_;
  std::uint32_t holes_ = 0;
};

/// The well order on words: Deg first (total, then pcount, lexicographically);
/// on a Deg tie two single brackets compare by body, otherwise prime tuples
/// compare lexicographically (primes recursively as one-prime words, letters
/// by index). A strict prefix cannot tie under equal Deg for hole-free words.
std::strong_ordering compare(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }
};
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) > 0; }
};

/// A word over the alphabet extended by one hole; substitution target.
class StarWord {
 public:
  explicit StarWord(Word pattern);
  static StarWord identity() { return StarWord(Word::hole()); }

  const Word& pattern() const { return pat_; }
  bool is_identity() const { return pat_.size() == 1 && pat_.primes()[0].is_hole(); }
  bool operator==(const StarWord& o) const { return pat_ == o.pat_; }

 private:
  Word pat_;
};

/// All contexts q with q|_t == u literally (t's primes spliced contiguously,
/// every nesting depth searched). Deterministic order: outermost first, then
/// leftmost.
std::vector<StarWord> occurrences(const Word& u, const Word& t);

/// Every word over x_1..x_k of total degree <= max_total, each exactly once,
/// ascending under compare().
std::vector<Word> enumerate_words(std::uint32_t alphabet_size, std::uint32_t max_total);

}  // namespace rba
