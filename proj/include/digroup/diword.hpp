#pragma once

// Letters, alphabets and diwords [u]_m of the free disemigroup on X^{±1} ∪ {e}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digroup {

/// One letter of X^{±1} ∪ {e}. The bar-unit symbol e is smallest; the rest
/// interleave as x1 < x1^-1 < x2 < x2^-1 < ... following generator order.
class Letter {
 public:
  enum class Kind : std::uint8_t { Unit, Generator, Inverse };

  constexpr Letter() = default;

  static constexpr Letter unit() { return Letter(0); }
  static constexpr Letter generator(std::uint32_t gen) { return Letter(2 * gen + 1); }
  static constexpr Letter inverse(std::uint32_t gen) { return Letter(2 * gen + 2); }

  constexpr Kind kind() const {
    if (code_ == 0) return Kind::Unit;
    return (code_ % 2 == 1) ? Kind::Generator : Kind::Inverse;
  }
  constexpr bool is_unit() const { return code_ == 0; }
  constexpr bool is_positive() const { return code_ % 2 == 1; }
  constexpr bool is_negative() const { return code_ != 0 && code_ % 2 == 0; }

  /// Generator index. Meaningless for the bar-unit symbol.
  constexpr std::uint32_t gen() const { return (code_ - 1) / 2; }

  /// x <-> x^-1; e is fixed.
  constexpr Letter inverted() const {
    if (is_unit()) return *this;
    return is_positive() ? inverse(gen()) : generator(gen());
  }

  /// Rank in the letter order; also a dense index usable for tables.
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

using Word = std::vector<Letter>;

/// Generator names in order. Names are identifiers; "e" is reserved.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Comma separated list, e.g. "x,y,z".
  static Alphabet parse(std::string_view comma_list);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;

  bool contains(Letter l) const { return l.is_unit() || l.gen() < names_.size(); }

  /// e, x1, x1^-1, x2, x2^-1, ... in letter order.
  std::vector<Letter> letters() const;
  std::vector<Letter> generators() const;

  std::string render(Letter l) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Deg-lex on associative words: shorter first, then letterwise.
std::strong_ordering deglex_compare(std::span<const Letter> a, std::span<const Letter> b);

bool all_positive(std::span<const Letter> w);

/// A nonempty word with a 1-based center position, [u]_m.
class DiWord {
 public:
  DiWord(Word word, std::size_t center);

  const Word& word() const { return word_; }
  std::size_t center() const { return center_; }
  std::size_t size() const { return word_.size(); }
  Letter center_letter() const { return word_[center_ - 1]; }

  friend bool operator==(const DiWord&, const DiWord&) = default;
  /// Deg-lex on the words, then the centers.
  friend std::strong_ordering operator<=>(const DiWord& a, const DiWord& b);

 private:
  Word word_;
  std::size_t center_;
};

inline std::strong_ordering compare(const DiWord& a, const DiWord& b) { return a <=> b; }

/// [u]_m |- [v]_n = [uv]_{|u|+n}
DiWord op_left(const DiWord& u, const DiWord& v);
/// [u]_m -| [v]_n = [uv]_m
DiWord op_right(const DiWord& u, const DiWord& v);

struct DiWordHash {
  std::size_t operator()(const DiWord& w) const noexcept;
};

Word concat(std::span<const Letter> a, std::span<const Letter> b);

std::string to_string(std::span<const Letter> w, const Alphabet& alphabet);
std::string to_string(const DiWord& w, const Alphabet& alphabet);

/// Space separated letters: "x^-1 y e". Empty input gives the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
/// "[x^-1 y e]_2"
DiWord parse_diword(std::string_view text, const Alphabet& alphabet);

}  // namespace digroup
