#pragma once

// The free digroup F(X) in closed form. Elements are the S∪T-irreducible
// diwords; the operations are evaluated directly on the normal forms by free
// reduction, without running the rewriting system.

#include <optional>
#include <string>
#include <vector>

#include "digroup/diword.hpp"
#include "digroup/rewrite.hpp"

namespace digroup {

class NormalForm {
 public:
  /// Throws std::invalid_argument if w is reducible.
  explicit NormalForm(DiWord w);

  static NormalForm unit() { return NormalForm(DiWord({Letter::unit()}, 1)); }
  /// [x]_1, [x^-1]_1 or [e]_1.
  static NormalForm letter(Letter l) { return NormalForm(DiWord({l}, 1)); }

  const DiWord& diword() const { return diword_; }
  NormalClass klass() const { return klass_; }

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.diword_ == b.diword_; }
  friend auto operator<=>(const NormalForm& a, const NormalForm& b) { return a.diword_ <=> b.diword_; }

 private:
  DiWord diword_;
  NormalClass klass_;
};

NormalForm classify(const DiWord& w);

/// q |- p
NormalForm mul_left(const NormalForm& q, const NormalForm& p);
/// p -| q
NormalForm mul_right(const NormalForm& p, const NormalForm& q);
NormalForm dagger(const NormalForm& q);

/// Group part J = OmegaE ∪ OmegaXinv.
bool in_group_part(const NormalForm& w);
/// Halo: [e]_1, or [u x v]_{|u|+1} in OmegaX whose whole word u x v reduces to
/// the empty word.
bool in_halo(const NormalForm& w);

/// Every normal form of word length <= max_len, sorted ascending.
std::vector<NormalForm> enumerate_normal_forms(const Alphabet& alphabet, std::size_t max_len);

/// Every reduced word over X^{±1} of length exactly `len`.
std::vector<Word> reduced_words(const Alphabet& alphabet, std::size_t len);

// Single generator tables.

enum class TableOp { Left, Right, Dagger };

std::string_view to_string(TableOp op);

struct TableCell {
  NormalForm left;
  std::optional<NormalForm> right;  // empty for dagger
  TableOp op;
  NormalForm result;
};

struct SingleGeneratorTable {
  Alphabet alphabet;
  /// Elements in class blocks: [e x^n]_1 for 0<=n<=N, then [x^i x x^j]_{|i|+1}
  /// for |i|,|j|<=R, then [x^-m]_1 for 1<=m<=N.
  std::vector<NormalForm> elements;
  std::vector<TableCell> cells;
};

/// [x^k] for integer k: x repeated k times, or x^-1 repeated -k times.
Word power(Letter x, int k);

SingleGeneratorTable single_generator_table(int range_n, int range_ij);

std::string table_to_csv(const SingleGeneratorTable& table);
std::string table_to_text(const SingleGeneratorTable& table);

}  // namespace digroup
