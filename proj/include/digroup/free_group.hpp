#pragma once

// Words of the free group gp<X>: erasure of e, free reduction, formal inverse
// and the position of the first negative letter.

#include <span>
#include <vector>

#include "digroup/diword.hpp"

namespace digroup {

/// A possibly empty word over X^{±1}; never contains e.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(Word letters);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Membership in X^* (true for the empty word).
  bool all_positive() const { return digroup::all_positive(letters_); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  Word letters_;
};

/// A freely reduced GroupWord.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(GroupWord w);

  const GroupWord& word() const { return word_; }
  const Word& letters() const { return word_.letters(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  bool all_positive() const { return word_.all_positive(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  GroupWord word_;
};

bool is_reduced(std::span<const Letter> w);

GroupWord tau(std::span<const Letter> w);
ReducedWord hat(std::span<const Letter> w);
GroupWord inverse(const GroupWord& w);
ReducedWord inverse(const ReducedWord& w);

/// 1-based index of the first inverse-generator letter. Throws
/// std::domain_error when w lies in X^*.
std::size_t lambda(const GroupWord& w);

}  // namespace digroup
