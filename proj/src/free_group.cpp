#include "digroup/free_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace digroup {

GroupWord::GroupWord(Word letters) : letters_(std::move(letters)) {
  if (std::any_of(letters_.begin(), letters_.end(), [](Letter l) { return l.is_unit(); }))
    throw std::invalid_argument("group word contains the bar-unit symbol");
}

ReducedWord::ReducedWord(GroupWord w) : word_(std::move(w)) {
  if (!is_reduced(word_.letters())) throw std::invalid_argument("group word is not reduced");
}

bool is_reduced(std::span<const Letter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!w[i].is_unit() && w[i + 1] == w[i].inverted()) return false;
  return true;
}

GroupWord tau(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  std::copy_if(w.begin(), w.end(), std::back_inserter(out), [](Letter l) { return !l.is_unit(); });
  return GroupWord(std::move(out));
}

ReducedWord hat(std::span<const Letter> w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (l.is_unit()) continue;
    if (!stack.empty() && stack.back() == l.inverted())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return ReducedWord(GroupWord(std::move(stack)));
}

GroupWord inverse(const GroupWord& w) {
  Word out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l = l.inverted();
  return GroupWord(std::move(out));
}

ReducedWord inverse(const ReducedWord& w) { return ReducedWord(inverse(w.word())); }

std::size_t lambda(const GroupWord& w) {
  const auto& ls = w.letters();
  auto it = std::find_if(ls.begin(), ls.end(), [](Letter l) { return l.is_negative(); });
  if (it == ls.end()) throw std::domain_error("lambda is undefined on X^*");
  return static_cast<std::size_t>(it - ls.begin()) + 1;
}

}  // namespace digroup
