#include "digroup/free_digroup.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "digroup/free_group.hpp"

namespace digroup {

namespace {

NormalClass require_class(const DiWord& w) {
  auto klass = omega_class(w);
  if (!klass) throw std::invalid_argument("diword is reducible, not a normal form");
  return *klass;
}

// [e h]_1 when h is in X^*, otherwise [h]_{lambda(h)}.
NormalForm from_group_element(const ReducedWord& h) {
  if (h.all_positive()) {
    Word w{Letter::unit()};
    w.insert(w.end(), h.letters().begin(), h.letters().end());
    return NormalForm(DiWord(std::move(w), 1));
  }
  return NormalForm(DiWord(h.letters(), lambda(h.word())));
}

std::vector<Word> positive_words(const Alphabet& alphabet, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Letter g : alphabet.generators()) {
        next.push_back(w);
        next.back().push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

NormalForm::NormalForm(DiWord w) : diword_(std::move(w)), klass_(require_class(diword_)) {}

NormalForm classify(const DiWord& w) { return NormalForm(w); }

NormalForm mul_left(const NormalForm& q, const NormalForm& p) {
  const auto& pw = p.diword().word();
  if (p.klass() != NormalClass::OmegaX) return from_group_element(hat(concat(q.diword().word(), pw)));
  const std::size_t c = p.diword().center();
  std::span<const Letter> u(pw.data(), c - 1);
  ReducedWord h = hat(concat(q.diword().word(), u));
  Word out = h.letters();
  out.insert(out.end(), pw.begin() + (c - 1), pw.end());
  return NormalForm(DiWord(std::move(out), h.size() + 1));
}

NormalForm mul_right(const NormalForm& p, const NormalForm& q) {
  const auto& pw = p.diword().word();
  if (p.klass() != NormalClass::OmegaX) return from_group_element(hat(concat(pw, q.diword().word())));
  const std::size_t c = p.diword().center();
  std::span<const Letter> v(pw.data() + c, pw.size() - c);
  ReducedWord h = hat(concat(v, q.diword().word()));
  Word out(pw.begin(), pw.begin() + c);
  out.insert(out.end(), h.letters().begin(), h.letters().end());
  return NormalForm(DiWord(std::move(out), c));
}

NormalForm dagger(const NormalForm& q) { return from_group_element(inverse(hat(q.diword().word()))); }

bool in_group_part(const NormalForm& w) { return w.klass() != NormalClass::OmegaX; }

bool in_halo(const NormalForm& w) {
  if (w == NormalForm::unit()) return true;
  return w.klass() == NormalClass::OmegaX && hat(w.diword().word()).empty();
}

std::vector<Word> reduced_words(const Alphabet& alphabet, std::size_t len) {
  const auto letters = alphabet.letters();
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Letter l : letters) {
        if (l.is_unit() || (!w.empty() && w.back() == l.inverted())) continue;
        next.push_back(w);
        next.back().push_back(l);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<NormalForm> enumerate_normal_forms(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<NormalForm> out;
  std::vector<std::vector<Word>> reduced;
  for (std::size_t len = 0; len <= max_len; ++len) reduced.push_back(reduced_words(alphabet, len));

  for (std::size_t len = 0; len + 1 <= max_len; ++len)
    for (const auto& u : positive_words(alphabet, len)) {
      Word w{Letter::unit()};
      w.insert(w.end(), u.begin(), u.end());
      out.emplace_back(DiWord(std::move(w), 1));
    }

  for (std::size_t i = 0; i + 1 <= max_len; ++i)
    for (std::size_t j = 0; i + 1 + j <= max_len; ++j)
      for (const auto& u : reduced[i])
        for (Letter x : alphabet.generators())
          for (const auto& v : reduced[j]) {
            Word w = u;
            w.push_back(x);
            w.insert(w.end(), v.begin(), v.end());
            out.emplace_back(DiWord(std::move(w), i + 1));
          }

  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& h : reduced[len])
      if (!all_positive(h)) out.emplace_back(DiWord(h, lambda(GroupWord(h))));

  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(TableOp op) {
  switch (op) {
    case TableOp::Left:
      return "|-";
    case TableOp::Right:
      return "-|";
    case TableOp::Dagger:
      return "dagger";
  }
  return "?";
}

Word power(Letter x, int k) {
  Letter l = k >= 0 ? x : x.inverted();
  return Word(static_cast<std::size_t>(k >= 0 ? k : -k), l);
}

SingleGeneratorTable single_generator_table(int range_n, int range_ij) {
  if (range_n < 1 || range_ij < 1) throw std::invalid_argument("table ranges must be >= 1");
  SingleGeneratorTable table{Alphabet({"x"}), {}, {}};
  const Letter x = Letter::generator(0);

  for (int n = 0; n <= range_n; ++n) {
    Word w{Letter::unit()};
    auto p = power(x, n);
    w.insert(w.end(), p.begin(), p.end());
    table.elements.emplace_back(DiWord(std::move(w), 1));
  }
  for (int i = -range_ij; i <= range_ij; ++i)
    for (int j = -range_ij; j <= range_ij; ++j) {
      Word w = power(x, i);
      w.push_back(x);
      auto v = power(x, j);
      w.insert(w.end(), v.begin(), v.end());
      table.elements.emplace_back(DiWord(std::move(w), static_cast<std::size_t>(std::abs(i)) + 1));
    }
  for (int m = 1; m <= range_n; ++m) table.elements.emplace_back(DiWord(power(x, -m), 1));

  for (TableOp op : {TableOp::Left, TableOp::Right})
    for (const auto& a : table.elements)
      for (const auto& b : table.elements)
        table.cells.push_back({a, b, op, op == TableOp::Left ? mul_left(a, b) : mul_right(a, b)});
  for (const auto& a : table.elements) table.cells.push_back({a, std::nullopt, TableOp::Dagger, dagger(a)});
  return table;
}

std::string table_to_csv(const SingleGeneratorTable& table) {
  std::ostringstream out;
  out << "left,right,op,result\n";
  for (const auto& cell : table.cells) {
    out << to_string(cell.left.diword(), table.alphabet) << ','
        << (cell.right ? to_string(cell.right->diword(), table.alphabet) : "") << ','
        << to_string(cell.op) << ',' << to_string(cell.result.diword(), table.alphabet) << '\n';
  }
  return out.str();
}

std::string table_to_text(const SingleGeneratorTable& table) {
  std::vector<std::array<std::string, 4>> rows{{"left", "right", "op", "result"}};
  for (const auto& cell : table.cells)
    rows.push_back({to_string(cell.left.diword(), table.alphabet),
                    cell.right ? to_string(cell.right->diword(), table.alphabet) : "",
                    std::string(to_string(cell.op)), to_string(cell.result.diword(), table.alphabet)});
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << r[c];
      if (c + 1 < 4) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace digroup
