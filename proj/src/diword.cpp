#include "digroup/diword.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace digroup {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

// Parses letters from text[pos..end) and returns them; pos is advanced.
Word parse_letters(std::string_view text, std::size_t& pos, std::size_t end,
                   const Alphabet& alphabet) {
  Word out;
  while (true) {
    pos = skip_space(text, pos);
    if (pos >= end) break;
    if (!is_ident_start(text[pos])) throw ParseError("expected a letter", pos);
    std::size_t start = pos;
    while (pos < end && is_ident_char(text[pos])) ++pos;
    std::string_view name = text.substr(start, pos - start);
    bool inverse = false;
    if (text.substr(pos, 3) == "^-1") {
      inverse = true;
      pos += 3;
    }
    if (name == "e") {
      if (inverse) throw ParseError("the bar-unit symbol has no inverse", start);
      out.push_back(Letter::unit());
      continue;
    }
    auto gen = alphabet.index_of(name);
    if (!gen) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    out.push_back(inverse ? Letter::inverse(*gen) : Letter::generator(*gen));
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (n == "e") throw std::invalid_argument("generator name 'e' is reserved for the bar-unit");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::parse(std::string_view comma_list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    auto comma = comma_list.find(',', start);
    if (comma == std::string_view::npos) comma = comma_list.size();
    std::string_view item = comma_list.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    names.emplace_back(item);
    start = comma + 1;
  }
  return Alphabet(std::move(names));
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out{Letter::unit()};
  for (std::uint32_t g = 0; g < names_.size(); ++g) {
    out.push_back(Letter::generator(g));
    out.push_back(Letter::inverse(g));
  }
  return out;
}

std::vector<Letter> Alphabet::generators() const {
  std::vector<Letter> out;
  for (std::uint32_t g = 0; g < names_.size(); ++g) out.push_back(Letter::generator(g));
  return out;
}

std::string Alphabet::render(Letter l) const {
  if (l.is_unit()) return "e";
  if (!contains(l)) throw std::out_of_range("letter outside alphabet");
  return l.is_positive() ? names_[l.gen()] : names_[l.gen()] + "^-1";
}

std::strong_ordering deglex_compare(std::span<const Letter> a, std::span<const Letter> b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool all_positive(std::span<const Letter> w) {
  return std::all_of(w.begin(), w.end(), [](Letter l) { return l.is_positive(); });
}

DiWord::DiWord(Word word, std::size_t center) : word_(std::move(word)), center_(center) {
  if (word_.empty()) throw std::invalid_argument("diword must be nonempty");
  if (center_ < 1 || center_ > word_.size())
    throw std::invalid_argument("diword center " + std::to_string(center_) + " outside 1.." +
                                std::to_string(word_.size()));
}

std::strong_ordering operator<=>(const DiWord& a, const DiWord& b) {
  if (auto c = deglex_compare(a.word_, b.word_); c != 0) return c;
  return a.center_ <=> b.center_;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

DiWord op_left(const DiWord& u, const DiWord& v) {
  return DiWord(concat(u.word(), v.word()), u.size() + v.center());
}

DiWord op_right(const DiWord& u, const DiWord& v) {
  return DiWord(concat(u.word(), v.word()), u.center());
}

std::size_t DiWordHash::operator()(const DiWord& w) const noexcept {
  std::size_t h = w.center() * 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.word()) h = (h ^ l.code()) * 0x100000001b3ULL;
  return h;
}

std::string to_string(std::span<const Letter> w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.render(w[i]);
  }
  return out;
}

std::string to_string(const DiWord& w, const Alphabet& alphabet) {
  return "[" + to_string(w.word(), alphabet) + "]_" + std::to_string(w.center());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::size_t pos = 0;
  return parse_letters(text, pos, text.size(), alphabet);
}

DiWord parse_diword(std::string_view text, const Alphabet& alphabet) {
  std::size_t pos = skip_space(text, 0);
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  auto close = text.find(']', pos);
  if (close == std::string_view::npos) throw ParseError("missing ']'", text.size());
  ++pos;
  Word word = parse_letters(text, pos, close, alphabet);
  if (word.empty()) throw ParseError("empty diword", close);
  pos = close + 1;
  if (pos >= text.size() || text[pos] != '_') throw ParseError("expected '_' after ']'", pos);
  ++pos;
  std::size_t center = 0;
  auto digits_end = pos;
  while (digits_end < text.size() && std::isdigit(static_cast<unsigned char>(text[digits_end]))) ++digits_end;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + digits_end, center);
  if (ec != std::errc() || digits_end == pos) throw ParseError("expected center position", pos);
  if (skip_space(text, digits_end) != text.size())
    throw ParseError("trailing characters", skip_space(text, digits_end));
  if (center < 1 || center > word.size()) throw ParseError("center out of range", pos);
  return DiWord(std::move(word), center);
}

}  // namespace digroup
