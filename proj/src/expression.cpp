#include "digroup/expression.hpp"

#include <cctype>

namespace digroup {

ExprPtr Expr::atom(Letter l) { return std::make_shared<const Expr>(Expr{Op::Atom, l, nullptr, nullptr}); }
ExprPtr Expr::left(ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{Op::Left, {}, std::move(a), std::move(b)});
}
ExprPtr Expr::right(ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{Op::Right, {}, std::move(a), std::move(b)});
}
ExprPtr Expr::dagger(ExprPtr a) { return std::make_shared<const Expr>(Expr{Op::Dagger, {}, std::move(a), nullptr}); }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Expr::Op::Atom:
      return a.letter == b.letter;
    case Expr::Op::Dagger:
      return structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr acc = term();
    while (true) {
      skip_space();
      if (accept("|-"))
        acc = Expr::left(acc, term());
      else if (accept("-|"))
        acc = Expr::right(acc, term());
      else
        return acc;
    }
  }

  ExprPtr term() {
    ExprPtr a = atom();
    skip_space();
    if (accept("'")) a = Expr::dagger(a);
    return a;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    if (accept("(")) {
      ExprPtr e = expr();
      skip_space();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return e;
    }
    const std::size_t start = pos_;
    if (!is_ident_start(text_[pos_])) throw ParseError("expected a letter or '('", pos_);
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    skip_space();
    const bool inverse = accept("^-1");
    if (name == "e") {
      if (inverse) throw ParseError("e has no '^-1' form", start);
      return Expr::atom(Letter::unit());
    }
    auto gen = alphabet_.index_of(name);
    if (!gen) throw UnknownIdentifier(name, start);
    return Expr::atom(inverse ? Letter::inverse(*gen) : Letter::generator(*gen));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

std::string render_operand(const Expr& e, const Alphabet& alphabet) {
  if (e.op == Expr::Op::Left || e.op == Expr::Op::Right) return "(" + render(e, alphabet) + ")";
  return render(e, alphabet);
}

}  // namespace

ExprPtr parse_expression(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).parse(); }

std::string render(const Expr& e, const Alphabet& alphabet) {
  switch (e.op) {
    case Expr::Op::Atom:
      return alphabet.render(e.letter);
    case Expr::Op::Dagger:
      if (e.lhs->op == Expr::Op::Atom) return render(*e.lhs, alphabet) + "'";
      return "(" + render(*e.lhs, alphabet) + ")'";
    case Expr::Op::Left:
      return render_operand(*e.lhs, alphabet) + " |- " + render_operand(*e.rhs, alphabet);
    case Expr::Op::Right:
      return render_operand(*e.lhs, alphabet) + " -| " + render_operand(*e.rhs, alphabet);
  }
  return "";
}

NormalForm eval_expression(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Atom:
      return NormalForm::letter(e.letter);
    case Expr::Op::Dagger:
      return dagger(eval_expression(*e.lhs));
    case Expr::Op::Left:
      return mul_left(eval_expression(*e.lhs), eval_expression(*e.rhs));
    case Expr::Op::Right:
      return mul_right(eval_expression(*e.lhs), eval_expression(*e.rhs));
  }
  throw std::logic_error("bad expression node");
}

DiWord eval_raw(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Atom:
      return DiWord({e.letter}, 1);
    case Expr::Op::Dagger: {
      const DiWord w = eval_raw(*e.lhs);
      Word out;
      for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out.push_back(it->inverted());
      out.push_back(Letter::unit());
      const std::size_t n = out.size();
      return DiWord(std::move(out), n);
    }
    case Expr::Op::Left:
      return op_left(eval_raw(*e.lhs), eval_raw(*e.rhs));
    case Expr::Op::Right:
      return op_right(eval_raw(*e.lhs), eval_raw(*e.rhs));
  }
  throw std::logic_error("bad expression node");
}

}  // namespace digroup
