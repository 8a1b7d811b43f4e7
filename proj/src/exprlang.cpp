#include "liftforge/exprlang.hpp"

#include <cctype>
#include <optional>

#include "liftforge/lifting.hpp"

namespace liftforge {

namespace {

constexpr std::string_view kCircUtf8 = "∘";
constexpr std::string_view kStarUtf8 = "★";

}  // namespace

LiftExpr::LiftExpr(Landscape atom) : atom_(std::move(atom)) {}

LiftExpr::LiftExpr(std::shared_ptr<const LiftExpr> left, std::shared_ptr<const LiftExpr> right)
    : left_(std::move(left)), right_(std::move(right)) {}

LiftExpr LiftExpr::compose(const LiftExpr& left, const LiftExpr& right) {
  if (right.is_atom()) {
    return LiftExpr(std::make_shared<const LiftExpr>(left), std::make_shared<const LiftExpr>(right));
  }
  // left∘(a∘b) = (left∘a)∘b
  return compose(compose(left, right.left()), right.right());
}

std::vector<Landscape> LiftExpr::atoms() const {
  if (is_atom()) return {*atom_};
  std::vector<Landscape> out = left_->atoms();
  for (Landscape& l : right_->atoms()) out.push_back(std::move(l));
  return out;
}

bool operator==(const LiftExpr& a, const LiftExpr& b) {
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.atom_ == b.atom_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  LiftExpr parse() {
    LiftExpr e = chain();
    skip_ws();
    if (pos_ != text_.size()) throw ExprSyntaxError("unexpected input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat_compose() {
    skip_ws();
    if (text_.substr(pos_, kCircUtf8.size()) == kCircUtf8) {
      pos_ += kCircUtf8.size();
      return true;
    }
    if (pos_ < text_.size() && text_[pos_] == 'o') {
      ++pos_;
      return true;
    }
    return false;
  }

  LiftExpr chain() {
    LiftExpr e = atom();
    while (eat_compose()) e = LiftExpr::compose(e, atom());
    return e;
  }

  bool at_symbol() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '0' || c == '1' || c == '-' || c == '*' || text_.substr(pos_, kStarUtf8.size()) == kStarUtf8;
  }

  LiftExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ExprSyntaxError("expected a landscape, found end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      LiftExpr inner = chain();
      skip_ws();
      if (pos_ >= text_.size()) throw ExprSyntaxError("expected ')', found end of input", pos_);
      if (text_[pos_] != ')') throw ExprSyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    const std::size_t start = pos_;
    while (at_symbol()) pos_ += text_.substr(pos_, kStarUtf8.size()) == kStarUtf8 ? kStarUtf8.size() : 1;
    if (pos_ == start) throw ExprSyntaxError("expected a landscape", pos_);
    try {
      return LiftExpr(parse_landscape(text_.substr(start, pos_ - start)));
    } catch (const LandscapeError& e) {
      throw ExprSyntaxError(std::string("invalid landscape atom: ") + e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LiftExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

Rule eval_expr(const LiftExpr& e) {
  const std::vector<Landscape> atoms = e.atoms();
  std::vector<Rule> rules;
  rules.reserve(atoms.size());
  for (const Landscape& l : atoms) rules.push_back(compile(l));

  // Rightmost first. Composition is associative, so a left fold is tried
  // when the right fold overflows the table cap.
  try {
    Rule acc = rules.back();
    for (std::size_t i = rules.size() - 1; i-- > 0;) acc = compose(rules[i], acc);
    return acc;
  } catch (const RuleError&) {
    if (rules.size() < 3) throw;
  }
  Rule acc = rules.front();
  for (std::size_t i = 1; i < rules.size(); ++i) acc = compose(acc, rules[i]);
  return acc;
}

std::string print_expr(const LiftExpr& e, bool ascii) {
  std::string out;
  for (const Landscape& l : e.atoms()) {
    if (!out.empty()) out += ascii ? "o" : std::string(kCircUtf8);
    out += "(" + l.to_string(ascii) + ")";
  }
  return out;
}

}  // namespace liftforge
