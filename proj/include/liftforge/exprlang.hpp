// Composition chains of landscapes, e.g. "(0★10)∘(0★110)". The rightmost
// atom is applied first.
//
//   expr  = ws atom { ws ("∘" | "o") ws atom } ws
//   atom  = "(" lstring ")" | lstring | "(" expr ")"
//   lstring = { "0" | "1" | "-" | "★" | "*" }+

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liftforge/corefn.hpp"
#include "liftforge/landscape.hpp"

namespace liftforge {

class ExprSyntaxError : public std::invalid_argument {
 public:
  ExprSyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Either an atom or Compose(left, right) = left∘right. Chains are kept
/// left-nested: compose() re-associates a chained right operand, so every
/// tree has one canonical shape per atom sequence.
class LiftExpr {
 public:
  explicit LiftExpr(Landscape atom);
  static LiftExpr compose(const LiftExpr& left, const LiftExpr& right);

  bool is_atom() const { return left_ == nullptr; }
  const Landscape& atom() const { return *atom_; }
  const LiftExpr& left() const { return *left_; }
  const LiftExpr& right() const { return *right_; }

  /// Atoms in written order.
  std::vector<Landscape> atoms() const;

  friend bool operator==(const LiftExpr& a, const LiftExpr& b);

 private:
  LiftExpr(std::shared_ptr<const LiftExpr> left, std::shared_ptr<const LiftExpr> right);

  std::optional<Landscape> atom_;
  std::shared_ptr<const LiftExpr> left_;
  std::shared_ptr<const LiftExpr> right_;
};

LiftExpr parse_expr(std::string_view text);
Rule eval_expr(const LiftExpr& e);
/// "(0★10)∘(0★110)"; ASCII mode prints "(0*10)o(0*110)".
std::string print_expr(const LiftExpr& e, bool ascii = false);

}  // namespace liftforge
