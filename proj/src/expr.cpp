#include "tropcheck/expr.hpp"

#include <stdexcept>

namespace tropcheck {

Expr Expr::lin(LinearForm f) { return Expr(Kind::Lin, std::move(f), {}); }

Expr Expr::min(std::vector<Expr> args) {
  if (args.empty()) throw std::invalid_argument("Expr::min: no arguments");
  return Expr(Kind::Min, {}, std::move(args));
}

Expr Expr::max(std::vector<Expr> args) {
  for (auto& a : args) a = neg(std::move(a));
  return neg(min(std::move(args)));
}

Expr Expr::sum(Expr a, Expr b) {
  std::vector<Expr> ch;
  ch.push_back(std::move(a));
  ch.push_back(std::move(b));
  return Expr(Kind::Sum, {}, std::move(ch));
}

Expr Expr::neg(Expr e) {
  std::vector<Expr> ch;
  ch.push_back(std::move(e));
  return Expr(Kind::Neg, {}, std::move(ch));
}

Expr Expr::scale(const Rational& s, const Expr& e) {
  switch (e.kind_) {
    case Kind::Lin:
      return lin(e.form_ * s);
    case Kind::Sum:
      return sum(scale(s, e.children_[0]), scale(s, e.children_[1]));
    case Kind::Neg:
      return neg(scale(s, e.children_[0]));
    case Kind::Min: {
      const Rational mag = abs(s);
      std::vector<Expr> args;
      args.reserve(e.children_.size());
      for (const auto& c : e.children_) args.push_back(scale(mag, c));
      Expr m = min(std::move(args));
      return s < 0 ? neg(std::move(m)) : m;
    }
  }
  throw std::logic_error("Expr::scale: unknown kind");
}

Rational Expr::evaluate(std::span<const Rational> x) const {
  switch (kind_) {
    case Kind::Lin:
      return form_(x);
    case Kind::Sum:
      return children_[0].evaluate(x) + children_[1].evaluate(x);
    case Kind::Neg:
      return -children_[0].evaluate(x);
    case Kind::Min: {
      Rational best = children_[0].evaluate(x);
      for (std::size_t i = 1; i < children_.size(); ++i) {
        Rational v = children_[i].evaluate(x);
        if (v < best) best = std::move(v);
      }
      return best;
    }
  }
  throw std::logic_error("Expr::evaluate: unknown kind");
}

}  // namespace tropcheck
