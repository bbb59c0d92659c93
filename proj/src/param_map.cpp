#include "cantor/param_map.hpp"

namespace cantor {

namespace {

void check_positive(const Rational& v, const char* what) {
  if (v.sign() <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Rational lambda_of(const Rational& x, const Coding& c) {
  check_positive(x, "x");
  Rational y = c.kind() == Coding::Kind::Infinite ? c.eval() : c.eval_completed('0');
  if (y.is_zero()) throw ZeroCoding();
  return Rational(2) * x / y;
}

ExpandResult phi_x(const Rational& x, const Rational& lambda) {
  check_positive(x, "x");
  check_positive(lambda, "lambda");
  Rational y = Rational(2) * x / lambda;
  if (y > Rational(1))
    throw OutOfRange("lambda below the minimum 2x of the parameter set");
  return ternary_expand(y);
}

Rational min_lambda(const Rational& x) {
  check_positive(x, "x");
  return Rational(2) * x;
}

ParamWindow window(const Rational& x, std::string_view prefix) {
  check_positive(x, "x");
  Coding w = Coding::finite_prefix(prefix);
  if (w.is_zero()) throw AllZeroPrefix();
  ParamWindow out;
  out.n = prefix.size();
  out.prefix = std::string(prefix);
  out.beta = Rational(2) * x / w.eval_completed('2');
  out.gamma = Rational(2) * x / w.eval_completed('0');
  return out;
}

}  // namespace cantor
