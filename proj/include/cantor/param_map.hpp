#pragma once

#include <string_view>

#include "cantor/coding.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct ZeroCoding : std::domain_error {
  ZeroCoding() : std::domain_error("the all-zeros coding has no finite parameter") {}
};

struct AllZeroPrefix : std::domain_error {
  AllZeroPrefix() : std::domain_error("prefix must contain a digit 2") {}
};

// Bracketing window for all parameters whose coding starts with a fixed
// prefix: beta from the all-twos completion, gamma from the all-zeros one.
struct ParamWindow {
  Rational beta;
  Rational gamma;
  std::size_t n = 0;
  std::string prefix;

  bool contains(const Rational& lambda) const {
    return beta <= lambda && lambda <= gamma;
  }
};

// The parameter with coding c: lambda = 2x / sum d_i 3^{-i}.
Rational lambda_of(const Rational& x, const Coding& c);

// Inverse direction: decides lambda's membership by expanding y = 2x/lambda.
// Throws OutOfRange when lambda < 2x (below the minimum of the parameter set).
ExpandResult phi_x(const Rational& x, const Rational& lambda);

// Smallest parameter containing x; its coding is the all-twos sequence.
Rational min_lambda(const Rational& x);

ParamWindow window(const Rational& x, std::string_view prefix);

}  // namespace cantor
