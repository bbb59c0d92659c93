#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "cantor/rational.hpp"

namespace cantor {

// Digit sequences over {0,2}, the symbolic space behind the middle-third
// Cantor set: an eventually periodic sequence is stored as a preperiod word
// plus a period word, a finite word as just the prefix. Canonical form makes
// structural equality coincide with sequence equality:
//   - the period is primitive (not a power of a shorter word),
//   - the preperiod is minimal (its last digit differs from the period's
//     last digit, absorbing repetitions into the period by rotation).
//
// Text form: preperiod digits then "(" period digits ")", e.g. "2(0)" for
// 20^inf, "(20)" for (20)^inf, plain "20" for the finite word.
class Coding {
 public:
  enum class Kind { Infinite, FinitePrefix };

  // The empty finite word.
  Coding() : kind_(Kind::FinitePrefix) {}

  // Builds the canonical form; validates digits.
  static Coding infinite(std::string_view preperiod, std::string_view period);
  static Coding finite_prefix(std::string_view word);
  static Coding parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return per_; }

  // 1-based digit access; finite prefixes read as 0 past their end.
  char digit(std::size_t i) const;
  std::size_t prefix_length() const { return pre_.size(); }

  // First n digits as a word.
  std::string prefix(std::size_t n) const;

  // Exact value of sum d_i 3^{-i}; defined for infinite codings.
  Rational eval() const;
  // Values of the two completions w0^inf / w2^inf of a finite word.
  Rational eval_completed(char filler) const;

  bool is_zero() const;  // the all-zeros sequence / word
  std::string to_string() const;

  bool operator==(const Coding& o) const {
    return kind_ == o.kind_ && pre_ == o.pre_ && per_ == o.per_;
  }

 private:
  std::string pre_, per_;
  Kind kind_ = Kind::Infinite;
};

// Certificate that a value falls into a removed middle third: after
// index-1 digits were forced, the residue lies strictly inside (1/3, 2/3).
struct RejectWitness {
  std::size_t index = 0;
  Rational residue;
};

using ExpandResult = std::variant<Coding, RejectWitness>;

struct OutOfRange : std::domain_error {
  explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

// Decides y in C_{1/3} for rational y in [0,1]. Emits digit 0 while
// y <= 1/3 (y -> 3y), digit 2 while y >= 2/3 (y -> 3y - 2), and rejects as
// soon as 1/3 < y < 2/3. Residues of a rational cycle, so repetition of a
// residue closes the period.
ExpandResult ternary_expand(const Rational& y);

// Lexicographic order on sequences; finite words compare as w0^inf.
std::strong_ordering compare_lex(const Coding& a, const Coding& b);

// Re-canonicalizes raw (preperiod, period) digits; eval-preserving.
Coding canonicalize(std::string_view preperiod, std::string_view period);

}  // namespace cantor
