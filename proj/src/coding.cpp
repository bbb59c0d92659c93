#include "cantor/coding.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace cantor {

namespace {

void check_digits(std::string_view w, const char* what) {
  for (char c : w) {
    if (c != '0' && c != '2')
      throw std::invalid_argument(std::string(what) + ": digit must be 0 or 2");
  }
}

// Value of a word read as base-3 digits.
Integer word_value(std::string_view w) {
  Integer v = 0;
  for (char c : w) v = v * 3 + (c - '0');
  return v;
}

std::string primitive_root(std::string w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return w.substr(0, d);
  }
  return w;
}

}  // namespace

Coding Coding::infinite(std::string_view preperiod, std::string_view period) {
  check_digits(preperiod, "preperiod");
  check_digits(period, "period");
  if (period.empty()) throw std::invalid_argument("infinite coding needs a nonempty period");

  std::string pre(preperiod);
  std::string per = primitive_root(std::string(period));
  // Absorb repeated tail digits into the period by rotating it.
  while (!pre.empty() && pre.back() == per.back()) {
    per = per.back() + per.substr(0, per.size() - 1);
    pre.pop_back();
  }
  Coding c;
  c.kind_ = Kind::Infinite;
  c.pre_ = std::move(pre);
  c.per_ = std::move(per);
  return c;
}

Coding Coding::finite_prefix(std::string_view word) {
  check_digits(word, "finite prefix");
  Coding c;
  c.kind_ = Kind::FinitePrefix;
  c.pre_ = std::string(word);
  return c;
}

Coding canonicalize(std::string_view preperiod, std::string_view period) {
  return Coding::infinite(preperiod, period);
}

char Coding::digit(std::size_t i) const {
  if (i == 0) throw std::out_of_range("digit index is 1-based");
  if (i <= pre_.size()) return pre_[i - 1];
  if (kind_ == Kind::FinitePrefix) return '0';
  return per_[(i - 1 - pre_.size()) % per_.size()];
}

std::string Coding::prefix(std::size_t n) const {
  std::string w;
  w.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) w.push_back(digit(i));
  return w;
}

Rational Coding::eval() const {
  if (kind_ != Kind::Infinite)
    throw std::domain_error("eval is defined for infinite codings; complete the prefix first");
  const std::size_t m = pre_.size(), l = per_.size();
  Integer p = word_value(pre_);
  Integer q = word_value(per_);
  Integer tail = pow3(l) - 1;
  return Rational(p * tail + q, pow3(m) * tail);
}

Rational Coding::eval_completed(char filler) const {
  if (filler != '0' && filler != '2') throw std::invalid_argument("filler must be 0 or 2");
  if (kind_ == Kind::Infinite) return eval();
  return canonicalize(pre_, std::string(1, filler)).eval();
}

bool Coding::is_zero() const {
  if (kind_ == Kind::Infinite) return pre_.empty() && per_ == "0";
  return pre_.find('2') == std::string::npos;
}

std::string Coding::to_string() const {
  if (kind_ == Kind::FinitePrefix) return pre_;
  return pre_ + "(" + per_ + ")";
}

Coding Coding::parse(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos) return finite_prefix(text);
  if (text.back() != ')' || open + 2 > text.size())
    throw std::invalid_argument("malformed coding: '" + std::string(text) + "'");
  std::string_view pre = text.substr(0, open);
  std::string_view per = text.substr(open + 1, text.size() - open - 2);
  return infinite(pre, per);
}

ExpandResult ternary_expand(const Rational& y) {
  if (y < Rational(0) || y > Rational(1))
    throw OutOfRange("ternary_expand: value outside [0,1]");

  const Rational third(1, 3), two_thirds(2, 3);
  std::map<Rational, std::size_t> seen;  // residue -> digits emitted when first seen
  std::string digits;
  Rational r = y;
  for (;;) {
    auto it = seen.find(r);
    if (it != seen.end()) {
      std::size_t j = it->second;
      return canonicalize(digits.substr(0, j), digits.substr(j));
    }
    seen.emplace(r, digits.size());
    if (r <= third) {
      digits.push_back('0');
      r = r * Rational(3);
    } else if (r >= two_thirds) {
      digits.push_back('2');
      r = r * Rational(3) - Rational(2);
    } else {
      return RejectWitness{digits.size() + 1, r};
    }
  }
}

std::strong_ordering compare_lex(const Coding& a, const Coding& b) {
  const std::size_t pa = a.prefix_length(), pb = b.prefix_length();
  const std::size_t la = a.kind() == Coding::Kind::Infinite ? a.period().size() : 1;
  const std::size_t lb = b.kind() == Coding::Kind::Infinite ? b.period().size() : 1;
  const std::size_t bound = std::max(pa, pb) + std::lcm(la, lb);
  for (std::size_t i = 1; i <= bound; ++i) {
    char da = a.digit(i), db = b.digit(i);
    if (da != db) return da <=> db;
  }
  return std::strong_ordering::equal;
}

}  // namespace cantor
