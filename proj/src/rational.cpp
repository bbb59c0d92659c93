#include "cantor/rational.hpp"

#include <cctype>
#include <cmath>

namespace cantor {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(den(), num());
}

Rational Rational::pow(unsigned long e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  return Rational(n, d);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) fail();
    Integer n, d;
    if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0) fail();
    return Rational(n, d);
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Integer n;
    if (n.set_str(s, 10) != 0) fail();
    return Rational(n);
  }

  // Decimal literal: sign, integer part, fractional part. Exact conversion.
  bool neg = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
    dot = body.find('.');
  }
  std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
  if (ip.empty() && fp.empty()) fail();
  for (char c : ip) if (!std::isdigit(static_cast<unsigned char>(c))) fail();
  for (char c : fp) if (!std::isdigit(static_cast<unsigned char>(c))) fail();
  Integer scaled;
  if (scaled.set_str(ip.empty() ? "0" : ip, 10) != 0) fail();
  Integer ten10;
  mpz_ui_pow_ui(ten10.get_mpz_t(), 10, fp.size());
  scaled *= ten10;
  if (!fp.empty()) {
    Integer f;
    if (f.set_str(fp, 10) != 0) fail();
    scaled += f;
  }
  if (neg) scaled = -scaled;
  return Rational(scaled, ten10);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  Integer n = ::abs(num());
  Integer d = den();
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, digits);
  Integer q, r;
  Integer scaled = n * ten;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  // Half-even on the remainder.
  Integer twice = 2 * r;
  int cmp = ::cmp(twice, d);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (sign() < 0 && (q != 0)) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

long double Rational::to_long_double() const {
  double hi = to_double();
  mpq_class exact_hi(hi);
  double lo = (*this - Rational(exact_hi.get_num(), exact_hi.get_den())).to_double();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

Integer pow3(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

long double log_value(const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("log of a nonpositive rational");
  long num_exp = 0, den_exp = 0;
  double num_d = mpz_get_d_2exp(&num_exp, r.num().get_mpz_t());
  double den_d = mpz_get_d_2exp(&den_exp, r.den().get_mpz_t());
  const long double ln2 = 0.6931471805599453094172321214581766L;
  return logl(num_d) - logl(den_d) + static_cast<long double>(num_exp - den_exp) * ln2;
}

}  // namespace cantor
