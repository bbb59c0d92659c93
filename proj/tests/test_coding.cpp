#include "cantor/coding.hpp"

#include <random>
#include <string>

#include "doctest.h"

using cantor::Coding;
using cantor::Rational;
using cantor::RejectWitness;

namespace {

Coding expect_coding(const cantor::ExpandResult& r) {
  REQUIRE(std::holds_alternative<Coding>(r));
  return std::get<Coding>(r);
}

RejectWitness expect_reject(const cantor::ExpandResult& r) {
  REQUIRE(std::holds_alternative<RejectWitness>(r));
  return std::get<RejectWitness>(r);
}

std::string rand_word(std::mt19937_64& g, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string w(len(g), '0');
  for (auto& c : w) c = bit(g) ? '2' : '0';
  return w;
}

Coding rand_coding(std::mt19937_64& g) {
  for (;;) {
    Coding c = Coding::infinite(rand_word(g, 0, 6), rand_word(g, 1, 6));
    if (!c.is_zero()) return c;
  }
}

// Follows the only admissible {0,2} digit at each residue; a rejected value
// must hit a state where the full-ternary digit 1 is forced.
std::size_t forced_one_depth(Rational y, std::size_t max_depth) {
  const Rational third(1, 3), two_thirds(2, 3);
  for (std::size_t d = 1; d <= max_depth; ++d) {
    if (y <= third) {
      y = y * Rational(3);
    } else if (y >= two_thirds) {
      y = y * Rational(3) - Rational(2);
    } else {
      // greedy full-ternary digit here is 1
      REQUIRE((y * Rational(3)).floor() == 1);
      return d;
    }
  }
  return 0;  // no forced 1 within max_depth
}

}  // namespace

TEST_CASE("eval of the basic periodic codings") {
  CHECK(Coding::parse("(2)").eval() == Rational(1));
  CHECK(Coding::parse("(0)").eval() == Rational(0));
  CHECK(Coding::parse("(20)").eval() == Rational(3, 4));
  CHECK(Coding::parse("0(2)").eval() == Rational(1, 3));
  CHECK(Coding::parse("2(0)").eval() == Rational(2, 3));
}

TEST_CASE("ternary expansion accepts Cantor points and certifies rejections") {
  CHECK(expect_coding(cantor::ternary_expand(Rational(3, 4))) == Coding::parse("(20)"));
  CHECK(expect_coding(cantor::ternary_expand(Rational(1, 3))) == Coding::parse("0(2)"));
  CHECK(expect_coding(cantor::ternary_expand(Rational(0))) == Coding::parse("(0)"));
  CHECK(expect_coding(cantor::ternary_expand(Rational(1))) == Coding::parse("(2)"));

  RejectWitness w = expect_reject(cantor::ternary_expand(Rational(5, 6)));
  CHECK(w.index == 2);
  CHECK(w.residue == Rational(1, 2));

  RejectWitness mid = expect_reject(cantor::ternary_expand(Rational(1, 2)));
  CHECK(mid.index == 1);
  CHECK(mid.residue == Rational(1, 2));

  CHECK_THROWS_AS(cantor::ternary_expand(Rational(3, 2)), cantor::OutOfRange);
  CHECK_THROWS_AS(cantor::ternary_expand(Rational(-1, 2)), cantor::OutOfRange);
}

TEST_CASE("canonicalization absorbs repetitions and primitive roots") {
  Coding a = Coding::infinite("2", "22");
  CHECK(a.preperiod() == "");
  CHECK(a.period() == "2");

  Coding b = Coding::infinite("", "2020");
  CHECK(b.preperiod() == "");
  CHECK(b.period() == "20");

  // Two spellings of (20)^inf; the eval oracle pins both to 3/4.
  Coding c = Coding::infinite("20", "20");
  CHECK(c.preperiod() == "");
  CHECK(c.period() == "20");
  CHECK(c.eval() == Rational(3, 4));
  Coding d = Coding::infinite("2", "02");
  CHECK(d.preperiod() == "");
  CHECK(d.period() == "20");
  CHECK(d.eval() == Rational(3, 4));

  CHECK_THROWS_AS(Coding::infinite("", ""), std::invalid_argument);
  CHECK_THROWS_AS(Coding::infinite("1", "2"), std::invalid_argument);
}

TEST_CASE("lexicographic comparison") {
  // 202^inf vs 220^inf: the gap endpoints of Example 2.1 in coding space
  CHECK(cantor::compare_lex(Coding::parse("20(2)"), Coding::parse("22(0)")) < 0);
  Coding c = Coding::parse("2(02)");
  CHECK(cantor::compare_lex(c, c) == std::strong_ordering::equal);
  CHECK(cantor::compare_lex(Coding::parse("(0)"), Coding::parse("(2)")) < 0);
  // finite words compare as w0^inf
  CHECK(cantor::compare_lex(Coding::finite_prefix("20"), Coding::parse("2(0)")) ==
        std::strong_ordering::equal);
  CHECK(cantor::compare_lex(Coding::finite_prefix("2"), Coding::parse("(2)")) < 0);
}

TEST_CASE("text form round trip") {
  for (const char* s : {"(2)", "(20)", "2(0)", "0(2)", "20", "", "22(02)"}) {
    Coding c = Coding::parse(s);
    CHECK(Coding::parse(c.to_string()) == c);
  }
  CHECK(Coding::parse("2(0)").to_string() == "2(0)");
  CHECK_THROWS_AS(Coding::parse("2(0"), std::invalid_argument);
  CHECK_THROWS_AS(Coding::parse("2()"), std::invalid_argument);
}

TEST_CASE("round trip: expand after eval returns the same canonical coding") {
  std::mt19937_64 gen(123);
  for (int i = 0; i < 1000; ++i) {
    Coding c = rand_coding(gen);
    Rational y = c.eval();
    CHECK(expect_coding(cantor::ternary_expand(y)) == c);
  }
}

TEST_CASE("order and value cohere") {
  std::mt19937_64 gen(456);
  for (int i = 0; i < 1000; ++i) {
    Coding a = rand_coding(gen), b = rand_coding(gen);
    auto ord = cantor::compare_lex(a, b);
    int vs = (a.eval() - b.eval()).sign();
    if (ord < 0) CHECK(vs < 0);
    if (ord == std::strong_ordering::equal) CHECK(vs == 0);
    if (ord > 0) CHECK(vs > 0);
  }
}

TEST_CASE("rejections are sound: a full-ternary 1 is forced") {
  std::mt19937_64 gen(789);
  std::uniform_int_distribution<long> num(0, 999999);
  int rejected = 0;
  for (int i = 0; i < 500; ++i) {
    long d = 1 + num(gen) % 999999;
    Rational y(num(gen) % (d + 1), d);
    auto r = cantor::ternary_expand(y);
    if (std::holds_alternative<RejectWitness>(r)) {
      ++rejected;
      RejectWitness w = std::get<RejectWitness>(r);
      CHECK(w.residue > Rational(1, 3));
      CHECK(w.residue < Rational(2, 3));
      std::size_t depth = forced_one_depth(y, 4000);
      CHECK(depth == w.index);
    } else {
      CHECK(std::get<Coding>(r).eval() == y);
    }
  }
  CHECK(rejected > 400);  // almost all rationals miss the Cantor set
}

TEST_CASE("digit access and prefixes") {
  Coding c = Coding::parse("20(02)");
  CHECK(c.digit(1) == '2');
  CHECK(c.digit(2) == '0');
  CHECK(c.digit(3) == '0');
  CHECK(c.digit(4) == '2');
  CHECK(c.digit(5) == '0');
  CHECK(c.prefix(6) == "200202");
  CHECK(Coding::finite_prefix("2").digit(5) == '0');
  CHECK_THROWS_AS(c.digit(0), std::out_of_range);
}

TEST_CASE("finite prefixes evaluate through completions") {
  Coding w = Coding::finite_prefix("20");
  CHECK(w.eval_completed('0') == Rational(2, 3));
  CHECK(w.eval_completed('2') == Rational(7, 9));
  CHECK_THROWS_AS(w.eval(), std::domain_error);
  CHECK(Coding::finite_prefix("").eval_completed('2') == Rational(1));
}
