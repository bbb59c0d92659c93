#include "cantor/freq_measures.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

#include "cantor/dimension.hpp"
#include "cantor/param_map.hpp"

using cantor::Rational;
using cantor::SigmaFiller;
using cantor::SigmaQNSpec;
using cantor::TreeMeasureSpec;

namespace {

// Independent route to the oscillating-frequency word: lay out filler
// digits globally, then overwrite the pinned positions and suffix runs.
std::string sigma_oracle(const SigmaQNSpec& spec, unsigned M) {
  char fill = spec.filler == SigmaFiller::AllTwo ? '2' : '0';
  std::size_t total = cantor::sigma_r(spec.q, M);
  std::string d(total, fill);
  for (unsigned m = 0; m < M; ++m) {
    std::size_t rm = cantor::sigma_r(spec.q, m);
    for (std::uint64_t k = 1; k <= 3ULL * (1ULL << m); k += 2)
      d[rm + k * spec.q - 1] = '2';
    std::size_t free_end = rm + 3ULL * (1ULL << m) * spec.q;
    for (std::size_t i = 0; i < (1ULL << (m + 1)); ++i) d[free_end + i] = '0';
    for (std::size_t i = 0; i < (1ULL << m); ++i) d[free_end + (1ULL << (m + 1)) + i] = '2';
  }
  return spec.prefix + d;
}

}  // namespace

TEST_CASE("digit statistics with checkpoints") {
  auto s = cantor::freq_stats("2020", {2, 4});
  CHECK(s.count0 == 2);
  CHECK(s.count2 == 2);
  REQUIRE(s.checkpoints.size() == 2);
  CHECK(s.checkpoints[0].second == Rational(1, 2));
  CHECK(s.checkpoints[1].second == Rational(1, 2));

  auto t = cantor::freq_stats("2222", {4});
  CHECK(t.checkpoints[0].second == Rational(1));

  CHECK_THROWS_AS(cantor::freq_stats("2020", {5}), std::invalid_argument);
  CHECK_THROWS_AS(cantor::freq_stats("2020", {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cantor::freq_stats("21", {}), std::invalid_argument);

  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    std::string w(1 + gen() % 200, '0');
    for (auto& c : w) c = (gen() & 1) ? '2' : '0';
    auto st = cantor::freq_stats(w, {w.size()});
    std::size_t naive2 = 0;
    for (char c : w) naive2 += c == '2';
    CHECK(st.count2 == naive2);
    CHECK(st.count0 == w.size() - naive2);
    CHECK(st.checkpoints[0].second == Rational(cantor::Integer(naive2), cantor::Integer(w.size())));
  }
}

TEST_CASE("sigma word: first block by hand, deeper blocks by oracle") {
  SigmaQNSpec spec;
  spec.q = 1;
  spec.prefix = "2";
  spec.filler = SigmaFiller::AllZero;
  // m = 0: free "202" (pinned at offsets 1 and 3), then 00, then 2
  CHECK(cantor::sigma_generate(spec, 1) == "2202002");

  for (unsigned M = 1; M <= 4; ++M)
    CHECK(cantor::sigma_generate(spec, M) == sigma_oracle(spec, M));

  SigmaQNSpec q3;
  q3.q = 3;
  q3.prefix = "22";
  q3.filler = SigmaFiller::AllTwo;
  for (unsigned M = 1; M <= 4; ++M)
    CHECK(cantor::sigma_generate(q3, M) == sigma_oracle(q3, M));

  SigmaQNSpec seeded = spec;
  seeded.filler = SigmaFiller::Seeded;
  seeded.seed = 42;
  CHECK(cantor::sigma_generate(seeded, 3) == cantor::sigma_generate(seeded, 3));

  CHECK(cantor::sigma_generate(spec, 5).size() == 1 + cantor::sigma_r(1, 5));
  SigmaQNSpec bad;
  bad.prefix = "00";
  CHECK_THROWS_AS(cantor::sigma_generate(bad, 2), std::invalid_argument);
}

TEST_CASE("pinned positions carry digit 2 under every filler") {
  for (auto filler : {SigmaFiller::AllZero, SigmaFiller::AllTwo, SigmaFiller::Seeded}) {
    SigmaQNSpec spec;
    spec.q = 2;
    spec.prefix = "20";
    spec.filler = filler;
    spec.seed = 7;
    std::string w = cantor::sigma_generate(spec, 5);
    for (unsigned m = 0; m < 5; ++m) {
      std::size_t rm = cantor::sigma_r(spec.q, m);
      for (std::uint64_t k = 1; k <= 3ULL * (1ULL << m); k += 2)
        CHECK(w[spec.n() + rm + k * spec.q - 1] == '2');
    }
  }
}

TEST_CASE("generated parameters stay inside the prefix window") {
  SigmaQNSpec spec;
  spec.q = 1;
  spec.prefix = "2";
  spec.filler = SigmaFiller::Seeded;
  Rational x(1, 2);
  auto win = cantor::window(x, spec.prefix);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    spec.seed = seed;
    std::string w = cantor::sigma_generate(spec, 4);
    Rational lambda = cantor::lambda_of(x, cantor::Coding::infinite(w, "0"));
    CHECK(win.contains(lambda));
  }
}

TEST_CASE("checkpoint ratios split toward two different limits") {
  SigmaQNSpec spec;
  spec.q = 1;
  spec.prefix = "2";
  spec.filler = SigmaFiller::AllZero;
  std::string d = cantor::sigma_generate(spec, 12).substr(spec.n());

  std::size_t r12 = cantor::sigma_r(1, 12), l12 = cantor::sigma_ell(1, 12);
  auto stats = cantor::freq_stats(d, {l12, r12});
  Rational at_l = stats.checkpoints[0].second;
  Rational at_r = stats.checkpoints[1].second;

  CHECK((at_r - Rational(5, 12)).abs() < Rational(1, 50));
  CHECK((at_l - Rational(4, 11)).abs() < Rational(1, 50));
  CHECK(at_r - at_l > Rational(1, 25));
}

TEST_CASE("analytic checkpoint limits") {
  auto [r1, l1] = cantor::checkpoint_limits(1, Rational(3, 2));
  CHECK(r1 == Rational(5, 12));
  CHECK(l1 == Rational(4, 11));

  auto [r2, l2] = cantor::checkpoint_limits(2, Rational(0));
  CHECK(r2 == Rational(1, 9));
  CHECK(l2 == Rational(1, 17));

  // positivity of the separation, down to its minimum 2/(3(q+1)(6q+5))
  for (unsigned q = 1; q <= 20; ++q) {
    for (Rational alpha : {Rational(0), Rational(3, 2), Rational(3) * Rational((long)q)}) {
      auto [ar, al] = cantor::checkpoint_limits(q, alpha);
      Rational floor_gap(cantor::Integer(2),
                         3 * (cantor::Integer(q) + 1) * (6 * cantor::Integer(q) + 5));
      CHECK(ar - al >= floor_gap);
    }
  }
  CHECK_THROWS_AS(cantor::checkpoint_limits(1, Rational(4)), std::invalid_argument);

  SigmaQNSpec spec;
  spec.q = 1;
  spec.prefix = "2";
  CHECK(*cantor::sigma_alpha(spec) == Rational(3, 2));
  spec.filler = SigmaFiller::AllTwo;
  CHECK(*cantor::sigma_alpha(spec) == Rational(3));
  spec.filler = SigmaFiller::Seeded;
  CHECK(!cantor::sigma_alpha(spec).has_value());
}

TEST_CASE("tree measure construction ties theta to p") {
  auto spec = cantor::make_tree_measure(8, "2", Rational(3, 10));
  CHECK(spec.p0 + spec.p2 == Rational(1));
  Rational lhs = (Rational(1) - spec.theta) /
                 (Rational(1) - spec.theta.pow(static_cast<unsigned long>(spec.k)));
  CHECK((lhs - spec.p).abs() < Rational(cantor::Integer(1), cantor::Integer("10000000000000000")));
  CHECK_THROWS_AS(cantor::make_tree_measure(3, "2", Rational(3, 10)), std::invalid_argument);
}

TEST_CASE("sampler: degenerate all-twos law and the rejection rule") {
  TreeMeasureSpec degenerate;
  degenerate.k = 5;
  degenerate.prefix = "2";
  degenerate.p = Rational(1);
  degenerate.theta = Rational(0);
  degenerate.p0 = Rational(0);
  degenerate.p2 = Rational(1);
  std::string w = cantor::sample_tree(degenerate, 40, 9);
  CHECK(w == std::string(1 + 200, '2'));
  CHECK(cantor::empirical_local_dim(degenerate, w) == 0.0);

  auto spec = cantor::make_tree_measure(4, "2", Rational(1, 4));
  std::string s = cantor::sample_tree(spec, 500, 11);
  for (std::size_t b = 0; b < 500; ++b)
    CHECK(s.substr(1 + 4 * b, 4).find('2') != std::string::npos);
}

TEST_CASE("per-block substreams make prefixes agree") {
  auto spec = cantor::make_tree_measure(8, "2", Rational(3, 10));
  std::string a = cantor::sample_tree(spec, 5, 123);
  std::string b = cantor::sample_tree(spec, 10, 123);
  CHECK(b.substr(0, a.size()) == a);
}

TEST_CASE("sampled frequency concentrates at p") {
  auto spec = cantor::make_tree_measure(8, "2", Rational(3, 10));
  std::string w = cantor::sample_tree(spec, 12500, 20240809);
  auto stats = cantor::freq_stats(w.substr(1), {100000});
  Rational f2 = stats.checkpoints[0].second;
  CHECK(f2 >= Rational(29, 100));
  CHECK(f2 <= Rational(31, 100));
}

TEST_CASE("cylinder measure: base cases and additivity") {
  auto spec = cantor::make_tree_measure(4, "2", Rational(1, 2));
  CHECK(cantor::cylinder_measure(spec, "2") == Rational(1));

  Rational pk = spec.p0.pow(4);
  Rational all2 = cantor::cylinder_measure(spec, "22222");
  CHECK(all2 == spec.p2.pow(4) / (Rational(1) - pk));

  CHECK_THROWS_AS(cantor::cylinder_measure(spec, "20000"), cantor::ZeroMeasure);
  CHECK_THROWS_AS(cantor::cylinder_measure(spec, "0222"), std::invalid_argument);
  CHECK_THROWS_AS(cantor::cylinder_measure(spec, "222"), std::invalid_argument);

  for (int k : {3, 8}) {
    auto s = cantor::make_tree_measure(k, "2", Rational(1, 3));
    Rational total;
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      std::string block;
      for (int j = 0; j < k; ++j) block += (mask >> j) & 1 ? '2' : '0';
      total += cantor::cylinder_measure(s, "2" + block);
    }
    CHECK(total == Rational(1));
  }

  // children of a one-block cylinder sum to their parent
  auto s3 = cantor::make_tree_measure(3, "2", Rational(1, 3));
  std::string parent = "2202";
  Rational parent_mu = cantor::cylinder_measure(s3, parent);
  Rational child_sum;
  for (unsigned long mask = 1; mask < 8; ++mask) {
    std::string block;
    for (int j = 0; j < 3; ++j) block += (mask >> j) & 1 ? '2' : '0';
    child_sum += cantor::cylinder_measure(s3, parent + block);
  }
  CHECK(child_sum == parent_mu);
}

TEST_CASE("empirical local dimension tracks the closed form") {
  auto spec = cantor::make_tree_measure(20, "2", Rational(1, 2));
  std::string w = cantor::sample_tree(spec, 500, 77);  // 10^4 digits
  double v = cantor::empirical_local_dim(spec, w);
  CHECK(std::abs(v - cantor::log2_over_log3()) < 0.02);

  auto s8 = cantor::make_tree_measure(8, "2", Rational(3, 10));
  const int samples = 50, blocks = 250;
  double target = cantor::local_dim_formula(Rational(3, 10), 8);
  std::vector<double> vals;
  for (int i = 0; i < samples; ++i)
    vals.push_back(cantor::empirical_local_dim(
        s8, cantor::sample_tree(s8, blocks, 1000 + static_cast<std::uint64_t>(i))));
  double mean = 0;
  for (double x : vals) mean += x;
  mean /= samples;
  double var = 0;
  for (double x : vals) var += (x - mean) * (x - mean);
  var /= (samples - 1);
  double se = std::sqrt(var / samples);
  CHECK(std::abs(mean - target) < 3 * se);
}
