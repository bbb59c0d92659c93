#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

struct ZeroMeasure : std::domain_error {
  ZeroMeasure() : std::domain_error("block of zeros lies outside the pruned tree") {}
};

struct FreqStats {
  std::size_t length = 0;
  std::size_t count0 = 0;
  std::size_t count2 = 0;
  std::vector<std::pair<std::size_t, Rational>> checkpoints;  // (index, ratio of 2s)
};

// Exact digit counts over a {0,2}-word, with the ratio of 2s recorded at
// each requested prefix length.
FreqStats freq_stats(std::string_view word, const std::vector<std::size_t>& checkpoints);

enum class SigmaFiller { AllZero, AllTwo, Seeded };

// The oscillating-frequency family: blocks of free digits with every odd
// multiple of q pinned to 2, each block closed by a zero run and a two run
// that double in length. Checkpoints r_m and l_m = r_m - 2^{m-1} see two
// different limit frequencies, so no digit frequency exists in the limit.
struct SigmaQNSpec {
  unsigned q = 1;
  std::string prefix;  // x_1 ... x_n, not all zeros
  SigmaFiller filler = SigmaFiller::AllZero;
  std::uint64_t seed = 0;

  std::size_t n() const { return prefix.size(); }
};

std::uint64_t sigma_r(unsigned q, unsigned m);    // 3(q+1)(2^m - 1)
std::uint64_t sigma_ell(unsigned q, unsigned m);  // r_m - 2^{m-1}, m >= 1

// Prefix plus the first M blocks; total length n + r_M.
std::string sigma_generate(const SigmaQNSpec& spec, unsigned M);

// Analytic checkpoint limits given alpha = lim M_2(m)/2^m:
// at r_m the ratio tends to (1+alpha)/(3(q+1)), at l_m to (1+2alpha)/(6q+5).
std::pair<Rational, Rational> checkpoint_limits(unsigned q, const Rational& alpha);

// alpha is closed-form for the deterministic fillers: 3/2 when only the
// pinned digits are 2s, 3q when every free digit is a 2.
std::optional<Rational> sigma_alpha(const SigmaQNSpec& spec);

// Pruned-tree Bernoulli measure: digits drawn 0/2 with (p0, p2) =
// (theta_k, 1 - theta_k), blocks of length k conditioned to differ from 0^k.
struct TreeMeasureSpec {
  int k = 1;
  std::string prefix;
  Rational p;      // target frequency of digit 2
  Rational theta;  // dyadic approximation of theta_k
  Rational p0;
  Rational p2;
  unsigned bits = 128;

  std::size_t n() const { return prefix.size(); }
};

TreeMeasureSpec make_tree_measure(int k, std::string_view prefix, const Rational& p,
                                  unsigned bits = 128);

// Prefix plus N accepted blocks; block i comes from substream (seed, i), so
// blocks can be produced in any order with identical output.
std::string sample_tree(const TreeMeasureSpec& spec, std::size_t blocks, std::uint64_t seed);

// Exact product of per-digit weights over 1 - p0^k per block.
Rational cylinder_measure(const TreeMeasureSpec& spec, std::string_view word);

// -log mu([word]) / ((n + Nk) log 3) along the cylinder of `word`.
double empirical_local_dim(const TreeMeasureSpec& spec, std::string_view word);

}  // namespace cantor
