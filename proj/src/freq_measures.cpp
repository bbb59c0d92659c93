#include "cantor/freq_measures.hpp"

#include <cmath>
#include <limits>

#include "cantor/dimension.hpp"
#include "cantor/splitmix.hpp"

namespace cantor {

namespace {

void check_word(std::string_view w) {
  for (char c : w)
    if (c != '0' && c != '2') throw std::invalid_argument("digit must be 0 or 2");
}

}  // namespace

FreqStats freq_stats(std::string_view word, const std::vector<std::size_t>& checkpoints) {
  check_word(word);
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0 || checkpoints[i] > word.size())
      throw std::invalid_argument("checkpoint index out of range");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("checkpoint indices must be ascending");
  }

  FreqStats s;
  s.length = word.size();
  std::size_t next_cp = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == '2') ++s.count2;
    if (next_cp < checkpoints.size() && i + 1 == checkpoints[next_cp]) {
      s.checkpoints.emplace_back(i + 1, Rational(Integer(s.count2), Integer(i + 1)));
      ++next_cp;
    }
  }
  s.count0 = s.length - s.count2;
  return s;
}

std::uint64_t sigma_r(unsigned q, unsigned m) {
  if (m > 48) throw std::invalid_argument("sigma checkpoint depth too large");
  return 3ULL * (q + 1ULL) * ((1ULL << m) - 1ULL);
}

std::uint64_t sigma_ell(unsigned q, unsigned m) {
  if (m < 1) throw std::invalid_argument("l_m is defined for m >= 1");
  return sigma_r(q, m) - (1ULL << (m - 1));
}

std::string sigma_generate(const SigmaQNSpec& spec, unsigned M) {
  if (spec.q < 1) throw std::invalid_argument("q must be >= 1");
  if (M < 1) throw std::invalid_argument("block count must be >= 1");
  check_word(spec.prefix);
  if (spec.prefix.empty() || spec.prefix.find('2') == std::string::npos)
    throw std::invalid_argument("prefix must contain a digit 2");
  const std::uint64_t total = spec.n() + sigma_r(spec.q, M);
  if (total > (1ULL << 30)) throw std::invalid_argument("generated word would be too long");

  std::string w;
  w.reserve(total);
  w += spec.prefix;
  SplitMix64 rng = SplitMix64::keyed(spec.seed, 0);
  auto filler_digit = [&]() -> char {
    switch (spec.filler) {
      case SigmaFiller::AllZero: return '0';
      case SigmaFiller::AllTwo: return '2';
      case SigmaFiller::Seeded: return (rng.next() & 1) ? '2' : '0';
    }
    return '0';
  };

  for (unsigned m = 0; m < M; ++m) {
    const std::uint64_t free_len = 3ULL * (1ULL << m) * spec.q;
    for (std::uint64_t pos = 1; pos <= free_len; ++pos) {
      const bool pinned = pos % spec.q == 0 && (pos / spec.q) % 2 == 1;
      w.push_back(pinned ? '2' : filler_digit());
    }
    w.append(std::size_t(1) << (m + 1), '0');
    w.append(std::size_t(1) << m, '2');
  }
  return w;
}

std::pair<Rational, Rational> checkpoint_limits(unsigned q, const Rational& alpha) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (alpha < Rational(0) || alpha > Rational(3) * Rational(static_cast<long>(q)))
    throw std::invalid_argument("alpha must lie in [0, 3q]");
  Rational at_r = (Rational(1) + alpha) / Rational(3 * (static_cast<long>(q) + 1));
  Rational at_ell = (Rational(1) + Rational(2) * alpha) / Rational(6 * static_cast<long>(q) + 5);
  return {at_r, at_ell};
}

std::optional<Rational> sigma_alpha(const SigmaQNSpec& spec) {
  switch (spec.filler) {
    case SigmaFiller::AllZero: return Rational(3, 2);
    case SigmaFiller::AllTwo: return Rational(3) * Rational(static_cast<long>(spec.q));
    case SigmaFiller::Seeded: return std::nullopt;
  }
  return std::nullopt;
}

TreeMeasureSpec make_tree_measure(int k, std::string_view prefix, const Rational& p,
                                  unsigned bits) {
  check_word(prefix);
  if (k < k0(p)) throw std::invalid_argument("k must be at least floor(1/p) + 2");
  TreeMeasureSpec spec;
  spec.k = k;
  spec.prefix = std::string(prefix);
  spec.p = p;
  spec.bits = bits;
  spec.theta = solve_theta(p, k, bits).theta;
  spec.p0 = spec.theta;
  spec.p2 = Rational(1) - spec.theta;
  return spec;
}

std::string sample_tree(const TreeMeasureSpec& spec, std::size_t blocks, std::uint64_t seed) {
  if (blocks < 1) throw std::invalid_argument("block count must be >= 1");
  if (spec.k < 1) throw std::invalid_argument("block length must be >= 1");

  if (spec.p0.sign() < 0 || spec.p0 > Rational(1))
    throw std::invalid_argument("p0 must lie in [0,1]");
  // floor(p0 * 2^64): draw digit 0 when the 64-bit draw falls below it.
  Integer threshold_z = (spec.p0.num() << 64) / spec.p0.den();
  const std::uint64_t threshold =
      spec.p0 == Rational(1) ? ~0ULL : static_cast<std::uint64_t>(threshold_z.get_ui());

  std::string w;
  w.reserve(spec.prefix.size() + blocks * static_cast<std::size_t>(spec.k));
  w += spec.prefix;
  std::string block(static_cast<std::size_t>(spec.k), '0');
  for (std::size_t i = 0; i < blocks; ++i) {
    SplitMix64 rng = SplitMix64::keyed(seed, i);
    for (;;) {
      bool has_two = false;
      for (int j = 0; j < spec.k; ++j) {
        const bool zero = rng.next() < threshold;
        block[static_cast<std::size_t>(j)] = zero ? '0' : '2';
        has_two = has_two || !zero;
      }
      if (has_two) break;  // reject 0^k, redraw within the same substream
    }
    w += block;
  }
  return w;
}

Rational cylinder_measure(const TreeMeasureSpec& spec, std::string_view word) {
  check_word(word);
  if (word.substr(0, spec.prefix.size()) != spec.prefix)
    throw std::invalid_argument("word does not extend the prefix");
  std::string_view digits = word.substr(spec.prefix.size());
  const std::size_t k = static_cast<std::size_t>(spec.k);
  if (digits.size() % k != 0)
    throw std::invalid_argument("digits after the prefix must fill whole blocks");
  const std::size_t blocks = digits.size() / k;

  std::size_t zeros = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::string_view blk = digits.substr(b * k, k);
    if (blk.find('2') == std::string_view::npos) throw ZeroMeasure();
    for (char c : blk) zeros += c == '0';
  }
  const std::size_t twos = digits.size() - zeros;

  Rational denom = (Rational(1) - spec.p0.pow(static_cast<unsigned long>(k)))
                       .pow(static_cast<unsigned long>(blocks));
  return spec.p0.pow(zeros) * spec.p2.pow(twos) / denom;
}

double empirical_local_dim(const TreeMeasureSpec& spec, std::string_view word) {
  Rational mu = cylinder_measure(spec, word);
  const long double l3 = 1.0986122886681096913952452369225257L;
  if (mu.is_zero()) return std::numeric_limits<double>::infinity();
  long double num = -log_value(mu);
  return static_cast<double>(num / (static_cast<long double>(word.size()) * l3));
}

}  // namespace cantor
