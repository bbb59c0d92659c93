#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cantor/gap_tree.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct DegenerateSeries : std::domain_error {
  DegenerateSeries() : std::domain_error("box counts carry no scaling information") {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct NoRoot : std::domain_error {
  NoRoot() : std::domain_error("no root in (0,1): k does not exceed 1/p") {}
};

using Window = std::pair<Rational, Rational>;

// Number of grid boxes [anchor + j*eps, anchor + (j+1)*eps) meeting the kept
// set, grid anchored at the window's lower endpoint. The window's upper
// endpoint is folded into the last box, so endpoints on grid lines count the
// box they open but the top of the window does not start a new one.
unsigned long box_count(const GapReport& r, const Rational& eps);
unsigned long box_count(const GapReport& r, const Rational& eps, const Window& window);

struct BoxCountSeries {
  std::vector<Rational> scales;        // strictly decreasing
  std::vector<unsigned long> counts;
  Window window;
};

// Counts at eps = 3^-d for d in [depth_min, depth_max] against the level-d
// reports; window defaults to each report's hull.
BoxCountSeries make_box_series(const Rational& x, const Rational& q, int depth_min,
                               int depth_max, const std::optional<Window>& window = {});

struct DimEstimate {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  double r2 = 0;
  std::vector<double> residuals;
};

// Least-squares slope of log(count) against log(1/eps).
DimEstimate dim_estimate(const BoxCountSeries& series);

// (q-1) log 2 / ((q+1) log 3): dimension of the Moran set behind the
// oscillating-frequency construction; increases to log2/log3.
double moran_lower_bound(unsigned q);

// h(p, 1-p) / log 3.
double entropy_dim(const Rational& p);

// Smallest block length floor(1/p) + 2 for which theta_k < 1.
int k0(const Rational& p);

struct ThetaSolution {
  Rational p;
  int k = 0;
  Rational theta;     // dyadic approximation, |theta - root| <= 2^-(bits+1)
  Rational residual;  // |(1 - theta)/(1 - theta^k) - p|, exact
  unsigned bits = 0;

  double theta_d() const { return theta.to_double(); }
};

// Unique root in (0,1) of 1 + theta + ... + theta^{k-1} = 1/p, by exact
// bisection on dyadic midpoints; the polynomial is strictly increasing there.
ThetaSolution solve_theta(const Rational& p, int k, unsigned bits = 192);

// Closed-form local dimension of the pruned-tree measure at block length k:
// [p log(1-theta_k) + (1-p) log theta_k]/(-log 3) - log(1-theta_k^k)/(-k log 3).
double local_dim_formula(const Rational& p, int k);

inline double log2_over_log3() { return 0.6309297535714574371; }

}  // namespace cantor
