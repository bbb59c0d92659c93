#include "cantor/dimension.hpp"

#include <cmath>

namespace cantor {

namespace {

Integer floor_div(const Rational& v) { return v.floor(); }

Integer ceil_div(const Rational& v) { return -((-v).floor()); }

void check_probability(const Rational& p) {
  if (p <= Rational(0) || p >= Rational(1))
    throw DomainError("p must lie strictly inside (0,1)");
}

// Sign of 1 + t + ... + t^{k-1} - 1/p at the dyadic point t = a/2^s,
// evaluated in integers: V = sum a^j 2^{s(k-1-j)} against p_den 2^{s(k-1)}.
int poly_sign_dyadic(const Integer& a, unsigned long s, int k, const Rational& p) {
  Integer v = 1, pw = 1;
  for (int j = 1; j < k; ++j) {
    pw <<= s;
    v = v * a + pw;
  }
  Integer lhs = v * p.num();
  Integer rhs = p.den() * pw;  // pw now holds 2^{s(k-1)}
  return ::cmp(lhs, rhs);
}

}  // namespace

unsigned long box_count(const GapReport& r, const Rational& eps) {
  return box_count(r, eps, Window{r.hull_lo(), r.hull_hi()});
}

unsigned long box_count(const GapReport& r, const Rational& eps, const Window& window) {
  if (eps.sign() <= 0) throw std::invalid_argument("box size must be positive");
  const Rational& wlo = window.first;
  const Rational& whi = window.second;
  if (whi <= wlo) return 0;
  Integer jmax = ceil_div((whi - wlo) / eps) - 1;

  unsigned long count = 0;
  bool have_last = false;
  Integer last;
  for (const auto& iv : r.kept) {
    Rational a = std::max(iv.lo, wlo);
    Rational b = std::min(iv.hi, whi);
    if (b < a) continue;
    Integer j0 = floor_div((a - wlo) / eps);
    Integer j1 = floor_div((b - wlo) / eps);
    if (j1 > jmax) j1 = jmax;
    if (j0 > jmax) j0 = jmax;  // the window's top edge folds into the last box
    if (have_last && j0 <= last) j0 = last + 1;
    if (j1 < j0) continue;
    count += static_cast<unsigned long>(Integer(j1 - j0 + 1).get_ui());
    last = j1;
    have_last = true;
  }
  return count;
}

BoxCountSeries make_box_series(const Rational& x, const Rational& q, int depth_min,
                               int depth_max, const std::optional<Window>& window) {
  if (depth_min < 0 || depth_max < depth_min)
    throw std::invalid_argument("bad depth range");
  BoxCountSeries s;
  for (int d = depth_min; d <= depth_max; ++d) {
    GapReport r = level_intervals(x, q, d);
    Rational eps(Integer(1), pow3(static_cast<unsigned long>(d)));
    Window w = window ? *window : Window{r.hull_lo(), r.hull_hi()};
    s.scales.push_back(eps);
    s.counts.push_back(box_count(r, eps, w));
    if (d == depth_max) s.window = w;
  }
  return s;
}

DimEstimate dim_estimate(const BoxCountSeries& series) {
  const std::size_t m = series.scales.size();
  if (m < 4 || series.counts.size() != m)
    throw std::invalid_argument("need at least 4 scales");
  for (std::size_t i = 1; i < m; ++i)
    if (!(series.scales[i] < series.scales[i - 1]))
      throw std::invalid_argument("scales must be strictly decreasing");

  bool constant = true;
  for (std::size_t i = 1; i < m; ++i) constant = constant && series.counts[i] == series.counts[0];
  if (constant) throw DegenerateSeries();

  std::vector<long double> xs(m), ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (series.counts[i] == 0) throw DegenerateSeries();
    xs[i] = -log_value(series.scales[i]);
    ys[i] = logl(static_cast<long double>(series.counts[i]));
  }
  long double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < m; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= m;
  ybar /= m;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  DimEstimate e;
  e.slope = static_cast<double>(sxy / sxx);
  e.intercept = static_cast<double>(ybar - sxy / sxx * xbar);
  long double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < m; ++i) {
    long double r = ys[i] - (e.intercept + e.slope * xs[i]);
    e.residuals.push_back(static_cast<double>(r));
    ss_res += r * r;
    ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
  }
  e.stderr_slope = static_cast<double>(sqrtl(ss_res / static_cast<long double>(m - 2) / sxx));
  e.r2 = static_cast<double>(ss_tot > 0 ? 1.0L - ss_res / ss_tot : 1.0L);
  return e;
}

double moran_lower_bound(unsigned q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  const long double l2 = 0.6931471805599453094172321214581766L;
  const long double l3 = 1.0986122886681096913952452369225257L;
  return static_cast<double>((q - 1.0L) * l2 / ((q + 1.0L) * l3));
}

double entropy_dim(const Rational& p) {
  check_probability(p);
  long double pd = p.to_long_double();
  long double qd = (Rational(1) - p).to_long_double();
  const long double l3 = 1.0986122886681096913952452369225257L;
  return static_cast<double>(-(pd * logl(pd) + qd * logl(qd)) / l3);
}

int k0(const Rational& p) {
  check_probability(p);
  return static_cast<int>(p.reciprocal().floor().get_si()) + 2;
}

ThetaSolution solve_theta(const Rational& p, int k, unsigned bits) {
  check_probability(p);
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  // Root reaches 1 exactly when the degree stops exceeding 1/p.
  if (Rational(k) * p <= Rational(1)) throw NoRoot();

  // Bracket invariant: the root lies in [m, m+1] / 2^scale.
  Integer m = 0;
  Rational theta;
  bool exact = false;
  for (unsigned scale = 1; scale <= bits; ++scale) {
    Integer mid = 2 * m + 1;
    int s = poly_sign_dyadic(mid, scale, k, p);
    if (s == 0) {
      theta = Rational(mid, Integer(1) << scale);
      exact = true;
      break;
    }
    m = s < 0 ? mid : 2 * m;
  }
  if (!exact) theta = Rational(2 * m + 1, Integer(1) << (bits + 1));

  ThetaSolution sol;
  sol.p = p;
  sol.k = k;
  sol.theta = theta;
  sol.bits = bits;
  Rational tk = theta.pow(static_cast<unsigned long>(k));
  sol.residual = ((Rational(1) - theta) / (Rational(1) - tk) - p).abs();
  return sol;
}

double local_dim_formula(const Rational& p, int k) {
  ThetaSolution sol = solve_theta(p, k);
  long double t = sol.theta.to_long_double();
  long double pd = p.to_long_double();
  const long double l3 = 1.0986122886681096913952452369225257L;
  long double tk = powl(t, static_cast<long double>(k));
  long double main_term = -(pd * logl(1.0L - t) + (1.0L - pd) * logl(t)) / l3;
  long double correction = logl(1.0L - tk) / (static_cast<long double>(k) * l3);
  return static_cast<double>(main_term + correction);
}

}  // namespace cantor
