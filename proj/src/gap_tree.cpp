#include "cantor/gap_tree.hpp"

#include <algorithm>
#include <sstream>

namespace cantor {

namespace {

// lambda of prefix completed with an all-`filler` tail.
Rational edge(const Rational& x, const std::string& prefix, char filler) {
  return Rational(2) * x / Coding::finite_prefix(prefix).eval_completed(filler);
}

struct Builder {
  Rational x, q;
  int depth;
  GapReport out;

  bool all_zero(const std::string& w) const { return w.find('2') == std::string::npos; }

  // Lower endpoint of the prefix interval; survival is "lo <= q" since
  // every interval already starts at or above 2x.
  Rational lo_of(const std::string& w) const { return edge(x, w, '2'); }

  void emit(const std::string& w) {
    LabeledInterval iv;
    iv.lo = lo_of(w);
    iv.prefix = w;
    if (all_zero(w)) {
      iv.hi = q;
      iv.clipped = true;
    } else {
      iv.hi = edge(x, w, '0');
      if (iv.hi > q) {
        iv.hi = q;
        iv.clipped = true;
      }
    }
    out.kept.push_back(std::move(iv));
  }

  // w survives and has length level+1. Children split off the next digit;
  // the 2-child keeps the parent's lower endpoint, so it always survives.
  void expand(const std::string& w, int level) {
    if (level == depth) {
      emit(w);
      return;
    }
    const std::string c2 = w + "2", c0 = w + "0";
    const bool zero_survives = lo_of(c0) <= q;
    expand(c2, level + 1);
    if (zero_survives) {
      Gap g;
      g.lo = edge(x, c2, '0');
      g.hi = lo_of(c0);
      g.left_coding = Coding::infinite(c2, "0");
      g.right_coding = Coding::infinite(c0, "2");
      g.level = level + 1;
      out.removed.push_back(std::move(g));
      expand(c0, level + 1);
    }
  }
};

}  // namespace

GapReport level_intervals(const Rational& x, const Rational& q, int n) {
  if (x.sign() <= 0) throw std::invalid_argument("x must be positive");
  if (n < 0) throw std::invalid_argument("depth must be >= 0");
  if (q <= Rational(2) * x) throw BadRange();

  Builder b{x, q, n, {}};
  b.out.x = x;
  b.out.q = q;
  b.out.level = n;

  // Children of the empty root: "2" always survives, "0" only if its
  // interval reaches down to q.
  b.expand("2", 0);
  if (b.lo_of("0") <= q) {
    Gap g;
    g.lo = edge(x, "2", '0');
    g.hi = b.lo_of("0");
    g.left_coding = Coding::infinite("2", "0");
    g.right_coding = Coding::infinite("0", "2");
    g.level = 0;
    b.out.removed.push_back(std::move(g));
    b.expand("0", 0);
  }

  std::stable_sort(b.out.removed.begin(), b.out.removed.end(),
                   [](const Gap& a, const Gap& c) {
                     if (a.level != c.level) return a.level < c.level;
                     return a.lo < c.lo;
                   });
  return b.out;
}

Rational total_length(const GapReport& r) {
  Rational sum;
  for (const auto& iv : r.kept) sum += iv.length();
  return sum;
}

std::string render_levels(const std::vector<GapReport>& reports, const RenderStyle& style) {
  if (reports.empty()) throw std::invalid_argument("render_levels: no reports");

  Rational glo, ghi;
  bool have = false;
  for (const auto& r : reports) {
    if (r.kept.empty()) continue;
    if (!have) {
      glo = r.hull_lo();
      ghi = r.hull_hi();
      have = true;
    } else {
      glo = std::min(glo, r.hull_lo());
      ghi = std::max(ghi, r.hull_hi());
    }
  }
  if (!have) {
    glo = Rational(0);
    ghi = Rational(1);
  }
  const Rational span = ghi > glo ? ghi - glo : Rational(1);

  const int bands = static_cast<int>(reports.size());
  const int inner_w = style.width - 2 * style.margin;
  const int inner_h = style.height - 2 * style.margin - (bands - 1) * style.band_gap;
  const Rational band_h = Rational(inner_h, bands);

  auto px = [&](const Rational& v) {
    return (Rational(style.margin) + (v - glo) / span * Rational(inner_w)).to_decimal(2);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
      << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << " "
      << style.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" fill=\"" << style.background << "\"/>\n";
  for (int i = 0; i < bands; ++i) {
    Rational y = Rational(style.margin) + Rational(i) * (band_h + Rational(style.band_gap));
    svg << "<g data-level=\"" << reports[i].level << "\">\n";
    for (const auto& iv : reports[i].kept) {
      Rational w = (iv.hi - iv.lo) / span * Rational(inner_w);
      svg << "<rect x=\"" << px(iv.lo) << "\" y=\"" << y.to_decimal(2) << "\" width=\""
          << w.to_decimal(2) << "\" height=\"" << band_h.to_decimal(2) << "\" fill=\""
          << style.fill << "\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cantor
