#pragma once

#include <string>
#include <vector>

#include "cantor/coding.hpp"
#include "cantor/param_map.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct BadRange : std::domain_error {
  BadRange() : std::domain_error("upper bound q must exceed 2x") {}
};

// Closed parameter interval of all lambda whose coding starts with `prefix`.
// The all-zeros prefix is unbounded above; it is clipped at q and flagged.
struct LabeledInterval {
  Rational lo;
  Rational hi;
  std::string prefix;
  bool clipped = false;

  Rational length() const { return hi - lo; }
};

// Open interval removed between the two child intervals of a prefix w,
// bounded by the parameters of w20^inf (left) and w02^inf (right).
struct Gap {
  Rational lo;
  Rational hi;
  Coding left_coding;
  Coding right_coding;
  int level = 0;
};

struct GapReport {
  Rational x;
  Rational q;
  int level = 0;
  std::vector<LabeledInterval> kept;  // disjoint, ascending
  std::vector<Gap> removed;           // cumulative, ordered by (level, lo)

  Rational hull_lo() const { return kept.empty() ? Rational(0) : kept.front().lo; }
  Rational hull_hi() const { return kept.empty() ? Rational(0) : kept.back().hi; }
};

// Level-n approximation of the parameter set within [2x, q]: all surviving
// coding prefixes of length n+1 with their intervals, plus every gap removed
// on the way down. Level 0 holds the length-1 prefixes, so the depth counts
// subdivision steps below the hull.
GapReport level_intervals(const Rational& x, const Rational& q, int n);

Rational total_length(const GapReport& r);

struct RenderStyle {
  int width = 800;
  int height = 240;
  int margin = 10;
  int band_gap = 6;
  std::string fill = "#1d3557";
  std::string background = "#ffffff";
};

// One horizontal band per report, kept intervals filled, gaps blank.
// Byte-deterministic for fixed inputs and style.
std::string render_levels(const std::vector<GapReport>& reports, const RenderStyle& style);

}  // namespace cantor
