// Command-line front end: every operation as a subcommand with
// reproducible, file-oriented JSON/SVG output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cantor/coding.hpp"
#include "cantor/dimension.hpp"
#include "cantor/freq_measures.hpp"
#include "cantor/gap_tree.hpp"
#include "cantor/param_map.hpp"
#include "cantor/rational.hpp"

using cantor::Coding;
using cantor::Rational;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kDisplayDigits = 4;

std::string frac(const Rational& r) {
  return r.num().get_str() + "/" + r.den().get_str();
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
}

void emit_json(const ojson& j, const std::string& path) {
  write_output(j.dump(2), path);
}

ojson interval_json(const cantor::LabeledInterval& iv) {
  ojson j;
  j["lo"] = frac(iv.lo);
  j["hi"] = frac(iv.hi);
  j["prefix"] = iv.prefix;
  if (iv.clipped) j["clipped"] = true;
  return j;
}

ojson gap_json(const cantor::Gap& g) {
  ojson j;
  j["lo"] = frac(g.lo);
  j["hi"] = frac(g.hi);
  j["lo_dec"] = g.lo.to_decimal(kDisplayDigits);
  j["hi_dec"] = g.hi.to_decimal(kDisplayDigits);
  j["left_coding"] = g.left_coding.to_string();
  j["right_coding"] = g.right_coding.to_string();
  j["level"] = g.level;
  return j;
}

ojson report_json(const cantor::GapReport& r) {
  ojson j;
  j["x"] = frac(r.x);
  j["q"] = frac(r.q);
  j["level"] = r.level;
  j["hull"] = {{"lo", frac(r.hull_lo())},
               {"hi", frac(r.hull_hi())},
               {"lo_dec", r.hull_lo().to_decimal(kDisplayDigits)},
               {"hi_dec", r.hull_hi().to_decimal(kDisplayDigits)}};
  j["total_length"] = frac(cantor::total_length(r));
  j["kept"] = ojson::array();
  for (const auto& iv : r.kept) j["kept"].push_back(interval_json(iv));
  j["removed"] = ojson::array();
  for (const auto& g : r.removed) j["removed"].push_back(gap_json(g));
  return j;
}

cantor::GapReport report_from_json(const ojson& j) {
  cantor::GapReport r;
  r.x = Rational::parse(j.at("x").get<std::string>());
  r.q = Rational::parse(j.at("q").get<std::string>());
  r.level = j.at("level").get<int>();
  for (const auto& item : j.at("kept")) {
    cantor::LabeledInterval iv;
    iv.lo = Rational::parse(item.at("lo").get<std::string>());
    iv.hi = Rational::parse(item.at("hi").get<std::string>());
    iv.prefix = item.at("prefix").get<std::string>();
    iv.clipped = item.value("clipped", false);
    r.kept.push_back(std::move(iv));
  }
  if (j.contains("removed")) {
    for (const auto& item : j.at("removed")) {
      cantor::Gap g;
      g.lo = Rational::parse(item.at("lo").get<std::string>());
      g.hi = Rational::parse(item.at("hi").get<std::string>());
      g.left_coding = Coding::parse(item.at("left_coding").get<std::string>());
      g.right_coding = Coding::parse(item.at("right_coding").get<std::string>());
      g.level = item.at("level").get<int>();
      r.removed.push_back(std::move(g));
    }
  }
  return r;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string x, lambda, coding, q{"2"}, p, window_lo, window_hi, word, alpha;
  std::string output, format{"json"}, input, filler{"all-zero"}, prefix{"2"};
  int depth = 2, depth_min = 6, depth_max = 14, k = 0, moran_q = 1, moran_to = 0;
  unsigned sigma_m = 12;
  unsigned bits_theta = 192, bits_measure = 128;
  std::uint64_t seed = 0;
  std::size_t blocks = 1;
  bool all_levels = false, exact_measure = false;
  std::vector<std::size_t> checkpoints;
  int width = 800, height = 240;
};

int run_code(const Options& o) {
  Rational x = Rational::parse(o.x);
  Rational lambda = Rational::parse(o.lambda);
  auto res = cantor::phi_x(x, lambda);
  ojson j;
  j["x"] = frac(x);
  j["lambda"] = frac(lambda);
  if (std::holds_alternative<Coding>(res)) {
    j["coding"] = std::get<Coding>(res).to_string();
  } else {
    const auto& w = std::get<cantor::RejectWitness>(res);
    j["reject_index"] = w.index;
    j["residue"] = frac(w.residue);
  }
  if (o.format == "text") {
    std::ostringstream t;
    if (j.contains("coding"))
      t << "coding " << j["coding"].get<std::string>();
    else
      t << "rejected at index " << j["reject_index"].get<std::size_t>() << ", residue "
        << j["residue"].get<std::string>();
    write_output(t.str(), o.output);
  } else {
    emit_json(j, o.output);
  }
  return 0;
}

int run_lambda(const Options& o) {
  Rational x = Rational::parse(o.x);
  Coding c = Coding::parse(o.coding);
  Rational lambda = cantor::lambda_of(x, c);
  ojson j;
  j["x"] = frac(x);
  j["coding"] = c.to_string();
  j["lambda"] = frac(lambda);
  j["lambda_dec"] = lambda.to_decimal(kDisplayDigits);
  if (o.format == "text")
    write_output("lambda " + lambda.to_string(), o.output);
  else
    emit_json(j, o.output);
  return 0;
}

int run_gaps(const Options& o) {
  Rational x = Rational::parse(o.x);
  Rational q = Rational::parse(o.q);
  if (o.format == "text") {
    auto r = cantor::level_intervals(x, q, o.depth);
    std::ostringstream t;
    t << "level " << r.level << ": " << r.kept.size() << " intervals, total length "
      << cantor::total_length(r).to_string() << "\n";
    for (const auto& iv : r.kept)
      t << "  [" << iv.lo.to_decimal(kDisplayDigits) << ", " << iv.hi.to_decimal(kDisplayDigits)
        << "]  " << iv.prefix << "\n";
    for (const auto& g : r.removed)
      t << "  gap (" << g.lo.to_decimal(kDisplayDigits) << ", " << g.hi.to_decimal(kDisplayDigits)
        << ")  level " << g.level << "\n";
    write_output(t.str(), o.output);
    return 0;
  }
  if (o.all_levels) {
    ojson j;
    j["x"] = frac(x);
    j["q"] = frac(q);
    j["depth"] = o.depth;
    j["levels"] = ojson::array();
    for (int n = 0; n <= o.depth; ++n)
      j["levels"].push_back(report_json(cantor::level_intervals(x, q, n)));
    emit_json(j, o.output);
  } else {
    emit_json(report_json(cantor::level_intervals(x, q, o.depth)), o.output);
  }
  return 0;
}

int run_render(const Options& o) {
  ojson j = ojson::parse(read_input(o.input));
  std::vector<cantor::GapReport> reports;
  if (j.contains("levels")) {
    for (const auto& item : j.at("levels")) reports.push_back(report_from_json(item));
  } else {
    reports.push_back(report_from_json(j));
  }
  cantor::RenderStyle style;
  style.width = o.width;
  style.height = o.height;
  write_output(cantor::render_levels(reports, style), o.output);
  return 0;
}

int run_dim(const Options& o) {
  Rational x = Rational::parse(o.x);
  Rational q = Rational::parse(o.q);
  std::optional<cantor::Window> window;
  if (!o.window_lo.empty() != !o.window_hi.empty())
    throw std::invalid_argument("--window-lo and --window-hi must be given together");
  if (!o.window_lo.empty())
    window = cantor::Window{Rational::parse(o.window_lo), Rational::parse(o.window_hi)};
  auto series = cantor::make_box_series(x, q, o.depth_min, o.depth_max, window);
  auto est = cantor::dim_estimate(series);
  ojson j;
  j["x"] = frac(x);
  j["q"] = frac(q);
  j["window"] = {{"lo", frac(series.window.first)}, {"hi", frac(series.window.second)}};
  j["points"] = ojson::array();
  for (std::size_t i = 0; i < series.scales.size(); ++i)
    j["points"].push_back({{"eps", frac(series.scales[i])}, {"count", series.counts[i]}});
  j["slope"] = est.slope;
  j["intercept"] = est.intercept;
  j["stderr"] = est.stderr_slope;
  j["r2"] = est.r2;
  j["residuals"] = est.residuals;
  if (o.format == "text") {
    std::ostringstream t;
    t << "slope " << est.slope << " (stderr " << est.stderr_slope << ", r2 " << est.r2 << ")";
    write_output(t.str(), o.output);
  } else {
    emit_json(j, o.output);
  }
  return 0;
}

int run_moran(const Options& o) {
  ojson j;
  if (o.moran_to > 0) {
    j["values"] = ojson::array();
    for (int q = o.moran_q; q <= o.moran_to; ++q)
      j["values"].push_back(
          {{"q", q}, {"value", cantor::moran_lower_bound(static_cast<unsigned>(q))}});
  } else {
    j["q"] = o.moran_q;
    j["value"] = cantor::moran_lower_bound(static_cast<unsigned>(o.moran_q));
  }
  emit_json(j, o.output);
  return 0;
}

int run_theta(const Options& o) {
  Rational p = Rational::parse(o.p);
  auto sol = cantor::solve_theta(p, o.k, o.bits_theta);
  ojson j;
  j["p"] = frac(sol.p);
  j["k"] = sol.k;
  j["bits"] = sol.bits;
  j["theta"] = sol.theta.to_double();
  j["theta_exact"] = frac(sol.theta);
  j["residual"] = sol.residual.to_double();
  emit_json(j, o.output);
  return 0;
}

int run_entropy(const Options& o) {
  Rational p = Rational::parse(o.p);
  ojson j;
  j["p"] = frac(p);
  j["value"] = cantor::entropy_dim(p);
  emit_json(j, o.output);
  return 0;
}

int run_sigma(const Options& o) {
  cantor::SigmaQNSpec spec;
  spec.q = static_cast<unsigned>(o.moran_q);
  spec.prefix = o.prefix;
  spec.seed = o.seed;
  if (o.filler == "all-zero")
    spec.filler = cantor::SigmaFiller::AllZero;
  else if (o.filler == "all-two")
    spec.filler = cantor::SigmaFiller::AllTwo;
  else if (o.filler == "seeded")
    spec.filler = cantor::SigmaFiller::Seeded;
  else
    throw std::invalid_argument("filler must be all-zero, all-two, or seeded");

  const unsigned M = o.sigma_m;
  std::string word = cantor::sigma_generate(spec, M);
  std::string_view digits = std::string_view(word).substr(spec.n());

  std::vector<std::size_t> cps;
  for (unsigned m = 1; m <= M; ++m) {
    cps.push_back(cantor::sigma_ell(spec.q, m));
    cps.push_back(cantor::sigma_r(spec.q, m));
  }
  auto stats = cantor::freq_stats(digits, cps);

  ojson j;
  j["q"] = spec.q;
  j["prefix"] = spec.prefix;
  j["n"] = spec.n();
  j["M"] = M;
  j["filler"] = o.filler;
  if (spec.filler == cantor::SigmaFiller::Seeded) j["seed"] = spec.seed;
  j["length"] = word.size();
  j["checkpoints"] = ojson::array();
  for (unsigned m = 1; m <= M; ++m) {
    const auto& at_l = stats.checkpoints[2 * (m - 1)];
    const auto& at_r = stats.checkpoints[2 * (m - 1) + 1];
    j["checkpoints"].push_back({{"m", m},
                                {"r", at_r.first},
                                {"ratio2_r", at_r.second.to_double()},
                                {"ratio2_r_exact", frac(at_r.second)},
                                {"l", at_l.first},
                                {"ratio2_l", at_l.second.to_double()},
                                {"ratio2_l_exact", frac(at_l.second)}});
  }
  if (auto alpha = cantor::sigma_alpha(spec)) {
    auto [at_r, at_l] = cantor::checkpoint_limits(spec.q, *alpha);
    j["limits"] = {{"alpha", frac(*alpha)},
                   {"at_r", frac(at_r)},
                   {"at_r_value", at_r.to_double()},
                   {"at_l", frac(at_l)},
                   {"at_l_value", at_l.to_double()}};
  } else {
    j["limits"] = nullptr;
  }
  j["word"] = word;
  emit_json(j, o.output);
  return 0;
}

int run_freq(const Options& o) {
  std::string word;
  if (!o.word.empty()) {
    word = o.word;
  } else if (!o.coding.empty()) {
    if (o.blocks < 1) throw std::invalid_argument("--length must be >= 1 with --coding");
    word = Coding::parse(o.coding).prefix(o.blocks);
  } else {
    throw std::invalid_argument("freq needs --word or --coding with --length");
  }
  std::vector<std::size_t> cps = o.checkpoints;
  if (cps.empty()) cps.push_back(word.size());
  auto stats = cantor::freq_stats(word, cps);
  ojson j;
  j["length"] = stats.length;
  j["count0"] = stats.count0;
  j["count2"] = stats.count2;
  j["checkpoints"] = ojson::array();
  for (const auto& [idx, ratio] : stats.checkpoints)
    j["checkpoints"].push_back(
        {{"index", idx}, {"ratio2", ratio.to_double()}, {"ratio2_exact", frac(ratio)}});
  emit_json(j, o.output);
  return 0;
}

int run_sample(const Options& o) {
  Rational p = Rational::parse(o.p);
  auto spec = cantor::make_tree_measure(o.k, o.prefix, p, o.bits_measure);
  std::string word = cantor::sample_tree(spec, o.blocks, o.seed);
  std::string_view digits = std::string_view(word).substr(spec.n());
  auto stats = cantor::freq_stats(digits, {digits.size()});
  Rational mu = cantor::cylinder_measure(spec, word);

  ojson j;
  j["k"] = spec.k;
  j["p"] = frac(p);
  j["prefix"] = spec.prefix;
  j["blocks"] = o.blocks;
  j["seed"] = o.seed;
  j["bits"] = spec.bits;
  j["length"] = word.size();
  j["freq2"] = stats.checkpoints[0].second.to_double();
  j["freq2_exact"] = frac(stats.checkpoints[0].second);
  j["log_measure"] = static_cast<double>(cantor::log_value(mu));
  j["local_dim"] = cantor::empirical_local_dim(spec, word);
  // The exact measure grows with the digit count; emit it only when small
  // or explicitly requested.
  if (o.exact_measure || digits.size() <= 4096)
    j["measure"] = frac(mu);
  else
    j["measure"] = nullptr;
  j["word"] = word;
  emit_json(j, o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parametric Cantor sets: codings, gaps, dimension, frequencies"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  };

  auto* code = app.add_subcommand("code", "coding of lambda (or a rejection certificate)");
  code->add_option("--x", o.x, "the common point x > 0")->required();
  code->add_option("--lambda", o.lambda, "parameter lambda")->required();
  code->add_option("--format", o.format, "json|text");
  add_out(code);

  auto* lam = app.add_subcommand("lambda", "parameter of a coding");
  lam->add_option("--x", o.x)->required();
  lam->add_option("--coding", o.coding, "e.g. \"(20)\" or \"2(0)\"")->required();
  lam->add_option("--format", o.format, "json|text");
  add_out(lam);

  auto* gaps = app.add_subcommand("gaps", "level-n gap-removal report on [2x, q]");
  gaps->add_option("--x", o.x)->required();
  gaps->add_option("--q", o.q, "upper end of the parameter window (> 2x)");
  gaps->add_option("--depth", o.depth, "subdivision depth n >= 0");
  gaps->add_flag("--all-levels", o.all_levels, "emit every level 0..n");
  gaps->add_option("--format", o.format, "json|text");
  add_out(gaps);

  auto* render = app.add_subcommand("render", "SVG bands from a gaps JSON report");
  render->add_option("-i,--input", o.input, "gaps JSON file (default stdin)");
  render->add_option("--width", o.width);
  render->add_option("--height", o.height);
  add_out(render);

  auto* dim = app.add_subcommand("dim", "box-counting dimension estimate");
  dim->add_option("--x", o.x)->required();
  dim->add_option("--q", o.q);
  dim->add_option("--depth-min", o.depth_min);
  dim->add_option("--depth-max", o.depth_max);
  dim->add_option("--window-lo", o.window_lo, "restrict counting to a window");
  dim->add_option("--window-hi", o.window_hi);
  dim->add_option("--format", o.format, "json|text");
  add_out(dim);

  auto* moran = app.add_subcommand("moran", "Moran lower bound (q-1)log2/((q+1)log3)");
  moran->add_option("--q", o.moran_q, "block parameter q >= 1")->required();
  moran->add_option("--q-to", o.moran_to, "emit a table for q..q-to");
  add_out(moran);

  auto* theta = app.add_subcommand("theta", "root of (1-t)/(1-t^k) = p");
  theta->add_option("--p", o.p)->required();
  theta->add_option("--k", o.k)->required();
  theta->add_option("--bits", o.bits_theta, "bisection precision (default 192)");
  add_out(theta);

  auto* entropy = app.add_subcommand("entropy", "h(p,1-p)/log 3");
  entropy->add_option("--p", o.p)->required();
  add_out(entropy);

  auto* sigma = app.add_subcommand("sigma", "oscillating-frequency word with checkpoints");
  sigma->add_option("--q", o.moran_q, "pinning stride q >= 1");
  sigma->add_option("--prefix", o.prefix, "coding prefix, not all zeros");
  sigma->add_option("--blocks,--M", o.sigma_m, "number of blocks M");
  sigma->add_option("--filler", o.filler, "all-zero|all-two|seeded");
  sigma->add_option("--seed", o.seed, "seed for the seeded filler (default 0)");
  add_out(sigma);

  auto* freq = app.add_subcommand("freq", "digit statistics of a word or coding");
  freq->add_option("--word", o.word, "explicit {0,2} word");
  freq->add_option("--coding", o.coding, "coding to expand");
  freq->add_option("--length", o.blocks, "digits to take from the coding");
  freq->add_option("--checkpoints", o.checkpoints, "ascending prefix lengths")
      ->delimiter(',');
  add_out(freq);

  auto* sample = app.add_subcommand("sample", "sample the pruned-tree measure");
  sample->add_option("--k", o.k, "block length")->required();
  sample->add_option("--p", o.p, "target frequency of digit 2")->required();
  sample->add_option("--blocks", o.blocks, "number of blocks N")->required();
  sample->add_option("--prefix", o.prefix, "coding prefix (default \"2\")");
  sample->add_option("--seed", o.seed, "sampler seed (default 0)");
  sample->add_option("--bits", o.bits_measure, "theta precision (default 128)");
  sample->add_flag("--exact-measure", o.exact_measure,
                   "always include the exact cylinder measure");
  add_out(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (code->parsed()) return run_code(o);
    if (lam->parsed()) return run_lambda(o);
    if (gaps->parsed()) return run_gaps(o);
    if (render->parsed()) return run_render(o);
    if (dim->parsed()) return run_dim(o);
    if (moran->parsed()) return run_moran(o);
    if (theta->parsed()) return run_theta(o);
    if (entropy->parsed()) return run_entropy(o);
    if (sigma->parsed()) return run_sigma(o);
    if (freq->parsed()) return run_freq(o);
    if (sample->parsed()) return run_sample(o);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
