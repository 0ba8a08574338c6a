#include "emptri/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "emptri/diamond.hpp"
#include "emptri/horton.hpp"
#include "emptri/lattice.hpp"
#include "emptri/squared_horton.hpp"

namespace emptri {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string format_witness(const std::vector<std::size_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out.empty() ? "-" : out;
}

void Report::add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
void Report::add(const std::string& key, double value) { add(key, format_double(value)); }

void Report::add_check(const std::string& name, const CheckResult& r) {
  add("check." + name, r.ok ? "pass" : "fail");
  if (!r.ok) {
    add("check." + name + ".witness", format_witness(r.witness));
    add("check." + name + ".detail", r.detail);
  }
}

void Report::add_validation(const std::string& prefix, const ValidationReport& r) {
  for (const auto& [k, v] : r.facts) add(prefix + k, v);
  for (const auto& [name, c] : r.checks) add_check(prefix + name, c);
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_power_of_two(std::uint64_t v) { return v && !(v & (v - 1)); }

int param_int(const PointSet& s, const std::string& key, int fallback) {
  const auto it = s.params.find(key);
  if (it == s.params.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("metadata " + key + "=" + it->second + " is not an integer");
  }
}

int grid_side(const PointSet& s) {
  const int fallback = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s.size()))));
  return param_int(s, "g", fallback);
}

void header(Report& r, const std::string& command) {
  r.add("tool", "emptri");
  r.add("version", kToolVersion);
  r.add("command", command);
}

void describe_set(Report& r, const PointSet& s) {
  r.add("family", family_name(s.family));
  r.add("n", static_cast<std::uint64_t>(s.size()));
  for (const auto& [k, v] : s.params) r.add("param." + k, v);
}

}  // namespace

ValidationMode default_mode(int g, std::uint64_t seed) {
  return g <= 8 ? ValidationMode::full() : ValidationMode::sampled(seed, 1000000);
}

Generated run_generate(const GenerateConfig& c) {
  Generated out;
  header(out.report, "generate");
  out.report.add("config.family", family_name(c.family));
  out.report.add("config.seed", c.seed);
  switch (c.family) {
    case Family::Horton: {
      if (c.k < 0 || c.k > 16) throw std::invalid_argument("horton needs 0 <= k <= 16");
      out.report.add("config.k", c.k);
      out.set = c.k == 0 ? PointSet{{ExactPoint(0, 0)}, Family::Horton, {{"k", "0"}, {"deltas", "-"}}, {}}
                         : generate_horton(c.k);
      break;
    }
    case Family::SquaredHorton: {
      if (c.g < 2 || !is_power_of_two(static_cast<std::uint64_t>(c.g)) || c.g > 64)
        throw std::invalid_argument("sq-horton needs g a power of two in [2, 64]");
      const ValidationMode mode = c.mode.value_or(default_mode(c.g, c.seed));
      out.report.add("config.g", c.g);
      out.report.add("config.mode", mode.describe());
      out.set = generate_squared_horton(c.g, mode).set;
      break;
    }
    case Family::DiamondSquaredHorton: {
      std::size_t m = c.m;
      int k = c.k;
      if (c.alpha >= 0 || c.n > 0) {
        if (c.n == 0 || c.alpha < 0 || c.alpha > 1) throw std::invalid_argument("diamond by size needs n > 0 and 0 <= alpha <= 1");
        const SizeRuleParams t = size_rule_parameters(c.n, c.alpha);
        out.report.add("config.n", c.n);
        out.report.add("config.alpha", c.alpha);
        out.report.add("realized.k_clamped", t.k_clamped);
        out.report.add("realized.n", t.n_realized);
        out.report.add("realized.alpha", t.alpha_realized);
        m = t.m;
        k = t.k;
      } else {
        out.report.add("config.m", static_cast<std::uint64_t>(m));
        out.report.add("config.k", k);
      }
      bool power_of_four = false;
      for (std::size_t p = 1; p <= m && p != 0; p *= 4) power_of_four |= (p == m);
      if (!power_of_four || m > 4096) throw std::invalid_argument("diamond needs m a power of four, at most 4096");
      if (k < 4) throw std::invalid_argument("diamond needs k >= 4");
      out.set = generate_diamond_squared_horton(m, k).set;
      break;
    }
    case Family::Raw:
      throw std::invalid_argument("raw point sets are not generated");
  }
  describe_set(out.report, out.set);
  return out;
}

const std::vector<std::string>& verify_checks() {
  static const std::vector<std::string> names = {"horton",   "horton-strict",    "squared-horton",
                                                 "diamond",  "visible-edges",    "lattice-heights",
                                                 "totient-sum",   "general-position", "pullback"};
  return names;
}

bool verify_needs_input(const std::string& check) {
  return check != "lattice-heights" && check != "totient-sum" && check != "visible-edges";
}

Verified run_verify(const VerifyConfig& c, const PointSet* s) {
  Verified out;
  Report& r = out.report;
  header(r, "verify");
  r.add("config.check", c.check);
  r.add("config.seed", c.seed);
  if (std::find(verify_checks().begin(), verify_checks().end(), c.check) == verify_checks().end())
    throw std::invalid_argument("unknown check '" + c.check + "'");
  if (verify_needs_input(c.check) && s == nullptr) throw std::invalid_argument(c.check + " needs a point-set file");
  if (s) describe_set(r, *s);

  bool ok = true;
  auto record = [&](const std::string& name, const CheckResult& res) {
    r.add_check(name, res);
    ok = ok && res.ok;
  };

  if (c.check == "horton" || c.check == "horton-strict") {
    record(c.check, c.check == "horton" ? check_horton(s->points) : check_horton_strict(s->points));
  } else if (c.check == "squared-horton") {
    const int g = grid_side(*s);
    const PerturbationMap pm = reconstruct_perturbation_map(*s, g);
    const ValidationMode mode = c.mode.value_or(default_mode(g, c.seed));
    r.add("eps_x", pm.eps_x.get_str());
    r.add("eps_y", pm.eps_y.get_str());
    const ValidationReport vr = validate_squared_horton(*s, pm, mode);
    r.add_validation("", vr);
    ok = vr.ok();
    if (c.strip_unions && g <= 8) {
      const auto lines = lattice_lines_of_grid(g);
      std::uint64_t pairs = 0;
      CheckResult first;
      for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
          if (!(lines[a].dir.s == lines[b].dir.s && lines[a].dir.r == lines[b].dir.r)) continue;
          ++pairs;
          if (!first.ok) continue;
          first = check_strip_union(*s, pm, lines[a], lines[b]);
        }
      r.add("strip_union_pairs", pairs);
      record("strip_union", first);
    }
  } else if (c.check == "diamond") {
    const DiamondIndex idx = reconstruct_diamond_index(*s);
    const ValidationMode mode =
        c.mode.value_or(idx.m * static_cast<std::size_t>(idx.k) <= 64 ? ValidationMode::full()
                                                                       : ValidationMode::sampled(c.seed, 1000000));
    const ValidationReport vr = validate_diamond_properties(*s, idx, mode);
    r.add_validation("", vr);
    ok = vr.ok();
  } else if (c.check == "visible-edges") {
    PointSet h;
    if (s) {
      h = *s;
    } else {
      if (c.k < 2 || c.k > 12) throw std::invalid_argument("visible-edges needs 2 <= k <= 12");
      r.add("config.k", c.k);
      h = generate_horton(c.k);
      r.add("n", static_cast<std::uint64_t>(h.size()));
    }
    const auto geo = visible_edges_geometric(h);
    const auto str = visible_edges_structural(h);
    r.add("edges_geometric", static_cast<std::uint64_t>(geo.size()));
    r.add("edges_structural", static_cast<std::uint64_t>(str.size()));
    CheckResult res;
    if (geo != str) {
      std::vector<EdgeRef> diff;
      std::set_symmetric_difference(geo.begin(), geo.end(), str.begin(), str.end(), std::back_inserter(diff));
      const bool in_geo = std::binary_search(geo.begin(), geo.end(), diff.front());
      res = CheckResult::fail({diff.front().i, diff.front().j},
                              std::string("edge only in the ") + (in_geo ? "geometric" : "structural") + " list");
    }
    record("visible_edges_equal", res);
  } else if (c.check == "lattice-heights") {
    if (c.g < 2 || c.g > 12) throw std::invalid_argument("lattice-heights needs 2 <= g <= 12");
    r.add("config.g", c.g);
    const auto tris = enumerate_interior_empty_grid_triangles(c.g);
    std::uint64_t nondeg = 0, violations = 0;
    std::int64_t max_h = 0;
    std::map<std::int64_t, std::uint64_t> hist;
    CheckResult res;
    for (const auto& t : tris) {
      if (is_collinear(t)) continue;
      ++nondeg;
      const auto h = triangle_height(t);
      ++hist[h.height];
      max_h = std::max(max_h, h.height);
      if (h.height > 2) {
        ++violations;
        if (res.ok) {
          std::ostringstream d;
          d << "grid triangle (" << t.a.x << "," << t.a.y << ") (" << t.b.x << "," << t.b.y << ") (" << t.c.x
            << "," << t.c.y << ") has height " << h.height;
          res = CheckResult::fail({}, d.str());
        }
      }
    }
    r.add("interior_empty_triangles", nondeg);
    for (const auto& [h, n] : hist) r.add("height." + std::to_string(h), n);
    r.add("max_height", static_cast<std::uint64_t>(max_h));
    r.add("violations", violations);
    record("height_at_most_2", res);
  } else if (c.check == "totient-sum") {
    if (c.n < 1 || c.n > 100000000) throw std::invalid_argument("totient-sum needs 1 <= n <= 1e8");
    r.add("config.n", c.n);
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(c.n)));
    std::uint64_t s_max = root;
    while (s_max * s_max > c.n) --s_max;
    while ((s_max + 1) * (s_max + 1) <= c.n) ++s_max;
    const auto phi = totient_table(s_max);
    long double worst = 0, worst_upper = 0;
    std::uint64_t worst_n = 0;
    for (std::uint64_t q = 1; q <= s_max; ++q) {
      const TotientSum t = totient_sum(q * q, phi);
      if (t.ratio_upper > worst_upper) {
        worst_upper = t.ratio_upper;
        worst = t.ratio;
        worst_n = q * q;
      }
    }
    r.add("squares_checked", s_max);
    r.add("max_ratio", static_cast<double>(worst));
    r.add("max_ratio_upper", static_cast<double>(worst_upper));
    r.add("max_ratio_at", worst_n);
    r.add("bound", 1.45);
    r.add("log2_e", static_cast<double>(std::log2(std::exp(1.0L))));
    record("ratio_at_most_1.45",
           worst_upper <= 1.45L ? CheckResult{} : CheckResult::fail({}, "ratio exceeds 1.45 at n=" + std::to_string(worst_n)));
  } else if (c.check == "general-position") {
    record("general_position", check_general_position(*s));
  } else if (c.check == "pullback") {
    if (s->family != Family::SquaredHorton) throw std::invalid_argument("pullback needs a sq-horton set");
    const PerturbationMap pm = reconstruct_perturbation_map(*s, grid_side(*s));
    const auto e = empty_triangles_fast(*s);
    r.add("tau", static_cast<std::uint64_t>(e.triangles.size()));
    record("pullback", degenerate_pullback_check(*s, pm, e.triangles));
  }
  r.add("result", ok ? "pass" : "fail");
  out.ok = ok;
  return out;
}

Analysis run_analyze(const PointSet& s, const AnalyzeConfig& c) {
  Analysis a;
  Report& r = a.report;
  header(r, "analyze");
  r.add("config.strategies", strategies_to_string(c.strategies));
  r.add("config.seed", c.seed);
  r.add("config.max_centroids", c.max_centroids);
  if (c.budget != std::numeric_limits<std::uint64_t>::max()) r.add("config.budget_triangles", c.budget);
  describe_set(r, s);
  a.n = s.size();

  auto t0 = Clock::now();
  const Enumeration e = empty_triangles_fast(s, c.budget);
  const double t_enum = seconds_since(t0);
  a.tau = e.triangles.size();
  a.truncated = e.truncated;
  r.add("tau", a.tau);
  r.add("truncated", a.truncated);
  if (s.size() > 0) r.add("tau_over_n2", static_cast<double>(a.tau) / (static_cast<double>(s.size()) * s.size()));
  if (a.truncated) {
    r.add("note", "triangle budget exhausted; counts below are partial");
  }

  const auto inc = incidence_counts(s.size(), e.triangles);
  a.max_incidence = inc.empty() ? 0 : *std::max_element(inc.begin(), inc.end());
  r.add("incidence.max", a.max_incidence);
  if (s.size() >= 2) {
    const double nlog = static_cast<double>(s.size()) * std::log2(static_cast<double>(s.size()));
    r.add("incidence.max_over_nlog2n", static_cast<double>(a.max_incidence) / nlog);
  }
  std::map<std::uint64_t, std::uint64_t> bins;  // [2^b - 1, 2^(b+1) - 1)
  for (std::uint64_t v : inc) {
    std::uint64_t lo = 0;
    while (2 * lo + 1 <= v) lo = 2 * lo + 1;
    ++bins[lo];
  }
  for (const auto& [lo, count] : bins) r.add("incidence.hist." + std::to_string(lo) + "-" + std::to_string(2 * lo), count);

  for (const auto& q : c.queries) {
    const std::uint64_t d = stab_count(s, q, e.triangles);
    a.query_counts.push_back(d);
    r.add("stab." + q.x.get_str() + "," + q.y.get_str(), d);
  }

  t0 = Clock::now();
  CandidateOptions opt;
  opt.strategies = c.strategies;
  opt.seed = c.seed;
  opt.max_centroids = c.max_centroids;
  a.best = max_stab_candidates(s, e.triangles, opt);
  const double t_stab = seconds_since(t0);
  r.add("max_stab.count", a.best.count);
  r.add("max_stab.point", a.best.point.to_string());
  r.add("max_stab.method", "LowerBound");
  r.add("max_stab.candidates", a.best.candidates);
  r.add("max_stab.local_rounds", static_cast<std::uint64_t>(a.best.local_rounds));
  r.add("max_stab.centroids_sampled", a.best.sampled);
  if (s.size() > 0) r.add("max_stab.over_n", static_cast<double>(a.best.count) / static_cast<double>(s.size()));

  double t_exact = 0;
  if (c.exact_when_small && !a.truncated && a.tau <= kExactStabMaxTriangles) {
    t0 = Clock::now();
    a.exact = max_stab_exact_small(s, e.triangles);
    t_exact = seconds_since(t0);
    r.add("exact_stab.count", a.exact->count);
    r.add("exact_stab.point", a.exact->point.to_string());
    r.add("exact_stab.method", "Exact");
    r.add("exact_stab.candidates_match", a.exact->count == a.best.count);
  }
  if (c.timings) {
    r.add("time.enumerate_s", t_enum);
    r.add("time.max_stab_s", t_stab);
    if (a.exact) r.add("time.exact_stab_s", t_exact);
  }
  return a;
}

const std::vector<std::string>& scaling_columns() {
  static const std::vector<std::string> cols = {
      "family",       "n",          "m",          "k",          "g",
      "alpha_realized", "tau",      "truncated",  "tau_over_m2k3", "tau_ratio",
      "max_stab",     "max_stab_sampled", "max_stab_over_mk3", "max_stab_ratio", "max_stab_over_nlog2n",
      "max_incidence", "max_incidence_over_nlog2n", "t_generate_s", "t_enumerate_s", "t_stab_s"};
  return cols;
}

ScalingTable run_scaling(const ScalingConfig& config) {
  ScalingTable table;
  for (std::size_t i = 0; i < scaling_columns().size(); ++i) table.csv += (i ? "," : "") + scaling_columns()[i];
  table.csv += "\n";
  for (const GenerateConfig& cell : config.cells) {
    ScalingRow row;
    auto t0 = Clock::now();
    const Generated gen = run_generate(cell);
    row.t_generate = seconds_since(t0);
    const PointSet& s = gen.set;
    row.family = family_name(s.family);
    row.n = s.size();
    if (s.family == Family::DiamondSquaredHorton) {
      row.m = static_cast<std::uint64_t>(param_int(s, "m", 1));
      row.k = static_cast<std::uint64_t>(param_int(s, "k", 4));
      row.g = static_cast<std::uint64_t>(param_int(s, "g", 1));
    } else {
      row.m = row.n;
      row.k = 1;
      row.g = s.family == Family::SquaredHorton ? static_cast<std::uint64_t>(grid_side(s)) : 0;
    }
    row.alpha_realized = row.n > 1 ? std::log(static_cast<double>(row.m)) / std::log(static_cast<double>(row.n)) : 1;

    AnalyzeConfig ac = config.analyze;
    ac.exact_when_small = false;
    ac.queries.clear();
    const Analysis an = run_analyze(s, ac);
    row.t_enumerate = std::stod(an.report.get("time.enumerate_s").value_or("0"));
    row.t_stab = std::stod(an.report.get("time.max_stab_s").value_or("0"));
    row.tau = an.tau;
    row.truncated = an.truncated;
    row.max_stab = an.best.count;
    row.max_stab_sampled = an.best.sampled;
    row.max_incidence = an.max_incidence;
    const double m = static_cast<double>(row.m), k = static_cast<double>(row.k);
    const double nlog = row.n > 1 ? static_cast<double>(row.n) * std::log2(static_cast<double>(row.n)) : 1;
    row.tau_norm = static_cast<double>(row.tau) / (m * m * k * k * k);
    row.stab_norm = static_cast<double>(row.max_stab) / (m * k * k * k);
    row.incidence_norm = static_cast<double>(row.max_incidence) / nlog;
    row.stab_nlogn = static_cast<double>(row.max_stab) / nlog;
    if (!table.rows.empty()) {
      const ScalingRow& prev = table.rows.back();
      if (prev.tau > 0) row.tau_ratio = static_cast<double>(row.tau) / static_cast<double>(prev.tau);
      if (prev.max_stab > 0) row.stab_ratio = static_cast<double>(row.max_stab) / static_cast<double>(prev.max_stab);
    }
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("-"); };
    auto time = [&](double v) { return config.analyze.timings ? format_double(v) : std::string("-"); };
    std::ostringstream line;
    line << row.family << ',' << row.n << ',' << row.m << ',' << row.k << ',' << row.g << ','
         << format_double(row.alpha_realized) << ',' << row.tau << ',' << (row.truncated ? "true" : "false") << ','
         << format_double(row.tau_norm) << ',' << opt(row.tau_ratio) << ',' << row.max_stab << ','
         << (row.max_stab_sampled ? "true" : "false") << ',' << format_double(row.stab_norm) << ','
         << opt(row.stab_ratio) << ',' << format_double(row.stab_nlogn) << ',' << row.max_incidence << ','
         << format_double(row.incidence_norm) << ',' << time(row.t_generate) << ',' << time(row.t_enumerate) << ','
         << time(row.t_stab) << '\n';
    table.csv += line.str();
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace emptri
