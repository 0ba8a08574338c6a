// Acceptance harness: one PASS/FAIL line per criterion. Every criterion also
// writes a report file; a second pass recomputes them all and compares bytes.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emptri/diamond.hpp"
#include "emptri/experiments.hpp"
#include "emptri/horton.hpp"
#include "emptri/squared_horton.hpp"
#include "emptri/triangles.hpp"

using namespace emptri;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  Report report;
  double limit_s = 0;  // 0: no runtime bound
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo > 0 ? *hi / *lo : INFINITY;
}

std::string fmt(double v) { return format_double(v); }

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ",") + fmt(x);
  return out;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

GenerateConfig horton_cell(int k) {
  GenerateConfig c;
  c.family = Family::Horton;
  c.k = k;
  return c;
}

GenerateConfig squared_cell(int g) {
  GenerateConfig c;
  c.family = Family::SquaredHorton;
  c.g = g;
  return c;
}

GenerateConfig diamond_cell(std::size_t m, int k) {
  GenerateConfig c;
  c.family = Family::DiamondSquaredHorton;
  c.m = m;
  c.k = k;
  return c;
}

ScalingTable scaling(std::vector<GenerateConfig> cells) {
  ScalingConfig sc;
  sc.cells = std::move(cells);
  return run_scaling(sc);
}

PointSet random_gp_set(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> coord(0, 99);
  for (;;) {
    PointSet s;
    while (s.points.size() < n) {
      ExactPoint p(coord(rng), coord(rng));
      if (std::find(s.points.begin(), s.points.end(), p) == s.points.end()) s.points.push_back(p);
    }
    if (check_general_position(s).ok) return s;
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  o.limit_s = 60;
  std::uint64_t sets = 0, triangles = 0, mismatches = 0;
  std::string first;
  auto compare = [&](const PointSet& s, const std::string& label) {
    ++sets;
    const auto fast = empty_triangles_fast(s).triangles;
    const auto brute = empty_triangles_bruteforce(s);
    triangles += fast.size();
    if (fast != brute) {
      ++mismatches;
      if (first.empty()) first = label;
    }
  };
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(5, 15);
  for (int i = 0; i < 200; ++i) compare(random_gp_set(rng, size(rng)), "random #" + std::to_string(i));
  for (int k = 1; k <= 5; ++k) compare(generate_horton(k), "horton k=" + std::to_string(k));
  for (int g : {2, 4}) compare(generate_squared_horton(g).set, "sq-horton g=" + std::to_string(g));
  for (int k = 4; k <= 6; ++k)
    compare(generate_diamond_squared_horton(4, k).set, "diamond m=4 k=" + std::to_string(k));
  o.report.add("sets", sets);
  o.report.add("triangles", triangles);
  o.report.add("mismatches", mismatches);
  if (!first.empty()) o.report.add("first_mismatch", first);
  o.ok = mismatches == 0;
  o.summary = std::to_string(sets) + " sets, " + std::to_string(triangles) + " triangles, " +
              std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome visible_edges() {
  Outcome o;
  std::string sizes;
  for (int k = 3; k <= 6; ++k) {
    VerifyConfig c;
    c.check = "visible-edges";
    c.k = k;
    const Verified v = run_verify(c, nullptr);
    o.report.append(v.report);
    o.ok = o.ok && v.ok;
    sizes += (sizes.empty() ? "" : " ") + std::string("n=") + std::to_string(1 << k) + ":" +
             v.report.get("edges_geometric").value_or("?");
  }
  o.summary = "edges equal for " + sizes;
  return o;
}

Outcome lattice_heights() {
  Outcome o;
  o.limit_s = 120;
  std::uint64_t total = 0;
  std::string max_h = "0";
  for (int g = 3; g <= 10; ++g) {
    VerifyConfig c;
    c.check = "lattice-heights";
    c.g = g;
    const Verified v = run_verify(c, nullptr);
    o.report.append(v.report);
    o.ok = o.ok && v.ok;
    total += std::stoull(v.report.get("interior_empty_triangles").value_or("0"));
    max_h = std::max(max_h, v.report.get("max_height").value_or("?"));
  }
  o.summary = std::to_string(total) + " interior-empty triangles for g=3..10, max height " + max_h;
  return o;
}

Outcome totient_bound() {
  Outcome o;
  o.limit_s = 30;
  VerifyConfig c;
  c.check = "totient-sum";
  c.n = 1000000;
  const Verified v = run_verify(c, nullptr);
  o.report = v.report;
  o.ok = v.ok;
  o.summary = v.report.get("squares_checked").value_or("?") + " squares, max upper ratio " +
              v.report.get("max_ratio_upper").value_or("?") + " at n=" + v.report.get("max_ratio_at").value_or("?") +
              " (bound 1.45)";
  return o;
}

Outcome squared_validity() {
  Outcome o;
  std::string parts;
  for (int g : {2, 4, 8, 16}) {
    const Generated gen = run_generate(squared_cell(g));
    VerifyConfig c;
    c.check = "squared-horton";
    c.mode = g <= 8 ? ValidationMode::full() : ValidationMode::sampled(1, 1000000);
    c.strip_unions = g == 4 || g == 8;
    const Verified v = run_verify(c, &gen.set);
    o.report.append(v.report);
    o.ok = o.ok && v.ok;
    parts += (parts.empty() ? "" : "; ") + std::string("g=") + std::to_string(g) + (g <= 8 ? " full" : " sampled") +
             (v.ok ? " ok" : " FAILED");
    if (c.strip_unions) parts += ", " + v.report.get("strip_union_pairs").value_or("?") + " strip pairs";
  }
  o.summary = parts;
  return o;
}

Outcome squared_tau_band() {
  Outcome o;
  o.limit_s = 600;
  const ScalingTable t = scaling({squared_cell(4), squared_cell(8), squared_cell(16), squared_cell(32)});
  std::vector<double> ratios, norm;
  for (const auto& r : t.rows) {
    norm.push_back(static_cast<double>(r.tau) / (static_cast<double>(r.n) * r.n));
    if (r.tau_ratio) ratios.push_back(*r.tau_ratio);
    o.ok = o.ok && !r.truncated;
  }
  for (double r : ratios) o.ok = o.ok && within(r, 8, 32);
  o.ok = o.ok && spread(norm) <= 3;
  o.report.add("csv", "\n" + t.csv);
  o.report.add("tau_ratios", join(ratios));
  o.report.add("tau_over_n2", join(norm));
  o.report.add("tau_over_n2.spread", spread(norm));
  o.summary = "tau ratios " + join(ratios) + " in [8,32]; tau/n^2 spread " + fmt(spread(norm)) + " <= 3";
  return o;
}

Outcome squared_depth_trend() {
  Outcome o;
  const ScalingTable t = scaling({squared_cell(4), squared_cell(8), squared_cell(16), squared_cell(32)});
  std::vector<double> ratios, per_n;
  for (const auto& r : t.rows) {
    per_n.push_back(static_cast<double>(r.max_stab) / r.n);
    if (r.stab_ratio) ratios.push_back(*r.stab_ratio);
  }
  for (double r : ratios) o.ok = o.ok && within(r, 2, 8);
  o.ok = o.ok && spread(per_n) <= 3;
  o.report.add("csv", "\n" + t.csv);
  o.report.add("depth_ratios", join(ratios));
  o.report.add("depth_over_n", join(per_n));

  // Cross-validation wherever tau <= 2000: the candidate depth is realized by
  // its reported point and never exceeds the exact maximum.
  std::string cross;
  for (const auto& r : t.rows) {
    if (r.tau > kExactStabMaxTriangles) continue;
    const PointSet s = run_generate(squared_cell(static_cast<int>(r.g))).set;
    const Analysis a = run_analyze(s, AnalyzeConfig{});
    const auto tris = empty_triangles_fast(s).triangles;
    const bool realized = stab_count(s, a.best.point, tris) == a.best.count;
    const bool bounded = a.exact && a.best.count <= a.exact->count;
    o.ok = o.ok && realized && bounded && a.best.count == r.max_stab;
    const std::string g = std::to_string(r.g);
    o.report.add("cross.g" + g + ".candidates", a.best.count);
    o.report.add("cross.g" + g + ".exact", a.exact ? a.exact->count : 0);
    o.report.add("cross.g" + g + ".realized", realized);
    cross += " g=" + g + ": candidates " + std::to_string(a.best.count) + " <= exact " +
             std::to_string(a.exact ? a.exact->count : 0);
  }
  o.summary = "depth ratios " + join(ratios) + " in [2,8]; depth/n spread " + fmt(spread(per_n)) + ";" + cross;
  return o;
}

Outcome horton_trends() {
  Outcome o;
  const ScalingTable t = scaling({horton_cell(5), horton_cell(6), horton_cell(7), horton_cell(8)});
  std::vector<double> stab, inc;
  for (const auto& r : t.rows) {
    stab.push_back(r.stab_nlogn);
    inc.push_back(r.incidence_norm);
  }
  o.ok = spread(stab) <= 3 && spread(inc) <= 3;
  o.report.add("csv", "\n" + t.csv);
  o.report.add("depth_over_nlog2n", join(stab));
  o.report.add("incidence_over_nlog2n", join(inc));
  o.report.add("C.depth", *std::max_element(stab.begin(), stab.end()));
  o.report.add("C.incidence", *std::max_element(inc.begin(), inc.end()));
  o.summary = "depth/(n log2 n) " + join(stab) + " spread " + fmt(spread(stab)) + "; incidence/(n log2 n) " +
              join(inc) + " spread " + fmt(spread(inc));
  return o;
}

std::vector<GenerateConfig> diamond_cells() {
  return {diamond_cell(4, 8), diamond_cell(16, 4), diamond_cell(16, 8), diamond_cell(64, 4)};
}

const ScalingRow& row(const ScalingTable& t, std::uint64_t m, std::uint64_t k) {
  return *std::find_if(t.rows.begin(), t.rows.end(), [&](const ScalingRow& r) { return r.m == m && r.k == k; });
}

Outcome diamond_validity_band() {
  Outcome o;
  o.limit_s = 900;
  std::string valid;
  for (const auto& cell : diamond_cells()) {
    const Generated gen = run_generate(cell);
    VerifyConfig c;
    c.check = "diamond";
    const Verified v = run_verify(c, &gen.set);
    o.report.append(v.report);
    o.ok = o.ok && v.ok;
    valid += " (" + std::to_string(cell.m) + "," + std::to_string(cell.k) + ")" + (v.ok ? "" : " FAILED");
  }
  const ScalingTable t = scaling(diamond_cells());
  std::vector<double> norm;
  for (const auto& r : t.rows) {
    norm.push_back(r.tau_norm);
    o.ok = o.ok && !r.truncated;
  }
  auto tau = [&](std::uint64_t m, std::uint64_t k) { return static_cast<double>(row(t, m, k).tau); };
  const double k_double = tau(16, 8) / tau(16, 4);
  const std::vector<double> m_quad = {tau(64, 4) / tau(16, 4), tau(16, 8) / tau(4, 8)};
  o.ok = o.ok && spread(norm) <= 4 && within(k_double, 4, 16);
  for (double r : m_quad) o.ok = o.ok && within(r, 8, 32);
  o.report.add("csv", "\n" + t.csv);
  o.report.add("tau_over_m2k3", join(norm));
  o.report.add("tau_over_m2k3.spread", spread(norm));
  o.report.add("k_doubling_ratio", k_double);
  o.report.add("m_quadrupling_ratios", join(m_quad));
  o.summary = "valid:" + valid + "; tau/(m^2k^3) spread " + fmt(spread(norm)) + " <= 4; k doubling " + fmt(k_double) +
              " in [4,16]; m quadrupling " + join(m_quad) + " in [8,32]";
  return o;
}

Outcome diamond_depth_trend() {
  Outcome o;
  const ScalingTable t = scaling(diamond_cells());
  std::vector<double> norm;
  for (const auto& r : t.rows) norm.push_back(r.stab_norm);
  const double m_growth = row(t, 64, 4).stab_norm / row(t, 16, 4).stab_norm;
  o.ok = spread(norm) <= 4 && m_growth <= 2;
  o.report.add("csv", "\n" + t.csv);
  o.report.add("depth_over_mk3", join(norm));
  o.report.add("depth_over_mk3.spread", spread(norm));
  o.report.add("m64_over_m16_at_k4", m_growth);
  std::string note;
  const ScalingRow& small = row(t, 4, 8);
  if (small.tau <= kExactStabMaxTriangles) {
    const PointSet s = run_generate(diamond_cell(4, 8)).set;
    const auto tris = empty_triangles_fast(s).triangles;
    const StabEstimate e = max_stab_exact_small(s, tris);
    const double exact_norm = static_cast<double>(e.count) / (4.0 * 8 * 8 * 8);
    o.report.add("exact.m4_k8", e.count);
    o.report.add("exact.m4_k8_over_mk3", exact_norm);
    note = "; exact maximum at (4,8) is " + std::to_string(e.count) + " (" + fmt(exact_norm) + ")";
  }
  o.summary = "depth/(m k^3) " + join(norm) + " spread " + fmt(spread(norm)) + " (need <= 4); m=64/m=16 at k=4 " +
              fmt(m_growth) + " (need <= 2)" + note;
  return o;
}

Outcome negative_controls() {
  Outcome o;
  auto first_failure = [](const ValidationReport& r) -> const std::pair<std::string, CheckResult>* {
    for (const auto& c : r.checks)
      if (!c.second.ok) return &c;
    return nullptr;
  };

  PointSet h = generate_horton(3);
  std::swap(h.points[1].y, h.points[3].y);
  const CheckResult hr = check_horton(h.points);
  o.report.add("swapped_horton.is_horton", is_horton(h));
  o.report.add_check("swapped_horton", hr);
  const bool h_ok = !is_horton(h) && !hr.ok && !hr.witness.empty();

  const SquaredHorton unit = build_squared_horton(4, 1, 1);
  const ValidationReport ur = validate_squared_horton(unit.set, unit.map, ValidationMode::full());
  o.report.add_validation("unit_eps.", ur);
  const auto* uf = first_failure(ur);
  const bool u_ok = !ur.ok() && uf && !uf->second.witness.empty();

  const SquaredHorton base = generate_squared_horton(4);
  const DiamondSquaredHorton big = build_diamond_squared_horton(base.set.points, 8, Rational(1, 2), Rational(1, 8));
  const ValidationReport dr = validate_diamond_properties(big.set, big.index, ValidationMode::full());
  o.report.add_validation("oversized.", dr);
  const auto* df = first_failure(dr);
  const bool d_ok = !dr.ok() && df && !df->second.witness.empty();

  o.ok = h_ok && u_ok && d_ok;
  o.summary = "swapped Horton rejected [" + format_witness(hr.witness) + "]; eps=1 rejected by " +
              (uf ? uf->first + " [" + format_witness(uf->second.witness) + "]" : std::string("nothing")) +
              "; oversized diamonds rejected by " +
              (df ? df->first + " [" + format_witness(df->second.witness) + "]" : std::string("nothing"));
  return o;
}

std::filesystem::path report_path(int id, bool rerun) {
  return std::filesystem::path("acceptance_reports") /
         ("criterion" + std::to_string(id) + (rerun ? ".rerun" : "") + ".txt");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "visible edges", visible_edges},
      {3, "grid triangle heights", lattice_heights},
      {4, "totient sum bound", totient_bound},
      {5, "squared Horton validity", squared_validity},
      {6, "squared Horton tau band", squared_tau_band},
      {7, "squared Horton depth trend", squared_depth_trend},
      {8, "Horton depth and incidence trend", horton_trends},
      {9, "diamond validity and tau band", diamond_validity_band},
      {10, "diamond depth band", diamond_depth_trend},
      {11, "negative controls", negative_controls},
  };
  std::filesystem::create_directories("acceptance_reports");

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = o.limit_s == 0 || secs < o.limit_s;
    const bool ok = o.ok && in_time;
    failures += !ok;
    write_file(report_path(c.id, false), o.report.text());
    std::string time = fmt(secs) + " s";
    if (o.limit_s > 0) time += in_time ? " < " + fmt(o.limit_s) + " s" : " exceeds " + fmt(o.limit_s) + " s";
    std::printf("%s criterion %d (%s): %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.summary.c_str(),
                time.c_str());
    std::fflush(stdout);
  }

  std::vector<int> differing;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.report.add("exception", e.what());
    }
    write_file(report_path(c.id, true), o.report.text());
    if (slurp(report_path(c.id, false)) != slurp(report_path(c.id, true))) differing.push_back(c.id);
  }
  std::string diff;
  for (int id : differing) diff += (diff.empty() ? "" : ",") + std::to_string(id);
  const bool det = differing.empty();
  failures += !det;
  std::printf("%s criterion 12 (determinism): %s\n", det ? "PASS" : "FAIL",
              det ? "all 11 report files byte-identical on rerun" : ("reports differ for criteria " + diff).c_str());
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
