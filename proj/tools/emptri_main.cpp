// emptri: generate point sets, run validators, count empty triangles.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "emptri/epts.hpp"
#include "emptri/experiments.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

emptri::Family family_arg(const std::string& name) {
  const auto f = emptri::parse_family(name);
  if (!f || *f == emptri::Family::Raw) throw UsageError("unknown family '" + name + "' (horton, sq-horton, diamond)");
  return *f;
}

std::optional<emptri::ValidationMode> mode_arg(const std::string& mode, std::uint64_t seed, std::uint64_t trials) {
  if (mode.empty()) return std::nullopt;
  if (mode == "full") return emptri::ValidationMode::full();
  if (mode == "sampled") return emptri::ValidationMode::sampled(seed, trials);
  throw UsageError("--mode must be full or sampled");
}

emptri::Rational rational_arg(const std::string& text) {
  emptri::Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
  q.canonicalize();
  if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
  return q;
}

emptri::ExactPoint point_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--query expects X,Y");
  return {rational_arg(text.substr(0, comma)), rational_arg(text.substr(comma + 1))};
}

emptri::PointSet read_input(const std::string& path) {
  try {
    if (path.empty() || path == "-") return emptri::read_epts(std::cin);
    return emptri::load_epts(path);
  } catch (const emptri::ParseError& e) {
    throw UsageError((path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed: " + path);
}

std::vector<emptri::GenerateConfig> scaling_cells(emptri::Family family, const std::vector<int>& ks,
                                                  const std::vector<int>& gs, const std::vector<std::size_t>& ms,
                                                  const std::vector<std::string>& cells,
                                                  const std::vector<std::uint64_t>& ns,
                                                  const std::vector<double>& alphas, std::uint64_t seed) {
  std::vector<emptri::GenerateConfig> out;
  emptri::GenerateConfig base;
  base.family = family;
  base.seed = seed;
  switch (family) {
    case emptri::Family::Horton:
      for (int k : ks) {
        base.k = k;
        out.push_back(base);
      }
      break;
    case emptri::Family::SquaredHorton:
      for (int g : gs) {
        base.g = g;
        out.push_back(base);
      }
      break;
    default:
      for (const auto& c : cells) {
        const auto x = c.find('x');
        if (x == std::string::npos) throw UsageError("--cells expects MxK entries, e.g. 16x4");
        try {
          base.m = std::stoul(c.substr(0, x));
          base.k = std::stoi(c.substr(x + 1));
        } catch (const std::exception&) {
          throw UsageError("bad cell '" + c + "'");
        }
        out.push_back(base);
      }
      for (std::size_t m : ms)
        for (int k : ks) {
          base.m = m;
          base.k = k;
          out.push_back(base);
        }
      for (std::uint64_t n : ns)
        for (double a : alphas) {
          emptri::GenerateConfig c = base;
          c.n = n;
          c.alpha = a;
          out.push_back(c);
        }
      break;
  }
  if (out.empty()) throw UsageError("no scaling cells given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empty triangles in Horton, squared Horton and diamond point sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(emptri::kToolVersion));

  std::string family, mode, out, report_out;
  int k = 0, g = 0;
  std::size_t m = 0;
  std::uint64_t n = 0, seed = 1, trials = 1000000;
  double alpha = -1;

  auto* gen = app.add_subcommand("generate", "Write a point set in EPTS v1 format");
  gen->add_option("--family", family, "horton | sq-horton | diamond")->required();
  gen->add_option("--k", k, "Horton level, or points per diamond");
  gen->add_option("--g", g, "squared Horton side (power of two)");
  gen->add_option("--m", m, "number of diamonds (power of four)");
  gen->add_option("--n", n, "target size for the (n, alpha) diamond rule");
  gen->add_option("--alpha", alpha, "exponent for the (n, alpha) diamond rule");
  gen->add_option("--mode", mode, "validation while shrinking eps: full | sampled");
  gen->add_option("--trials", trials, "sampled triples")->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--out", out, "point-set file (default: stdout)");
  gen->add_option("--report", report_out, "report file (default: stderr, or stdout with --out)");

  std::string check, input;
  bool no_strip = false;
  auto* ver = app.add_subcommand("verify", "Run a validator; exit 1 if any check fails");
  ver->add_option("check", check,
                  "horton | horton-strict | squared-horton | diamond | visible-edges | lattice-heights | totient-sum | "
                  "general-position | pullback")
      ->required();
  ver->add_option("file", input, "EPTS file ('-' for stdin)");
  ver->add_option("--k", k, "visible-edges: Horton level when no file is given");
  ver->add_option("--g", g, "lattice-heights: grid side");
  ver->add_option("--n", n, "totient-sum: check every perfect square up to n");
  ver->add_option("--mode", mode, "full | sampled");
  ver->add_option("--trials", trials)->capture_default_str();
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_flag("--no-strip-unions", no_strip, "squared-horton: skip the parallel line pair checks");
  ver->add_option("--out", out, "report file (default: stdout)");

  std::string strategies = "a+b+d";
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(), max_centroids = 65536;
  std::vector<std::string> queries;
  bool no_exact = false, timings = false;
  auto* ana = app.add_subcommand("analyze", "Count empty triangles, incidences and stabbing depth");
  ana->add_option("file", input, "EPTS file ('-' for stdin)");
  ana->add_option("--strategies", strategies, "a centroids, b grid cells, c midpoints, d local search")
      ->capture_default_str();
  ana->add_option("--seed", seed)->capture_default_str();
  ana->add_option("--budget-triangles", budget, "stop enumerating after this many triangles");
  ana->add_option("--max-centroids", max_centroids, "seeded sample size when there are more centroids")
      ->capture_default_str();
  ana->add_option("--query", queries, "stab count at X,Y (rationals allowed)");
  ana->add_flag("--no-exact", no_exact, "skip the exact maximum for small inputs");
  ana->add_flag("--timings", timings, "include wall-clock times (makes output non-reproducible)");
  ana->add_option("--out", out, "report file (default: stdout)");

  std::vector<int> ks, gs;
  std::vector<std::size_t> ms;
  std::vector<std::string> cells;
  std::vector<std::uint64_t> ns;
  std::vector<double> alphas;
  auto* sc = app.add_subcommand("scaling", "CSV table over a range of sizes");
  sc->add_option("--family", family, "horton | sq-horton | diamond")->required();
  sc->add_option("--k", ks, "Horton levels, or points per diamond")->delimiter(',');
  sc->add_option("--g", gs, "squared Horton sides")->delimiter(',');
  sc->add_option("--m", ms, "diamond counts (combined with every --k)")->delimiter(',');
  sc->add_option("--cells", cells, "diamond cells MxK")->delimiter(',');
  sc->add_option("--n", ns, "(n, alpha) diamond rule sizes")->delimiter(',');
  sc->add_option("--alpha", alphas, "(n, alpha) diamond rule exponents")->delimiter(',');
  sc->add_option("--strategies", strategies)->capture_default_str();
  sc->add_option("--seed", seed)->capture_default_str();
  sc->add_option("--budget-triangles", budget);
  sc->add_option("--max-centroids", max_centroids)->capture_default_str();
  sc->add_flag("--timings", timings, "fill the time columns");
  sc->add_option("--out", out, "CSV file (default: stdout)");
  std::string columns;
  for (const auto& c : emptri::scaling_columns()) columns += (columns.empty() ? "" : ",") + c;
  sc->footer("Columns: " + columns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      emptri::GenerateConfig c;
      c.family = family_arg(family);
      c.k = k;
      c.g = g;
      c.m = m;
      c.n = n;
      c.alpha = alpha;
      c.seed = seed;
      c.mode = mode_arg(mode, seed, trials);
      if (c.family == emptri::Family::DiamondSquaredHorton && n == 0 && alpha < 0 && (m == 0 || k == 0))
        throw UsageError("diamond needs --m and --k, or --n and --alpha");
      emptri::Generated res;
      try {
        res = emptri::run_generate(c);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_output(out, emptri::to_epts(res.set));
      const std::string rep = res.report.text();
      if (!report_out.empty()) write_output(report_out, rep);
      else if (out.empty() || out == "-") std::cerr << rep;
      else std::cout << rep;
      return kPass;
    }
    if (ver->parsed()) {
      emptri::VerifyConfig c;
      c.check = check;
      c.k = k;
      c.g = g;
      c.n = n;
      c.seed = seed;
      c.mode = mode_arg(mode, seed, trials);
      c.strip_unions = !no_strip;
      const auto& names = emptri::verify_checks();
      if (std::find(names.begin(), names.end(), check) == names.end()) throw UsageError("unknown check '" + check + "'");
      std::optional<emptri::PointSet> s;
      if (emptri::verify_needs_input(check)) {
        if (input.empty()) throw UsageError(check + " needs a point-set file");
        s = read_input(input);
      } else if (!input.empty()) {
        if (check != "visible-edges") throw UsageError(check + " does not read a file");
        s = read_input(input);
      }
      emptri::Verified res;
      try {
        res = emptri::run_verify(c, s ? &*s : nullptr);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_output(out, res.report.text());
      return res.ok ? kPass : kCheckFailed;
    }
    if (ana->parsed()) {
      emptri::AnalyzeConfig c;
      try {
        c.strategies = emptri::parse_strategies(strategies);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      c.seed = seed;
      c.budget = budget;
      c.max_centroids = max_centroids;
      c.exact_when_small = !no_exact;
      c.timings = timings;
      for (const auto& q : queries) c.queries.push_back(point_arg(q));
      const emptri::PointSet s = read_input(input);
      try {
        write_output(out, emptri::run_analyze(s, c).report.text());
      } catch (const emptri::GeneralPositionError& e) {
        std::cerr << "emptri: points not in general position: " << e.what() << " at "
                  << emptri::format_witness(e.witness) << '\n';
        return kCheckFailed;
      }
      return kPass;
    }
    if (sc->parsed()) {
      emptri::ScalingConfig c;
      c.cells = scaling_cells(family_arg(family), ks, gs, ms, cells, ns, alphas, seed);
      try {
        c.analyze.strategies = emptri::parse_strategies(strategies);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      c.analyze.seed = seed;
      c.analyze.budget = budget;
      c.analyze.max_centroids = max_centroids;
      c.analyze.timings = timings;
      emptri::ScalingTable t;
      try {
        t = emptri::run_scaling(c);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_output(out, t.csv);
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "emptri: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "emptri: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
