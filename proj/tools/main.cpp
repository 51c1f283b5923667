// orbitwidth: width bounds, moment graphs and numerical certification for
// isospectral Hermitian orbits, driven by an exact rational spectrum.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "orbitwidth/gkm.hpp"
#include "orbitwidth/kks.hpp"
#include "orbitwidth/random.hpp"
#include "orbitwidth/serialize.hpp"
#include "orbitwidth/subspace.hpp"
#include "orbitwidth/weyl.hpp"
#include "orbitwidth/width.hpp"

namespace {

using namespace orbitwidth;

struct Options {
  std::string spectrum;
  std::string format = "text";
  std::string grid = "512,512";
  std::string edge;
  std::vector<std::string> points;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  std::optional<int> k_override;
  std::optional<int> n_override;
  double tol_rank = kRankTol;
  double tol_area = 1e-6;
};

std::uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("ORBITWIDTH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("ORBITWIDTH_SEED", "not an unsigned integer");
    }
  }
  return 0;
}

std::pair<int, int> parse_grid(const std::string& text) {
  auto sep = text.find_first_of("x,");
  if (sep == std::string::npos)
    throw CLI::ValidationError("--grid", "expected NthetaxNphi or Ntheta,Nphi");
  try {
    int a = std::stoi(text.substr(0, sep));
    int b = std::stoi(text.substr(sep + 1));
    if (a < 8 || b < 8) throw CLI::ValidationError("--grid", "components must be >= 8");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--grid", "expected NthetaxNphi or Ntheta,Nphi");
  }
}

std::pair<int, int> parse_edge(const std::string& text, int n) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--edge", "expected i,j");
  try {
    int i = std::stoi(text.substr(0, comma));
    int j = std::stoi(text.substr(comma + 1));
    if (i < 1 || j <= i || j > n) throw CLI::ValidationError("--edge", "need 1 <= i < j <= n");
    return {i, j};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--edge", "expected i,j");
  }
}

std::string poincare_string(const std::vector<std::int64_t>& coeff) {
  std::string out;
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coeff[i]);
  }
  return out;
}

int run_analyze(const Options& opt) {
  Spectrum s = parse_spectrum(opt.spectrum);
  WidthReport report = width_report(s);
  OrbitDimensions dims = orbit_dimensions(report.flag);
  std::optional<std::vector<std::int64_t>> poincare;
  try {
    poincare = poincare_polynomial(report.flag);
  } catch (const EnumerationCapExceeded&) {
    // bounds and dimensions stay cheap at any n; only the cell counts are capped
  }

  if (opt.format == "json") {
    // width report schema plus the analyze extras
    auto j = nlohmann::json::parse(width_report_to_json(report));
    j["complex_dim"] = dims.complex_dim;
    j["real_dim"] = dims.real_dim;
    j["poincare"] = poincare ? nlohmann::json(*poincare) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "spectrum: " << render(s) << "\n";
  std::cout << "n: " << report.n << "\n";
  std::cout << "flag type: a=(";
  for (size_t j = 0; j < report.flag.cumulative.size(); ++j)
    std::cout << (j ? "," : "") << report.flag.cumulative[j];
  std::cout << "), m=(";
  for (size_t j = 0; j < report.flag.multiplicities.size(); ++j)
    std::cout << (j ? "," : "") << report.flag.multiplicities[j];
  std::cout << ")\n";
  std::cout << "dimensions: complex " << dims.complex_dim << ", real " << dims.real_dim << "\n";
  std::cout << "regular orbit: " << (report.regular ? "yes" : "no") << "\n";
  std::cout << "poincare polynomial: "
            << (poincare ? poincare_string(*poincare) : "skipped (enumeration cap)") << "\n";
  if (report.degenerate) {
    std::cout << "width: degenerate (point orbit, no bounds)\n";
    return 0;
  }
  if (report.upper) {
    std::cout << "upper bound: " << report.upper->str() << "  (pair " << report.upper_pair->first
              << "," << report.upper_pair->second << "; " << report.upper_pair_count
              << " realizing pair" << (report.upper_pair_count == 1 ? "" : "s") << ")\n";
  } else {
    std::cout << "upper bound: not applicable (no eigenvalue pair divides all differences)\n";
  }
  if (report.lower_applicable) {
    std::cout << "lower bound: " << report.lower->str() << "\n";
  } else {
    std::cout << "lower bound: not applicable (more than one repeated block)\n";
  }
  std::cout << "exact width: " << (report.exact ? report.upper->str() : "undetermined") << "\n";
  return 0;
}

int run_graph(const Options& opt) {
  Spectrum s = parse_spectrum(opt.spectrum);
  GkmGraph g = gkm_graph(s);
  if (opt.format == "dot") {
    std::cout << gkm_to_dot(g);
  } else if (opt.format == "json") {
    std::cout << gkm_to_json(g) << "\n";
  } else {
    std::cout << "vertices: " << g.vertices.size() << ", edges: " << g.edges.size() << "\n";
    for (const GkmEdge& e : g.edges) {
      const RationalVector& from = g.vertices[static_cast<size_t>(e.u)];
      const RationalVector& to = g.vertices[static_cast<size_t>(e.v)];
      auto show = [](const RationalVector& v) {
        std::string out = "(";
        for (size_t c = 0; c < v.size(); ++c) out += (c ? "," : "") + v[c].str();
        return out + ")";
      };
      std::cout << show(from) << " -- " << show(to) << "  swap(" << e.swap.first << ","
                << e.swap.second << ")  area=" << e.area.str() << "\n";
    }
  }
  return 0;
}

int run_polytope(const Options& opt) {
  Spectrum s = parse_spectrum(opt.spectrum);
  auto vertices = fixed_points(s);
  std::cout << "n=" << s.size() << ", vertices=" << vertices.size() << "\n";
  for (const RationalVector& v : vertices) {
    std::cout << "(";
    for (size_t c = 0; c < v.size(); ++c) std::cout << (c ? "," : "") << v[c];
    std::cout << ")\n";
  }
  for (const std::string& point_text : opt.points) {
    RationalVector p;
    size_t pos = 0;
    while (true) {
      size_t comma = point_text.find(',', pos);
      p.push_back(Rational::parse(comma == std::string::npos
                                      ? point_text.substr(pos)
                                      : point_text.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    std::cout << "point " << point_text << ": "
              << (hull_membership(p, s) ? "inside" : "outside") << "\n";
  }
  return 0;
}

int run_verify_area(const Options& opt) {
  Spectrum s = parse_spectrum(opt.spectrum);
  auto [grid_theta, grid_phi] = parse_grid(opt.grid);
  RationalVector base = s.values();

  std::vector<std::pair<int, int>> edges;
  if (!opt.edge.empty()) {
    edges.push_back(parse_edge(opt.edge, s.size()));
  } else {
    for (int i = 1; i <= s.size(); ++i)
      for (int j = i + 1; j <= s.size(); ++j)
        if (s[i - 1] != s[j - 1]) edges.emplace_back(i, j);
  }
  if (edges.empty()) {
    std::cerr << "error: no edges to verify (point orbit)\n";
    return 2;
  }

  bool all_pass = true;
  for (auto [i, j] : edges) {
    if (base[static_cast<size_t>(i - 1)] == base[static_cast<size_t>(j - 1)]) {
      std::cerr << "error: positions " << i << "," << j << " carry equal values\n";
      return 2;
    }
    SpherePatch patch{base, i, j, grid_theta, grid_phi};
    double measured = sphere_area(patch);
    Rational expected = abs(base[static_cast<size_t>(i - 1)] - base[static_cast<size_t>(j - 1)]);
    double tol = opt.tol_area * std::max(1.0, expected.to_double());
    bool pass = std::abs(measured - expected.to_double()) <= tol;
    all_pass = all_pass && pass;
    std::printf("edge (%d,%d): measured %.6f vs expected %s, %s\n", i, j, measured,
                expected.str().c_str(), pass ? "PASS" : "FAIL");
  }
  std::cout << (all_pass ? "all areas verified" : "area verification FAILED") << "\n";
  return all_pass ? 0 : 1;
}

int run_verify_line(const Options& opt) {
  Spectrum s = parse_spectrum(opt.spectrum);
  FlagType f = flag_type(s);
  int n = opt.n_override.value_or(s.size());
  int k = opt.k_override.value_or(f.cumulative.front());
  if (k < 1 || k > n - 1) {
    std::cerr << "error: need 1 <= k <= n-1 (k=" << k << ", n=" << n << ")\n";
    return 2;
  }
  std::uint64_t seed = resolve_seed(opt);

  Subspace line = coordinate_subspace(n, 1, 0);
  Subspace hyperplane = coordinate_subspace(n, n - 1, 0);
  int passes = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    Subspace w = random_subspace(rng, n, k);
    try {
      GrassmannLine gline = line_through(w, line, hyperplane, opt.tol_rank);
      Subspace meet = intersect(w, hyperplane, opt.tol_rank);
      Subspace point = subspace_sum(gline.kernel, line, opt.tol_rank);
      bool ok = gline.kernel.dim() == k - 1 && gline.span.dim() == k + 1 &&
                subspace_distance(gline.kernel, meet) <= 1e-8 &&
                !contains(gline.kernel, line) && contains(hyperplane, point) &&
                contains(gline.span, point) && contains(gline.span, w) &&
                subspace_distance(gline.span, subspace_sum(w, point, opt.tol_rank)) <= 1e-8;
      if (ok) ++passes;
    } catch (const Error&) {
      // non-generic draw: counts as a failure
    }
  }

  int degenerate_caught = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    auto rng = trial_rng(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(trial));
    Subspace w_bad = subspace_sum(line, random_subspace(rng, n, k - 1));
    try {
      line_through(w_bad, line, hyperplane, opt.tol_rank);
    } catch (const GenericityViolated&) {
      ++degenerate_caught;
    }
  }

  std::printf("generic trials: %d/%d passed (k=%d, n=%d, seed=%llu)\n", passes, opt.trials, k, n,
              static_cast<unsigned long long>(seed));
  std::printf("degenerate trials: %d/%d rejected\n", degenerate_caught, opt.trials);
  bool ok = passes == opt.trials && degenerate_caught == opt.trials;
  std::cout << (ok ? "unique-line verification passed" : "unique-line verification FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Width bounds and moment-graph analysis of isospectral Hermitian orbits"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_format_dot) {
    cmd->add_option("spectrum", opt.spectrum, "comma-separated rational eigenvalues, e.g. 3,1/2,0")
        ->required();
    std::string formats = with_format_dot ? "text,json,dot" : "text,json";
    cmd->add_option("--format", opt.format, "output format (" + formats + ")")
        ->check(with_format_dot ? CLI::IsMember({"text", "json", "dot"})
                                : CLI::IsMember({"text", "json"}));
    return cmd;
  };

  CLI::App* analyze = add_common(app.add_subcommand("analyze", "width report, flag type, dimensions"), false);
  CLI::App* graph = add_common(app.add_subcommand("graph", "moment graph as text, JSON or DOT"), true);
  CLI::App* polytope = add_common(app.add_subcommand("polytope", "moment polytope vertices and membership"), false);
  polytope->add_option("--point", opt.points, "query point, comma-separated rationals (repeatable)");
  CLI::App* verify_area = add_common(app.add_subcommand("verify-area", "quadrature check of sphere areas"), false);
  verify_area->add_option("--grid", opt.grid, "quadrature grid NthetaxNphi");
  verify_area->add_option("--edge", opt.edge, "restrict to one position pair i,j");
  verify_area->add_option("--tol-area", opt.tol_area, "relative area tolerance");
  CLI::App* verify_line = add_common(app.add_subcommand("verify-line", "seeded unique-line trials"), false);
  verify_line->add_option("--trials", opt.trials, "number of seeded trials")->check(CLI::PositiveNumber);
  verify_line->add_option("--seed", opt.seed, "master seed (fallback: ORBITWIDTH_SEED, then 0)");
  verify_line->add_option("--k", opt.k_override, "plane dimension, default from the spectrum");
  verify_line->add_option("--n", opt.n_override, "ambient dimension, default from the spectrum");
  verify_line->add_option("--tol-rank", opt.tol_rank, "relative rank threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(opt);
    if (app.got_subcommand(graph)) return run_graph(opt);
    if (app.got_subcommand(polytope)) return run_polytope(opt);
    if (app.got_subcommand(verify_area)) return run_verify_area(opt);
    if (app.got_subcommand(verify_line)) return run_verify_line(opt);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
