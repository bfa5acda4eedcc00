// Command-line front end: emits CSV/JSON artifacts (potential profiles,
// eigenvalue curves, determinant scans, series checks, model constants).

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscspec/birman_schwinger.hpp"
#include "oscspec/oracle.hpp"
#include "oscspec/perturbation.hpp"
#include "oscspec/series_identities.hpp"

using json = nlohmann::ordered_json;
using namespace oscspec;

namespace {

struct RunConfig {
  int truncation = 120;
  int quad_order = 0;  // 0: derive 2*truncation + 16
  double tol = 1e-10;
  std::string format = "csv";
  std::string out;
  std::string dump_table;
};

// Fixed 12-significant-digit formatting keeps emitted artifacts diffable.
std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

void validate(RunConfig& cfg) {
  if (cfg.truncation < 1)
    throw std::invalid_argument("--truncation must be >= 1");
  if (cfg.quad_order == 0) cfg.quad_order = 2 * cfg.truncation + 16;
  if (cfg.quad_order < 2 * cfg.truncation + 8)
    throw std::invalid_argument("--quad-order must be >= 2*truncation + 8");
  if (cfg.quad_order > kMaxQuadratureOrder)
    throw std::invalid_argument("--quad-order must be <= " +
                                std::to_string(kMaxQuadratureOrder));
  if (cfg.tol < 1e-14 || cfg.tol > 1e-4)
    throw std::invalid_argument("--tol must lie in [1e-14, 1e-4]");
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("--format must be csv or json");
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out);
      if (!file_) throw std::runtime_error("cannot open --out file " + cfg.out);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Sign parse_sign(const std::string& s) {
  if (s == "attractive" || s == "a") return Sign::attractive;
  if (s == "repulsive" || s == "r") return Sign::repulsive;
  throw std::invalid_argument("--sign must be attractive or repulsive");
}

MatrixElementTable make_table(const RunConfig& cfg, int dim) {
  const QuadratureRule rule = gauss_hermite_rule(cfg.quad_order);
  MatrixElementTable t = build_table(dim, rule);
  if (!cfg.dump_table.empty()) {
    std::ofstream f(cfg.dump_table);
    if (!f) throw std::runtime_error("cannot open --dump-table file");
    f << "row,col,value\n";
    for (int m = 0; m < t.dim; ++m)
      for (int n = m; n < t.dim; ++n)
        f << m << "," << n << "," << fmt12(t(m, n)) << "\n";
  }
  return t;
}

// Deterministic parallel map: rows land in a preallocated vector by index.
template <typename F>
void parallel_rows(int n, F&& f) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw == 1 || n < 8) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) f(i);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------- potential

int cmd_potential(const RunConfig& cfg, double lambda, Sign sign, double xmax,
                  int steps) {
  if (steps < 2) throw std::invalid_argument("potential: --steps must be >= 2");
  if (xmax <= 0) throw std::invalid_argument("potential: --xmax must be > 0");
  if (lambda < 0) throw std::invalid_argument("potential: --lambda must be >= 0");
  Output out(cfg);
  out.stream() << "x,potential\n";
  for (int i = 0; i < steps; ++i) {
    const double x = -xmax + 2.0 * xmax * i / (steps - 1);
    out.stream() << fmt12(x) << "," << fmt12(total_potential(x, {lambda, sign}))
                 << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- curve

struct CurveRow {
  double lambda = 0.0;
  std::vector<std::optional<double>> values;
  std::string status;
};

double energy_by_method(const std::string& method, int level,
                        const CouplingSpec& cs, const MatrixElementTable& table,
                        double tol) {
  if (method == "p2")
    return level == 0 ? e0_second_order(cs.lambda, cs.sign)
                      : e1_second_order(cs.lambda, cs.sign);
  if (method == "det") return det_energy(level, cs, table).energy;
  if (method == "rank1")
    return (level == 0 ? rank_one_epsilon0(cs, table, tol)
                       : rank_one_epsilon1(cs, table, tol))
        .energy;
  if (method == "oracle")
    return lowest_eigenvalues(build_hamiltonian(cs, table), level + 1)[level].energy;
  throw std::invalid_argument("unknown method " + method);
}

int cmd_curve(const RunConfig& cfg, int level, Sign sign, double lmax, int steps,
              std::vector<std::string> methods) {
  if (level != 0 && level != 1)
    throw std::invalid_argument("curve: --level must be 0 or 1");
  if (steps < 2) throw std::invalid_argument("curve: --steps must be >= 2");
  if (lmax <= 0) throw std::invalid_argument("curve: --lmax must be > 0");
  if (methods.empty()) methods = {"p2"};
  for (const std::string& m : methods)
    if (m != "p2" && m != "det" && m != "rank1" && m != "oracle")
      throw std::invalid_argument("curve: unknown method " + m);

  // Figure domains: attractive sweeps stop at lambda0, repulsive level-1 at
  // sqrt(2); the ground-state repulsive sweep has no cap.
  double effective = lmax;
  if (sign == Sign::attractive)
    effective = std::min(effective, invertibility_threshold_0() - 1e-9);
  else if (level == 1)
    effective = std::min(effective, repulsive_threshold_1() - 1e-9);
  if (effective < lmax)
    std::cerr << "curve: clamped --lmax from " << lmax << " to " << effective
              << " (method validity domain)\n";

  const MatrixElementTable table = make_table(cfg, cfg.truncation);
  std::vector<CurveRow> rows(steps);
  parallel_rows(steps, [&](int i) {
    CurveRow& row = rows[i];
    row.lambda = effective * i / (steps - 1);
    row.values.resize(methods.size());
    for (size_t m = 0; m < methods.size(); ++m) {
      try {
        row.values[m] = energy_by_method(methods[m], level, {row.lambda, sign},
                                         table, cfg.tol);
      } catch (const std::exception&) {
        if (!row.status.empty()) row.status += ";";
        row.status += methods[m] + ":refused";
      }
    }
  });

  Output out(cfg);
  out.stream() << "lambda";
  for (const std::string& m : methods) out.stream() << "," << m;
  out.stream() << ",status\n";
  for (const CurveRow& row : rows) {
    out.stream() << fmt12(row.lambda);
    for (const auto& v : row.values)
      out.stream() << "," << (v ? fmt12(*v) : std::string());
    out.stream() << "," << row.status << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- energy

int cmd_energy(const RunConfig& cfg, double lambda, Sign sign, int level,
               const std::string& method, const std::string& dump_vectors) {
  if (level != 0 && level != 1)
    throw std::invalid_argument("energy: --level must be 0 or 1");
  if (lambda < 0) throw std::invalid_argument("energy: --lambda must be >= 0");
  if (!dump_vectors.empty() && method != "oracle")
    throw std::invalid_argument("energy: --dump-vectors requires --method oracle");
  const CouplingSpec cs{lambda, sign};

  // Point queries refuse couplings beyond the requested method's validity.
  if (method == "p2") {
    if (sign == Sign::attractive && lambda >= invertibility_threshold_0())
      throw std::domain_error("energy: p2 attractive requires lambda < lambda0");
    if (sign == Sign::repulsive && level == 1 && lambda >= repulsive_threshold_1())
      throw std::domain_error("energy: p2 repulsive level 1 requires lambda < sqrt(2)");
  }

  const MatrixElementTable table = make_table(cfg, cfg.truncation);
  double energy = 0.0;
  double residual = 0.0;
  if (method == "p2") {
    energy = level == 0 ? e0_second_order(lambda, sign)
                        : e1_second_order(lambda, sign);
  } else if (method == "det") {
    const EnergyResult r = det_energy(level, cs, table);
    energy = r.energy;
    residual = r.bracket_width;
  } else if (method == "rank1") {
    const EnergyResult r = level == 0 ? rank_one_epsilon0(cs, table, cfg.tol)
                                      : rank_one_epsilon1(cs, table, cfg.tol);
    energy = r.energy;
    residual = r.bracket_width;
  } else if (method == "oracle") {
    const auto pairs = lowest_eigenpairs(build_hamiltonian(cs, table), level + 1);
    energy = pairs[level].value;
    if (!dump_vectors.empty()) {
      std::ofstream f(dump_vectors);
      if (!f) throw std::runtime_error("cannot open --dump-vectors file");
      f << "basis_index";
      for (int k = 0; k <= level; ++k) f << ",level" << k;
      f << "\n";
      for (int n = 0; n < table.dim; ++n) {
        f << n;
        for (int k = 0; k <= level; ++k) f << "," << fmt12(pairs[k].vector[n]);
        f << "\n";
      }
    }
  } else {
    throw std::invalid_argument("energy: --method must be det, rank1, p2 or oracle");
  }

  // Truncation self-check: recompute at N+40 (or N-40 when the larger rule
  // would exceed the quadrature cap) and compare.
  double delta = 0.0;
  bool checked = false;
  if (method != "p2") {
    int other = cfg.truncation + 40;
    if (2 * other + 16 > kMaxQuadratureOrder) other = cfg.truncation - 40;
    if (other >= 8) {
      RunConfig alt = cfg;
      alt.truncation = other;
      alt.quad_order = 2 * other + 16;
      alt.dump_table.clear();
      const MatrixElementTable t2 = make_table(alt, other);
      const double e2 = energy_by_method(method, level, cs, t2, cfg.tol);
      delta = std::abs(energy - e2);
      checked = true;
    }
  }
  const bool passed = delta < 1e-8;

  json j;
  j["energy"] = round12(energy);
  j["method"] = method;
  j["truncation"] = cfg.truncation;
  j["residual"] = round12(residual);
  j["self_check"] = {{"delta", round12(delta)}, {"checked", checked}, {"passed", passed}};
  Output out(cfg);
  out.stream() << j.dump(2) << "\n";
  return passed ? 0 : 1;
}

// ----------------------------------------------------------------- det-scan

int cmd_det_scan(const RunConfig& cfg, double lambda, Sign sign, double emin,
                 double emax, int steps, const std::string& sector_name) {
  if (steps < 2) throw std::invalid_argument("det-scan: --steps must be >= 2");
  if (emax <= emin) throw std::invalid_argument("det-scan: need emax > emin");
  Sector sector = Sector::full;
  if (sector_name == "even") sector = Sector::even;
  else if (sector_name == "odd") sector = Sector::odd;
  else if (sector_name != "full")
    throw std::invalid_argument("det-scan: --sector must be full, even or odd");

  const MatrixElementTable table = make_table(cfg, cfg.truncation);
  const CouplingSpec cs{lambda, sign};
  std::vector<std::optional<std::pair<double, double>>> rows(steps);
  parallel_rows(steps, [&](int i) {
    const double e_val = emin + (emax - emin) * i / (steps - 1);
    try {
      rows[i] = std::make_pair(e_val, fredholm_det(e_val, cs, table, sector));
    } catch (const std::exception&) {
      rows[i] = std::nullopt;  // pole guard band: row dropped
    }
  });

  Output out(cfg);
  out.stream() << "E,det\n";
  for (const auto& row : rows)
    if (row)
      out.stream() << fmt12(row->first) << "," << fmt12(row->second) << "\n";
  return 0;
}

// --------------------------------------------------------------- series-check

int cmd_series_check(const RunConfig& cfg, long terms_geometric, long terms_trace) {
  const SeriesIdentity s0 = series_S0(terms_geometric);
  const SeriesIdentity s1 = series_S1(terms_geometric);
  const SeriesIdentity tr = trace_M_half(terms_trace);
  Output out(cfg);
  if (cfg.format == "json") {
    json j;
    auto pack = [](const SeriesIdentity& s) {
      return json{{"terms", s.terms_used},
                  {"partial_sum", round12(s.partial_sum)},
                  {"corrected", round12(s.corrected())},
                  {"closed_form", round12(s.closed_form)},
                  {"difference", round12(s.corrected() - s.closed_form)},
                  {"tail_bound", round12(s.tail_bound)}};
    };
    j["S0"] = pack(s0);
    j["S1"] = pack(s1);
    j["trace_M_half"] = pack(tr);
    out.stream() << j.dump(2) << "\n";
    return 0;
  }
  out.stream() << "identity,terms,partial_sum,corrected,closed_form,difference\n";
  auto row = [&](const char* name, const SeriesIdentity& s) {
    out.stream() << name << "," << s.terms_used << "," << fmt12(s.partial_sum)
                 << "," << fmt12(s.corrected()) << "," << fmt12(s.closed_form)
                 << "," << fmt12(s.corrected() - s.closed_form) << "\n";
  };
  row("S0", s0);
  row("S1", s1);
  row("trace_M_half", tr);
  return 0;
}

// ---------------------------------------------------------------- constants

int cmd_constants(const RunConfig& cfg) {
  const SeriesIdentity s0 = series_S0(60);
  const SeriesIdentity s1 = series_S1(60);
  const SeriesIdentity tr = trace_M_half(100000);
  json j;
  j["lambda0"] = round12(invertibility_threshold_0());
  j["lambda1"] = round12(invertibility_threshold_1());
  j["repulsive_excited_threshold"] = round12(repulsive_threshold_1());
  j["S0"] = {{"closed_form", round12(s0.closed_form)},
             {"partial_sum", round12(s0.partial_sum)},
             {"terms", s0.terms_used}};
  j["S1"] = {{"closed_form", round12(s1.closed_form)},
             {"partial_sum", round12(s1.partial_sum)},
             {"terms", s1.terms_used}};
  j["sqrt2_ln2"] = {{"closed_form", round12(tr.closed_form)},
                    {"partial_sum", round12(tr.partial_sum)},
                    {"tail_corrected", round12(tr.corrected())},
                    {"terms", tr.terms_used}};
  json coeffs;
  for (int level : {0, 1}) {
    json per_level;
    for (Sign sign : {Sign::attractive, Sign::repulsive}) {
      const SecondOrderCoefficients c = second_order_coefficients(level, sign);
      per_level[sign == Sign::attractive ? "attractive" : "repulsive"] = {
          {"linear", round12(c.linear)}, {"quadratic", round12(c.quadratic)}};
    }
    coeffs["level" + std::to_string(level)] = per_level;
  }
  j["second_order_coefficients"] = coeffs;
  Output out(cfg);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Spectra of the harmonic oscillator with a Gaussian perturbation"};
  app.require_subcommand(1);
  app.add_option("--truncation", cfg.truncation, "basis size N")
      ->capture_default_str();
  app.add_option("--quad-order", cfg.quad_order,
                 "Gauss-Hermite order (default 2N+16)");
  app.add_option("--tol", cfg.tol, "fixed-point tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "csv or json")->capture_default_str();
  app.add_option("--out", cfg.out, "write output to file instead of stdout");
  app.add_option("--dump-table", cfg.dump_table,
                 "dump the matrix-element table to CSV (row,col,value)");

  double lambda = 0.5, xmax = 4.0, lmax = 1.0, emin = -1.0, emax = 0.45;
  int steps = 101, level = 0;
  long terms_geometric = 60, terms_trace = 100000;
  std::string sign_name = "attractive", method = "det", sector = "full";
  std::vector<std::string> methods;

  CLI::App* potential = app.add_subcommand("potential", "total potential profile");
  potential->add_option("--lambda", lambda)->required();
  potential->add_option("--sign", sign_name);
  potential->add_option("--xmax", xmax)->capture_default_str();
  potential->add_option("--steps", steps)->capture_default_str();

  CLI::App* curve = app.add_subcommand("curve", "E(lambda) sweep");
  curve->add_option("--level", level)->required();
  curve->add_option("--sign", sign_name)->required();
  curve->add_option("--lmax", lmax)->required();
  curve->add_option("--steps", steps)->capture_default_str();
  curve->add_option("--methods", methods, "subset of p2,det,rank1,oracle")
      ->delimiter(',');

  std::string dump_vectors;
  CLI::App* energy = app.add_subcommand("energy", "single eigenvalue query");
  energy->add_option("--lambda", lambda)->required();
  energy->add_option("--sign", sign_name)->required();
  energy->add_option("--level", level)->required();
  energy->add_option("--method", method)->required();
  energy->add_option("--dump-vectors", dump_vectors,
                     "write oracle eigenvectors to CSV (oracle method only)");

  CLI::App* det_scan = app.add_subcommand("det-scan", "determinant vs E");
  det_scan->add_option("--lambda", lambda)->required();
  det_scan->add_option("--sign", sign_name);
  det_scan->add_option("--emin", emin)->required();
  det_scan->add_option("--emax", emax)->required();
  det_scan->add_option("--steps", steps)->capture_default_str();
  det_scan->add_option("--sector", sector)->capture_default_str();

  CLI::App* series = app.add_subcommand("series-check", "series identities");
  series->add_option("--terms", terms_geometric)->capture_default_str();
  series->add_option("--trace-terms", terms_trace)->capture_default_str();

  app.add_subcommand("constants", "closed-form constants as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    validate(cfg);
    const Sign sign = parse_sign(sign_name);
    if (potential->parsed())
      return cmd_potential(cfg, lambda, sign, xmax, steps);
    if (curve->parsed())
      return cmd_curve(cfg, level, sign, lmax, steps, methods);
    if (energy->parsed())
      return cmd_energy(cfg, lambda, sign, level, method, dump_vectors);
    if (det_scan->parsed())
      return cmd_det_scan(cfg, lambda, sign, emin, emax, steps, sector);
    if (series->parsed())
      return cmd_series_check(cfg, terms_geometric, terms_trace);
    return cmd_constants(cfg);
  } catch (const std::exception& e) {
    json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 2;
  }
}
