#include "cube/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "biotcube/biot_stress.hpp"
#include "biotcube/criteria.hpp"
#include "biotcube/cube_solver.hpp"
#include "biotcube/errors.hpp"
#include "biotcube/material.hpp"
#include "biotcube/verification.hpp"
#include "biotcube/version.hpp"

namespace cube {
namespace {

using namespace biotcube;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

// "a,b" or "a,b,c" -> doubles. Anything else is a usage error.
std::vector<double> parse_list(const std::string& text, std::size_t want, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || end != item.data() + item.size())
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    values.push_back(v);
  }
  if (values.size() != want)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(want) +
                     " comma-separated numbers");
  return values;
}

struct Config {
  std::optional<double> m;
  std::optional<double> mu;
  std::optional<double> lambda;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 42;
  double tol = kDefaultDefinitenessTol;

  // eval
  std::string stretches;
  // trace
  double alpha_min = 0.0;
  double alpha_max = 5.0;
  double step = 0.1;
  // regions
  std::string slice;
  std::string box;
  std::string box3;
  std::size_t res = 50;
  // verify
  bool quick = false;
};

// Material resolved from the flags. scale multiplies reported stresses.
struct Material {
  StiffnessRatio ratio;
  double scale;
  bool physical;
};

Material resolve(const Config& c) {
  if (c.m) return {StiffnessRatio(*c.m), 1.0, false};
  if (c.mu && c.lambda) {
    const MaterialParams p = MaterialParams::from_lame(*c.mu, *c.lambda);
    return {p.ratio(), p.mu(), true};
  }
  throw UsageError("material required: pass --m, or both --mu and --lambda");
}

json meta(const std::string& command, const Config& c, const Material& mat) {
  json j{{"command", command},
         {"M", mat.ratio.value()},
         {"mu", mat.physical ? json(mat.scale) : json(nullptr)},
         {"version", kVersion},
         {"seed", c.seed},
         {"tol", c.tol}};
  return j;
}

void meta_csv(std::ostream& os, const std::string& command, const Config& c, const Material& mat) {
  os << "# cube " << command << " version=" << kVersion << " M=" << num(mat.ratio.value());
  if (mat.physical) os << " mu=" << num(mat.scale);
  os << " seed=" << c.seed << " tol=" << num(c.tol) << '\n';
}

// Writes to --out if given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    os_ = &file_;
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_eval(const Config& c, std::ostream& out) {
  if (c.stretches.empty()) throw UsageError("eval: --stretches l1,l2,l3 is required");
  const Material mat = resolve(c);
  const auto v = parse_list(c.stretches, 3, "--stretches");
  const PrincipalStretches s(v[0], v[1], v[2]);
  const StressTriple t = principal_biot(mat.ratio, s);
  const PointClassification pc = classify_point(mat.ratio, s, c.tol);
  const double g = energy_principal(mat.ratio, s) * mat.scale;

  Sink sink(c.out, out);
  if (c.format == "json") {
    json row{{"M", mat.ratio.value()},
             {"l1", s[0]}, {"l2", s[1]}, {"l3", s[2]},
             {"T1", t[0] * mat.scale}, {"T2", t[1] * mat.scale}, {"T3", t[2] * mat.scale},
             {"det_DT", pc.jacobian_det},
             {"m1", pc.minors[0]}, {"m2", pc.minors[1]}, {"m3", pc.minors[2]},
             {"energy", g},
             {"monotonicity", std::string(to_string(pc.monotonicity))},
             {"stable", pc.energetically_stable ? 1 : 0}};
    *sink << json{{"meta", meta("eval", c, mat)}, {"data", json::array({row})}}.dump(2) << '\n';
    return kOk;
  }
  meta_csv(*sink, "eval", c, mat);
  *sink << "M,l1,l2,l3,T1,T2,T3,det_DT,m1,m2,m3,energy,monotonicity,stable\n";
  *sink << num(mat.ratio.value()) << ',' << num(s[0]) << ',' << num(s[1]) << ',' << num(s[2])
        << ',' << num(t[0] * mat.scale) << ',' << num(t[1] * mat.scale) << ','
        << num(t[2] * mat.scale) << ',' << num(pc.jacobian_det) << ',' << num(pc.minors[0])
        << ',' << num(pc.minors[1]) << ',' << num(pc.minors[2]) << ',' << num(g) << ','
        << to_string(pc.monotonicity) << ',' << (pc.energetically_stable ? 1 : 0) << '\n';
  return kOk;
}

int cmd_bifurcate(const Config& c, std::ostream& out) {
  const Material mat = resolve(c);
  const BifurcationReport r = bifurcation_point(mat.ratio);
  Sink sink(c.out, out);
  if (c.format == "json") {
    json row{{"lambda_star", r.lambda_star},
             {"alpha_star", r.alpha_star * mat.scale},
             {"lambda_flat", r.lambda_flat},
             {"alpha_flat", r.alpha_flat * mat.scale},
             {"sextic_residual", r.sextic_residual},
             {"onset_slope", r.onset_slope}};
    *sink << json{{"meta", meta("bifurcate", c, mat)}, {"data", json::array({row})}}.dump(2)
          << '\n';
    return kOk;
  }
  meta_csv(*sink, "bifurcate", c, mat);
  *sink << "lambda_star,alpha_star,lambda_flat,alpha_flat,sextic_residual,onset_slope\n";
  *sink << num(r.lambda_star) << ',' << num(r.alpha_star * mat.scale) << ','
        << num(r.lambda_flat) << ',' << num(r.alpha_flat * mat.scale) << ','
        << num(r.sextic_residual) << ',' << num(r.onset_slope) << '\n';
  return kOk;
}

int cmd_trace(const Config& c, std::ostream& out) {
  const Material mat = resolve(c);
  const BranchTrace trace = trace_branches(mat.ratio, c.alpha_min / mat.scale,
                                           c.alpha_max / mat.scale, c.step / mat.scale, c.tol);
  Sink sink(c.out, out);
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& rec : trace.records)
      for (const auto& s : rec.solutions)
        rows.push_back({{"alpha", rec.alpha * mat.scale},
                        {"branch", std::string(to_string(s.label))},
                        {"l1", s.stretches[0]}, {"l2", s.stretches[1]}, {"l3", s.stretches[2]},
                        {"residual", s.residual},
                        {"monotonicity", std::string(to_string(s.monotonicity))},
                        {"stable", s.stable ? 1 : 0},
                        {"total_energy", s.total_energy * mat.scale}});
    json m = meta("trace", c, mat);
    m["alpha_min"] = c.alpha_min;
    m["alpha_max"] = c.alpha_max;
    m["step"] = c.step;
    *sink << json{{"meta", m}, {"data", rows}}.dump(2) << '\n';
    return kOk;
  }
  meta_csv(*sink, "trace", c, mat);
  *sink << "# alpha_min=" << num(c.alpha_min) << " alpha_max=" << num(c.alpha_max)
        << " step=" << num(c.step) << '\n';
  *sink << "alpha,branch,l1,l2,l3,residual,monotonicity,stable,total_energy\n";
  for (const auto& rec : trace.records)
    for (const auto& s : rec.solutions)
      *sink << num(rec.alpha * mat.scale) << ',' << to_string(s.label) << ','
            << num(s.stretches[0]) << ',' << num(s.stretches[1]) << ',' << num(s.stretches[2])
            << ',' << num(s.residual) << ',' << to_string(s.monotonicity) << ','
            << (s.stable ? 1 : 0) << ',' << num(s.total_energy * mat.scale) << '\n';
  return kOk;
}

int cmd_regions(const Config& c, std::ostream& out) {
  const Material mat = resolve(c);
  if (!c.box.empty() && !c.box3.empty()) throw UsageError("regions: --box and --box3 are exclusive");
  if (c.box.empty() && c.box3.empty()) throw UsageError("regions: one of --box or --box3 is required");
  const bool full = !c.box3.empty();
  if (!full && !c.slice.empty() && c.slice != "two-equal")
    throw UsageError("regions: --slice must be two-equal");
  if (full && !c.slice.empty()) throw UsageError("regions: --slice applies to --box only");
  const auto b = parse_list(full ? c.box3 : c.box, 2, full ? "--box3" : "--box");
  if (!(b[0] > 0.0 && b[1] > b[0]))
    throw UsageError("regions: box needs 0 < lo < hi");
  const Interval iv{b[0], b[1]};
  const ScanDomain domain = full ? ScanDomain::box3(iv, c.res) : ScanDomain::two_equal(iv, c.res);
  const auto grid = region_scan(mat.ratio, domain, ScanMode::Monotonicity, c.tol);

  Sink sink(c.out, out);
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& p : grid)
      rows.push_back({{"l1", p.stretches[0]}, {"l2", p.stretches[1]}, {"l3", p.stretches[2]},
                      {"det_DT", p.classification.jacobian_det},
                      {"m1", p.classification.minors[0]},
                      {"m2", p.classification.minors[1]},
                      {"m3", p.classification.minors[2]},
                      {"monotonicity", std::string(to_string(p.classification.monotonicity))},
                      {"stable", p.classification.energetically_stable ? 1 : 0}});
    json m = meta("regions", c, mat);
    m["slice"] = full ? "box3" : "two-equal";
    m["box"] = {b[0], b[1]};
    m["res"] = c.res;
    *sink << json{{"meta", m}, {"data", rows}}.dump(2) << '\n';
    return kOk;
  }
  meta_csv(*sink, "regions", c, mat);
  *sink << "# M=" << num(mat.ratio.value()) << " slice=" << (full ? "box3" : "two-equal")
        << " box=" << num(b[0]) << ',' << num(b[1]) << " res=" << c.res << " tol=" << num(c.tol)
        << '\n';
  *sink << "l1,l2,l3,det_DT,m1,m2,m3,monotonicity,stable\n";
  for (const auto& p : grid) {
    const auto& pc = p.classification;
    *sink << num(p.stretches[0]) << ',' << num(p.stretches[1]) << ',' << num(p.stretches[2])
          << ',' << num(pc.jacobian_det) << ',' << num(pc.minors[0]) << ','
          << num(pc.minors[1]) << ',' << num(pc.minors[2]) << ','
          << to_string(pc.monotonicity) << ',' << (pc.energetically_stable ? 1 : 0) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Material mat = resolve(c);
  const auto results = run_verification(mat.ratio, {c.seed, c.quick, c.tol});
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    rows.push_back({{"module", r.module}, {"name", r.name}, {"passed", r.passed},
                    {"detail", r.detail}});
  }
  json m = meta("verify", c, mat);
  m["quick"] = c.quick;
  m["passed"] = all;
  const std::string report = json{{"meta", m}, {"data", rows}}.dump(2) + "\n";

  if (c.format == "json" && c.out.empty()) {
    out << report;
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS " : "FAIL ") << r.module << '.' << r.name << "  " << r.detail
          << '\n';
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    out << results.size() - failed << '/' << results.size() << " checks passed\n";
    if (!c.out.empty()) {
      Sink sink(c.out, out);
      *sink << report;
    }
  }
  return all ? kOk : kNumericalFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Biot stress analysis of a compressible neo-Hookean cube under dead load", "cube"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* m = app.add_option("--m", c.m, "Stiffness ratio M = (lambda + 2 mu/3) / mu, > 2/3");
  auto* mu = app.add_option("--mu", c.mu, "Shear modulus; reported stresses are scaled by it");
  auto* lambda = app.add_option("--lambda", c.lambda, "First Lame parameter");
  m->excludes(mu)->excludes(lambda);
  mu->needs(lambda);
  lambda->needs(mu);
  app.add_option("--out", c.out, "Write output to this file instead of stdout");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--tol", c.tol, "Definiteness tolerance")->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "Stresses, Jacobian and classification at one point");
  eval->add_option("--stretches", c.stretches, "Principal stretches l1,l2,l3");
  auto* bif = app.add_subcommand("bifurcate", "Bifurcation point and branch onset");
  auto* trace = app.add_subcommand("trace", "Trace all homogeneous solutions over a load range");
  trace->add_option("--alpha-min", c.alpha_min, "First load");
  trace->add_option("--alpha-max", c.alpha_max, "Last load");
  trace->add_option("--step", c.step, "Load step");
  auto* regions = app.add_subcommand("regions", "Classify a grid of stretch triples");
  regions->add_option("--slice", c.slice, "Slice of stretch space (two-equal)");
  regions->add_option("--box", c.box, "lo,hi for the (l1, l1, l2) slice");
  regions->add_option("--box3", c.box3, "lo,hi for the full (l1, l2, l3) cube");
  regions->add_option("--res", c.res, "Grid points per axis")->check(CLI::Range(2, 100000));
  auto* verify = app.add_subcommand("verify", "Run the property check suites");
  verify->add_flag("--quick", c.quick, "Reduced sample counts");
  for (auto* sub : {eval, bif, trace, regions, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) return cmd_eval(c, out);
    if (*bif) return cmd_bifurcate(c, out);
    if (*trace) return cmd_trace(c, out);
    if (*regions) return cmd_regions(c, out);
    return cmd_verify(c, out);
  } catch (const ParameterDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace cube
