// Command-line front end for the sharpness laboratory: sharp-constant
// queries, inequality checks on supplied instances, and seeded campaigns.
//
// Exit codes: 0 success, 1 verification failures, 2 input parse errors,
// 3 internal errors (invalid geometry, failed witnesses, generation limits).

#include <unistd.h>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sharplab/sharplab.hpp"

namespace {

using namespace sharplab;

enum ExitCode { kOk = 0, kFailures = 1, kParseError = 2, kInternalError = 3 };

struct CommonFlags {
  std::string format;  // json | csv | table; empty means auto
  std::string out;
  std::uint64_t seed = 0;
  int resolution = 64;
  int trials = -1;
  int points = 8;
};

std::string effective_format(const CommonFlags& flags) {
  if (!flags.format.empty()) return flags.format;
  return isatty(fileno(stdout)) ? "table" : "json";
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    save_text_file(flags.out, text);
  }
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "campaign " << r.campaign << ": trials=" << r.summary.trials
      << " failures=" << r.summary.failures << " max_ratio=" << format_sig9(r.summary.max_ratio)
      << "\n";
  const bool full = r.entries.size() <= 50;
  for (const auto& e : r.entries) {
    if (!full && e.pass) continue;
    out << (e.pass ? "  pass " : "  FAIL ") << e.inequality << " trial=" << e.trial
        << " lhs=" << format_sig9(e.lhs) << " rhs=" << format_sig9(e.rhs)
        << " ratio=" << format_sig9(e.ratio);
    if (!e.instance.empty()) out << "  [" << e.instance << "]";
    out << "\n";
  }
  return out.str();
}

int emit_report(const CommonFlags& flags, const VerificationReport& r) {
  const std::string fmt = effective_format(flags);
  if (fmt == "csv") {
    emit(flags, report_to_csv(r));
  } else if (fmt == "table") {
    emit(flags, report_table(r));
  } else {
    emit(flags, report_to_json(r).dump(2) + "\n");
  }
  if (r.summary.failures > 0) {
    std::cerr << "verification failures: " << r.summary.failures << "\n";
    return kFailures;
  }
  return kOk;
}

std::string vec_table(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_sig9(v[i]);
  }
  return s + ")";
}

Vec parse_vec_arg(const std::string& csv) {
  Vec v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    v.push_back(std::stod(item));
  }
  return v;
}

std::vector<double> parse_double_list(const std::string& csv) { return parse_vec_arg(csv); }

// Instance files may hold a trig polynomial ("terms"), an exponential pair
// ("C1"), or a radial cosine ("frequency"); dispatch on the fields present.
enum class FunctionKind { trig, pair, radial };

FunctionKind detect_function_kind(const ordered_json& j) {
  if (j.contains("C1")) return FunctionKind::pair;
  if (j.contains("frequency")) return FunctionKind::radial;
  if (j.contains("terms")) return FunctionKind::trig;
  throw IoError("function file: expected trig terms, an exponential pair, or a radial cosine");
}

RadialCosine radial_from_json(const ordered_json& j) {
  RadialCosine f;
  f.amplitude = j.value("amplitude", 1.0);
  f.frequency = j.at("frequency").get<double>();
  f.dim = j.value("dim", 2);
  return f;
}

int cmd_constant(const CommonFlags& flags, const std::string& k_path, const std::string& v_path) {
  const ConvexBody K = body_from_json(load_json_file(k_path));
  const ConvexBody V = body_from_json(load_json_file(v_path));
  const WitnessedConstant wc = sharp_constant(K, V);
  const std::string fmt = effective_format(flags);
  if (fmt == "table") {
    std::ostringstream out;
    out << "M(K,V)    = " << format_sig9(wc.value) << "\n"
        << "method    = " << to_string(wc.method) << (wc.lower_bound ? " (lower bound)" : "")
        << "\n"
        << "witness a = " << vec_table(wc.witness_a) << "\n"
        << "witness b = " << vec_table(wc.witness_b) << "\n";
    emit(flags, out.str());
  } else if (fmt == "csv") {
    std::ostringstream out;
    out << "value,method,lower_bound,witness_a,witness_b\n"
        << format_full(wc.value) << ',' << to_string(wc.method) << ','
        << (wc.lower_bound ? "true" : "false") << ',';
    std::string a, b;
    for (std::size_t i = 0; i < wc.witness_a.size(); ++i) {
      if (i) a += ';';
      a += format_full(wc.witness_a[i]);
    }
    for (std::size_t i = 0; i < wc.witness_b.size(); ++i) {
      if (i) b += ';';
      b += format_full(wc.witness_b[i]);
    }
    out << '"' << a << "\",\"" << b << "\"\n";
    emit(flags, out.str());
  } else {
    ordered_json j;
    j["value"] = wc.value;
    j["method"] = to_string(wc.method);
    j["lower_bound"] = wc.lower_bound;
    j["witness_a"] = vec_to_json(wc.witness_a);
    j["witness_b"] = vec_to_json(wc.witness_b);
    emit(flags, j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_polar(const CommonFlags& flags, const std::string& path) {
  const ConvexBody P = polar(body_from_json(load_json_file(path)));
  const std::string fmt = effective_format(flags);
  if (fmt == "table") {
    std::ostringstream out;
    const ordered_json j = body_to_json(P);
    out << "polar body: " << j.dump() << "\n";
    emit(flags, out.str());
  } else {
    emit(flags, body_to_json(P).dump(2) + "\n");
  }
  return kOk;
}

int cmd_norm(const CommonFlags& flags, const std::string& path) {
  const ordered_json j = load_json_file(path);
  double value = 0.0;
  Vec argmax;
  if (detect_function_kind(j) == FunctionKind::pair) {
    const ExpPair f = exp_pair_from_json(j);
    value = sup_norm_exp_pair(f);
  } else {
    const TrigPolynomial f = trig_from_json(j);
    const SupNormEstimate est = sup_norm(f, flags.resolution);
    value = est.value;
    argmax = est.argmax;
  }
  const std::string fmt = effective_format(flags);
  if (fmt == "table") {
    std::ostringstream out;
    out << "sup norm = " << format_sig9(value) << "\n";
    if (!argmax.empty()) out << "argmax   = " << vec_table(argmax) << "\n";
    emit(flags, out.str());
  } else {
    ordered_json r;
    r["value"] = value;
    r["argmax"] = vec_to_json(argmax);
    emit(flags, r.dump(2) + "\n");
  }
  return kOk;
}

int cmd_bernstein(const CommonFlags& flags, const std::string& f_path, const std::string& k_path,
                  const std::string& v_path) {
  const ordered_json jf = load_json_file(f_path);
  const ConvexBody K = body_from_json(load_json_file(k_path));
  const ConvexBody V = body_from_json(load_json_file(v_path));
  Rng rng(flags.seed);
  std::vector<Vec> pts;
  for (int i = 0; i < flags.points; ++i) pts.push_back(random_torus_point(rng, K.dim()));
  BernsteinOptions opts;
  opts.resolution = flags.resolution;
  VerificationReport r;
  if (detect_function_kind(jf) == FunctionKind::pair) {
    r = check_bernstein(exp_pair_from_json(jf), K, V, pts, opts);
  } else {
    r = check_bernstein(trig_from_json(jf), K, V, pts, opts);
  }
  return emit_report(flags, r);
}

int cmd_markov(const CommonFlags& flags, const std::string& p_path, const std::string& k_path,
               const std::string& v_path) {
  const MultiPolynomial P = poly_from_json(load_json_file(p_path));
  const ConvexBody K = body_from_json(load_json_file(k_path));
  const ConvexBody V = body_from_json(load_json_file(v_path));
  Rng rng(flags.seed);
  std::vector<Vec> pts;
  for (int i = 0; i < flags.points; ++i) pts.push_back(random_point_in_body(rng, V));
  MarkovOptions opts;
  opts.resolution = flags.resolution;
  return emit_report(flags, markov_check(P, K, V, pts, opts));
}

int cmd_weighted_markov(const CommonFlags& flags, const std::string& q_path,
                        const std::string& k_path, const std::string& w_path) {
  const MultiPolynomial Q = poly_from_json(load_json_file(q_path));
  const ConvexBody K = body_from_json(load_json_file(k_path));
  const WeightedBody W = weighted_body_from_json(load_json_file(w_path));
  Rng rng(flags.seed);
  std::vector<Vec> pts;
  for (int i = 0; i < flags.points; ++i) {
    Vec x = random_point_in_body(rng, W.base());
    for (auto& c : x) c = c * c;
    pts.push_back(std::move(x));
  }
  MarkovOptions opts;
  opts.resolution = flags.resolution;
  return emit_report(flags, weighted_markov_check(Q, K, W, pts, opts));
}

int cmd_asymptotic(const CommonFlags& flags, const std::string& k_path, const std::string& v_path,
                   const std::string& sigmas_csv) {
  const ConvexBody K = body_from_json(load_json_file(k_path));
  const ConvexBody V = body_from_json(load_json_file(v_path));
  const std::vector<double> sigmas = parse_double_list(sigmas_csv);
  const auto rows = asymptotic_sharpness(K, V, sigmas);
  const double M = sharp_constant(K, V).value;
  const std::string fmt = effective_format(flags);
  if (fmt == "table") {
    std::ostringstream out;
    out << "M(K,V) = " << format_sig9(M) << "\n";
    out << "sigma      best-k gauge       sigma*M - gauge\n";
    for (const auto& row : rows) {
      out << format_sig9(row.sigma) << "  (";
      for (std::size_t i = 0; i < row.k0.size(); ++i) {
        if (i) out << ",";
        out << row.k0[i];
      }
      out << ")  " << format_sig9(row.ratio) << "  " << format_sig9(row.defect);
      if (row.degenerate) out << "  (no nonzero lattice point)";
      out << "\n";
    }
    emit(flags, out.str());
  } else if (fmt == "csv") {
    std::ostringstream out;
    out << "sigma,k0,gauge,defect,degenerate\n";
    for (const auto& row : rows) {
      std::string k0;
      for (std::size_t i = 0; i < row.k0.size(); ++i) {
        if (i) k0 += ';';
        k0 += std::to_string(row.k0[i]);
      }
      out << format_full(row.sigma) << ",\"" << k0 << "\"," << format_full(row.ratio) << ','
          << format_full(row.defect) << ',' << (row.degenerate ? "true" : "false") << "\n";
    }
    emit(flags, out.str());
  } else {
    ordered_json jr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json je;
      je["sigma"] = row.sigma;
      je["k0"] = row.k0;
      je["gauge"] = row.ratio;
      je["defect"] = row.defect;
      je["degenerate"] = row.degenerate;
      jr.push_back(std::move(je));
    }
    ordered_json j;
    j["value"] = M;
    j["rows"] = std::move(jr);
    emit(flags, j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_extremal_line(const CommonFlags& flags, const std::string& f_path, const std::string& a_csv,
                      const std::string& x0_csv, const std::string& y0_csv, double tau_min,
                      double tau_max, int tau_count) {
  const ordered_json jf = load_json_file(f_path);
  const FunctionKind kind = detect_function_kind(jf);

  LineFunction f;
  Vec a = parse_vec_arg(a_csv);
  Vec x0 = parse_vec_arg(x0_csv);
  Vec y0 = parse_vec_arg(y0_csv);
  if (kind == FunctionKind::radial) {
    const RadialCosine rc = radial_from_json(jf);
    f = as_line_function(rc);
    const double pi = std::acos(-1.0);
    if (a.empty()) a = axis_vector(rc.dim, 0, rc.frequency);
    if (x0.empty()) x0 = axis_vector(rc.dim, 0, pi / (2.0 * rc.frequency));
    if (y0.empty()) y0 = axis_vector(rc.dim, 0);
  } else if (kind == FunctionKind::pair) {
    const ExpPair ep = exp_pair_from_json(jf);
    f = as_line_function(ep);
    if (a.empty()) a = ep.a;
    if (x0.empty()) x0 = Vec(ep.a.size(), 0.0);
    if (y0.empty()) y0 = ep.a;
  } else {
    const TrigPolynomial tp = trig_from_json(jf);
    f = as_line_function(tp);
    if (a.empty() || x0.empty() || y0.empty()) {
      throw IoError("extremal-line: trig input requires --a, --x0, and --y0");
    }
  }
  const std::vector<double> taus = uniform_taus(tau_min, tau_max, tau_count);
  return emit_report(flags, extremal_line_check(f, a, y0, x0, taus));
}

int cmd_campaign(const CommonFlags& flags, const std::string& spec_path, bool seed_set,
                 bool trials_set) {
  CampaignSpec spec = campaign_from_json(load_json_file(spec_path));
  if (seed_set) spec.seed = flags.seed;
  if (trials_set && flags.trials >= 0) spec.trials = flags.trials;
  return emit_report(flags, run_campaign(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp Bernstein/Markov constants for symmetric convex bodies"};
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--format", flags.format, "output format: json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", flags.out, "write output to a file instead of stdout");
  auto* seed_opt = app.add_option("--seed", flags.seed, "seed for sampled evaluation points");
  app.add_option("--resolution", flags.resolution, "grid resolution for sup norms");
  auto* trials_opt = app.add_option("--trials", flags.trials, "trial count override (campaign)");
  app.add_option("--points", flags.points, "number of sampled evaluation points");

  std::string path1, path2, path3;
  std::string a_csv, x0_csv, y0_csv;
  std::string sigmas_csv = "4,8,16,32";
  double tau_min = -10.0, tau_max = 10.0;
  int tau_count = 201;

  auto* c_constant = app.add_subcommand("constant", "sharp constant M(K,V) with witnesses");
  c_constant->add_option("K", path1, "gauge body JSON")->required();
  c_constant->add_option("V", path2, "domain body JSON")->required();

  auto* c_polar = app.add_subcommand("polar", "polar body descriptor");
  c_polar->add_option("body", path1, "body JSON")->required();

  auto* c_norm = app.add_subcommand("norm", "sup norm of a trig polynomial or pair");
  c_norm->add_option("f", path1, "function JSON")->required();

  auto* c_bern = app.add_subcommand("bernstein", "gradient inequality checks at sampled points");
  c_bern->add_option("f", path1, "function JSON")->required();
  c_bern->add_option("K", path2, "gauge body JSON")->required();
  c_bern->add_option("V", path3, "spectrum body JSON")->required();

  auto* c_markov = app.add_subcommand("markov", "degree-squared bounds for a polynomial on V");
  c_markov->add_option("P", path1, "polynomial JSON")->required();
  c_markov->add_option("K", path2, "gauge body JSON")->required();
  c_markov->add_option("V", path3, "domain body JSON")->required();

  auto* c_wm = app.add_subcommand("weighted-markov", "weighted gradient bounds on a squared body");
  c_wm->add_option("Q", path1, "polynomial JSON")->required();
  c_wm->add_option("K", path2, "gauge body JSON")->required();
  c_wm->add_option("W", path3, "weighted body JSON")->required();

  auto* c_asym = app.add_subcommand("asymptotic", "lattice sharpness table over sigma");
  c_asym->add_option("K", path1, "gauge body JSON")->required();
  c_asym->add_option("V", path2, "spectrum body JSON")->required();
  c_asym->add_option("--sigmas", sigmas_csv, "comma-separated sigma values");

  auto* c_line = app.add_subcommand("extremal-line", "restriction identities along a line");
  c_line->add_option("f", path1, "function JSON (trig, pair, or radial)")->required();
  c_line->add_option("--a", a_csv, "frequency direction, comma-separated");
  c_line->add_option("--x0", x0_csv, "line base point, comma-separated");
  c_line->add_option("--y0", y0_csv, "line direction, comma-separated");
  c_line->add_option("--tau-min", tau_min, "first parameter value");
  c_line->add_option("--tau-max", tau_max, "last parameter value");
  c_line->add_option("--tau-count", tau_count, "number of parameter values");

  auto* c_camp = app.add_subcommand("campaign", "seeded verification campaign from a descriptor");
  c_camp->add_option("spec", path1, "campaign descriptor JSON")->required();

  for (CLI::App* sub : {c_constant, c_polar, c_norm, c_bern, c_markov, c_wm, c_asym, c_line, c_camp}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (c_constant->parsed()) return cmd_constant(flags, path1, path2);
    if (c_polar->parsed()) return cmd_polar(flags, path1);
    if (c_norm->parsed()) return cmd_norm(flags, path1);
    if (c_bern->parsed()) return cmd_bernstein(flags, path1, path2, path3);
    if (c_markov->parsed()) return cmd_markov(flags, path1, path2, path3);
    if (c_wm->parsed()) return cmd_weighted_markov(flags, path1, path2, path3);
    if (c_asym->parsed()) return cmd_asymptotic(flags, path1, path2, sigmas_csv);
    if (c_line->parsed()) {
      return cmd_extremal_line(flags, path1, a_csv, x0_csv, y0_csv, tau_min, tau_max, tau_count);
    }
    if (c_camp->parsed()) {
      return cmd_campaign(flags, path1, seed_opt->count() > 0, trials_opt->count() > 0);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
