#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sharplab/campaign.hpp"
#include "sharplab/convex_body.hpp"
#include "sharplab/markov.hpp"
#include "sharplab/poly.hpp"
#include "sharplab/report.hpp"
#include "sharplab/trig.hpp"

namespace sharplab {

using ordered_json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to the same double.
inline std::string format_full(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  return ordered_json::parse(in);  // parse_error carries line/column
}

inline void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
}

// ---- vectors and complex scalars ----

inline ordered_json vec_to_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (double c : v) a.push_back(c);
  return a;
}

inline Vec vec_from_json(const ordered_json& j) {
  if (!j.is_array()) throw IoError("expected a numeric array");
  Vec v;
  for (const auto& c : j) v.push_back(c.get<double>());
  return v;
}

inline ordered_json cplx_to_json(Cplx c) { return ordered_json{{"re", c.real()}, {"im", c.imag()}}; }

inline Cplx cplx_from_json(const ordered_json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  return Cplx(j.value("re", 0.0), j.value("im", 0.0));
}

// ---- convex bodies ----

inline ordered_json body_to_json(const ConvexBody& b) {
  ordered_json j;
  if (b.is_lp()) {
    j["type"] = "lp";
    if (b.lp().exponent.is_inf()) {
      j["mu"] = "inf";
    } else {
      j["mu"] = b.lp().exponent.value();
    }
    j["dim"] = b.dim();
    j["scale"] = b.lp().scale;
  } else if (b.is_hrep()) {
    j["type"] = "hrep";
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.h().rows) rows.push_back(vec_to_json(r));
    j["rows"] = std::move(rows);
  } else {
    j["type"] = "vrep";
    ordered_json verts = ordered_json::array();
    for (const auto& v : b.v().vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = std::move(verts);
  }
  return j;
}

inline ConvexBody body_from_json(const ordered_json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "lp") {
    const auto& mu = j.at("mu");
    LpExponent e = LpExponent::inf();
    if (mu.is_string()) {
      if (mu.get<std::string>() != "inf") throw IoError("body: mu must be a number or \"inf\"");
    } else {
      e = LpExponent::finite(mu.get<double>());
    }
    return ConvexBody::lp_ball(e, j.at("dim").get<int>(), j.value("scale", 1.0));
  }
  if (type == "hrep" || type == "vrep") {
    std::vector<Vec> gens;
    for (const auto& g : j.at(type == "hrep" ? "rows" : "vertices")) gens.push_back(vec_from_json(g));
    return type == "hrep" ? ConvexBody::hrep(std::move(gens)) : ConvexBody::vrep(std::move(gens));
  }
  throw IoError("body: unknown type '" + type + "'");
}

/// Weighted-body descriptor: {"base": <body descriptor>} or {"base": "path"}.
inline WeightedBody weighted_body_from_json(const ordered_json& j) {
  const auto& base = j.at("base");
  if (base.is_string()) return WeightedBody::make(body_from_json(load_json_file(base.get<std::string>())));
  return WeightedBody::make(body_from_json(base));
}

// ---- trig polynomials and exponential pairs ----

inline ordered_json trig_to_json(const TrigPolynomial& f) {
  ordered_json j;
  j["dim"] = f.dim();
  j["spectrum"] = body_to_json(f.spectrum());
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : f.terms()) {
    ordered_json t;
    t["k"] = k;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline TrigPolynomial trig_from_json(const ordered_json& j) {
  const int dim = j.at("dim").get<int>();
  ConvexBody spectrum = body_from_json(j.at("spectrum"));
  TrigPolynomial::TermMap terms;
  for (const auto& t : j.at("terms")) {
    std::vector<int> k = t.at("k").get<std::vector<int>>();
    terms[std::move(k)] += Cplx(t.value("re", 0.0), t.value("im", 0.0));
  }
  return TrigPolynomial::make(dim, std::move(terms), std::move(spectrum));
}

inline ordered_json exp_pair_to_json(const ExpPair& f) {
  ordered_json j;
  j["dim"] = static_cast<int>(f.a.size());
  j["a"] = vec_to_json(f.a);
  j["C1"] = cplx_to_json(f.c1);
  j["C2"] = cplx_to_json(f.c2);
  return j;
}

inline ExpPair exp_pair_from_json(const ordered_json& j) {
  ExpPair f;
  f.a = vec_from_json(j.at("a"));
  f.c1 = cplx_from_json(j.at("C1"));
  f.c2 = cplx_from_json(j.at("C2"));
  if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(f.a.size())) {
    throw IoError("exp pair: dim does not match length of a");
  }
  return f;
}

// ---- algebraic polynomials ----

inline ordered_json poly_to_json(const MultiPolynomial& P) {
  ordered_json j;
  j["dim"] = P.dim();
  ordered_json terms = ordered_json::array();
  for (const auto& [alpha, c] : P.terms()) {
    ordered_json t;
    t["alpha"] = alpha;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline MultiPolynomial poly_from_json(const ordered_json& j) {
  const int dim = j.at("dim").get<int>();
  MultiPolynomial::TermMap terms;
  for (const auto& t : j.at("terms")) {
    std::vector<int> alpha = t.at("alpha").get<std::vector<int>>();
    terms[std::move(alpha)] += Cplx(t.value("re", 0.0), t.value("im", 0.0));
  }
  return MultiPolynomial::make(dim, std::move(terms));
}

// ---- campaign descriptors ----

inline CampaignSpec campaign_from_json(const ordered_json& j) {
  CampaignSpec s;
  s.id = j.value("id", s.id);
  if (j.contains("inequalities")) {
    s.inequalities = j.at("inequalities").get<std::vector<std::string>>();
  }
  s.dim = j.value("dim", s.dim);
  s.bodies = j.value("bodies", s.bodies);
  s.sigma = j.value("sigma", s.sigma);
  s.degree = j.value("degree", s.degree);
  s.max_terms = j.value("max_terms", s.max_terms);
  s.trials = j.value("trials", s.trials);
  s.points = j.value("points", s.points);
  s.seed = j.value("seed", s.seed);
  s.resolution = j.value("resolution", s.resolution);
  s.allowance = j.value("allowance", s.allowance);
  s.coeff = j.value("coeff", s.coeff);
  s.threads = j.value("threads", s.threads);
  s.validate();
  return s;
}

inline ordered_json campaign_to_json(const CampaignSpec& s) {
  ordered_json j;
  j["id"] = s.id;
  j["inequalities"] = s.inequalities;
  j["dim"] = s.dim;
  j["bodies"] = s.bodies;
  j["sigma"] = s.sigma;
  j["degree"] = s.degree;
  j["max_terms"] = s.max_terms;
  j["trials"] = s.trials;
  j["points"] = s.points;
  j["seed"] = s.seed;
  j["resolution"] = s.resolution;
  j["allowance"] = s.allowance;
  j["coeff"] = s.coeff;
  j["threads"] = s.threads;
  return j;
}

// ---- verification reports ----

inline ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["campaign"] = r.campaign;
  ordered_json summary;
  summary["trials"] = r.summary.trials;
  summary["failures"] = r.summary.failures;
  summary["max_ratio"] = r.summary.max_ratio;
  j["summary"] = std::move(summary);
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json je;
    je["trial"] = e.trial;
    je["instance"] = e.instance;
    je["inequality"] = e.inequality;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    // Infinite ratios (vacuous entries with a nonzero lhs) have no JSON
    // number representation; store them as null explicitly.
    if (std::isfinite(e.ratio)) {
      je["ratio"] = e.ratio;
    } else {
      je["ratio"] = nullptr;
    }
    je["witness"] = vec_to_json(e.witness);
    je["pass"] = e.pass;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline VerificationReport report_from_json(const ordered_json& j) {
  VerificationReport r;
  r.campaign = j.value("campaign", "");
  for (const auto& je : j.at("entries")) {
    ReportEntry e;
    e.trial = je.value("trial", 0);
    e.instance = je.value("instance", "");
    e.inequality = je.value("inequality", "");
    e.lhs = je.value("lhs", 0.0);
    e.rhs = je.value("rhs", 0.0);
    e.ratio = je.at("ratio").is_null() ? std::numeric_limits<double>::infinity()
                                       : je.value("ratio", 0.0);
    e.witness = vec_from_json(je.at("witness"));
    e.pass = je.value("pass", false);
    r.entries.push_back(std::move(e));
  }
  const auto& s = j.at("summary");
  r.finalize(s.value("trials", r.distinct_trials()));
  return r;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace detail

inline std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "campaign,trial,instance,inequality,lhs,rhs,ratio,pass,witness\n";
  for (const auto& e : r.entries) {
    std::string witness;
    for (std::size_t i = 0; i < e.witness.size(); ++i) {
      if (i) witness += ';';
      witness += format_full(e.witness[i]);
    }
    out << detail::csv_field(r.campaign) << ',' << e.trial << ','
        << detail::csv_field(e.instance) << ',' << detail::csv_field(e.inequality) << ','
        << format_full(e.lhs) << ',' << format_full(e.rhs) << ',' << format_full(e.ratio) << ','
        << (e.pass ? "true" : "false") << ',' << detail::csv_field(witness) << '\n';
  }
  return out.str();
}

}  // namespace sharplab
