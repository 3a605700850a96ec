#include "gmflow/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmflow/bb.hpp"
#include "gmflow/chains.hpp"
#include "gmflow/distraction.hpp"
#include "gmflow/parse.hpp"
#include "gmflow/torus.hpp"

namespace gmflow::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Ideal parse_ideal(const std::string& gens, std::size_t nvars) {
  if (nvars == 0) throw Error("input: --nvars is required and must be positive");
  std::vector<Polynomial> ps;
  for (const auto& g : split(gens, ',')) ps.push_back(parse_polynomial(g, nvars));
  if (ps.empty()) throw Error("input: no generators given");
  return Ideal(nvars, std::move(ps));
}

WeightVector parse_weights(const std::string& text) {
  WeightVector w;
  for (const auto& part : split(text, ',')) {
    std::string trimmed;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) throw Error("input: empty weight entry");
    try {
      w.w.emplace_back(trimmed);
    } catch (const std::invalid_argument&) {
      throw Error("input: bad weight \"" + part + "\"");
    }
  }
  if (w.w.empty()) throw Error("input: --weights is required");
  return w;
}

ActionWeights parse_action_weights(const std::string& text) {
  ActionWeights a;
  for (const auto& x : parse_weights(text).w) {
    if (!x.fits_slong_p()) throw Error("input: projective weight too large");
    a.a.push_back(x.get_si());
  }
  return a;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) {
    std::string trimmed;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    out.push_back(Rational::from_string(trimmed));
  }
  return out;
}

std::string ideal_str(const std::vector<Polynomial>& gens) {
  // Descending leading monomials, the order ideals are written in.
  std::vector<Polynomial> sorted = gens;
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero();
    return ord.greater(a.leading_term(ord).mono, b.leading_term(ord).mono);
  });
  std::string s;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ", ";
    s += to_string(sorted[i]);
  }
  return s;
}

std::string reduced_ideal_str(const Ideal& ideal) {
  return ideal_str(groebner_basis(ideal, MonomialOrder::grevlex()).elements());
}

nlohmann::json ideal_json(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> sorted = gens;
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero();
    return ord.greater(a.leading_term(ord).mono, b.leading_term(ord).mono);
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : sorted) arr.push_back(to_string(g));
  return arr;
}

std::string points_str(const PointConfig& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t j = 0; j < pts[i].size(); ++j) {
      if (j) s += ",";
      s += pts[i][j].str();
    }
    s += ")";
  }
  return s;
}

// Sink that routes the final document to --out or the given stream.
struct Emitter {
  const JobSpec& job;
  std::ostream& fallback;
  std::vector<std::string> lines;
  nlohmann::json result = nlohmann::json::object();

  void line(const std::string& s) { lines.push_back(s); }

  void flush() {
    std::ofstream file;
    std::ostream* os = &fallback;
    if (!job.out_path.empty()) {
      file.open(job.out_path);
      if (!file) throw Error("output: cannot open " + job.out_path);
      os = &file;
    }
    if (job.format == "structured") {
      nlohmann::json doc;
      doc["command"] = job.subcommand;
      doc["input"] = jobspec_to_json(job);
      doc["result"] = result;
      *os << doc.dump(2) << "\n";
    } else {
      *os << "gmflow " << job.subcommand << "\n";
      *os << "input: " << jobspec_to_json(job).dump() << "\n";
      for (const auto& s : lines) *os << s << "\n";
    }
  }
};

int cmd_limit(const JobSpec& job, Emitter& em) {
  const Subscheme0D S = Subscheme0D::from_ideal(parse_ideal(job.gens, job.nvars));
  const WeightVector w = parse_weights(job.weights);
  const Subscheme0D L = limit_subscheme(S, w);
  em.line("limit ideal: " + ideal_str(L.grevlex_basis().elements()));
  em.line("degree: " + std::to_string(L.degree()));
  em.result["limit"] = ideal_json(L.grevlex_basis().elements());
  em.result["degree"] = L.degree();
  return 0;
}

int cmd_monomialize(const JobSpec& job, Emitter& em) {
  const Subscheme0D S = Subscheme0D::from_ideal(parse_ideal(job.gens, job.nvars));
  const Int cap = job.max_c.empty() ? kDefaultMonomializationCap : Int(job.max_c);
  const Monomialization m = monomial_degeneration(S, cap);
  em.line("c: " + m.c.get_str());
  std::string ws;
  for (std::size_t j = 0; j < m.weights.size(); ++j)
    ws += (j ? "," : "") + m.weights.w[j].get_str();
  em.line("weights: " + ws);
  em.line("monomial ideal: " + ideal_str(m.limit.grevlex_basis().elements()));
  em.line("degree: " + std::to_string(m.limit.degree()));
  em.result["c"] = m.c.get_str();
  em.result["monomial_ideal"] = ideal_json(m.limit.grevlex_basis().elements());
  em.result["degree"] = m.limit.degree();
  return 0;
}

int cmd_origin_test(const JobSpec& job, Emitter& em) {
  const Subscheme0D S = Subscheme0D::from_ideal(parse_ideal(job.gens, job.nvars));
  const bool at_origin = is_supported_at_origin(S);
  em.line(std::string("supported at origin: ") + (at_origin ? "true" : "false"));
  em.result["supported_at_origin"] = at_origin;
  return 0;
}

int cmd_trajectory(const JobSpec& job, Emitter& em) {
  std::vector<TruncatedSeries> coords;
  for (const auto& c : split(job.coords, ';')) coords.push_back(TruncatedSeries::parse(c, job.trunc));
  const SeriesPoint z(std::move(coords));
  const ActionWeights a = parse_action_weights(job.weights);
  const BrokenTrajectory traj = broken_trajectory(z, a);

  em.line("fixed points: " + std::to_string(traj.fixed_points.size()));
  nlohmann::json fixed = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.fixed_points.size(); ++i) {
    em.line("  x" + std::to_string(i) + " = " + traj.fixed_points[i].str());
    fixed.push_back(traj.fixed_points[i].str());
  }
  em.result["fixed_points"] = std::move(fixed);
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.orbit_reps.size(); ++i) {
    std::string support;
    for (std::size_t k : traj.edge_supports[i])
      support += (support.empty() ? "" : ",") + std::to_string(k);
    em.line("  y" + std::to_string(i + 1) + " = " + traj.orbit_reps[i].str() +
            "  critical b = " + traj.critical_slopes[i].str() + "  support {" + support +
            "}  orbit degree " + std::to_string(traj.orbit_degrees[i]));
    nlohmann::json o;
    o["representative"] = traj.orbit_reps[i].str();
    o["critical_b"] = traj.critical_slopes[i].str();
    o["support"] = traj.edge_supports[i];
    o["degree"] = traj.orbit_degrees[i];
    orbits.push_back(std::move(o));
  }
  em.result["orbits"] = std::move(orbits);

  nlohmann::json queries = nlohmann::json::array();
  for (const auto& btext : job.at) {
    const Rational b = Rational::from_string(btext);
    const ProjectivePointQ p = limit_point(z, a, b);
    em.line("limit at b=" + b.str() + ": " + p.str());
    nlohmann::json q;
    q["b"] = b.str();
    q["limit"] = p.str();
    queries.push_back(std::move(q));
  }
  if (!queries.empty()) em.result["queries"] = std::move(queries);
  return 0;
}

int cmd_distract(const JobSpec& job, Emitter& em) {
  const MonomialIdeal I = MonomialIdeal::from_ideal(parse_ideal(job.gens, job.nvars));
  const DistractionParams params = job.params.empty()
                                       ? DistractionParams::standard(I.max_exponent())
                                       : DistractionParams{parse_rationals(job.params)};
  const Ideal J = distraction_ideal(I, params);
  em.line("distraction ideal: " + ideal_str(J.generators));
  em.result["distraction_ideal"] = ideal_json(J.generators);
  const auto points = standard_points(I, params);
  em.line("points: " + points_str(points));
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : p) row.push_back(x.str());
    pj.push_back(std::move(row));
  }
  em.result["points"] = std::move(pj);

  const SmoothingReport report = verify_smoothing(I, params);
  for (const auto& c : report.checks) em.line("check: " + c);
  for (const auto& f : report.failures) em.line("FAILED: " + f);
  em.line(report.ok ? "smoothing verified" : "smoothing verification FAILED");
  em.result["checks"] = report.checks;
  em.result["failures"] = report.failures;
  em.result["verified"] = report.ok;
  return report.ok ? 0 : 1;
}

int cmd_chain(const JobSpec& job, Emitter& em) {
  const Subscheme0D S1 = Subscheme0D::from_ideal(parse_ideal(job.gens, job.nvars));
  const Subscheme0D S2 = Subscheme0D::from_ideal(parse_ideal(job.gens2, job.nvars));
  const ChainCertificate cert = connect(S1, S2);
  const nlohmann::json doc = certificate_to_json(cert);
  if (!job.cert_path.empty()) {
    std::ofstream file(job.cert_path);
    if (!file) throw Error("output: cannot open " + job.cert_path);
    file << doc.dump(2) << "\n";
    em.line("certificate written to " + job.cert_path);
  }
  em.line("segments: " + std::to_string(cert.segments.size()));
  em.result["certificate"] = doc;
  em.result["segments"] = cert.segments.size();
  return 0;
}

int cmd_verify(const JobSpec& job, Emitter& em) {
  if (job.cert_path.empty()) throw Error("input: --cert is required");
  std::ifstream file(job.cert_path);
  if (!file) throw Error("input: cannot open " + job.cert_path);
  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("input: bad certificate JSON: ") + e.what());
  }
  const ChainCertificate cert = certificate_from_json(doc);
  const ChainReport report = verify_chain(cert, job.samples);
  for (const auto& c : report.checks) em.line("check: " + c);
  for (const auto& f : report.failures) em.line("FAILED: " + f);
  em.line(report.ok ? "certificate verified" : "certificate verification FAILED");
  em.result["checks"] = report.checks;
  em.result["failures"] = report.failures;
  em.result["verified"] = report.ok;
  return report.ok ? 0 : 1;
}

int cmd_bb(const JobSpec& job, Emitter& em) {
  const ActionWeights a = parse_action_weights(job.weights);
  const PoincareIdentity id = poincare_identity(a);
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& z : id.components) {
    em.line("component: weight " + std::to_string(z.weight) + ", dim " + std::to_string(z.dim) +
            ", a+ " + std::to_string(z.a_plus) + ", b- " + std::to_string(z.b_minus));
    nlohmann::json c;
    c["weight"] = z.weight;
    c["dim"] = z.dim;
    c["a_plus"] = z.a_plus;
    c["b_minus"] = z.b_minus;
    comps.push_back(std::move(c));
  }
  em.line("census polynomial: " + id.lhs.str());
  em.line("[r+1]_q:           " + id.rhs.str());
  em.line(id.equal ? "identity holds" : "identity FAILED");
  em.result["components"] = std::move(comps);
  em.result["lhs"] = id.lhs.str();
  em.result["rhs"] = id.rhs.str();
  em.result["equal"] = id.equal;
  return id.equal ? 0 : 1;
}

int cmd_attractor(const JobSpec& job, Emitter& em) {
  const ActionWeights a = parse_action_weights(job.weights);
  const AttractorPair pair = attractor_pair_poincare(a, job.rcut);
  em.line("P_Y (direct route):  " + pair.p_y.str());
  em.line("P_U (duality route): " + pair.p_u.str());
  em.line(pair.equal ? "attractor pair agrees" : "attractor pair FAILED");
  em.result["p_y"] = pair.p_y.str();
  em.result["p_u"] = pair.p_u.str();
  em.result["equal"] = pair.equal;
  return pair.equal ? 0 : 1;
}

}  // namespace

nlohmann::json jobspec_to_json(const JobSpec& job) {
  nlohmann::json j;
  j["subcommand"] = job.subcommand;
  j["nvars"] = job.nvars;
  j["gens"] = job.gens;
  j["gens2"] = job.gens2;
  j["weights"] = job.weights;
  j["params"] = job.params;
  j["coords"] = job.coords;
  j["trunc"] = job.trunc;
  j["at"] = job.at;
  j["cert"] = job.cert_path;
  j["samples"] = job.samples;
  j["max_c"] = job.max_c;
  j["rcut"] = job.rcut;
  j["format"] = job.format;
  j["out"] = job.out_path;
  return j;
}

JobSpec jobspec_from_json(const nlohmann::json& j) {
  JobSpec job;
  job.subcommand = j.at("subcommand").get<std::string>();
  job.nvars = j.at("nvars").get<std::size_t>();
  job.gens = j.at("gens").get<std::string>();
  job.gens2 = j.at("gens2").get<std::string>();
  job.weights = j.at("weights").get<std::string>();
  job.params = j.at("params").get<std::string>();
  job.coords = j.at("coords").get<std::string>();
  job.trunc = j.at("trunc").get<long>();
  job.at = j.at("at").get<std::vector<std::string>>();
  job.cert_path = j.at("cert").get<std::string>();
  job.samples = j.at("samples").get<int>();
  job.max_c = j.at("max_c").get<std::string>();
  job.rcut = j.at("rcut").get<std::size_t>();
  job.format = j.at("format").get<std::string>();
  job.out_path = j.at("out").get<std::string>();
  return job;
}

int execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  Emitter em{job, out, {}, nlohmann::json::object()};
  try {
    int code;
    if (job.subcommand == "limit")
      code = cmd_limit(job, em);
    else if (job.subcommand == "monomialize")
      code = cmd_monomialize(job, em);
    else if (job.subcommand == "origin-test")
      code = cmd_origin_test(job, em);
    else if (job.subcommand == "trajectory")
      code = cmd_trajectory(job, em);
    else if (job.subcommand == "distract")
      code = cmd_distract(job, em);
    else if (job.subcommand == "chain")
      code = cmd_chain(job, em);
    else if (job.subcommand == "verify")
      code = cmd_verify(job, em);
    else if (job.subcommand == "bb")
      code = cmd_bb(job, em);
    else if (job.subcommand == "attractor")
      code = cmd_attractor(job, em);
    else
      throw Error("unknown subcommand \"" + job.subcommand + "\"");
    em.result["exit"] = code;
    em.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact torus-limit, broken-trajectory, and Hilbert-scheme "
               "connectivity computations"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", job.format, "report format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", job.out_path, "write the report to this path");
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--nvars", job.nvars, "number of variables")->required();
    sub->add_option("--gens", job.gens, "comma-separated generators")->required();
  };

  CLI::App* limit = app.add_subcommand("limit", "torus limit of a zero-dimensional subscheme");
  add_ideal(limit);
  limit->add_option("--weights", job.weights, "positive integer weights")->required();
  add_common(limit);

  CLI::App* monomialize = app.add_subcommand("monomialize", "degenerate to a monomial ideal");
  add_ideal(monomialize);
  monomialize->add_option("--max-c", job.max_c, "cap for the scale search");
  add_common(monomialize);

  CLI::App* origin = app.add_subcommand("origin-test", "is the subscheme supported at the origin");
  add_ideal(origin);
  add_common(origin);

  CLI::App* trajectory = app.add_subcommand("trajectory", "broken trajectory of a curve germ");
  trajectory->add_option("--coords", job.coords, "semicolon-separated series literals")->required();
  trajectory->add_option("--weights", job.weights, "projective action weights")->required();
  trajectory->add_option("--trunc", job.trunc, "series truncation order");
  trajectory->add_option("--at", job.at, "rational b values to query (repeatable)");
  add_common(trajectory);

  CLI::App* distract = app.add_subcommand("distract", "distraction smoothing of a monomial ideal");
  add_ideal(distract);
  distract->add_option("--params", job.params, "comma-separated distraction parameters");
  add_common(distract);

  CLI::App* chain = app.add_subcommand("chain", "connectivity certificate between two subschemes");
  add_ideal(chain);
  chain->add_option("--gens2", job.gens2, "generators of the target subscheme")->required();
  chain->add_option("--cert", job.cert_path, "write the certificate JSON here");
  chain->add_option("--max-c", job.max_c, "cap for the scale search");
  add_common(chain);

  CLI::App* verify = app.add_subcommand("verify", "verify a chain certificate");
  verify->add_option("--cert", job.cert_path, "certificate JSON path")->required();
  verify->add_option("--samples", job.samples, "interior samples per segment");
  add_common(verify);

  CLI::App* bb = app.add_subcommand("bb", "fixed-point census and Poincare identity");
  bb->add_option("--weights", job.weights, "projective action weights")->required();
  add_common(bb);

  CLI::App* attractor = app.add_subcommand("attractor", "attractor-pair Poincare polynomials");
  attractor->add_option("--weights", job.weights, "projective action weights")->required();
  attractor->add_option("--rcut", job.rcut, "number of lowest-weight components kept")->required();
  add_common(attractor);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  job.subcommand = app.get_subcommands().front()->get_name();
  return execute(job, out, err);
}

}  // namespace gmflow::cli
