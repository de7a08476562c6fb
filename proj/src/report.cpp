#include "specreg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace specreg::report {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json rounded(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format_number(v).c_str(), nullptr);
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(rounded(e));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = rounded(v);
    return out;
  }
  return j;
}

std::string emit_json(const json& j) { return rounded(j).dump(2) + "\n"; }

namespace {

json header(const char* kind) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

json certificates(const std::vector<Certificate>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Certificate& c) {
  json j;
  j["name"] = c.name;
  j["relation"] = to_string(c.relation);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack;
  j["premise_met"] = c.premise_met;
  j["holds"] = c.holds;
  return j;
}

json to_json(const DecomposeStep& s) {
  json j;
  j["index"] = s.index;
  j["n_before"] = s.n_before;
  j["m_before"] = s.m_before;
  j["lambda_before"] = s.lambda_before;
  j["residual_before"] = s.residual_before;
  j["slack"] = s.slack;
  j["p"] = s.p;
  j["eta"] = s.eta;
  j["mass_b1"] = s.mass_b1;
  j["b1_size"] = s.b1_size;
  j["type"] = to_string(s.type);
  j["case"] = to_string(s.case_tag);
  j["f"] = s.f;
  j["chosen_j"] = s.chosen_j;
  j["alpha_j"] = s.alpha_j;
  j["beta_j"] = s.beta_j;
  j["gamma_j"] = s.gamma_j;
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  j["gamma"] = s.gamma;
  j["witness_ratio"] = s.witness_ratio;
  j["witness_threshold"] = s.witness_threshold;
  j["forced_witness"] = s.forced_witness;
  j["n_extracted"] = s.n_extracted;
  j["n_after"] = s.n_after;
  j["m_after"] = s.m_after;
  j["lambda_after"] = optional_json(s.lambda_after);
  j["residual_after"] = optional_json(s.residual_after);
  j["applied"] = s.applied;
  j["certificates"] = certificates(s.certificates);
  j["kept"] = s.kept;
  return j;
}

json to_json(const DecomposeTrace& t) {
  json j;
  j["regime"] = to_string(t.regime);
  j["p"] = t.p;
  j["eta"] = t.eta;
  j["c"] = t.c;
  j["eps"] = t.eps;
  j["n_input"] = t.n_input;
  j["m_input"] = t.m_input;
  j["hypothesis"] = {{"lambda", t.hypothesis.lambda},
                     {"residual", t.hypothesis.residual},
                     {"threshold", t.hypothesis.threshold},
                     {"met", t.hypothesis.met}};
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  j["k"] = t.k;
  j["termination"] = to_string(t.termination);
  j["final_n"] = t.final_n;
  j["final_m"] = t.final_m;
  j["final_avg_degree"] = t.final_avg_degree;
  j["termination_bound"] = t.termination_bound;
  j["theorem_checks"] = certificates(t.theorem_checks);
  j["warnings"] = t.warnings;
  j["violations"] = t.violation_count();
  return j;
}

json to_json(const RegularityReport& r) {
  json j;
  j["n_input"] = r.n_input;
  j["m_input"] = r.m_input;
  j["hypothesis_met"] = r.hypothesis_met;
  j["n_prime"] = r.n_prime;
  j["e_prime"] = r.e_prime;
  j["delta_max"] = r.delta_max;
  j["delta_min"] = r.delta_min;
  j["K_achieved"] = r.K_achieved;
  j["c_prime_achieved"] = r.c_prime_achieved;
  j["density_pass"] = r.density_pass;
  j["target_met"] = r.target_met;
  j["collapsed"] = r.collapsed;
  j["rounds"] = r.rounds;
  json path = json::array();
  for (const auto& [i, k] : r.bucket_path) path.push_back(json::array({i, k}));
  j["bucket_path"] = std::move(path);
  j["checks"] = certificates(r.checks);
  j["violations"] = r.violation_count();
  return j;
}

json to_json(const AuditRecord& a) {
  json j;
  j["n"] = a.n;
  j["m"] = a.m;
  j["delta_min"] = a.delta_min;
  j["d_avg"] = a.d_avg;
  j["lambda"] = a.lambda;
  j["residual"] = a.residual;
  j["delta_max"] = a.delta_max;
  j["eq_tol"] = a.eq_tol;
  j["min_le_avg"] = a.min_le_avg;
  j["avg_le_lambda"] = a.avg_le_lambda;
  j["lambda_le_max"] = a.lambda_le_max;
  j["eq_min_avg"] = a.eq_min_avg;
  j["eq_avg_lambda"] = a.eq_avg_lambda;
  j["eq_lambda_max"] = a.eq_lambda_max;
  j["regular"] = a.regular;
  j["regularity_consistent"] = a.regularity_consistent;
  j["lambda_ge_density"] = a.lambda_ge_density;
  j["eps"] = optional_json(a.eps);
  j["lambda_ge_half_threshold"] = optional_json(a.lambda_ge_half_threshold);
  j["violations"] = a.violation_count();
  return j;
}

json to_json(const Theorem15Check& t) {
  json j;
  j["exponent"] = t.exponent;
  j["n_floor"] = t.n_floor;
  j["order_passed"] = t.order_passed;
  j["c_prime"] = t.c_prime;
  j["density_passed"] = t.density_passed;
  j["enforced"] = t.enforced;
  return j;
}

json subgraph_json(const Subgraph& s) {
  json j;
  j["n"] = s.graph.order();
  j["m"] = s.graph.size();
  j["vertices"] = s.host_ids;
  return j;
}

json spectral_report(const Graph& g, const EigenPair& pair) {
  json j = header("spectral");
  j["n"] = g.order();
  j["m"] = g.size();
  j["lambda"] = pair.lambda;
  j["residual"] = pair.residual;
  j["iterations"] = pair.iterations;
  j["component_size"] = pair.component.size();
  j["component_min_vertex"] = pair.component.empty() ? json(nullptr) : json(pair.component[0]);
  return j;
}

json audit_report(const AuditRecord& a) {
  json j = header("audit");
  j.update(to_json(a));
  return j;
}

json decompose_report(const DecomposeResult& r) {
  json j = header("decompose");
  j["trace"] = to_json(r.trace);
  j["output"] = subgraph_json(r.output);
  return j;
}

json regularize_report(const RegularizeResult& r) {
  json j = header("regularize");
  j["report"] = to_json(r.report);
  j["output"] = subgraph_json(r.output);
  return j;
}

json pipeline_report(const PipelineResult& r) {
  const PipelineReport& p = r.report;
  json j = header("pipeline");
  j["input"] = {{"n", p.n}, {"m", p.m}, {"lambda", p.lambda}, {"residual", p.residual}};
  j["regime"] = to_string(p.regime);
  j["decompose"] = to_json(p.decompose);
  j["regularity"] = to_json(p.regularity);
  j["theorem_1_5_check"] = to_json(p.theorem_1_5);
  j["violations"] = p.violation_count();
  j["output"] = subgraph_json(r.output);
  return j;
}

json verify_report(const Graph& g, double K, const RegularityWitness& w) {
  json j = header("verify");
  j["n"] = g.order();
  j["m"] = g.size();
  j["K"] = K;
  j["holds"] = w.holds;
  j["argmax"] = optional_json(w.argmax);
  j["argmin"] = optional_json(w.argmin);
  j["delta_max"] = w.argmax ? json(g.degree(*w.argmax)) : json(nullptr);
  j["delta_min"] = w.argmin ? json(g.degree(*w.argmin)) : json(nullptr);
  return j;
}

const char* const kDecomposeColumns =
    "index,n_before,m_before,lambda_before,residual_before,slack,p,eta,mass_b1,b1_size,type,case,f,chosen_j,"
    "alpha_j,beta_j,gamma_j,witness_ratio,witness_threshold,forced_witness,n_extracted,n_after,m_after,"
    "lambda_after,applied,violations";

std::string decompose_csv(const DecomposeTrace& t) {
  std::ostringstream out;
  out << kDecomposeColumns << '\n';
  for (const auto& s : t.steps) {
    const auto violations = std::count_if(s.certificates.begin(), s.certificates.end(),
                                          [](const Certificate& c) { return c.violated(); });
    out << s.index << ',' << s.n_before << ',' << s.m_before << ',' << format_number(s.lambda_before) << ','
        << format_number(s.residual_before) << ',' << format_number(s.slack) << ',' << s.p << ','
        << format_number(s.eta) << ',' << format_number(s.mass_b1) << ',' << s.b1_size << ',' << to_string(s.type)
        << ',' << to_string(s.case_tag) << ',' << format_number(s.f) << ',' << s.chosen_j << ','
        << format_number(s.alpha_j) << ',' << format_number(s.beta_j) << ',' << format_number(s.gamma_j) << ','
        << format_number(s.witness_ratio) << ',' << format_number(s.witness_threshold) << ','
        << (s.forced_witness ? 1 : 0) << ',' << s.n_extracted << ',' << s.n_after << ',' << s.m_after << ','
        << (s.lambda_after ? format_number(*s.lambda_after) : std::string()) << ',' << (s.applied ? 1 : 0) << ','
        << violations << '\n';
  }
  return out.str();
}

std::string flat_csv(const json& j) {
  std::string head;
  std::string row;
  for (const auto& [k, v] : j.items()) {
    std::string cell;
    if (v.is_number_float()) {
      cell = format_number(v.get<double>());
    } else if (v.is_boolean()) {
      cell = v.get<bool>() ? "1" : "0";
    } else if (v.is_number() || v.is_string()) {
      cell = v.is_string() ? v.get<std::string>() : v.dump();
    } else if (v.is_null()) {
      cell = "";
    } else {
      continue;
    }
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += k;
    row += cell;
  }
  return head + "\n" + row + "\n";
}

}  // namespace specreg::report
