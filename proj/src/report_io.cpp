#include "gbsn/report_io.hpp"

#include <sstream>

#include "json.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json matq_json(const MatQ& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matz_json(const MatZ& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json word_json(const GenWord& w) {
  ordered_json letters = ordered_json::array();
  for (auto [i, s] : w.letters) letters.push_back(ordered_json::array({i, s}));
  return ordered_json{{"letters", letters}, {"display", w.to_string()}};
}

ordered_json lattice_json(const Lattice& l) {
  return ordered_json{{"kind", "lattice"},
                      {"denominator", l.denominator().get_str()},
                      {"basis", matz_json(l.basis())}};
}

ordered_json form_json(const SymQ& s) {
  return ordered_json{{"kind", "form"}, {"matrix", matq_json(s.mat())}};
}

ordered_json diagnostics_json(const Diagnostics& d) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : d) out[k] = v;
  return out;
}

ordered_json build_report(const AnalysisReport& rep, const Config& cfg, bool include_timings) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["input"] = {{"rank", rep.rank},
                  {"vertices", rep.input_vertices},
                  {"edge_pairs", rep.input_edge_pairs}};
  doc["reduced"] = {{"vertices", rep.reduced.num_vertices()},
                    {"edge_pairs", rep.reduced.num_edge_pairs()},
                    {"ascending_hnn", rep.ascending_hnn}};

  ordered_json gens = ordered_json::array();
  for (size_t i = 0; i < rep.image.gens.size(); ++i) gens.push_back(matq_json(rep.image.gens[i]));
  doc["modular_generators"] = std::move(gens);

  doc["verdicts"] = {{"biautomatic", to_string(rep.biautomatic)},
                     {"cat0", to_string(rep.cat0.tag)},
                     {"residually_finite", to_string(rep.residually_finite)}};

  ordered_json certs = ordered_json::object();
  if (rep.finiteness.finite)
    certs["closure"] = ordered_json{{"kind", "closure"},
                                    {"order", rep.finiteness.order.get_str()}};
  if (rep.cat0.tag == VerdictTag::Yes) certs["form"] = form_json(rep.cat0.certificate->form);
  if (rep.glnz.tag == VerdictTag::Yes) certs["lattice"] = lattice_json(rep.glnz.certificate->lattice);
  if (rep.ascending_hnn) certs["ascending_hnn"] = true;
  doc["certificates"] = std::move(certs);

  ordered_json wits = ordered_json::object();
  if (!rep.finiteness.finite) {
    ordered_json w;
    w["reason"] = to_string(rep.finiteness.reason);
    w["word"] = word_json(rep.finiteness.witness);
    wits["biautomatic"] = std::move(w);
  }
  if (rep.cat0.tag == VerdictTag::No) {
    ordered_json w;
    w["reason"] = rep.cat0.no_reason;
    if (rep.cat0.witness_word) w["word"] = word_json(*rep.cat0.witness_word);
    if (rep.cat0.witness_poly) w["poly"] = rep.cat0.witness_poly->to_string();
    wits["cat0"] = std::move(w);
  }
  if (rep.residually_finite == VerdictTag::No) {
    ordered_json w;
    w["reason"] = rep.glnz.no_reason;
    if (rep.glnz.witness_word) w["word"] = word_json(*rep.glnz.witness_word);
    if (rep.glnz.witness_poly) w["poly"] = rep.glnz.witness_poly->to_string();
    wits["residually_finite"] = std::move(w);
  }
  doc["witnesses"] = std::move(wits);

  ordered_json diag = ordered_json::object();
  diag["cat0"] = diagnostics_json(rep.cat0.diagnostics);
  {
    Diagnostics d = rep.glnz.diagnostics;
    d["fixpoint_iterations"] = std::to_string(rep.glnz.iterations);
    diag["residually_finite"] = diagnostics_json(d);
  }
  diag["generator_edges"] = rep.image_edge_ids;
  diag["consistency"] = {
      {"biautomatic_iff_finite", (rep.biautomatic == VerdictTag::Yes) == rep.finiteness.finite},
      {"finite_implies_cat0", !rep.finiteness.finite || rep.cat0.tag == VerdictTag::Yes},
      {"biautomatic_implies_cat0",
       rep.biautomatic != VerdictTag::Yes || rep.cat0.tag == VerdictTag::Yes}};
  diag["version"] = version();
  diag["config"] = {
      {"closure_cap",
       (cfg.decisions.closure_cap > 0 ? cfg.decisions.closure_cap : default_closure_cap(rep.rank))
           .get_str()},
      {"witness_depth", cfg.decisions.witness_depth},
      {"lattice_max_iters", cfg.decisions.lattice_max_iters},
      {"averaging_max_iters", cfg.decisions.averaging_max_iters},
      {"rational_denom_cap", cfg.decisions.rational_denom_cap.get_str()},
      {"tree_ball_cap", cfg.tree_ball_cap}};
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : rep.timings_ms) t[k] = v;
    diag["timings_ms"] = std::move(t);
  }
  doc["diagnostics"] = std::move(diag);
  return doc;
}

ordered_json build_action(const AnalysisReport& rep, const ActionData& action) {
  ordered_json doc;
  doc["form"] = matq_json(action.form.mat());
  ordered_json conj = ordered_json::array();
  for (const auto& row : action.conjugator) {
    ordered_json r = ordered_json::array();
    for (double x : row) r.push_back(x);
    conj.push_back(std::move(r));
  }
  doc["conjugator"] = std::move(conj);
  doc["orthogonality_residual"] = action.orthogonality_residual;
  ordered_json degs = ordered_json::object();
  for (const auto& [name, deg] : action.tree_degrees) degs[name] = deg.get_str();
  doc["tree_degrees"] = std::move(degs);

  ordered_json delta = ordered_json::object();
  ordered_json verts = ordered_json::object();
  for (int v = 0; v < rep.reduced.num_vertices(); ++v) {
    ordered_json cols = ordered_json::array();
    for (int k = 0; k < rep.rank; ++k) {
      ordered_json tr = ordered_json::array();
      for (int i = 0; i < rep.rank; ++i)
        tr.push_back(action.delta.transport[v].at(i, k).get_str());
      cols.push_back(std::move(tr));
    }
    verts[rep.reduced.vertex_name(v)] = std::move(cols);
  }
  delta["vertex_translations"] = std::move(verts);
  ordered_json stables = ordered_json::object();
  for (int p = 0; p < rep.reduced.num_edge_pairs(); ++p)
    stables[rep.reduced.edge(p).id] = matq_json(action.delta.stable[p]);
  delta["stable_letters"] = std::move(stables);
  doc["delta"] = std::move(delta);
  return doc;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, const Config& cfg, bool include_timings,
                           const ActionData* action) {
  ordered_json doc = build_report(rep, cfg, include_timings);
  if (action) doc["action"] = build_action(rep, *action);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "rank " << rep.rank << ", " << rep.input_vertices << " vertex(es), "
     << rep.input_edge_pairs << " edge pair(s); reduced: " << rep.reduced.num_vertices()
     << " vertex(es), " << rep.reduced.num_edge_pairs() << " edge pair(s)\n";
  os << "modular image generators:\n";
  if (rep.image.gens.empty()) os << "  (none: trivial image)\n";
  for (size_t i = 0; i < rep.image.gens.size(); ++i)
    os << "  g" << i << " = " << rep.image.gens[i].to_string() << "   (edge "
       << rep.image_edge_ids[i] << ")\n";

  os << "biautomatic:        " << to_string(rep.biautomatic);
  if (rep.finiteness.finite)
    os << "   (modular image is finite of order " << rep.finiteness.order.get_str() << ")";
  else
    os << "   (infinite image: " << to_string(rep.finiteness.reason) << ", witness "
       << rep.finiteness.witness.to_string() << ")";
  os << "\n";

  os << "CAT(0):             " << to_string(rep.cat0.tag);
  if (rep.cat0.tag == VerdictTag::Yes)
    os << "   invariant form S = " << rep.cat0.certificate->form.mat().to_string();
  else if (rep.cat0.tag == VerdictTag::No) {
    os << "   (" << rep.cat0.no_reason;
    if (rep.cat0.witness_word) os << ", witness " << rep.cat0.witness_word->to_string();
    if (rep.cat0.witness_poly) os << ", poly " << rep.cat0.witness_poly->to_string();
    os << ")";
  }
  os << "\n";

  os << "residually finite:  " << to_string(rep.residually_finite);
  if (rep.ascending_hnn)
    os << "   (ascending HNN extension)";
  else if (rep.glnz.tag == VerdictTag::Yes)
    os << "   invariant lattice L = " << rep.glnz.certificate->lattice.to_string();
  else if (rep.residually_finite == VerdictTag::No) {
    os << "   (" << rep.glnz.no_reason;
    if (rep.glnz.witness_word) os << ", witness " << rep.glnz.witness_word->to_string();
    if (rep.glnz.witness_poly) os << ", poly " << rep.glnz.witness_poly->to_string();
    os << ")";
  }
  os << "\n";
  return os.str();
}

std::string action_to_text(const AnalysisReport& rep, const ActionData& action) {
  std::ostringstream os;
  os << "isometric action on E^" << rep.rank << " x T\n";
  os << "invariant form S = " << action.form.mat().to_string() << "\n";
  os << "numeric conjugator P (P g P^-1 orthogonal to residual "
     << action.orthogonality_residual << "):\n";
  for (const auto& row : action.conjugator) {
    os << "  [";
    for (size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "]\n";
  }
  os << "tree degrees:";
  for (const auto& [name, deg] : action.tree_degrees)
    os << " " << name << ":" << deg.get_str();
  os << "\n";
  return os.str();
}

std::string certificate_to_json(const FormCertificate& cert) {
  ordered_json doc;
  doc["kind"] = "form";
  doc["data"] = {{"matrix", matq_json(cert.form.mat())}};
  return doc.dump(2) + "\n";
}

std::string certificate_to_json(const LatticeCertificate& cert) {
  ordered_json doc;
  doc["kind"] = "lattice";
  doc["data"] = {{"denominator", cert.lattice.denominator().get_str()},
                 {"basis", matz_json(cert.lattice.basis())}};
  return doc.dump(2) + "\n";
}

namespace {

Rat parse_rat_field(const json& j, const std::string& where) {
  std::optional<Rat> q;
  if (j.is_number_integer()) q = Rat(static_cast<long>(j.get<long long>()));
  else if (j.is_string()) q = rat_from_string(j.get<std::string>());
  if (!q) throw ParseError(where + ": expected an integer or \"num/den\" string");
  return *q;
}

MatQ parse_matq(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a matrix");
  int n = int(j.size());
  MatQ m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != n)
      throw ParseError(where + ": expected " + std::to_string(n) + " rows of length " +
                       std::to_string(n));
    for (int k = 0; k < n; ++k)
      m.at(i, k) = parse_rat_field(j[i][k], where + "[" + std::to_string(i) + "][" +
                                                std::to_string(k) + "]");
  }
  return m;
}

}  // namespace

AnyCertificate parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("certificate: missing \"kind\"");
  if (!doc.contains("data")) throw ParseError("certificate: missing \"data\"");
  const json& data = doc["data"];
  std::string kind = doc["kind"].get<std::string>();

  if (kind == "form") {
    if (!data.contains("matrix")) throw ParseError("form certificate: missing data.matrix");
    MatQ m = parse_matq(data["matrix"], "data.matrix");
    if (!m.is_symmetric()) throw ValidationError("form certificate: matrix is not symmetric");
    return FormCertificate{SymQ(m)};
  }
  if (kind == "lattice") {
    if (!data.contains("basis")) throw ParseError("lattice certificate: missing data.basis");
    MatQ b = parse_matq(data["basis"], "data.basis");
    Rat den(1);
    if (data.contains("denominator")) den = parse_rat_field(data["denominator"], "data.denominator");
    if (den <= 0 || den.get_den() != 1)
      throw ValidationError("lattice certificate: denominator must be a positive integer");
    return LatticeCertificate{Lattice::from_basis(b * Rat(Int(1), den.get_num()))};
  }
  if (kind == "closure") {
    if (!data.contains("order")) throw ParseError("closure certificate: missing data.order");
    Rat order = parse_rat_field(data["order"], "data.order");
    if (order <= 0 || order.get_den() != 1)
      throw ValidationError("closure certificate: order must be a positive integer");
    ClosureCertificate c;
    c.order = order.get_num();
    if (data.contains("elements")) {
      if (!data["elements"].is_array()) throw ParseError("closure certificate: elements");
      for (size_t i = 0; i < data["elements"].size(); ++i)
        c.elements.push_back(
            parse_matq(data["elements"][i], "data.elements[" + std::to_string(i) + "]"));
    }
    return c;
  }
  throw ParseError("certificate: unknown kind '" + kind + "'");
}

}  // namespace gbsn
