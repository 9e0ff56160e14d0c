#include "invgen/serialize.hpp"

#include "invgen/errors.hpp"

namespace invgen {

json matrix_json(const MatFp &M) {
  json j;
  j["q"] = M.q;
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  j["entries"] = M.a;
  return j;
}

namespace {

json class_fingerprint(const PermGroup &G, uint32_t class_id) {
  const auto &c = G.conjugacy_classes()[class_id];
  json j;
  j["element_order"] = c.element_order;
  j["size"] = c.size();
  j["rep"] = G.element(c.rep).str();
  return j;
}

json maximal_fingerprint(const PermGroup &G, uint32_t maximal_index, uint64_t subgroup_cap) {
  const auto &tab = subgroup_class_table(G, subgroup_cap);
  const auto &cls = tab.classes[tab.maximal_ids[maximal_index]];
  json j;
  j["order"] = cls.order;
  j["conjugates"] = cls.conjugate_count;
  return j;
}

const char *kind_name(InvGenCertificate::Kind k) {
  switch (k) {
  case InvGenCertificate::Kind::Witness: return "invgen-witness";
  case InvGenCertificate::Kind::Refutation: return "invgen-refutation";
  case InvGenCertificate::Kind::DIExact: return "dI-exact";
  case InvGenCertificate::Kind::DILowerBound: return "dI-lower-bound";
  }
  return "?";
}

} // namespace

json certificate_json(const PermGroup &G, const std::string &expr,
                      const InvGenCertificate &cert, bool holds) {
  json j;
  j["schema"] = "invgen-cert/1";
  j["kind"] = kind_name(cert.kind);
  j["group"] = expr;
  j["holds"] = holds;
  json classes = json::array();
  for (uint32_t c : cert.class_ids) classes.push_back(class_fingerprint(G, c));
  j["classes"] = classes;
  if (cert.kind == InvGenCertificate::Kind::DIExact) j["d_I"] = cert.value;
  if (cert.kind == InvGenCertificate::Kind::DILowerBound) j["r"] = cert.value;
  if (!cert.note.empty()) j["note"] = cert.note;
  if (holds) {
    json ev = json::array();
    for (std::size_t m = 0; m < cert.per_maximal_choice.size(); ++m) {
      json row = maximal_fingerprint(G, uint32_t(m), kDefaultSubgroupCap);
      row["avoided_by"] = cert.per_maximal_choice[m];
      ev.push_back(std::move(row));
    }
    j["evidence"] = ev;
  } else if (cert.blocking_maximal != UINT32_MAX) {
    json row = maximal_fingerprint(G, cert.blocking_maximal, kDefaultSubgroupCap);
    j["evidence"] = json{{"met_by_all", row}};
  }
  return j;
}

bool recheck_certificate(const PermGroup &G, const json &doc, uint64_t subgroup_cap) {
  if (doc.value("schema", "") != "invgen-cert/1") return false;
  InvGenCertificate cert;
  std::string kind = doc.value("kind", "");
  bool holds = doc.value("holds", false);
  for (const auto &fp : doc.at("classes")) {
    Permutation rep = Permutation::parse(fp.at("rep").get<std::string>(), G.degree());
    uint32_t id = G.id_of(rep);
    uint32_t cls = G.class_of(id);
    const auto &c = G.conjugacy_classes()[cls];
    if (c.element_order != fp.at("element_order").get<uint64_t>()) return false;
    if (c.size() != fp.at("size").get<uint64_t>()) return false;
    cert.class_ids.push_back(cls);
  }
  const auto &tab = subgroup_class_table(G, subgroup_cap);
  if (holds) {
    cert.kind = InvGenCertificate::Kind::Witness;
    const auto &ev = doc.at("evidence");
    if (ev.size() != tab.maximal_ids.size()) return false;
    for (std::size_t m = 0; m < ev.size(); ++m) {
      const auto &cls = tab.classes[tab.maximal_ids[m]];
      if (cls.order != ev[m].at("order").get<uint64_t>()) return false;
      if (cls.conjugate_count != ev[m].at("conjugates").get<uint32_t>()) return false;
      cert.per_maximal_choice.push_back(ev[m].at("avoided_by").get<uint32_t>());
    }
    return verify_invgen_certificate(G, cert, true, subgroup_cap);
  }
  cert.kind = InvGenCertificate::Kind::Refutation;
  if (!doc.contains("evidence")) return false;
  const auto &met = doc.at("evidence").at("met_by_all");
  for (std::size_t m = 0; m < tab.maximal_ids.size(); ++m) {
    const auto &cls = tab.classes[tab.maximal_ids[m]];
    if (cls.order == met.at("order").get<uint64_t>() &&
        cls.conjugate_count == met.at("conjugates").get<uint32_t>()) {
      cert.blocking_maximal = uint32_t(m);
      if (verify_invgen_certificate(G, cert, false, subgroup_cap)) return true;
    }
  }
  return false;
}

json decomposition_json(const std::string &expr, uint32_t q, const IrredDecomposition &dec) {
  json j;
  j["schema"] = "decomp/1";
  j["group"] = expr;
  j["q"] = q;
  json comps = json::array();
  uint64_t total = 0, sum_sq = 0;
  for (const auto &c : dec.components) {
    json row;
    row["dim"] = c.module.dim;
    row["multiplicity"] = c.multiplicity;
    row["endo_dim"] = c.endo_dim;
    comps.push_back(std::move(row));
    total += uint64_t(c.multiplicity) * c.module.dim;
    sum_sq += uint64_t(c.multiplicity) * c.multiplicity;
  }
  j["components"] = comps;
  j["total_dim"] = total;
  j["sum_multiplicity_squared"] = sum_sq;
  j["change_of_basis"] = matrix_json(dec.change_of_basis);
  return j;
}

json structured_bound_json(const StructuredGroup &S, const StructuredBound &b) {
  json j;
  j["schema"] = "lift/1";
  j["group"] = S.expr();
  j["r"] = b.r;
  j["certified"] = b.certified;
  if (!b.note.empty()) j["note"] = b.note;
  json comps = json::array();
  for (const auto &s : S.socle_irreducible()) {
    json row;
    row["q"] = s.module.q;
    row["dim"] = s.module.dim;
    row["multiplicity"] = s.multiplicity;
    comps.push_back(std::move(row));
  }
  j["socle"] = comps;
  json rows = json::array();
  for (const auto &r : b.rows) {
    json row;
    row["classes"] = r.class_ids;
    row["obstructing_component"] = r.component;
    row["needed"] = r.needed;
    row["available"] = r.available;
    rows.push_back(std::move(row));
  }
  j["tuples"] = rows;
  return j;
}

json dichotomy_json(const std::string &expr, const DichotomyReport &rep) {
  json j;
  j["schema"] = "dichotomy/1";
  j["group"] = expr;
  j["min_prime"] = rep.min_prime;
  j["d"] = rep.d;
  j["d_I"] = rep.d_I;
  j["first_horn"] = rep.first_horn;
  if (!rep.first_horn) {
    j["q"] = rep.q;
    j["H"] = rep.h_expr;
    j["H_d"] = rep.h_d;
    j["H_certified_dI_exceeds"] = rep.d_I;
    j["certified"] = rep.certificate.certified;
  }
  json diags = json::array();
  for (const auto &d : rep.diagnostics) {
    json row;
    row["classes"] = d.class_ids;
    row["sum_inverse_orders"] = std::to_string(d.num) + "/" + std::to_string(d.den);
    row["at_least_one"] = d.at_least_one;
    diags.push_back(std::move(row));
  }
  j["counting_diagnostics"] = diags;
  return j;
}

} // namespace invgen
