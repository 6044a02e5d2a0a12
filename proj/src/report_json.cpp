#include "rtp/report_json.hpp"

namespace rtp {

using nlohmann::json;

namespace {

json rat_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_to_string(r));
  return out;
}

json witness_json(const TPWitness& w) {
  return {{"rows", w.rows}, {"cols", w.cols}, {"det", rat_to_string(w.value)}};
}

json root_json(const IsolatedRoot& r) {
  return {{"lo", rat_to_string(r.lo)},
          {"hi", rat_to_string(r.hi)},
          {"multiplicity", r.multiplicity}};
}

json counts_json(const RootSignCounts& c) {
  return {{"real_rooted", c.real_rooted},
          {"distinct_real", c.distinct_real},
          {"negative", c.negative},
          {"zero", c.zero},
          {"positive", c.positive}};
}

}  // namespace

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n_rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n_cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.n_rows()}, {"cols", m.n_cols()}, {"entries", std::move(rows)}};
}

json to_json(const TPReport& r) {
  json j = {{"verdict", to_string(r.verdict)},
            {"truncation", {{"rows", r.n_rows}, {"cols", r.n_cols}}},
            {"max_minor_order", r.max_minor_order}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

json to_json(const AZ& az) {
  return {{"a", rat_list(az.a)}, {"z", rat_list(az.z)}};
}

json to_json(const PFVerdict& v) {
  json j = {{"status", to_string(v.status)}};
  if (v.order) j["order"] = *v.order;
  else j["decided_exactly"] = true;
  if (v.factorization) {
    json f = {{"constant", rat_to_string(v.factorization->constant)},
              {"shift", v.factorization->shift},
              {"alphas", json::array()},
              {"betas", json::array()}};
    for (const auto& r : v.factorization->alphas) f["alphas"].push_back(root_json(r));
    for (const auto& r : v.factorization->betas) f["betas"].push_back(root_json(r));
    j["factorization"] = std::move(f);
  }
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (v.roots) {
    json c = {{"reason", v.roots->reason}};
    if (v.roots->num_counts) c["numerator_roots"] = counts_json(*v.roots->num_counts);
    if (v.roots->den_counts) c["denominator_roots"] = counts_json(*v.roots->den_counts);
    j["root_certificate"] = std::move(c);
  }
  return j;
}

json to_json(const CriterionReport& r) {
  json j = {{"criterion", to_string(r.criterion)},
            {"applicable", r.applicable},
            {"certified", to_string(r.certified)},
            {"decisive", r.decisive},
            {"order", r.order},
            {"reason", r.reason}};
  if (r.pf_d) j["pf_d"] = to_json(*r.pf_d);
  if (r.pf_h) j["pf_h"] = to_json(*r.pf_h);
  if (r.tp) j["tp"] = to_json(*r.tp);
  return j;
}

json to_json(const CertificationSummary& s) {
  json criteria = json::array();
  for (const auto& c : s.criteria) criteria.push_back(to_json(c));
  return {{"order", s.order},
          {"criteria", std::move(criteria)},
          {"direct", to_json(s.direct)}};
}

TPReport tp_report_from_json(const json& j) {
  TPReport r;
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "TP_UP_TO") r.verdict = TPVerdict::TP_UP_TO;
  else if (verdict == "NOT_TP") r.verdict = TPVerdict::NOT_TP;
  else throw ParseError("unknown TP verdict '" + verdict + "'");
  r.n_rows = j.at("truncation").at("rows").get<int>();
  r.n_cols = j.at("truncation").at("cols").get<int>();
  r.max_minor_order = j.at("max_minor_order").get<int>();
  if (j.contains("witness")) {
    TPWitness w;
    w.rows = j["witness"].at("rows").get<std::vector<int>>();
    w.cols = j["witness"].at("cols").get<std::vector<int>>();
    w.value = rat_from_string(j["witness"].at("det").get<std::string>());
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace rtp
