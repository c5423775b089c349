#include "isoprod/report.hpp"

#include <iomanip>
#include <sstream>

#include "isoprod/aut0.hpp"
#include "isoprod/hodge.hpp"
#include "isoprod/oracle.hpp"

namespace isoprod::report {

namespace {

Json factors_json(const InvariantFactors& f) { return Json(f.factors()); }

Json triple_json(const AlgebraicDatum& d, const GroupElement& tau) {
  const std::array<AbelianGroup, 3> parts{d.group(), d.group(), d.group()};
  Json out = Json::array();
  for (const auto& x : split_element(tau, parts)) out.push_back(document::element_json(x));
  return out;
}

Json validation_json(const AlgebraicDatum& d, const DatumReport& r) {
  Json v = Json::object();
  v["minimality"] = {{"pass", r.minimality.pass}, {"witness", nullptr}};
  if (r.minimality.witness)
    v["minimality"]["witness"] = {r.minimality.witness->first + 1,
                                  r.minimality.witness->second + 1};
  v["freeness"] = {{"pass", r.freeness.pass}, {"witness", nullptr}};
  if (r.freeness.witness) v["freeness"]["witness"] = document::element_json(*r.freeness.witness);
  Json vectors = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json x = Json::object();
    x["ok"] = r.vectors[i].ok();
    x["violations"] = Json::array();
    for (const auto& viol : r.vectors[i].violations)
      x["violations"].push_back(
          {{"kind", std::string(violation_name(viol.kind))}, {"message", viol.message}});
    x["quotient"] = d.quotient(i).invariant_factors().factors();
    x["signature"] = r.vectors[i].ok() ? Json(signature(d.vector(i)).to_string()) : Json(nullptr);
    x["genus"] = r.genera ? Json((*r.genera)[i]) : Json(nullptr);
    vectors.push_back(std::move(x));
  }
  v["vectors"] = std::move(vectors);
  v["q"] = r.q;
  v["hypotheses"] = {{"kernels_cyclic", r.flags.kernels_cyclic},
                     {"all_g_prime_one", r.flags.all_g_prime_one},
                     {"all_genus_at_least_two", r.flags.all_genus_at_least_two}};
  v["usable"] = r.well_formed() && r.flags.all_genus_at_least_two;
  v["isogenous_to_product"] = r.is_valid();
  if (v["usable"]) v["rigidity"] = std::string(rigidity_name(rigidity_class(d, r)));
  return v;
}

Json diamond_json(const HodgeDiamond& h) {
  Json rows = Json::array();
  for (int p = 0; p < 4; ++p) {
    Json row = Json::array();
    for (int q = 0; q < 4; ++q) row.push_back(h(p, q));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json kernel_json(const AlgebraicDatum& d, const Subgroup& k) {
  const QuotientMap qm(k, d.k_delta());
  return {{"order", k.order()}, {"modulo_k_delta", factors_json(qm.invariant_factors())}};
}

}  // namespace

Sections all_sections() { return {true, true, true, true, false}; }

bool validation_failed(const Json& report) {
  return !report.at("validation").at("usable").get<bool>();
}

Json datum_report(const AlgebraicDatum& d, const Sections& sections,
                  const std::string& provenance) {
  Json out = Json::object();
  out["datum"] = document::datum_json(d);
  if (!provenance.empty()) out["provenance"] = provenance;
  const DatumReport r = validate_datum(d);
  out["validation"] = validation_json(d, r);
  if (validation_failed(out)) return out;

  if (sections.invariants) {
    if (r.freeness.pass) {
      const NumericalInvariants inv = invariants(d);
      out["invariants"] = {{"genera", inv.genera}, {"q", r.q},          {"chi_o", inv.chi_o},
                           {"euler", inv.euler},   {"k_cubed", inv.k_cubed}};
    } else {
      out["invariants"] = {{"genera", *r.genera}, {"q", r.q}};
    }
  }
  if (sections.hodge) out["hodge"] = diamond_json(hodge_diamond(d));

  const bool need_sets = sections.aut0 || sections.kernels;
  if (need_sets) {
    const AdmissibleSets sets = admissible_characters(d);
    out["admissible"] = {{"first", sets.first.size()}, {"second", sets.second.size()}};
    if (sections.kernels) {
      Json k = Json::object();
      for (auto [p, q] : {std::pair{3, 0}, {2, 1}, {2, 0}, {1, 1}})
        k["G_" + std::to_string(p) + std::to_string(q)] =
            kernel_json(d, representation_kernel(d, sets, p, q));
      k["k_delta_order"] = d.k_delta().order();
      out["kernels"] = std::move(k);
    }
  }
  if (sections.aut0) {
    const Aut0Result a = aut0(d);
    Json gens = Json::array();
    for (const auto& g : a.generators) gens.push_back(triple_json(d, g));
    out["aut0"] = {{"status", std::string(status_name(a.status))},
                   {"invariant_factors", factors_json(a.invariant_factors)},
                   {"order", a.invariant_factors.order()},
                   {"generators", std::move(gens)}};
  }
  if (sections.oracle) {
    const oracle::Agreement ag = oracle::cross_check(d);
    out["oracle"] = {{"hodge", ag.hodge},         {"kernel_30", ag.kernel_30},
                     {"kernel_20", ag.kernel_20}, {"quotient", ag.quotient},
                     {"freeness", ag.freeness},   {"minimality", ag.minimality},
                     {"all_agree", ag.all()}};
  }
  return out;
}

Json survey_report(const Survey& s) {
  Json out = Json::object();
  out["estimate"] = s.estimate;
  out["count"] = s.data.size();
  Json hist = Json::array();
  for (const auto& b : s.histogram) {
    Json by_status = Json::object();
    for (auto [status, n] : b.by_status) by_status[std::string(status_name(status))] = n;
    hist.push_back({{"invariant_factors", factors_json(b.factors)},
                    {"count", b.count},
                    {"by_status", std::move(by_status)},
                    {"first", b.first}});
  }
  out["histogram"] = std::move(hist);
  Json extremal = Json::object();
  auto put = [&](const char* key, const std::optional<std::size_t>& k) {
    if (!k) return;
    extremal[key] = {{"index", *k},
                     {"invariant_factors", factors_json(s.results[*k].invariant_factors)},
                     {"datum", document::datum_json(s.data[*k])}};
  };
  put("smallest", s.smallest);
  put("largest", s.largest);
  out["extremal"] = std::move(extremal);
  return out;
}

namespace {

std::string compact(const Json& j) { return j.dump(); }

void render_diamond(std::ostream& os, const Json& h) {
  // h^{3,3} on top, h^{0,0} at the bottom.
  std::size_t width = 1;
  for (const auto& row : h)
    for (const auto& x : row) width = std::max(width, x.dump().size());
  const std::size_t cell = width + 1;
  for (int s = 6; s >= 0; --s) {
    std::vector<std::string> entries;
    for (int p = 3; p >= 0; --p) {
      const int q = s - p;
      if (q < 0 || q > 3) continue;
      entries.push_back(h[p][q].dump());
    }
    const std::size_t indent = (4 - entries.size()) * cell;
    os << "  " << std::string(indent, ' ');
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k > 0) os << std::string(2 * cell - entries[k].size(), ' ');
      else os << std::string(width - entries[k].size(), ' ');
      os << entries[k];
    }
    os << "\n";
  }
}

void render_datum_report(std::ostream& os, const Json& r) {
  if (r.contains("provenance")) os << "note: " << r["provenance"].get<std::string>() << "\n";
  const Json& d = r["datum"];
  os << "group: " << compact(d["group"]) << "\n";
  for (std::size_t i = 0; i < 3; ++i)
    os << "K" << i + 1 << " = <" << compact(d["kernels"][i]) << ">, V" << i + 1
       << ": branch " << compact(d["vectors"][i]["branch"]) << ", eta "
       << compact(d["vectors"][i]["eta"]) << ", g' = " << d["vectors"][i]["g_prime"] << "\n";

  const Json& v = r["validation"];
  os << "\nvalidation\n";
  os << "  minimality: " << (v["minimality"]["pass"].get<bool>() ? "pass" : "FAIL");
  if (!v["minimality"]["witness"].is_null())
    os << " (K" << v["minimality"]["witness"][0] << " and K" << v["minimality"]["witness"][1]
       << " meet)";
  os << "\n  freeness: " << (v["freeness"]["pass"].get<bool>() ? "pass" : "FAIL");
  if (!v["freeness"]["witness"].is_null())
    os << " (witness " << compact(v["freeness"]["witness"]) << ")";
  os << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    const Json& x = v["vectors"][i];
    os << "  V" << i + 1 << " over " << compact(x["quotient"]) << ": ";
    if (x["ok"].get<bool>()) {
      os << "ok, type " << x["signature"].get<std::string>() << ", genus " << x["genus"];
    } else {
      os << "invalid";
      for (const auto& viol : x["violations"]) os << "; " << viol["message"].get<std::string>();
    }
    os << "\n";
  }
  os << "  q = " << v["q"] << "\n";
  os << "  hypotheses: kernels cyclic " << v["hypotheses"]["kernels_cyclic"]
     << ", all g' = 1 " << v["hypotheses"]["all_g_prime_one"] << ", all g >= 2 "
     << v["hypotheses"]["all_genus_at_least_two"] << "\n";
  if (v.contains("rigidity")) os << "  rigidity: " << v["rigidity"].get<std::string>() << "\n";
  if (!v["usable"].get<bool>()) {
    os << "  datum rejected\n";
    return;
  }
  if (!v["isogenous_to_product"].get<bool>())
    os << "  action is not free: treated as a product-quotient\n";

  if (r.contains("invariants")) {
    const Json& inv = r["invariants"];
    os << "\ninvariants\n  genera " << compact(inv["genera"]) << ", q = " << inv["q"];
    if (inv.contains("chi_o"))
      os << "\n  chi(O_X) = " << inv["chi_o"] << ", e(X) = " << inv["euler"]
         << ", K^3 = " << inv["k_cubed"];
    os << "\n";
  }
  if (r.contains("hodge")) {
    os << "\nHodge diamond\n";
    render_diamond(os, r["hodge"]);
  }
  if (r.contains("admissible"))
    os << "\nadmissible characters: " << r["admissible"]["first"] << " of first kind, "
       << r["admissible"]["second"] << " of second kind\n";
  if (r.contains("kernels")) {
    os << "\nrepresentation kernels (order, quotient by K Delta_G of order "
       << r["kernels"]["k_delta_order"] << ")\n";
    for (const char* key : {"G_30", "G_21", "G_20", "G_11"})
      os << "  " << key << ": " << r["kernels"][key]["order"] << ", "
         << compact(r["kernels"][key]["modulo_k_delta"]) << "\n";
  }
  if (r.contains("aut0")) {
    const Json& a = r["aut0"];
    os << "\nAut0\n  status: " << a["status"].get<std::string>()
       << "\n  invariant factors: " << compact(a["invariant_factors"]) << " (order "
       << a["order"] << ")\n";
    for (const auto& g : a["generators"]) os << "  generator: " << compact(g) << "\n";
  }
  if (r.contains("oracle")) {
    os << "\noracle cross-check:";
    for (auto& [key, value] : r["oracle"].items())
      if (key != "all_agree") os << " " << key << "=" << (value.get<bool>() ? "ok" : "MISMATCH");
    os << "\n";
  }
}

void render_survey(std::ostream& os, const Json& r) {
  os << "estimated candidates: " << r["estimate"] << "\n";
  os << "valid data: " << r["count"] << "\n\nAut0 histogram\n";
  for (const auto& b : r["histogram"]) {
    os << "  " << std::left << std::setw(12) << compact(b["invariant_factors"]) << std::right
       << std::setw(8) << b["count"];
    for (auto& [status, n] : b["by_status"].items()) os << "  " << status << " " << n;
    os << "\n";
  }
  for (const char* key : {"smallest", "largest"})
    if (r["extremal"].contains(key))
      os << key << ": #" << r["extremal"][key]["index"] << " "
         << compact(r["extremal"][key]["invariant_factors"]) << " "
         << compact(r["extremal"][key]["datum"]) << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  if (report.contains("histogram"))
    render_survey(os, report);
  else
    render_datum_report(os, report);
  return os.str();
}

}  // namespace isoprod::report
