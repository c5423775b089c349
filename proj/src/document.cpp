#include "isoprod/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "isoprod/error.hpp"

namespace isoprod::document {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchema, path + ": " + what);
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys,
               const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) schema(path, "unknown key '" + key + "'");
  }
}

const Json& required(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::int64_t> tuple(const Json& j, std::size_t width, const std::string& path) {
  array(j, path);
  if (j.size() != width)
    schema(path, "tuple has " + std::to_string(j.size()) + " entries, group has rank " +
                     std::to_string(width));
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(integer(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

GroupElement element(const AbelianGroup& g, const Json& j, const std::string& path) {
  auto e = tuple(j, g.rank(), path);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::int64_t n = g.orders()[k];
    e[k] = ((e[k] % n) + n) % n;
  }
  return GroupElement(g, std::move(e));
}

std::vector<GroupElement> elements(const AbelianGroup& g, const Json& j,
                                   const std::string& path) {
  array(j, path);
  std::vector<GroupElement> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(element(g, j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::int64_t> group_orders(const Json& j, const std::string& path) {
  array(j, path);
  std::vector<std::int64_t> orders;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::int64_t n = integer(j[k], path + "[" + std::to_string(k) + "]");
    if (n < 1) schema(path, "cyclic orders must be >= 1");
    orders.push_back(n);
  }
  return orders;
}

}  // namespace

Json element_json(const GroupElement& g) {
  return Json(std::vector<std::int64_t>(g.exponents().begin(), g.exponents().end()));
}

Json datum_json(const AlgebraicDatum& d) {
  Json doc = Json::object();
  doc["group"] = std::vector<std::int64_t>(d.group().orders().begin(), d.group().orders().end());
  Json kernels = Json::array(), vectors = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json gens = Json::array();
    for (const auto& g : d.kernel(i).generators()) gens.push_back(element_json(g));
    kernels.push_back(std::move(gens));
    Json v = Json::object();
    v["g_prime"] = d.input(i).g_prime;
    v["branch"] = Json::array();
    v["eta"] = Json::array();
    for (const auto& s : d.input(i).branch) v["branch"].push_back(element_json(s));
    for (const auto& e : d.input(i).eta) v["eta"].push_back(element_json(e));
    vectors.push_back(std::move(v));
  }
  doc["kernels"] = std::move(kernels);
  doc["vectors"] = std::move(vectors);
  return doc;
}

AlgebraicDatum parse_datum(const Json& doc) {
  only_keys(doc, {"group", "kernels", "vectors"}, "$");
  const AbelianGroup g(group_orders(required(doc, "group", "$"), "$.group"));
  const Json& kj = array(required(doc, "kernels", "$"), "$.kernels");
  const Json& vj = array(required(doc, "vectors", "$"), "$.vectors");
  if (kj.size() != 3) schema("$.kernels", "expected 3 kernels");
  if (vj.size() != 3) schema("$.vectors", "expected 3 vectors");
  std::array<Subgroup, 3> kernels;
  std::array<FactorInput, 3> factors;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string kp = "$.kernels[" + std::to_string(i) + "]";
    kernels[i] = Subgroup::generate(g, elements(g, kj[i], kp));
    const std::string vp = "$.vectors[" + std::to_string(i) + "]";
    only_keys(vj[i], {"g_prime", "branch", "eta"}, vp);
    factors[i].g_prime = integer(required(vj[i], "g_prime", vp), vp + ".g_prime");
    if (factors[i].g_prime < 0) schema(vp + ".g_prime", "must be >= 0");
    factors[i].branch = elements(g, required(vj[i], "branch", vp), vp + ".branch");
    factors[i].eta = elements(g, required(vj[i], "eta", vp), vp + ".eta");
  }
  return AlgebraicDatum(g, std::move(kernels), std::move(factors));
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

namespace {

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void write(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  if (j.is_array() && !j.empty() && !is_flat(j)) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      write(os, j[k], depth + 1);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad.substr(2) << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t k = 0; k < j.size(); ++k) os << (k ? ", " : "") << j[k].dump();
    os << "]";
  } else if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << pad << Json(it.key()).dump() << ": ";
      write(os, it.value(), depth + 1);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad.substr(2) << "}";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

SearchSpec parse_search_spec(const Json& doc) {
  only_keys(doc, {"group", "kernels", "g_prime", "max_branch", "max_branch_order", "eta", "cap"},
            "$");
  SearchSpec spec;
  spec.group = group_orders(required(doc, "group", "$"), "$.group");
  const AbelianGroup g(spec.group);
  if (auto it = doc.find("kernels"); it != doc.end()) {
    if (it->is_string()) {
      if (*it != "cyclic") schema("$.kernels", "expected \"cyclic\" or a list of triples");
    } else {
      spec.kernel_policy = KernelPolicy::kExplicit;
      for (std::size_t t = 0; t < array(*it, "$.kernels").size(); ++t) {
        const std::string tp = "$.kernels[" + std::to_string(t) + "]";
        const Json& triple = array((*it)[t], tp);
        if (triple.size() != 3) schema(tp, "expected 3 kernels");
        std::array<std::vector<std::vector<std::int64_t>>, 3> ks;
        for (std::size_t i = 0; i < 3; ++i)
          for (const auto& e : elements(g, triple[i], tp + "[" + std::to_string(i) + "]"))
            ks[i].emplace_back(e.exponents().begin(), e.exponents().end());
        spec.kernels.push_back(std::move(ks));
      }
    }
  }
  if (auto it = doc.find("g_prime"); it != doc.end()) {
    if (array(*it, "$.g_prime").size() != 3) schema("$.g_prime", "expected 3 entries");
    for (std::size_t i = 0; i < 3; ++i) {
      spec.g_prime[i] = integer((*it)[i], "$.g_prime");
      if (spec.g_prime[i] < 0) schema("$.g_prime", "must be >= 0");
    }
  }
  if (auto it = doc.find("max_branch"); it != doc.end()) {
    spec.max_branch = static_cast<int>(integer(*it, "$.max_branch"));
    if (spec.max_branch < 0) schema("$.max_branch", "must be >= 0");
  }
  if (auto it = doc.find("max_branch_order"); it != doc.end() && !it->is_null())
    spec.max_branch_order = integer(*it, "$.max_branch_order");
  if (auto it = doc.find("eta"); it != doc.end()) {
    if (*it == "canonical")
      spec.eta = EtaPolicy::kCanonical;
    else if (*it == "all")
      spec.eta = EtaPolicy::kAll;
    else
      schema("$.eta", "expected \"canonical\" or \"all\"");
  }
  if (auto it = doc.find("cap"); it != doc.end()) spec.cap = integer(*it, "$.cap");
  return spec;
}

}  // namespace isoprod::document
