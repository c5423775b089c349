#include "isoprod/examples.hpp"

#include <charconv>

#include "isoprod/error.hpp"

namespace isoprod::examples {

namespace {

GroupElement elem(const AbelianGroup& g, std::vector<std::int64_t> e) {
  for (std::size_t j = 0; j < e.size(); ++j) e[j] %= g.orders()[j];
  return GroupElement(g, std::move(e));
}

void require_positive(std::initializer_list<std::int64_t> ns) {
  for (std::int64_t n : ns)
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "example parameters must be >= 1");
}

std::array<Subgroup, 3> coordinate_kernels(const AbelianGroup& g) {
  std::array<Subgroup, 3> k;
  for (std::size_t i = 0; i < 3; ++i) {
    const GroupElement e = GroupElement::unit(g, i);
    k[i] = Subgroup::generate(g, std::span(&e, 1));
  }
  return k;
}

// Branch list (s, s, ..., s) of length equal to the order of s modulo K.
std::vector<GroupElement> closed_branch(const GroupElement& s, const Subgroup& k) {
  std::int64_t m = 1;
  GroupElement acc = s;
  while (!k.contains(acc)) {
    acc = acc + s;
    ++m;
  }
  return std::vector<GroupElement>(static_cast<std::size_t>(m), s);
}

AlgebraicDatum three_coordinate_family(std::int64_t n1, std::int64_t n2, std::int64_t n3,
                                       const std::array<std::vector<std::int64_t>, 3>& sigma) {
  const AbelianGroup g({2 * n1, 2 * n2, 2 * n3});
  auto k = coordinate_kernels(g);
  const auto e = [&](std::size_t j) { return GroupElement::unit(g, j); };
  std::array<FactorInput, 3> f;
  const std::array<std::array<std::size_t, 2>, 3> eta{{{1, 2}, {0, 2}, {0, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    f[i].g_prime = 1;
    f[i].branch = closed_branch(elem(g, sigma[i]), k[i]);
    f[i].eta = {e(eta[i][0]), e(eta[i][1])};
  }
  return AlgebraicDatum(g, k, std::move(f));
}

}  // namespace

AlgebraicDatum example1(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require_positive({n1, n2, n3});
  return three_coordinate_family(n1, n2, n3, {{{0, 0, n3}, {n1, 0, 0}, {0, n2, 0}}});
}

AlgebraicDatum example2a(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require_positive({n1, n2, n3});
  return three_coordinate_family(n1, n2, n3, {{{0, 0, n3}, {n1, 0, 0}, {n1, n2, 0}}});
}

AlgebraicDatum example2b(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require_positive({n1, n2, n3});
  if (n1 < 2)
    throw Error(ErrorCode::kInvalidArgument,
                "example2b needs n1 >= 2: with n1 = 1 the branch element e1^2 is trivial");
  return three_coordinate_family(n1, n2, n3, {{{0, 0, n3}, {2, 0, 0}, {0, n2, 0}}});
}

AlgebraicDatum example3(std::int64_t n) {
  require_positive({n});
  return three_coordinate_family(n, n, n, {{{0, n, n}, {0, 0, n}, {0, n, 0}}});
}

AlgebraicDatum example4() {
  const AbelianGroup g({2, 2, 2, 2});
  const auto e = [&](std::size_t j) { return GroupElement::unit(g, j); };
  const std::vector<GroupElement> k1{e(3)}, k2{e(1)}, k3{e(0), e(2)};
  std::array<Subgroup, 3> k{Subgroup::generate(g, k1), Subgroup::generate(g, k2),
                            Subgroup::generate(g, k3)};
  std::array<FactorInput, 3> f;
  f[0] = {1, {e(0), e(0)}, {e(1), e(2)}};
  f[1] = {1, {e(2), e(2)}, {e(0), e(3)}};
  f[2] = {1, {e(1), e(1)}, {e(1), e(3)}};
  return AlgebraicDatum(g, k, std::move(f));
}

const std::vector<ExampleInfo>& registry() {
  static const std::vector<ExampleInfo> kRegistry{
      {"example1", {"n1", "n2", "n3"}, "three elliptic bases, Aut0 = Z_2^2"},
      {"example2a", {"n1", "n2", "n3"}, "sigma_3 = e1^n1 e2^n2, Aut0 = Z_2"},
      {"example2b", {"n1", "n2", "n3"}, "sigma_2 = e1^2 (n1 >= 2)"},
      {"example3", {"n"}, "non-free product-quotient, kernel quotient Z_2n"},
      {"example4", {},
       "corrected datum: the first vector is taken over K_1 and the eta of the third "
       "vector is (e2, e4) so that it generates G/K_3; admissible set and Aut0 = Z_2 "
       "verified by exhaustive search"},
  };
  return kRegistry;
}

std::map<std::string, std::int64_t> parse_params(std::string_view text) {
  std::map<std::string, std::int64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "parameter '" + std::string(item) + "' is not of the form key=value");
    const std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "parameter '" + std::string(key) + "' needs an integer value");
    out[std::string(key)] = v;
  }
  return out;
}

AlgebraicDatum build(std::string_view name, const std::map<std::string, std::int64_t>& params) {
  const ExampleInfo* info = nullptr;
  for (const auto& x : registry())
    if (x.name == name) info = &x;
  if (info == nullptr)
    throw Error(ErrorCode::kInvalidArgument, "unknown example '" + std::string(name) + "'");
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& p : info->params) known = known || p == key;
    if (!known)
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " has no parameter '" + key + "'");
  }
  auto get = [&](const char* key) {
    auto it = params.find(key);
    return it == params.end() ? std::int64_t{1} : it->second;
  };
  if (name == "example1") return example1(get("n1"), get("n2"), get("n3"));
  if (name == "example2a") return example2a(get("n1"), get("n2"), get("n3"));
  if (name == "example2b") return example2b(get("n1"), get("n2"), get("n3"));
  if (name == "example3") return example3(get("n"));
  return example4();
}

std::string provenance(std::string_view name) {
  for (const auto& x : registry())
    if (x.name == name) return x.provenance;
  return {};
}

}  // namespace isoprod::examples
