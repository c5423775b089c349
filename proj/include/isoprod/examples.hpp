#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "isoprod/datum.hpp"

namespace isoprod::examples {

/// G = Z_{2n1} + Z_{2n2} + Z_{2n3}, K_i = <e_i>, all bases elliptic, one
/// branch element per factor: sigma_1 = e3^{n3}, sigma_2 = e1^{n1},
/// sigma_3 = e2^{n2} (each repeated to close the product relation).
AlgebraicDatum example1(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// As example1 but sigma_3 = e1^{n1} e2^{n2}.
AlgebraicDatum example2a(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// As example1 but sigma_2 = e1^2; needs n1 >= 2.
AlgebraicDatum example2b(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// G = Z_{2n}^3, sigma_1 = e2^n e3^n, sigma_2 = e3^n, sigma_3 = e2^n. Not free.
AlgebraicDatum example3(std::int64_t n);

/// Z_2^4 datum with K_1 = <e4>, K_2 = <e2>, K_3 = <e1, e3>, rebuilt so that
/// its vectors generate and its admissible set is the expected one.
AlgebraicDatum example4();

struct ExampleInfo {
  std::string name;
  std::vector<std::string> params;
  std::string provenance;
};

const std::vector<ExampleInfo>& registry();

/// Parses "n1=1,n2=2,n3=3" or "n=2". Throws Error(kInvalidArgument).
std::map<std::string, std::int64_t> parse_params(std::string_view text);

/// Builds a named example; missing parameters default to 1.
AlgebraicDatum build(std::string_view name, const std::map<std::string, std::int64_t>& params);

std::string provenance(std::string_view name);

}  // namespace isoprod::examples
