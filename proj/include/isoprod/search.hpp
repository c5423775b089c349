#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/aut0.hpp"
#include "isoprod/datum.hpp"
#include "isoprod/execution.hpp"

namespace isoprod {

enum class KernelPolicy { kAllCyclic, kExplicit };

/// How the 2g' eta entries of each vector are chosen. kCanonical keeps only
/// the lexicographically least eta tuple that makes the vector generate;
/// kAll keeps every generating tuple.
enum class EtaPolicy { kCanonical, kAll };

struct SearchSpec {
  std::vector<std::int64_t> group;
  KernelPolicy kernel_policy = KernelPolicy::kAllCyclic;
  /// Kernel triples for kExplicit, each kernel given by generator tuples.
  std::vector<std::array<std::vector<std::vector<std::int64_t>>, 3>> kernels;
  std::array<std::int64_t, 3> g_prime{1, 1, 1};
  int max_branch = 2;
  std::optional<std::int64_t> max_branch_order;
  EtaPolicy eta = EtaPolicy::kCanonical;
  /// Upper bound on the estimated raw candidate count.
  std::int64_t cap = 10'000'000;
  /// Permutes the work partition only; results do not depend on it.
  std::uint64_t seed = 0;
};

/// Raw candidate count before any pruning, saturating at INT64_MAX.
std::int64_t estimate_space(const SearchSpec& spec);

/// Every valid datum in the space, one per branch multiset per vector, in
/// canonical order (kernel triple, then vector candidates of factors 1, 2, 3).
/// Throws Error(kSearchCap) when the estimate exceeds spec.cap.
std::vector<AlgebraicDatum> enumerate_data(const SearchSpec& spec,
                                           Execution exec = Execution::kParallel);

struct SurveyBin {
  InvariantFactors factors;
  std::int64_t count = 0;
  std::map<Aut0Status, std::int64_t> by_status;
  /// Position in the enumeration of the first datum in this bin.
  std::size_t first = 0;
};

struct Survey {
  std::vector<AlgebraicDatum> data;
  std::vector<Aut0Result> results;
  /// Sorted by invariant factors.
  std::vector<SurveyBin> histogram;
  std::int64_t estimate = 0;
  /// First data with the smallest and largest quotient order.
  std::optional<std::size_t> smallest;
  std::optional<std::size_t> largest;
};

/// enumerate_data followed by aut0 on each datum. A theorem violation is
/// rethrown with the offending datum serialized into the message.
Survey survey(const SearchSpec& spec, Execution exec = Execution::kParallel);

}  // namespace isoprod
