#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddc/ddc_code.hpp"

namespace ddc {

// Default cap on full-enumeration work (number of messages, q^k).
inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 22;

// Thrown when an exhaustive computation would enumerate more than the caller's
// budget; the accelerated engine must be used instead.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct WeightDistribution {
  long length = 0;
  int q = 0;
  std::vector<uint64_t> counts;  // A_0 .. A_length

  bool operator==(const WeightDistribution&) const = default;
};

struct DistanceResult {
  long distance = 0;             // exact, or an upper bound when !distance_exact
  bool distance_exact = true;
  uint64_t min_words = 0;        // A_d; meaningful only when min_words_exact
  bool min_words_exact = false;
};

// Enumerates all q^k - 1 nonzero codewords (message-space walk); exact
// distance and A_d. Throws BudgetExceeded when q^k > budget.
DistanceResult min_distance_exhaustive(const DdcCode& code, uint64_t budget = kDefaultBudget,
                                       int workers = 1);

struct AcceleratedOptions {
  int workers = 1;
  // Complete enumeration one level past the distance bound so A_d is exact.
  bool count_min_words = true;
  // If > 0: abort (distance_exact = false) once a codeword of weight
  // < prune_below is found; the true distance is <= the returned value.
  // Codes whose distance is >= prune_below always run to completion.
  long prune_below = 0;
};

// Information-set (Brouwer-Zimmermann) minimum-distance search: enumerates
// messages of increasing weight over a greedy family of systematic generator
// matrices and stops when the covered-information-set lower bound meets the
// best weight found. Always exact on normal termination; degenerates to full
// enumeration in the worst case (level w = k covers the whole message space).
DistanceResult min_distance_accelerated(const DdcCode& code, const AcceleratedOptions& opts = {});

// Full A_0..A_n by enumeration. Throws BudgetExceeded when q^k > budget.
WeightDistribution weight_distribution(const DdcCode& code, uint64_t budget = kDefaultBudget,
                                       int workers = 1);

// Weight distribution of the dual of a [length, k] code with distribution wd,
// via the MacWilliams identity over GF(q). Exact integer arithmetic; throws
// std::overflow_error if a dual count exceeds uint64, std::invalid_argument on
// inconsistent input (counts must sum to q^k).
WeightDistribution macwilliams(const WeightDistribution& wd, long k);

enum class BinaryType { none, type_i, type_ii };

struct DualityClass {
  bool self_dual_euclidean = false;
  std::optional<bool> self_dual_hermitian;   // engaged iff q = 4
  BinaryType binary_type = BinaryType::none; // != none iff q = 2 and self-dual
  std::optional<bool> formally_self_dual;    // nullopt = unknown (over wd_budget)
};

// Gram-matrix self-duality tests (always run; O(k^2 n)) plus the
// weight-distribution-based formally-self-dual test, which is skipped (left
// unknown) when q^k > wd_budget. Pass wd_budget = 0 to always skip it.
DualityClass classify(const DdcCode& code, uint64_t wd_budget = kDefaultBudget);

struct AnalyzeOptions {
  uint64_t budget = kDefaultBudget;  // exhaustive / weight-distribution cap
  int workers = 1;
  bool count_min_words = true;       // exact A_d from the accelerated engine
};

struct CodeReport {
  long length = 0;
  long dimension = 0;
  long distance = 0;
  uint64_t min_words = 0;
  bool min_words_exact = false;
  DualityClass duality;
  std::string method;  // "exhaustive" | "accelerated"
  DdcCode code;
};

// Distance (exhaustive within budget, else accelerated) + duality class.
CodeReport analyze(const DdcCode& code, const AnalyzeOptions& opts = {});

}  // namespace ddc
