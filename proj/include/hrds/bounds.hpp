#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrds/scheme.hpp"

namespace hrds {

enum class BoundScope {
  general,      ///< holds for every constant rank-distance k set
  linear_only,  ///< holds for additively closed sets only; never used to refute a general set
  literature,   ///< quoted from prior work, not derived here; reported but not certified
};

const char* to_string(BoundScope s);

struct BoundEntry {
  std::string name;
  Rational value;      ///< exact value of the bound expression
  BigInt ceiling;      ///< floor(value): the integer size bound
  std::string condition;
  BoundScope scope;
  std::string source;  ///< the result this number instantiates
};

struct BoundReport {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<BoundEntry> entries;

  /// Minimum ceiling over general-scope entries.
  std::optional<BigInt> certified_ceiling() const;
};

/// Every upper bound applicable to constant rank-distance k sets in H_n(F_{q^2}).
/// Requires 1 <= k <= n.
BoundReport bound_catalog(unsigned q, std::size_t n, std::size_t k);

/// Rank-<=2 difference-set bound for odd n >= 3 with the inner-distribution refinement:
/// q^{2n-1} + q^n - q^{n-1} - a_1 q^{n-1}.
BigInt rank_at_most_two_bound(unsigned q, std::size_t n, const Rational& a1);

}  // namespace hrds
