#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hrds/hermitian.hpp"

namespace hrds {

struct RankCheck {
  bool ok = true;
  std::optional<RankViolation> violation;
};

/// Both defining conditions: pairwise differences and nonzero members have rank k.
RankCheck is_constant_rank_distance(const FieldSpec& field, std::span<const HermMatrix> members, std::size_t k);
RankCheck is_constant_rank_distance(const RankSet& u);

/// Every B not in U with rank(B) = k (unless B = 0) and rank(B - A) = k for all A in U,
/// in enumeration order. Throws BudgetExceeded when q^{n^2} exceeds `budget`.
std::vector<HermMatrix> extension_candidates(const RankSet& u,
                                             std::uint64_t budget = HermitianSpace::kDefaultBudget);

bool is_maximal(const RankSet& u, std::uint64_t budget = HermitianSpace::kDefaultBudget);

/// Adjoins admissible matrices in the given order of enumeration indices (all of
/// H_n in index order when empty) until none is left. The result is maximal only when
/// `order` covers every matrix.
RankSet greedy_complete(const RankSet& u, std::span<const std::uint64_t> order = {},
                        std::uint64_t budget = HermitianSpace::kDefaultBudget);

/// The relation "rank of the difference is k" on an explicit vertex list.
class RankGraph {
public:
  RankGraph(FieldPtr field, std::size_t k, std::vector<HermMatrix> vertices);

  /// All rank-k matrices of H_n, in enumeration order.
  static RankGraph neighborhood_of_zero(const HermitianSpace& space, std::size_t k);

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t k() const noexcept { return k_; }
  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<HermMatrix>& vertices() const noexcept { return vertices_; }
  bool adjacent(std::size_t a, std::size_t b) const noexcept {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(std::size_t a) const noexcept { return rows_.data() + a * words_; }

private:
  FieldPtr field_;
  std::size_t k_;
  std::vector<HermMatrix> vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct SpectrumBudget {
  std::size_t max_vertices = 4096;
  std::chrono::milliseconds max_time{std::chrono::minutes(10)};
  unsigned threads = 1;
  /// Restrict to cliques through the first rank-k matrix (see maximal_set_spectrum).
  /// Off enumerates the whole rank-k neighborhood of 0; used to cross-check the reduction.
  bool fix_first_vertex = true;
};

struct SpectrumResult {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  /// size -> witness (a maximal set containing 0; the lexicographically smallest
  /// member-index list found for that size)
  std::map<std::size_t, std::vector<HermMatrix>> witnesses;
  /// False when the time budget ran out; the sizes are then only a lower view.
  bool complete = true;
  std::uint64_t cliques = 0;  ///< maximal cliques visited

  std::vector<std::size_t> sizes() const;
};

/// Sizes of all maximal constant rank-distance k sets in H_n(F_{q^2}).
///
/// Each such set contains 0, and congruence X -> P X P* (P invertible) fixes 0, preserves
/// rank distances and acts transitively on rank-k matrices. So every maximal set of size
/// >= 2 is equivalent to one through 0 and the first rank-k matrix v0, and it suffices
/// to enumerate maximal cliques in the common neighborhood of 0 and v0.
/// Throws BudgetExceeded when that neighborhood exceeds max_vertices.
SpectrumResult maximal_set_spectrum(const FieldPtr& field, std::size_t n, std::size_t k,
                                    const SpectrumBudget& budget = {});

}  // namespace hrds
