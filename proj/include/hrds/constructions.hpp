#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hrds/hermitian.hpp"

namespace hrds {

/// Parameters of the U_delta family in H_2(F_{q^2}). Delta and mu are F_q elements
/// (F_{q^2} wire indices lying in the subfield).
struct UdeltaParams {
  FieldPtr field;
  unsigned delta = 1;
  std::vector<Elem> Delta;
  Elem mu;

  /// Default Delta (the delta smallest F_q elements, which include 0) and mu = select_mu.
  static UdeltaParams make(FieldPtr field, unsigned delta);
  /// Throws UsageError unless 0 in Delta, |Delta| = delta in [1, q], Delta within F_q,
  /// and t^2 + (mu - 2)t + 1 has no root in F_q.
  void validate() const;
};

/// Whether t^2 + (mu - 2)t + 1 has no root in F_q.
bool mu_is_admissible(const FieldSpec& field, Elem mu);

/// Smallest-index mu in F_q with mu_is_admissible.
Elem select_mu(const FieldSpec& field);

/// {[[a,a],[a,0]], [[0,a],[a,mu a]] : a in Delta} together with {[[0,x],[conj x,0]] : x not in Delta}.
/// Size q^2 + delta - 1, k = 2.
RankSet construct_udelta(const UdeltaParams& params);

/// Symmetric n x n matrices over the subfield F_q of `field`.
struct SymmetricSpreadSet {
  FieldPtr field;
  std::size_t n = 0;
  std::vector<Matrix> members;
};

/// {M_m : m in F_{q^n}} with (M_m)_ij = Tr_{F_{q^n}/F_q}(m b_i b_j) for the basis
/// b_i = theta^i, theta the smallest-index element of degree n over F_q. Members are
/// listed in the wire order of m. Requires q^n <= 1024.
SymmetricSpreadSet trace_gram_spread_set(const FieldPtr& field, std::size_t n);

/// Re-reads symmetric F_q matrices as hermitian matrices over F_{q^2} with rank distance k.
/// Throws UsageError on a non-symmetric member or an entry outside F_q.
RankSet extend_to_hermitian(const SymmetricSpreadSet& u, std::size_t k);
RankSet extend_to_hermitian(const SymmetricSpreadSet& u);

/// A set of (r-1)-spaces of PG(n-1, q^2), each given by an n x r basis.
struct ProjectivePartialSpread {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<PGSubspace> members;

  /// First pair (i < j) whose spans meet, i.e. rank [X_i | X_j] < 2r.
  std::optional<std::pair<std::size_t, std::size_t>> first_overlap() const;
};

/// All points of PG(n-1, q^2); each representative has first nonzero coordinate 1.
/// Points are listed by the position of that 1, then by the remaining coordinates
/// read as a base-q^2 number with the last coordinate least significant.
ProjectivePartialSpread pg_point_spread(const FieldPtr& field, std::size_t n);

/// Field reduction of the points of PG(n/r - 1, q^{2r}) to (r-1)-spaces of PG(n-1, q^2).
/// Throws UsageError unless r divides n and q^{2r} <= 1024.
ProjectivePartialSpread desarguesian_spread(const FieldPtr& field, std::size_t n, std::size_t r);

/// {X_S conj(X_S)^T : S in D} with k = 2r; with `translate`, every member is shifted by
/// the image of the first subspace so the set contains 0. Throws UsageError naming the
/// first overlapping pair, or if 2r > n.
RankSet lift_partial_spread(const ProjectivePartialSpread& d, bool translate = true);

}  // namespace hrds
