#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hrds/field_spec.hpp"
#include "hrds/matrix.hpp"

namespace hrds {

/// n x n matrix over F_{q^2} with A = conj(A)^T. Closed under addition and F_q scaling.
class HermMatrix {
public:
  HermMatrix() = default;
  /// Validates hermitian symmetry; throws UsageError otherwise.
  HermMatrix(const FieldSpec& field, Matrix m);

  static HermMatrix zero(std::size_t n);

  std::size_t n() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  bool is_zero() const noexcept { return m_.is_zero(); }

  friend bool operator==(const HermMatrix&, const HermMatrix&) = default;
  friend auto operator<=>(const HermMatrix& a, const HermMatrix& b) { return a.m_ <=> b.m_; }

private:
  struct Unchecked {};
  HermMatrix(Unchecked, Matrix m) : m_(std::move(m)) {}
  friend HermMatrix add(const FieldSpec&, const HermMatrix&, const HermMatrix&);
  friend HermMatrix sub(const FieldSpec&, const HermMatrix&, const HermMatrix&);
  friend HermMatrix neg(const FieldSpec&, const HermMatrix&);
  friend HermMatrix scale(const FieldSpec&, Elem, const HermMatrix&);
  friend class HermitianSpace;

  Matrix m_;
};

bool is_hermitian(const FieldSpec& field, const Matrix& m);

HermMatrix add(const FieldSpec& field, const HermMatrix& a, const HermMatrix& b);
HermMatrix sub(const FieldSpec& field, const HermMatrix& a, const HermMatrix& b);
HermMatrix neg(const FieldSpec& field, const HermMatrix& a);
/// `s` must lie in F_q (hermitian matrices are not an F_{q^2}-space).
HermMatrix scale(const FieldSpec& field, Elem s, const HermMatrix& a);

std::size_t rank(const FieldSpec& field, const HermMatrix& a);

/// H_n(F_{q^2}) as an indexable range of q^{n^2} matrices.
///
/// Index digits, least significant first: the n diagonal entries (base q, in
/// F_q wire order, entry (0,0) fastest), then the above-diagonal entries (base q^2,
/// row-major over i < j). Below-diagonal entries are the conjugates.
class HermitianSpace {
public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

  /// Throws BudgetExceeded when q^{n^2} > budget.
  HermitianSpace(FieldPtr field, std::size_t n, std::uint64_t budget = kDefaultBudget);

  /// q^{n^2}, or nothing on overflow.
  static std::optional<std::uint64_t> count(unsigned q, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  HermMatrix at(std::uint64_t index) const;
  std::uint64_t index_of(const HermMatrix& a) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
  }

private:
  FieldPtr field_;
  std::size_t n_;
  std::uint64_t size_;
};

/// A finite set of hermitian matrices with a declared rank distance k (0 < k <= n).
/// Construction checks shape, hermitian symmetry and distinctness only; whether
/// the constant rank-distance property holds is a separate question
/// (first_violation / is_constant_rank_distance).
class RankSet {
public:
  RankSet(FieldPtr field, std::size_t n, std::size_t k, std::vector<HermMatrix> members = {});

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<HermMatrix>& members() const noexcept { return members_; }
  bool contains(const HermMatrix& a) const;
  /// Throws UsageError on duplicates or a shape mismatch.
  void insert(HermMatrix a);

  /// Equality as sets (member order ignored).
  friend bool same_members(const RankSet& a, const RankSet& b);

private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<HermMatrix> members_;
};

/// A defining condition of a constant rank-distance k set that fails.
struct RankViolation {
  std::size_t first;   ///< index into the member list
  std::optional<std::size_t> second;  ///< empty when a single member has the wrong rank
  std::size_t observed_rank;
};

/// First pair (i < j) with rank(A_i - A_j) != k, or first nonzero member of rank != k,
/// scanning j in order; for each j the pairs (i, j) are checked before A_j itself.
std::optional<RankViolation> first_violation(const FieldSpec& field, std::span<const HermMatrix> members,
                                             std::size_t k);

/// {A - B : B in U}. Throws UsageError if A is not a member or the result is not a
/// constant rank-distance k set.
RankSet translate_to_origin(const RankSet& u, const HermMatrix& a);

/// Basis of S_A = <(u, Au)> as the 2n x n matrix [I ; A].
Matrix subspace_of(const Matrix& a);

/// Projective dimension of S_A meet S_B, computed from the subspaces themselves
/// (-1 when they are disjoint).
int intersection_dim(const GaloisField& field, const Matrix& a, const Matrix& b);

/// Whether S_A is totally isotropic for the hermitian form with Gram matrix
/// [[0, aI], [-aI, 0]], a = field.form_scalar().
bool is_isotropic_in_hermitian_space(const FieldSpec& field, const Matrix& a);

/// An (r-1)-space of PG(n-1, F) given by an n x r basis of full column rank.
class PGSubspace {
public:
  /// Throws UsageError if the basis is rank deficient.
  PGSubspace(const GaloisField& field, Matrix basis);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

private:
  Matrix basis_;
};

}  // namespace hrds
