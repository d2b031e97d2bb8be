#include "hrds/hermitian.hpp"

#include <algorithm>
#include <limits>

#include "hrds/errors.hpp"

namespace hrds {

bool is_hermitian(const FieldSpec& field, const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (m(i, j).index >= field.q2()) return false;
      if (m(i, j) != field.conj(m(j, i))) return false;
    }
  return true;
}

HermMatrix::HermMatrix(const FieldSpec& field, Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw UsageError("hermitian matrix must be square");
  if (!is_hermitian(field, m_)) throw UsageError("matrix is not hermitian");
}

HermMatrix HermMatrix::zero(std::size_t n) { return HermMatrix(Unchecked{}, Matrix(n, n)); }

HermMatrix add(const FieldSpec& field, const HermMatrix& a, const HermMatrix& b) {
  return HermMatrix(HermMatrix::Unchecked{}, add(field.ext(), a.m_, b.m_));
}

HermMatrix sub(const FieldSpec& field, const HermMatrix& a, const HermMatrix& b) {
  return HermMatrix(HermMatrix::Unchecked{}, sub(field.ext(), a.m_, b.m_));
}

HermMatrix neg(const FieldSpec& field, const HermMatrix& a) {
  return HermMatrix(HermMatrix::Unchecked{}, scale(field.ext(), field.ext().neg(field.ext().one()), a.m_));
}

HermMatrix scale(const FieldSpec& field, Elem s, const HermMatrix& a) {
  if (!field.in_subfield(s)) throw UsageError("hermitian matrices can only be scaled by elements of F_q");
  return HermMatrix(HermMatrix::Unchecked{}, scale(field.ext(), s, a.m_));
}

std::size_t rank(const FieldSpec& field, const HermMatrix& a) { return rank(field.ext(), a.matrix()); }

std::optional<std::uint64_t> HermitianSpace::count(unsigned q, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    total *= q;
  }
  return total;
}

HermitianSpace::HermitianSpace(FieldPtr field, std::size_t n, std::uint64_t budget)
    : field_(std::move(field)), n_(n) {
  if (!field_) throw UsageError("null field");
  if (n_ == 0) throw UsageError("matrix dimension must be positive");
  const auto total = count(field_->q(), n_);
  if (!total) throw BudgetExceeded("enumeration of H_n(F_q^2)", std::numeric_limits<std::uint64_t>::max());
  if (*total > budget) throw BudgetExceeded("enumeration of H_n(F_q^2) exceeds budget", *total);
  size_ = *total;
}

HermMatrix HermitianSpace::at(std::uint64_t index) const {
  if (index >= size_) throw UsageError("hermitian index out of range");
  const FieldSpec& f = *field_;
  const auto sub = f.subfield_elements();
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    m(i, i) = sub[index % f.q()];
    index /= f.q();
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Elem x{static_cast<std::uint32_t>(index % f.q2())};
      index /= f.q2();
      m(i, j) = x;
      m(j, i) = f.conj(x);
    }
  return HermMatrix(HermMatrix::Unchecked{}, std::move(m));
}

std::uint64_t HermitianSpace::index_of(const HermMatrix& a) const {
  if (a.n() != n_) throw UsageError("matrix dimension does not match the space");
  const FieldSpec& f = *field_;
  std::uint64_t index = 0;
  for (std::size_t i = n_; i-- > 0;)
    for (std::size_t j = n_; j-- > i + 1;) index = index * f.q2() + a(i, j).index;
  for (std::size_t i = n_; i-- > 0;) index = index * f.q() + f.subfield_rank(a(i, i));
  return index;
}

RankSet::RankSet(FieldPtr field, std::size_t n, std::size_t k, std::vector<HermMatrix> members)
    : field_(std::move(field)), n_(n), k_(k) {
  if (!field_) throw UsageError("null field");
  if (n_ == 0) throw UsageError("matrix dimension must be positive");
  if (k_ == 0 || k_ > n_) throw UsageError("rank distance k must satisfy 0 < k <= n");
  members_.reserve(members.size());
  for (auto& m : members) insert(std::move(m));
}

bool RankSet::contains(const HermMatrix& a) const {
  return std::find(members_.begin(), members_.end(), a) != members_.end();
}

void RankSet::insert(HermMatrix a) {
  if (a.n() != n_) throw UsageError("member has dimension " + std::to_string(a.n()) + ", expected " + std::to_string(n_));
  if (!is_hermitian(*field_, a.matrix())) throw UsageError("member is not hermitian over this field");
  if (contains(a)) throw UsageError("duplicate member");
  members_.push_back(std::move(a));
}

bool same_members(const RankSet& a, const RankSet& b) {
  if (a.n_ != b.n_ || a.size() != b.size() || !(*a.field_ == *b.field_)) return false;
  auto x = a.members_;
  auto y = b.members_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::optional<RankViolation> first_violation(const FieldSpec& field, std::span<const HermMatrix> members,
                                             std::size_t k) {
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t r = rank(field, sub(field, members[i], members[j]));
      if (r != k) return RankViolation{i, j, r};
    }
    if (!members[j].is_zero()) {
      const std::size_t r = rank(field, members[j]);
      if (r != k) return RankViolation{j, std::nullopt, r};
    }
  }
  return std::nullopt;
}

RankSet translate_to_origin(const RankSet& u, const HermMatrix& a) {
  if (!u.contains(a)) throw UsageError("translate_to_origin: matrix is not a member of the set");
  const FieldSpec& f = *u.field();
  std::vector<HermMatrix> out;
  out.reserve(u.size());
  for (const auto& b : u.members()) out.push_back(sub(f, a, b));
  if (first_violation(f, out, u.k()))
    throw UsageError("translate_to_origin: input is not a constant rank-distance " + std::to_string(u.k()) + " set");
  return RankSet(u.field(), u.n(), u.k(), std::move(out));
}

Matrix subspace_of(const Matrix& a) {
  if (a.rows() != a.cols()) throw UsageError("subspace_of expects a square matrix");
  return vconcat(Matrix::identity(a.rows()), a);
}

int intersection_dim(const GaloisField& field, const Matrix& a, const Matrix& b) {
  const Matrix sa = subspace_of(a);
  const Matrix sb = subspace_of(b);
  const auto da = rank(field, sa);
  const auto db = rank(field, sb);
  const auto dj = rank(field, hconcat(sa, sb));
  return static_cast<int>(da + db - dj) - 1;
}

bool is_isotropic_in_hermitian_space(const FieldSpec& field, const Matrix& a) {
  const GaloisField& f = field.ext();
  const std::size_t n = a.rows();
  const Matrix basis = subspace_of(a);
  Matrix gram(2 * n, 2 * n);
  const Elem s = field.form_scalar();
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, n + i) = s;
    gram(n + i, i) = f.neg(s);
  }
  const Matrix form = mul(f, mul(f, conj_transpose(field, basis), gram), basis);
  return form.is_zero();
}

PGSubspace::PGSubspace(const GaloisField& field, Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() == 0 || basis_.cols() > basis_.rows()) throw UsageError("subspace basis has invalid shape");
  if (rank(field, basis_) != basis_.cols()) throw UsageError("subspace basis is not of full column rank");
}

}  // namespace hrds
