#pragma once

// Characters of (H_n(F_{q^2}), +) and the eigenvalue table of the hermitian forms
// association scheme, computed two ways: closed forms / three-term recurrence in
// exact integers, and brute-force character sums over the enumerated space.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "hrds/hermitian.hpp"

namespace hrds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms; den may be negative.
Rational make_rational(const BigInt& num, const BigInt& den);

enum class Mode { brute, formula };

/// A sum of p-th roots of unity, sum_c counts[c] * eps^c, kept as exponent counts.
/// It is a rational integer exactly when counts[1] == ... == counts[p-1].
class CharacterSum {
public:
  explicit CharacterSum(unsigned p) : counts_(p, 0) {}

  void add(unsigned exponent, std::uint64_t times = 1) { counts_.at(exponent) += times; }
  void merge(const CharacterSum& other);
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t terms() const noexcept;
  bool is_rational() const noexcept;
  /// counts[0] - counts[1]; throws ConsistencyError when the sum is not rational.
  BigInt value() const;

private:
  std::vector<std::uint64_t> counts_;
};

/// Budget on the number of vectors w in F_{q^2}^n visited by brute-force modes.
inline constexpr std::uint64_t kVectorBudget = std::uint64_t{1} << 24;

/// N_h(a) = #{w : conj(w)^T h w = a}, for a in F_q.
BigInt count_Nh(const FieldSpec& field, const HermMatrix& h, Elem a, Mode mode,
                std::uint64_t budget = kVectorBudget);

/// chi(h) = sum_w eps^{tr(conj(w)^T h w)}.
BigInt chi(const FieldSpec& field, const HermMatrix& h, Mode mode, std::uint64_t budget = kVectorBudget);

/// tr(Tr(conj(X)^T Y)) in F_p.
unsigned pairing_trace(const FieldSpec& field, const HermMatrix& x, const HermMatrix& y);

/// P_i(j) by brute force: sum of eps^{tr(Tr(conj(X)^T Y))} over every rank-i X, for the
/// given rank-j matrix Y.
BigInt char_value_P(const HermitianSpace& space, std::size_t i, const HermMatrix& y);
/// Same, with Y the first rank-j matrix in enumeration order.
BigInt char_value_P(const HermitianSpace& space, std::size_t i, std::size_t j);

/// Exact (n+1) x (n+1) eigenvalue table, entry (i, j) = P_i(j). Also the dual table Q.
struct EigenTable {
  unsigned q = 0;
  std::size_t n = 0;
  std::vector<std::vector<BigInt>> P;

  const BigInt& operator()(std::size_t i, std::size_t j) const { return P.at(i).at(j); }
  friend bool operator==(const EigenTable&, const EigenTable&) = default;
};

/// Row 0 all ones, row 1 from its closed form, rows 2..n from the three-term
/// recurrence. Every division is checked for exactness and the table invariants
/// are verified before returning (ConsistencyError otherwise).
EigenTable eigen_table(unsigned q, std::size_t n);

/// All entries by brute-force character sums; `threads` shards the X enumeration.
EigenTable brute_eigen_table(const HermitianSpace& space, unsigned threads = 1);

/// Throws ConsistencyError naming the first failed invariant.
void verify_table_invariants(const EigenTable& t);

/// Number of hermitian n x n matrices of rank j (Gaussian binomial product).
BigInt valency(std::size_t j, unsigned q, std::size_t n);
/// ((-q)^{2n-j} - 1) / (q + 1)
BigInt p1_closed_form(std::size_t j, unsigned q, std::size_t n);
/// prod_{i=1..k} ((-q)^{i-1} - (-q)^n) / ((-q)^i - 1)
BigInt pk_at_n(std::size_t k, unsigned q, std::size_t n);

/// Recurrence coefficients of P_1 P_k = c_{k+1} P_{k+1} + a_k P_k + b_{k-1} P_{k-1}.
BigInt recurrence_b(std::size_t i, unsigned q, std::size_t n);
BigInt recurrence_c(std::size_t i, unsigned q);
BigInt recurrence_a(std::size_t i, unsigned q, std::size_t n);

/// Throws ConsistencyError if den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);
BigInt ipow(const BigInt& base, std::size_t exponent);

struct InnerDistribution {
  std::vector<Rational> a;  ///< a_i = #{ordered pairs at rank distance i} / |U|
  std::size_t set_size = 0;
};

/// Throws UsageError for an empty set.
InnerDistribution inner_distribution(const FieldSpec& field, std::span<const HermMatrix> u);
/// a_0 = 1, a_k = size - 1, zero elsewhere: the distribution of any constant rank-distance k set.
InnerDistribution constant_distance_distribution(std::size_t n, std::size_t k, std::size_t size);

struct DelsarteResult {
  std::vector<Rational> aq;  ///< (aQ)_i = sum_j a_j P_i(j)
  bool feasible = false;
};

DelsarteResult delsarte_check(const InnerDistribution& a, const EigenTable& t);

/// For an additive subgroup U with |U| = p^d and A_k members of rank k:
/// sum_k (-1)^k A_k p^{(2n-k)e - d}. Throws UsageError if |U| is not a power of p.
Rational subgroup_character_multiplicity(const FieldSpec& field, std::span<const HermMatrix> u);

}  // namespace hrds
