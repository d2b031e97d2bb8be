#include "hrds/bounds.hpp"

#include <algorithm>

#include "hrds/errors.hpp"

namespace hrds {

namespace {

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem < 0) quot -= 1;
  return quot;
}

BoundEntry entry(std::string name, Rational value, std::string condition, BoundScope scope, std::string source) {
  BigInt ceiling = floor_of(value);
  return BoundEntry{std::move(name), std::move(value), std::move(ceiling), std::move(condition), scope,
                    std::move(source)};
}

BigInt pw(unsigned q, std::size_t e) { return ipow(BigInt(q), e); }

}  // namespace

const char* to_string(BoundScope s) {
  switch (s) {
    case BoundScope::general: return "general";
    case BoundScope::linear_only: return "linear-only";
    case BoundScope::literature: return "literature";
  }
  return "?";
}

std::optional<BigInt> BoundReport::certified_ceiling() const {
  std::optional<BigInt> best;
  for (const auto& e : entries)
    if (e.scope == BoundScope::general && (!best || e.ceiling < *best)) best = e.ceiling;
  return best;
}

BigInt rank_at_most_two_bound(unsigned q, std::size_t n, const Rational& a1) {
  if (n < 3 || n % 2 == 0) throw UsageError("rank-<=2 bound needs odd n >= 3");
  const Rational v = Rational(pw(q, 2 * n - 1) + pw(q, n) - pw(q, n - 1)) - a1 * Rational(pw(q, n - 1));
  return floor_of(v);
}

BoundReport bound_catalog(unsigned q, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw UsageError("bound catalog needs 1 <= k <= n");
  const EigenTable t = eigen_table(q, n);
  BoundReport r{q, n, k, {}};
  const bool odd_k = k % 2 == 1;

  r.entries.push_back(entry("linear character bound", Rational(odd_k ? pw(q, k) : pw(q, 2 * n - k)),
                            odd_k ? "U additively closed; k odd: q^k" : "U additively closed; k even: q^(2n-k)",
                            BoundScope::linear_only, "character multiplicity of chi restricted to a subgroup"));

  if (odd_k)
    r.entries.push_back(entry("odd-rank bound", Rational(pw(q, k)), "k odd", BoundScope::general,
                              "Delsarte inequality with P_1: |U| <= 1 - P_1(0)/P_1(k) < q^k + 1"));

  for (std::size_t i = 1; i <= n; ++i) {
    if (t(i, k) < 0)
      r.entries.push_back(entry("Delsarte ratio bound (i=" + std::to_string(i) + ")",
                                1 - make_rational(t(i, 0), t(i, k)),
                                "P_" + std::to_string(i) + "(" + std::to_string(k) + ") = " + t(i, k).str() + " < 0",
                                BoundScope::general, "|U| <= 1 - P_i(0)/P_i(k)"));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (t(k, i) < 0)
      r.entries.push_back(entry("dual ratio bound (i=" + std::to_string(i) + ")",
                                1 - make_rational(t(k, 0), t(k, i)),
                                "P_" + std::to_string(k) + "(" + std::to_string(i) + ") = " + t(k, i).str() + " < 0",
                                BoundScope::general, "|U| <= 1 - P_k(0)/P_k(i) via P_i(k)/P_i(0) = P_k(i)/P_k(0)"));
  }

  if (k % 4 == 2) {
    BigInt prod = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t e = n - i + 1;
      prod *= pw(q, e) + (e % 2 == 0 ? 1 : -1);
    }
    r.entries.push_back(entry("k = 2 mod 4 product bound", Rational(1 + prod), "k = 2 mod 4", BoundScope::general,
                              "1 + prod_{i=1..k} (q^(n-i+1) + (-1)^(n-i+1)), from P_k(n) < 0"));
  }

  const bool thas_rank2 = k == 2;
  const bool thas_spread = k == n && n % 2 == 0;
  if (thas_rank2 || thas_spread) {
    const BigInt sgn = (n - 1) % 2 == 0 ? 1 : -1;
    const BigInt v = pw(q, 2 * n - 1) + sgn * (pw(q, n) - pw(q, n - 1));
    r.entries.push_back(entry("rank-2 closed form (Thas form)", Rational(v),
                              thas_rank2 ? "k = 2" : "k = n, n even (partial spread sets, dual form)",
                              BoundScope::general, "q^(2n-1) + (-1)^(n-1) (q^n - q^(n-1))"));
  }

  if (n >= 3 && n % 2 == 1 && k <= 2) {
    r.entries.push_back(entry("rank-<=2 difference bound", Rational(rank_at_most_two_bound(q, n, 0)),
                              "n odd >= 3; all differences of rank <= 2 (refined: subtract a_1 q^(n-1))",
                              BoundScope::general, "Delsarte inequality at column n with a_i = 0 for i > 2"));
  }

  if (n == 2 && k == 2) {
    r.entries.push_back(entry("n = 2 partial spread set bound", make_rational(pw(q, 3) + q, 2), "n = 2, k = 2",
                              BoundScope::literature, "(q^3 + q)/2, quoted from prior work"));
  }
  if (k == n && n % 2 == 1) {
    r.entries.push_back(entry("odd-n partial spread set bound", Rational(pw(q, n)), "k = n, n odd",
                              BoundScope::literature, "partial spreads of H(2n-1,q^2), n odd, have size <= q^n + 1"));
  }
  return r;
}

}  // namespace hrds
