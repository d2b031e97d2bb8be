#include "hrds/scheme.hpp"

#include <algorithm>
#include <thread>

#include "hrds/errors.hpp"

namespace hrds {

namespace {

BigInt neg_pow(unsigned q, std::size_t e) {
  BigInt r = ipow(BigInt(q), e);
  return (e % 2 == 1) ? BigInt(-r) : r;
}

BigInt sign(std::size_t k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

std::uint64_t vector_count(const FieldSpec& field, std::size_t n, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / field.q2()) throw BudgetExceeded("vector enumeration exceeds budget", total * field.q2());
    total *= field.q2();
  }
  return total;
}

/// conj(w)^T h w for w given by its base-q^2 digits.
Elem hermitian_value(const FieldSpec& field, const HermMatrix& h, const std::vector<Elem>& w) {
  const GaloisField& f = field.ext();
  Elem acc = f.zero();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].index == 0) continue;
    Elem row = f.zero();
    for (std::size_t j = 0; j < w.size(); ++j) row = f.add(row, f.mul(h(i, j), w[j]));
    acc = f.add(acc, f.mul(field.conj(w[i]), row));
  }
  return acc;
}

/// Histogram of h(w) over all w, indexed by wire index of the F_q value.
std::vector<std::uint64_t> value_histogram(const FieldSpec& field, const HermMatrix& h, std::uint64_t budget) {
  const std::size_t n = h.n();
  const std::uint64_t total = vector_count(field, n, budget);
  std::vector<std::uint64_t> hist(field.q2(), 0);
  std::vector<Elem> w(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = Elem{static_cast<std::uint32_t>(x % field.q2())};
      x /= field.q2();
    }
    ++hist[hermitian_value(field, h, w).index];
  }
  return hist;
}

}  // namespace

BigInt ipow(const BigInt& base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0) throw ConsistencyError(std::string(context) + ": division by zero");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0)
    throw ConsistencyError(std::string(context) + ": inexact division " + num.str() + " / " + den.str());
  return quot;
}

void CharacterSum::merge(const CharacterSum& other) {
  if (other.counts_.size() != counts_.size()) throw UsageError("character sums over different p");
  for (std::size_t c = 0; c < counts_.size(); ++c) counts_[c] += other.counts_[c];
}

std::uint64_t CharacterSum::terms() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

bool CharacterSum::is_rational() const noexcept {
  return std::all_of(counts_.begin() + 1, counts_.end(), [&](std::uint64_t c) { return c == counts_[1]; });
}

BigInt CharacterSum::value() const {
  if (!is_rational()) throw ConsistencyError("character sum does not reduce to a rational integer");
  return BigInt(counts_[0]) - BigInt(counts_[1]);
}

BigInt count_Nh(const FieldSpec& field, const HermMatrix& h, Elem a, Mode mode, std::uint64_t budget) {
  if (!field.in_subfield(a)) throw UsageError("N_h(a) needs a in F_q");
  if (mode == Mode::brute) return BigInt(value_histogram(field, h, budget)[a.index]);

  const std::size_t n = h.n();
  const std::size_t k = rank(field, h);
  const BigInt q = field.q();
  const BigInt scale = ipow(q, 2 * n - k - 1);
  if (a.index == 0) return scale * (ipow(q, k) + sign(k) * (q - 1));
  return scale * (ipow(q, k) - sign(k));
}

BigInt chi(const FieldSpec& field, const HermMatrix& h, Mode mode, std::uint64_t budget) {
  if (mode == Mode::formula) {
    const std::size_t k = rank(field, h);
    return sign(k) * ipow(BigInt(field.q()), 2 * h.n() - k);
  }
  const auto hist = value_histogram(field, h, budget);
  CharacterSum sum(field.p());
  for (Elem a : field.subfield_elements()) sum.add(field.abs_trace(a), hist[a.index]);
  return sum.value();
}

unsigned pairing_trace(const FieldSpec& field, const HermMatrix& x, const HermMatrix& y) {
  const GaloisField& f = field.ext();
  Elem acc = f.zero();
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(field.conj(x(i, j)), y(i, j)));
  return field.abs_trace(acc);
}

BigInt char_value_P(const HermitianSpace& space, std::size_t i, const HermMatrix& y) {
  const FieldSpec& field = *space.field();
  CharacterSum sum(field.p());
  space.for_each([&](const HermMatrix& x) {
    if (rank(field, x) == i) sum.add(pairing_trace(field, x, y));
  });
  return sum.value();
}

BigInt char_value_P(const HermitianSpace& space, std::size_t i, std::size_t j) {
  if (i > space.n() || j > space.n()) throw UsageError("character index out of range");
  const FieldSpec& field = *space.field();
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    const HermMatrix y = space.at(idx);
    if (rank(field, y) == j) return char_value_P(space, i, y);
  }
  throw ConsistencyError("no matrix of the requested rank");
}

EigenTable brute_eigen_table(const HermitianSpace& space, unsigned threads) {
  const FieldSpec& field = *space.field();
  const std::size_t n = space.n();
  std::vector<HermMatrix> ys(n + 1);
  std::vector<bool> found(n + 1, false);
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    const HermMatrix y = space.at(idx);
    const auto r = rank(field, y);
    if (!found[r]) {
      found[r] = true;
      ys[r] = y;
    }
  }

  using Grid = std::vector<std::vector<CharacterSum>>;
  auto empty_grid = [&] { return Grid(n + 1, std::vector<CharacterSum>(n + 1, CharacterSum(field.p()))); };
  threads = std::max(1u, threads);
  std::vector<Grid> partial(threads, empty_grid());
  auto work = [&](unsigned t) {
    Grid& g = partial[t];
    for (std::uint64_t idx = t; idx < space.size(); idx += threads) {
      const HermMatrix x = space.at(idx);
      const auto i = rank(field, x);
      for (std::size_t j = 0; j <= n; ++j) g[i][j].add(pairing_trace(field, x, ys[j]));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  EigenTable table{field.q(), n, std::vector<std::vector<BigInt>>(n + 1, std::vector<BigInt>(n + 1))};
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      CharacterSum s(field.p());
      for (const auto& g : partial) s.merge(g[i][j]);
      table.P[i][j] = s.value();
    }
  return table;
}

BigInt valency(std::size_t j, unsigned q, std::size_t n) {
  if (j > n) throw UsageError("valency index out of range");
  const BigInt Q = BigInt(q) * q;
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < j; ++i) {
    num *= ipow(Q, n - i) - 1;
    den *= ipow(Q, i + 1) - 1;
  }
  BigInt result = exact_div(num, den, "gaussian binomial");
  result *= ipow(BigInt(q), j * (j - 1) / 2);
  for (std::size_t i = 1; i <= j; ++i) result *= ipow(BigInt(q), i) + sign(i);
  return result;
}

BigInt p1_closed_form(std::size_t j, unsigned q, std::size_t n) {
  return exact_div(neg_pow(q, 2 * n - j) - 1, BigInt(q) + 1, "P_1 closed form");
}

BigInt pk_at_n(std::size_t k, unsigned q, std::size_t n) {
  Rational r = 1;
  for (std::size_t i = 1; i <= k; ++i) r *= make_rational(neg_pow(q, i - 1) - neg_pow(q, n), neg_pow(q, i) - 1);
  if (boost::multiprecision::denominator(r) != 1) throw ConsistencyError("P_k(n) product is not an integer");
  return boost::multiprecision::numerator(r);
}

BigInt recurrence_b(std::size_t i, unsigned q, std::size_t n) {
  return exact_div(ipow(BigInt(q), 2 * n) - ipow(BigInt(q), 2 * i), BigInt(q) + 1, "b_i");
}

BigInt recurrence_c(std::size_t i, unsigned q) {
  if (i == 0) return 0;
  return neg_pow(q, i - 1) * exact_div(neg_pow(q, i) - 1, BigInt(-static_cast<int>(q)) - 1, "c_i");
}

BigInt recurrence_a(std::size_t i, unsigned q, std::size_t n) {
  return recurrence_b(0, q, n) - recurrence_b(i, q, n) - recurrence_c(i, q);
}

EigenTable eigen_table(unsigned q, std::size_t n) {
  if (q < 2) throw UsageError("q must be at least 2");
  if (n == 0) throw UsageError("n must be positive");
  EigenTable t{q, n, std::vector<std::vector<BigInt>>(n + 1, std::vector<BigInt>(n + 1))};
  for (std::size_t j = 0; j <= n; ++j) {
    t.P[0][j] = 1;
    t.P[1][j] = p1_closed_form(j, q, n);
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    const BigInt a = recurrence_a(k, q, n);
    const BigInt b = recurrence_b(k - 1, q, n);
    const BigInt c = recurrence_c(k + 1, q);
    for (std::size_t j = 0; j <= n; ++j) {
      const BigInt lhs = t.P[1][j] * t.P[k][j] - a * t.P[k][j] - b * t.P[k - 1][j];
      t.P[k + 1][j] = exact_div(lhs, c, "three-term recurrence");
    }
  }
  verify_table_invariants(t);
  return t;
}

void verify_table_invariants(const EigenTable& t) {
  const std::size_t n = t.n;
  const unsigned q = t.q;
  auto fail = [](const std::string& what) { throw ConsistencyError("eigen table invariant failed: " + what); };
  if (t.P.size() != n + 1) fail("shape");
  for (std::size_t j = 0; j <= n; ++j) {
    if (t(0, j) != 1) fail("P_0(" + std::to_string(j) + ") != 1");
    if (t(1, j) != p1_closed_form(j, q, n)) fail("P_1(" + std::to_string(j) + ") closed form");
    if (t(j, 0) != valency(j, q, n)) fail("P_" + std::to_string(j) + "(0) valency");
    if (t(j, n) != pk_at_n(j, q, n)) fail("P_" + std::to_string(j) + "(n) product formula");
  }
  const BigInt total = ipow(BigInt(q), n * n);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += t(i, j);
    if (s != (j == 0 ? total : BigInt(0))) fail("column sum " + std::to_string(j));
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= n; ++k)
      if (t(i, k) * t(k, 0) != t(k, i) * t(i, 0))
        fail("ratio identity at (" + std::to_string(i) + "," + std::to_string(k) + ")");
}

InnerDistribution inner_distribution(const FieldSpec& field, std::span<const HermMatrix> u) {
  if (u.empty()) throw UsageError("inner distribution of an empty set");
  const std::size_t n = u.front().n();
  std::vector<std::uint64_t> pairs(n + 1, 0);
  pairs[0] = u.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) pairs[rank(field, sub(field, u[i], u[j]))] += 2;
  InnerDistribution d;
  d.set_size = u.size();
  for (auto c : pairs) d.a.push_back(make_rational(BigInt(c), BigInt(u.size())));
  return d;
}

InnerDistribution constant_distance_distribution(std::size_t n, std::size_t k, std::size_t size) {
  if (size == 0) throw UsageError("inner distribution of an empty set");
  if (k == 0 || k > n) throw UsageError("rank distance out of range");
  InnerDistribution d;
  d.set_size = size;
  d.a.assign(n + 1, Rational(0));
  d.a[0] = 1;
  d.a[k] = Rational(static_cast<long long>(size) - 1);
  return d;
}

DelsarteResult delsarte_check(const InnerDistribution& a, const EigenTable& t) {
  if (a.a.size() != t.n + 1) throw UsageError("distribution and table dimensions differ");
  DelsarteResult r;
  r.feasible = true;
  for (std::size_t i = 0; i <= t.n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j <= t.n; ++j) s += a.a[j] * Rational(t(i, j));
    if (s < 0) r.feasible = false;
    r.aq.push_back(s);
  }
  return r;
}

Rational subgroup_character_multiplicity(const FieldSpec& field, std::span<const HermMatrix> u) {
  if (u.empty()) throw UsageError("empty set");
  std::size_t d = 0;
  std::size_t size = u.size();
  while (size % field.p() == 0) {
    size /= field.p();
    ++d;
  }
  if (size != 1) throw UsageError("set size is not a power of p");
  const std::size_t n = u.front().n();
  std::vector<std::uint64_t> by_rank(n + 1, 0);
  for (const auto& h : u) ++by_rank[rank(field, h)];
  Rational total = 0;
  const BigInt p = field.p();
  for (std::size_t k = 0; k <= n; ++k) {
    const long long exponent = static_cast<long long>((2 * n - k) * field.e()) - static_cast<long long>(d);
    const Rational power = exponent >= 0 ? Rational(ipow(p, static_cast<std::size_t>(exponent)))
                                         : make_rational(BigInt(1), ipow(p, static_cast<std::size_t>(-exponent)));
    total += Rational(sign(k) * by_rank[k]) * power;
  }
  return total;
}

}  // namespace hrds
