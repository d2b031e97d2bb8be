#include <random>

#include "doctest.h"
#include "hrds/errors.hpp"
#include "hrds/scheme.hpp"

using namespace hrds;

namespace {

using Table = std::vector<std::vector<long long>>;

// Frozen from brute-force character sums over the full enumeration of H_n(F_{q^2}).
const Table kTable22{{1, 1, 1}, {5, -3, 1}, {10, 2, -2}};
const Table kTable23{{1, 1, 1, 1}, {21, -11, 5, -3}, {210, 50, 2, -6}, {280, -40, -8, 8}};
const Table kTable32{{1, 1, 1}, {20, -7, 2}, {60, 6, -3}};

void check_table(const EigenTable& t, const Table& expected) {
  REQUIRE(t.P.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected.size(); ++j) CHECK(t(i, j) == expected[i][j]);
}

HermMatrix first_of_rank(const HermitianSpace& space, std::size_t r) {
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto h = space.at(i);
    if (rank(*space.field(), h) == r) return h;
  }
  throw std::logic_error("no such rank");
}

}  // namespace

TEST_CASE("character sum reduction") {
  CharacterSum s(3);
  s.add(0, 5);
  s.add(1, 2);
  s.add(2, 2);
  CHECK(s.terms() == 9);
  CHECK(s.is_rational());
  CHECK(s.value() == 3);
  s.add(1);
  CHECK_FALSE(s.is_rational());
  CHECK_THROWS_AS(s.value(), ConsistencyError);

  CharacterSum two(2);
  two.add(1, 4);
  CHECK(two.value() == -4);
}

TEST_CASE("N_h(a) at q = 2, n = 2") {
  const HermitianSpace space(FieldSpec::create(2, 1), 2);
  const auto& f = *space.field();
  const HermMatrix zero = HermMatrix::zero(2);
  CHECK(count_Nh(f, zero, Elem{0}, Mode::brute) == 16);
  CHECK(count_Nh(f, zero, Elem{1}, Mode::brute) == 0);
  CHECK(count_Nh(f, zero, Elem{0}, Mode::formula) == 16);
  CHECK(count_Nh(f, zero, Elem{1}, Mode::formula) == 0);

  const HermMatrix h2 = first_of_rank(space, 2);
  CHECK(count_Nh(f, h2, Elem{0}, Mode::brute) == 10);
  CHECK(count_Nh(f, h2, Elem{1}, Mode::brute) == 6);
  CHECK(count_Nh(f, h2, Elem{0}, Mode::formula) == 10);
  CHECK(count_Nh(f, h2, Elem{1}, Mode::formula) == 6);

  CHECK_THROWS_AS(count_Nh(f, h2, Elem{2}, Mode::formula), UsageError);
  CHECK_THROWS_AS(count_Nh(f, h2, Elem{0}, Mode::brute, 10), BudgetExceeded);
}

TEST_CASE("chi at q = 2, n = 2") {
  const HermitianSpace space(FieldSpec::create(2, 1), 2);
  const auto& f = *space.field();
  CHECK(chi(f, HermMatrix::zero(2), Mode::brute) == 16);
  CHECK(chi(f, first_of_rank(space, 1), Mode::brute) == -8);
  CHECK(chi(f, first_of_rank(space, 2), Mode::brute) == 4);
  CHECK(chi(f, first_of_rank(space, 1), Mode::formula) == -8);
}

TEST_CASE("N_h and chi: formula equals brute force (sampled; exhaustive runs in acceptance)") {
  std::mt19937 rng(3);
  for (auto [p, e, n] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 1u, 3u}, {2u, 2u, 2u}}) {
    const HermitianSpace space(FieldSpec::create(p, e), n);
    const auto& f = *space.field();
    std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
    for (int t = 0; t < 12; ++t) {
      const auto h = space.at(pick(rng));
      CHECK(chi(f, h, Mode::brute) == chi(f, h, Mode::formula));
      BigInt total = 0;
      for (Elem a : f.subfield_elements()) {
        const auto brute = count_Nh(f, h, a, Mode::brute);
        CHECK(brute == count_Nh(f, h, a, Mode::formula));
        total += brute;
      }
      CHECK(total == ipow(BigInt(f.q()), 2 * n));
    }
  }
}

TEST_CASE("brute-force character values") {
  const HermitianSpace space(FieldSpec::create(2, 1), 2);
  CHECK(char_value_P(space, 0, 1) == 1);
  CHECK(char_value_P(space, 1, 1) == -3);
  CHECK(char_value_P(space, 2, 2) == -2);

  // Independent of the chosen Y within a rank class.
  const auto& f = *space.field();
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    const auto y = space.at(idx);
    const auto j = rank(f, y);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(char_value_P(space, i, y) == kTable22[i][j]);
  }
}

TEST_CASE("eigen tables") {
  check_table(eigen_table(2, 2), kTable22);
  check_table(eigen_table(2, 3), kTable23);
  check_table(eigen_table(3, 2), kTable32);
  check_table(brute_eigen_table(HermitianSpace(FieldSpec::create(2, 1), 2)), kTable22);
  check_table(brute_eigen_table(HermitianSpace(FieldSpec::create(3, 1), 2), 3), kTable32);

  // chi = (q + 1) P_1 + P_0 on each rank class.
  const auto t = eigen_table(2, 2);
  const std::vector<long long> chi_by_rank{16, -8, 4};
  for (std::size_t j = 0; j <= 2; ++j) CHECK(3 * t(1, j) + t(0, j) == chi_by_rank[j]);
}

TEST_CASE("valencies") {
  CHECK(valency(0, 2, 2) == 1);
  CHECK(valency(1, 2, 2) == 5);
  CHECK(valency(2, 2, 2) == 10);
  CHECK(valency(2, 2, 3) == 210);
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (std::size_t n = 1; n <= 6; ++n) {
      BigInt total = 0;
      for (std::size_t j = 0; j <= n; ++j) total += valency(j, q, n);
      CHECK(total == ipow(BigInt(q), n * n));
    }
  CHECK_THROWS_AS(valency(3, 2, 2), UsageError);
}

TEST_CASE("recurrence coefficients") {
  // (q, n) = (2, 2): b_0 = 5, b_1 = 4, c_1 = 1, c_2 = 2, a_1 = 0.
  CHECK(recurrence_b(0, 2, 2) == 5);
  CHECK(recurrence_b(1, 2, 2) == 4);
  CHECK(recurrence_c(1, 2) == 1);
  CHECK(recurrence_c(2, 2) == 2);
  CHECK(recurrence_a(1, 2, 2) == 0);
  CHECK(pk_at_n(2, 2, 2) == -2);
  CHECK(pk_at_n(3, 2, 3) == 8);
}

TEST_CASE("recurrence stays exact and tables satisfy every invariant") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (std::size_t n = 1; n <= 8; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      EigenTable t;
      CHECK_NOTHROW(t = eigen_table(q, n));
      CHECK_NOTHROW(verify_table_invariants(t));
    }
}

TEST_CASE("invariant checker catches corruption") {
  auto t = eigen_table(2, 3);
  t.P[2][1] += 1;
  CHECK_THROWS_AS(verify_table_invariants(t), ConsistencyError);
  CHECK_THROWS_AS(exact_div(7, 2, "test"), ConsistencyError);
  CHECK(exact_div(-8, 2, "test") == -4);
}

TEST_CASE("inner distribution and Delsarte check") {
  const auto t = eigen_table(2, 2);
  const auto a = constant_distance_distribution(2, 2, 5);
  CHECK(a.a == std::vector<Rational>{1, 0, 4});
  const auto r = delsarte_check(a, t);
  CHECK(r.feasible);
  CHECK(r.aq == std::vector<Rational>{5, 9, 2});

  const auto bad = delsarte_check(constant_distance_distribution(2, 2, 7), t);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.aq[2] == -2);

  const auto f4 = FieldSpec::create(2, 1);
  const std::vector<HermMatrix> single{HermMatrix::zero(2)};
  CHECK(inner_distribution(*f4, single).a == std::vector<Rational>{1, 0, 0});
  CHECK_THROWS_AS(inner_distribution(*f4, std::vector<HermMatrix>{}), UsageError);
  CHECK_THROWS_AS(delsarte_check(constant_distance_distribution(3, 2, 2), t), UsageError);

  // Any actual subset is feasible: the whole space and a few rank classes.
  const HermitianSpace space(f4, 2);
  std::vector<HermMatrix> all, rank1;
  space.for_each([&](const HermMatrix& h) {
    all.push_back(h);
    if (rank(*f4, h) <= 1) rank1.push_back(h);
  });
  const auto whole = inner_distribution(*f4, all);
  CHECK(whole.a == std::vector<Rational>{1, 5, 10});
  CHECK(delsarte_check(whole, t).feasible);
  CHECK(delsarte_check(inner_distribution(*f4, rank1), t).feasible);
}

TEST_CASE("subgroup character multiplicity") {
  const auto f4 = FieldSpec::create(2, 1);
  const HermitianSpace space(f4, 2);
  // The whole space is a subgroup: multiplicity of the trivial character in chi.
  std::vector<HermMatrix> all;
  space.for_each([&](const HermMatrix& h) { all.push_back(h); });
  const auto m = subgroup_character_multiplicity(*f4, all);
  CHECK(m >= 0);
  CHECK(boost::multiprecision::denominator(m) == 1);

  std::vector<HermMatrix> three(all.begin(), all.begin() + 3);
  CHECK_THROWS_AS(subgroup_character_multiplicity(*f4, three), UsageError);
}
