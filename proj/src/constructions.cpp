#include "hrds/constructions.hpp"

#include <algorithm>
#include <string>

#include "hrds/errors.hpp"

namespace hrds {

namespace {

// Smallest-index element of `big` generating it over the subfield of degree `sub_degree`
// (so of degree `rel` = big.degree() / sub_degree over that subfield).
Elem smallest_generator(const GaloisField& big, unsigned sub_degree, std::size_t rel) {
  for (std::uint32_t i = 0; i < big.size(); ++i) {
    const Elem x{i};
    bool generates = true;
    for (std::size_t d = 1; d < rel && generates; ++d)
      if (rel % d == 0 && big.frobenius(x, static_cast<unsigned>(sub_degree * d)) == x) generates = false;
    if (generates) return x;
  }
  throw ConsistencyError("field has no generator over its subfield");
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= base;
    if (v > cap) throw UsageError(std::string(what) + " exceeds " + std::to_string(cap));
  }
  return v;
}

}  // namespace

bool mu_is_admissible(const FieldSpec& field, Elem mu) {
  const auto& f = field.ext();
  const Elem lin = f.sub(mu, f.add(f.one(), f.one()));
  for (Elem t : field.subfield_elements()) {
    const Elem v = f.add(f.add(f.mul(t, t), f.mul(lin, t)), f.one());
    if (v == f.zero()) return false;
  }
  return true;
}

Elem select_mu(const FieldSpec& field) {
  for (Elem mu : field.subfield_elements())
    if (mu_is_admissible(field, mu)) return mu;
  throw ConsistencyError("no admissible mu in F_q");
}

UdeltaParams UdeltaParams::make(FieldPtr field, unsigned delta) {
  if (delta < 1 || delta > field->q())
    throw UsageError("delta must lie in [1, q] = [1, " + std::to_string(field->q()) + "]");
  const auto sub = field->subfield_elements();
  UdeltaParams p;
  p.Delta.assign(sub.begin(), sub.begin() + delta);
  p.mu = select_mu(*field);
  p.field = std::move(field);
  p.delta = delta;
  return p;
}

void UdeltaParams::validate() const {
  if (!field) throw UsageError("U_delta parameters need a field");
  if (delta < 1 || delta > field->q()) throw UsageError("delta must lie in [1, q]");
  if (Delta.size() != delta) throw UsageError("|Delta| must equal delta");
  auto sorted = Delta;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw UsageError("Delta has repeats");
  for (Elem a : Delta)
    if (!field->in_subfield(a)) throw UsageError("Delta element " + std::to_string(a.index) + " is not in F_q");
  if (!std::binary_search(sorted.begin(), sorted.end(), Elem{0})) throw UsageError("Delta must contain 0");
  if (!field->in_subfield(mu)) throw UsageError("mu is not in F_q");
  if (!mu_is_admissible(*field, mu))
    throw UsageError("mu = " + std::to_string(mu.index) + ": t^2 + (mu-2)t + 1 has a root in F_q");
}

RankSet construct_udelta(const UdeltaParams& params) {
  params.validate();
  const FieldSpec& fs = *params.field;
  const GaloisField& f = fs.ext();
  RankSet u(params.field, 2, 2);
  auto put = [&](Elem a, Elem b, Elem c, Elem d) {
    HermMatrix h(fs, Matrix(2, 2, {a, b, c, d}));
    if (!u.contains(h)) u.insert(std::move(h));
  };
  for (Elem a : params.Delta) {
    put(a, a, a, f.zero());
    put(f.zero(), a, a, f.mul(params.mu, a));
  }
  for (std::uint32_t i = 0; i < fs.q2(); ++i) {
    const Elem x{i};
    if (std::find(params.Delta.begin(), params.Delta.end(), x) != params.Delta.end()) continue;
    put(f.zero(), x, fs.conj(x), f.zero());
  }
  if (u.size() != fs.q2() + params.delta - 1) throw ConsistencyError("U_delta has the wrong size");
  return u;
}

SymmetricSpreadSet trace_gram_spread_set(const FieldPtr& field, std::size_t n) {
  if (n == 0) throw UsageError("n must be positive");
  const unsigned e = field->e();
  checked_pow(field->q(), n, GaloisField::kMaxFieldSize, "q^n");
  const GaloisField big = GaloisField::with_default_modulus(field->p(), static_cast<unsigned>(e * n));
  const SubfieldEmbedding fq(big, field->modulus_q());

  std::vector<Elem> basis{big.one()};
  if (n > 1) {
    const Elem theta = smallest_generator(big, e, n);
    for (std::size_t i = 1; i < n; ++i) basis.push_back(big.mul(basis.back(), theta));
  }
  auto trace = [&](Elem x) {
    Elem acc = big.zero();
    for (std::size_t i = 0; i < n; ++i) acc = big.add(acc, big.frobenius(x, static_cast<unsigned>(e * i)));
    return field->embedding().embed(fq.coordinate(acc));
  };

  SymmetricSpreadSet out{field, n, {}};
  for (std::uint32_t m = 0; m < big.size(); ++m) {
    Matrix mm(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mm(i, j) = trace(big.mul(Elem{m}, big.mul(basis[i], basis[j])));
    out.members.push_back(std::move(mm));
  }
  return out;
}

RankSet extend_to_hermitian(const SymmetricSpreadSet& u, std::size_t k) {
  std::vector<HermMatrix> members;
  for (std::size_t idx = 0; idx < u.members.size(); ++idx) {
    const Matrix& m = u.members[idx];
    if (m.rows() != u.n || m.cols() != u.n) throw UsageError("member " + std::to_string(idx) + " has the wrong shape");
    for (std::size_t i = 0; i < u.n; ++i)
      for (std::size_t j = 0; j < u.n; ++j) {
        if (!u.field->in_subfield(m(i, j)))
          throw UsageError("member " + std::to_string(idx) + " has an entry outside F_q");
        if (m(i, j) != m(j, i)) throw UsageError("member " + std::to_string(idx) + " is not symmetric");
      }
    members.emplace_back(*u.field, m);
  }
  return RankSet(u.field, u.n, k, std::move(members));
}

RankSet extend_to_hermitian(const SymmetricSpreadSet& u) { return extend_to_hermitian(u, u.n); }

std::optional<std::pair<std::size_t, std::size_t>> ProjectivePartialSpread::first_overlap() const {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (rank(field->ext(), hconcat(members[i].basis(), members[j].basis())) != 2 * r) return std::pair{i, j};
  return std::nullopt;
}

ProjectivePartialSpread pg_point_spread(const FieldPtr& field, std::size_t n) {
  if (n == 0) throw UsageError("n must be positive");
  const std::uint64_t q2 = field->q2();
  checked_pow(q2, n - 1, std::uint64_t{1} << 20, "number of points");
  ProjectivePartialSpread d{field, n, 1, {}};
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::uint64_t count = checked_pow(q2, n - 1 - lead, std::uint64_t{1} << 20, "number of points");
    for (std::uint64_t c = 0; c < count; ++c) {
      Matrix x(n, 1);
      x(lead, 0) = field->ext().one();
      std::uint64_t rest = c;
      for (std::size_t j = n; j-- > lead + 1;) {
        x(j, 0) = Elem{static_cast<std::uint32_t>(rest % q2)};
        rest /= q2;
      }
      d.members.emplace_back(field->ext(), std::move(x));
    }
  }
  return d;
}

ProjectivePartialSpread desarguesian_spread(const FieldPtr& field, std::size_t n, std::size_t r) {
  if (r == 0 || n == 0 || n % r != 0)
    throw UsageError("Desarguesian spread needs r | n (n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")");
  const unsigned e2 = 2 * field->e();
  const std::uint64_t big_size = checked_pow(field->q2(), r, GaloisField::kMaxFieldSize, "q^(2r)");
  const GaloisField big = GaloisField::with_default_modulus(field->p(), static_cast<unsigned>(e2 * r));
  const SubfieldEmbedding fq2(big, field->modulus_q2());

  std::vector<Elem> basis{big.one()};
  if (r > 1) {
    const Elem theta = smallest_generator(big, e2, r);
    for (std::size_t i = 1; i < r; ++i) basis.push_back(big.mul(basis.back(), theta));
  }
  // Coordinates over F_{q^2} of every element of F_{q^{2r}} in that basis.
  std::vector<std::vector<Elem>> coords(big_size);
  for (std::uint64_t c = 0; c < big_size; ++c) {
    std::vector<Elem> v(r);
    Elem acc = big.zero();
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = Elem{static_cast<std::uint32_t>(rest % field->q2())};
      rest /= field->q2();
      acc = big.add(acc, big.mul(fq2.embed(v[i].index), basis[i]));
    }
    coords[acc.index] = std::move(v);
  }

  const std::size_t m = n / r;
  ProjectivePartialSpread d{field, n, r, {}};
  for (std::size_t lead = 0; lead < m; ++lead) {
    const std::uint64_t count = checked_pow(big_size, m - 1 - lead, std::uint64_t{1} << 20, "number of points");
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<Elem> y(m, big.zero());
      y[lead] = big.one();
      std::uint64_t rest = c;
      for (std::size_t j = m; j-- > lead + 1;) {
        y[j] = Elem{static_cast<std::uint32_t>(rest % big_size)};
        rest /= big_size;
      }
      Matrix x(n, r);
      for (std::size_t col = 0; col < r; ++col)
        for (std::size_t l = 0; l < m; ++l) {
          const auto& v = coords[big.mul(basis[col], y[l]).index];
          for (std::size_t i = 0; i < r; ++i) x(l * r + i, col) = v[i];
        }
      d.members.emplace_back(field->ext(), std::move(x));
    }
  }
  return d;
}

RankSet lift_partial_spread(const ProjectivePartialSpread& d, bool translate) {
  if (2 * d.r > d.n) throw UsageError("lift needs 2r <= n");
  for (const auto& s : d.members)
    if (s.ambient_dim() != d.n || s.dim() != d.r) throw UsageError("spread member has the wrong shape");
  if (auto bad = d.first_overlap())
    throw UsageError("subspaces " + std::to_string(bad->first) + " and " + std::to_string(bad->second) + " meet");

  const FieldSpec& fs = *d.field;
  std::vector<HermMatrix> lifted;
  for (const auto& s : d.members) lifted.emplace_back(fs, mul(fs.ext(), s.basis(), conj_transpose(fs, s.basis())));
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size(); ++j)
      if (rank(fs, sub(fs, lifted[i], lifted[j])) != 2 * d.r)
        throw ConsistencyError("lifted pair " + std::to_string(i) + ", " + std::to_string(j) + " lost rank");

  if (translate && !lifted.empty()) {
    const HermMatrix base = lifted.front();
    for (auto& a : lifted) a = sub(fs, a, base);
  }
  return RankSet(d.field, d.n, 2 * d.r, std::move(lifted));
}

}  // namespace hrds
