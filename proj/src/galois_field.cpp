#include "hrds/galois_field.hpp"

#include <algorithm>
#include <sstream>

#include "hrds/errors.hpp"

namespace hrds {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is small; Fermat would need pow, a linear scan is enough.
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw ArithmeticError("no inverse mod p");
}

/// Remainder of f modulo g over F_p (g nonzero).
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const unsigned lead_inv = inv_mod(g.back(), p);
  while (f.size() > dg) {
    const unsigned factor = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + p - (factor * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

Poly digits_to_monic(std::uint64_t index, unsigned p, unsigned degree) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

namespace poly {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const Poly& f_in, unsigned p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (poly_mod(f, digits_to_monic(t, p, d), p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned degree) {
  if (!is_prime(p)) throw UsageError("characteristic must be prime");
  if (degree == 0) throw UsageError("modulus degree must be positive");
  const std::uint64_t count = ipow(p, degree);
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f = digits_to_monic(t, p, degree);
    if (is_irreducible(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

std::string to_string(const Poly& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  return out.str();
}

}  // namespace poly

GaloisField::GaloisField(unsigned p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!poly::is_prime(p_)) throw UsageError("characteristic " + std::to_string(p_) + " is not prime");
  for (unsigned c : modulus_)
    if (c >= p_) throw UsageError("modulus coefficient out of range");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw UsageError("modulus must be monic of positive degree");
  if (!poly::is_irreducible(modulus_, p_))
    throw UsageError("modulus " + poly::to_string(modulus_) + " is reducible over F_" + std::to_string(p_));
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  const std::uint64_t size = ipow(p_, m_);
  if (size > kMaxFieldSize) throw UsageError("field of size " + std::to_string(size) + " exceeds the supported range");
  size_ = static_cast<std::uint32_t>(size);

  std::vector<std::vector<unsigned>> coeff(size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    coeff[a].resize(m_);
    std::uint32_t x = a;
    for (unsigned i = 0; i < m_; ++i) {
      coeff[a][i] = x % p_;
      x /= p_;
    }
  }
  auto encode = [&](const std::vector<unsigned>& c) {
    std::uint32_t idx = 0;
    for (unsigned i = m_; i-- > 0;) idx = idx * p_ + c[i];
    return static_cast<std::uint16_t>(idx);
  };

  add_.resize(std::size_t{size_} * size_);
  mul_.resize(std::size_t{size_} * size_);
  neg_.resize(size_);
  inv_.assign(size_, 0);
  std::vector<unsigned> tmp(m_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    for (unsigned i = 0; i < m_; ++i) tmp[i] = (p_ - coeff[a][i]) % p_;
    neg_[a] = encode(tmp);
    for (std::uint32_t b = 0; b < size_; ++b) {
      for (unsigned i = 0; i < m_; ++i) tmp[i] = (coeff[a][i] + coeff[b][i]) % p_;
      add_[a * size_ + b] = encode(tmp);

      Poly prod(2 * m_ - 1, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + coeff[a][i] * coeff[b][j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * size_ + b] = encode(r);
    }
  }
  for (std::uint32_t a = 1; a < size_; ++a)
    for (std::uint32_t b = 1; b < size_; ++b)
      if (mul_[a * size_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
}

GaloisField GaloisField::with_default_modulus(unsigned p, unsigned degree) {
  return GaloisField(p, poly::smallest_irreducible(p, degree));
}

Elem GaloisField::prime(unsigned c) const {
  if (c >= p_) throw UsageError("prime-field value out of range");
  return Elem{c};
}

Elem GaloisField::from_index(std::uint64_t index) const {
  if (index >= size_)
    throw UsageError("element index " + std::to_string(index) + " out of range for field of size " +
                     std::to_string(size_));
  return Elem{static_cast<std::uint32_t>(index)};
}

Elem GaloisField::inv(Elem a) const {
  if (a.index == 0) throw ArithmeticError("division by zero");
  return Elem{inv_[a.index]};
}

Elem GaloisField::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem GaloisField::pow(Elem a, std::uint64_t exponent) const noexcept {
  Elem result = one();
  Elem base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Elem GaloisField::frobenius(Elem a, unsigned times) const noexcept {
  for (unsigned t = 0; t < times; ++t) a = pow(a, p_);
  return a;
}

std::vector<unsigned> GaloisField::coefficients(Elem a) const {
  std::vector<unsigned> c(m_);
  std::uint32_t x = a.index;
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Elem GaloisField::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != m_) throw UsageError("coefficient vector has wrong length");
  std::uint32_t idx = 0;
  for (std::size_t i = m_; i-- > 0;) {
    if (coeffs[i] >= p_) throw UsageError("coefficient out of range");
    idx = idx * p_ + coeffs[i];
  }
  return Elem{idx};
}

Elem GaloisField::evaluate(const Poly& f, Elem a) const noexcept {
  Elem acc = zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, a), Elem{f[i] % p_});
  return acc;
}

std::vector<Elem> GaloisField::roots(const Poly& f) const {
  std::vector<Elem> out;
  for (std::uint32_t a = 0; a < size_; ++a)
    if (evaluate(f, Elem{a}) == zero()) out.push_back(Elem{a});
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(const GaloisField& large, Poly small_modulus) {
  const unsigned p = large.characteristic();
  if (!poly::is_irreducible(small_modulus, p)) throw UsageError("subfield modulus is reducible");
  const unsigned e = static_cast<unsigned>(small_modulus.size() - 1);
  if (large.degree() % e != 0)
    throw UsageError("F_p^" + std::to_string(e) + " is not a subfield of F_p^" + std::to_string(large.degree()));
  const auto rts = large.roots(small_modulus);
  if (rts.empty()) throw ConsistencyError("irreducible subfield modulus has no root in the extension");
  root_ = rts.front();

  const std::uint32_t count = static_cast<std::uint32_t>(ipow(p, e));
  image_.resize(count);
  preimage_.assign(large.size(), -1);
  for (std::uint32_t c = 0; c < count; ++c) {
    // sum_i digit_i * root^i
    Elem acc = large.zero();
    Elem power = large.one();
    std::uint32_t x = c;
    for (unsigned i = 0; i < e; ++i) {
      acc = large.add(acc, large.mul(Elem{x % p}, power));
      power = large.mul(power, root_);
      x /= p;
    }
    image_[c] = acc;
    preimage_[acc.index] = static_cast<std::int32_t>(c);
  }
}

std::uint32_t SubfieldEmbedding::coordinate(Elem a) const {
  if (!contains(a)) throw UsageError("element " + std::to_string(a.index) + " is not in the subfield");
  return static_cast<std::uint32_t>(preimage_[a.index]);
}

bool SubfieldEmbedding::contains(Elem a) const noexcept {
  return a.index < preimage_.size() && preimage_[a.index] >= 0;
}

}  // namespace hrds
