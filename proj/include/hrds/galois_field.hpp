#pragma once

// Prime-power finite fields F_{p^m} in the polynomial basis over F_p.
//
// An element is identified by its wire index  sum_i c_i * p^i, where c_i is the
// coefficient of x^i modulo the field's modulus polynomial. Arithmetic is exact
// and table driven; the tables are filled by plain polynomial arithmetic at
// construction, so fields are restricted to desk-scale sizes (kMaxFieldSize).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hrds {

struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Polynomial over F_p, constant term first. Monic polynomials carry their leading 1.
using Poly = std::vector<unsigned>;

namespace poly {

bool is_prime(unsigned n);

/// Irreducibility over F_p by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible(const Poly& f, unsigned p);

/// Smallest monic irreducible of the given degree, ordering candidates by the integer
/// sum_{i<degree} c_i p^i (equivalently, lexicographic from the x^{degree-1} coefficient down).
Poly smallest_irreducible(unsigned p, unsigned degree);

std::string to_string(const Poly& f);

}  // namespace poly

class GaloisField {
public:
  static constexpr std::uint32_t kMaxFieldSize = 1024;

  /// `modulus` must be monic, irreducible over F_p, of degree >= 1.
  GaloisField(unsigned p, Poly modulus);

  static GaloisField with_default_modulus(unsigned p, unsigned degree);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return size_; }
  const Poly& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// The prime-field element c (0 <= c < p).
  Elem prime(unsigned c) const;
  Elem from_index(std::uint64_t index) const;
  bool contains(Elem a) const noexcept { return a.index < size_; }

  Elem add(Elem a, Elem b) const noexcept { return Elem{add_[a.index * size_ + b.index]}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.index]}; }
  Elem mul(Elem a, Elem b) const noexcept { return Elem{mul_[a.index * size_ + b.index]}; }
  /// Throws ArithmeticError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t exponent) const noexcept;
  /// a^(p^times).
  Elem frobenius(Elem a, unsigned times = 1) const noexcept;

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;

  /// Evaluates a polynomial with prime-field coefficients at a.
  Elem evaluate(const Poly& f, Elem a) const noexcept;

  /// All roots of f in this field, in index order.
  std::vector<Elem> roots(const Poly& f) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

private:
  unsigned p_;
  unsigned m_;
  std::uint32_t size_;
  Poly modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

/// Identification of F_{p^e} (given by its own modulus) with a subfield of a larger field.
/// The image of x is the smallest-index root of the small modulus in the large field.
class SubfieldEmbedding {
public:
  SubfieldEmbedding(const GaloisField& large, Poly small_modulus);

  std::uint32_t subfield_size() const noexcept { return static_cast<std::uint32_t>(image_.size()); }
  /// Element of the large field corresponding to subfield coordinate index c.
  Elem embed(std::uint32_t c) const { return image_.at(c); }
  /// Inverse of embed; throws UsageError if `a` is not in the image.
  std::uint32_t coordinate(Elem a) const;
  bool contains(Elem a) const noexcept;
  Elem generator() const noexcept { return root_; }

private:
  Elem root_;
  std::vector<Elem> image_;
  std::vector<std::int32_t> preimage_;
};

}  // namespace hrds
