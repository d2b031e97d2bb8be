#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hrds/galois_field.hpp"

namespace hrds {

/// The tower F_p < F_q < F_{q^2} with q = p^e.
///
/// All elements are carried as elements of F_{q^2} (its wire index); F_q is the
/// fixed field of x -> x^q, identified with F_p[y]/(modulus_q) through the
/// smallest-index root of modulus_q. Immutable once built and shared by pointer.
class FieldSpec {
public:
  static std::shared_ptr<const FieldSpec> create(unsigned p, unsigned e);
  /// Uses an explicit F_{q^2} modulus (e.g. one read from a set file).
  static std::shared_ptr<const FieldSpec> create(unsigned p, unsigned e, Poly modulus_q2);

  unsigned p() const noexcept { return ext_.characteristic(); }
  unsigned e() const noexcept { return e_; }
  unsigned q() const noexcept { return q_; }
  unsigned q2() const noexcept { return ext_.size(); }
  const Poly& modulus_q() const noexcept { return modulus_q_; }
  const Poly& modulus_q2() const noexcept { return ext_.modulus(); }
  const GaloisField& ext() const noexcept { return ext_; }
  const SubfieldEmbedding& embedding() const noexcept { return embedding_; }

  Elem conj(Elem a) const noexcept { return Elem{conj_[a.index]}; }
  Elem rel_trace(Elem a) const noexcept { return ext_.add(a, conj(a)); }
  Elem rel_norm(Elem a) const noexcept { return ext_.mul(a, conj(a)); }
  /// Absolute trace F_q -> F_p as an integer in [0, p). Throws UsageError outside F_q.
  unsigned abs_trace(Elem a) const;
  /// Same as abs_trace without the membership check, for hot loops over known F_q values.
  unsigned abs_trace_unchecked(Elem a) const noexcept { return abs_trace_[a.index]; }

  bool in_subfield(Elem a) const noexcept { return a.index < q2() && conj(a) == a; }
  /// F_q in increasing wire-index order.
  std::span<const Elem> subfield_elements() const noexcept { return subfield_; }
  /// Position of an F_q element within subfield_elements().
  unsigned subfield_rank(Elem a) const;

  /// The nonzero scalar a with conj(a) = -a of smallest wire index.
  Elem form_scalar() const noexcept { return form_scalar_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.e_ == b.e_ && a.ext_ == b.ext_; }

private:
  FieldSpec(unsigned e, GaloisField ext);

  unsigned e_;
  unsigned q_;
  GaloisField ext_;
  Poly modulus_q_;
  SubfieldEmbedding embedding_;
  std::vector<std::uint16_t> conj_;
  std::vector<std::uint8_t> abs_trace_;
  std::vector<Elem> subfield_;
  std::vector<std::int32_t> subfield_rank_;
  Elem form_scalar_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// An element bound to its field, with checked operators. Mixing fields throws UsageError.
class FieldElement {
public:
  FieldElement(FieldPtr field, Elem value);
  FieldElement(FieldPtr field, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  /// Throws ArithmeticError on division by zero.
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t exponent) const;
  FieldElement conj() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
  const GaloisField& ext() const { return field_->ext(); }
  void require_same(const FieldElement& b) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace hrds
