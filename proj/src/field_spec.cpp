#include "hrds/field_spec.hpp"

#include "hrds/errors.hpp"

namespace hrds {

FieldSpec::FieldSpec(unsigned e, GaloisField ext)
    : e_(e),
      ext_(std::move(ext)),
      modulus_q_(poly::smallest_irreducible(ext_.characteristic(), e)),
      embedding_(ext_, modulus_q_) {
  if (ext_.degree() != 2 * e_) throw UsageError("F_{q^2} modulus must have degree 2e");
  q_ = 1;
  for (unsigned i = 0; i < e_; ++i) q_ *= p();

  const std::uint32_t n = ext_.size();
  conj_.resize(n);
  abs_trace_.assign(n, 0);
  subfield_rank_.assign(n, -1);
  for (std::uint32_t a = 0; a < n; ++a) {
    conj_[a] = static_cast<std::uint16_t>(ext_.pow(Elem{a}, q_).index);
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (conj_[a] != a) continue;
    subfield_rank_[a] = static_cast<std::int32_t>(subfield_.size());
    subfield_.push_back(Elem{a});
    Elem t = ext_.zero();
    Elem x{a};
    for (unsigned i = 0; i < e_; ++i) {
      t = ext_.add(t, x);
      x = ext_.frobenius(x);
    }
    if (t.index >= p()) throw ConsistencyError("absolute trace left the prime field");
    abs_trace_[a] = static_cast<std::uint8_t>(t.index);
  }
  if (subfield_.size() != q_) throw ConsistencyError("fixed field of Frobenius has the wrong size");
  for (std::uint32_t c = 0; c < embedding_.subfield_size(); ++c)
    if (!in_subfield(embedding_.embed(c))) throw ConsistencyError("embedding of F_q is not the fixed field");

  form_scalar_ = Elem{0};
  for (std::uint32_t a = 1; a < n; ++a) {
    if (conj(Elem{a}) == ext_.neg(Elem{a})) {
      form_scalar_ = Elem{a};
      break;
    }
  }
  if (form_scalar_.index == 0) throw ConsistencyError("no scalar with conj(a) = -a");
}

std::shared_ptr<const FieldSpec> FieldSpec::create(unsigned p, unsigned e) {
  if (e == 0) throw UsageError("exponent e must be positive");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(e, GaloisField::with_default_modulus(p, 2 * e)));
}

std::shared_ptr<const FieldSpec> FieldSpec::create(unsigned p, unsigned e, Poly modulus_q2) {
  if (e == 0) throw UsageError("exponent e must be positive");
  if (modulus_q2.size() != 2 * e + 1) throw UsageError("F_{q^2} modulus must have degree 2e");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(e, GaloisField(p, std::move(modulus_q2))));
}

unsigned FieldSpec::abs_trace(Elem a) const {
  if (!in_subfield(a)) throw UsageError("abs_trace: element " + std::to_string(a.index) + " is not in F_q");
  return abs_trace_[a.index];
}

unsigned FieldSpec::subfield_rank(Elem a) const {
  if (a.index >= q2() || subfield_rank_[a.index] < 0)
    throw UsageError("element " + std::to_string(a.index) + " is not in F_q");
  return static_cast<unsigned>(subfield_rank_[a.index]);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw UsageError("null field");
  if (!field_->ext().contains(value_)) throw UsageError("element out of range");
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t index)
    : FieldElement(field, field->ext().from_index(index)) {}

void FieldElement::require_same(const FieldElement& b) const {
  if (field_ != b.field_ && !(*field_ == *b.field_)) throw UsageError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  require_same(b);
  return {field_, ext().add(value_, b.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  require_same(b);
  return {field_, ext().sub(value_, b.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  require_same(b);
  return {field_, ext().mul(value_, b.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  require_same(b);
  return {field_, ext().div(value_, b.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, ext().neg(value_)}; }

FieldElement FieldElement::pow(std::uint64_t exponent) const { return {field_, ext().pow(value_, exponent)}; }

FieldElement FieldElement::conj() const { return {field_, field_->conj(value_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.require_same(b);
  return a.value_ == b.value_;
}

}  // namespace hrds
