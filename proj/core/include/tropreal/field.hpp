#ifndef TROPREAL_FIELD_HPP
#define TROPREAL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tropreal/errors.hpp"

namespace tropreal {

/// Exact scalar in Q (characteristic 0, arbitrary precision) or in F_p
/// (characteristic p, residue in [0,p)).  Arithmetic between elements of
/// different fields is rejected.  Values are immutable in spirit: all
/// operators return fresh elements, compound assignments replace the value.
class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : res_(0), characteristic_(0) {}

  static FieldElement integer(long v, long characteristic);
  static FieldElement rational(const mpq_class& v);  // characteristic 0
  static FieldElement rational(long num, long den);
  static FieldElement residue(long v, long p);
  /// Maps a rational into the field; rejects denominators divisible by p.
  static FieldElement from_rational(const mpq_class& v, long characteristic);
  static FieldElement zero(long characteristic) { return integer(0, characteristic); }
  static FieldElement one(long characteristic) { return integer(1, characteristic); }

  long characteristic() const { return characteristic_; }
  bool is_zero() const;
  bool is_one() const;

  /// Underlying rational; only valid in characteristic 0.
  const mpq_class& rat() const;
  /// Underlying residue in [0,p); only valid in characteristic p > 0.
  long res() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  std::string str() const;

 private:
  void check_same_field(const FieldElement& other) const;

  mpq_class rat_;  // used iff characteristic_ == 0
  long res_;       // used iff characteristic_ > 0
  long characteristic_;
};

/// Multiplicative inverse of a modulo p (p prime, a not divisible by p).
long mod_inverse(long a, long p);

}  // namespace tropreal

#endif
