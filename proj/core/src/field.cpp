#include "tropreal/field.hpp"

namespace tropreal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::Unbalanced: return "Unbalanced";
    case ErrorKind::ParallelRays: return "ParallelRays";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::LoopyMatroid: return "LoopyMatroid";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::RayOutsideFan: return "RayOutsideFan";
    case ErrorKind::CharNotZero: return "CharNotZero";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidNormal: return "InvalidNormal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

namespace {

long floor_mod(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

long mod_inverse(long a, long p) {
  // extended Euclid; residues < 2^31 so products fit in long
  long t = 0, new_t = 1;
  long r = p, new_r = floor_mod(a, p);
  if (new_r == 0) throw TropError(ErrorKind::DivisionByZero, "inverse of 0 mod p");
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw TropError(ErrorKind::DivisionByZero, "modulus not prime or value not invertible");
  return floor_mod(t, p);
}

FieldElement FieldElement::integer(long v, long characteristic) {
  FieldElement e;
  e.characteristic_ = characteristic;
  if (characteristic == 0) {
    e.rat_ = v;
  } else {
    e.res_ = floor_mod(v, characteristic);
  }
  return e;
}

FieldElement FieldElement::rational(const mpq_class& v) {
  FieldElement e;
  e.characteristic_ = 0;
  e.rat_ = v;
  e.rat_.canonicalize();
  return e;
}

FieldElement FieldElement::rational(long num, long den) {
  if (den == 0) throw TropError(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {  // mpq_class(long, long) takes the denominator unsigned
    num = -num;
    den = -den;
  }
  return rational(mpq_class(num, den));
}

FieldElement FieldElement::residue(long v, long p) {
  if (p <= 0) throw TropError(ErrorKind::FieldMismatch, "residue needs positive characteristic");
  FieldElement e;
  e.characteristic_ = p;
  e.res_ = floor_mod(v, p);
  return e;
}

FieldElement FieldElement::from_rational(const mpq_class& v, long characteristic) {
  if (characteristic == 0) return rational(v);
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class p(characteristic);
  mpz_class dm = den % p;
  if (dm == 0)
    throw TropError(ErrorKind::ParseError, "denominator not invertible mod " + std::to_string(characteristic));
  mpz_class nm = num % p;
  long n = floor_mod(nm.get_si(), characteristic);
  long d = floor_mod(dm.get_si(), characteristic);
  long inv = mod_inverse(d, characteristic);
  return residue((n * inv) % characteristic, characteristic);
}

bool FieldElement::is_zero() const {
  return characteristic_ == 0 ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return characteristic_ == 0 ? rat_ == 1 : res_ == 1;
}

const mpq_class& FieldElement::rat() const {
  if (characteristic_ != 0) throw TropError(ErrorKind::FieldMismatch, "rat() in positive characteristic");
  return rat_;
}

long FieldElement::res() const {
  if (characteristic_ == 0) throw TropError(ErrorKind::FieldMismatch, "res() in characteristic 0");
  return res_;
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (characteristic_ != other.characteristic_)
    throw TropError(ErrorKind::FieldMismatch,
                    "characteristic " + std::to_string(characteristic_) + " vs " +
                        std::to_string(other.characteristic_));
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  if (characteristic_ == 0) {
    e.rat_ = -rat_;
  } else {
    e.res_ = res_ == 0 ? 0 : characteristic_ - res_;
  }
  return e;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same_field(other);
  if (characteristic_ == 0) {
    rat_ += other.rat_;
  } else {
    res_ = (res_ + other.res_) % characteristic_;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same_field(other);
  if (characteristic_ == 0) {
    rat_ -= other.rat_;
  } else {
    res_ = floor_mod(res_ - other.res_, characteristic_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same_field(other);
  if (characteristic_ == 0) {
    rat_ *= other.rat_;
  } else {
    res_ = (res_ * other.res_) % characteristic_;  // p < 2^31: fits in long
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  check_same_field(other);
  if (other.is_zero()) throw TropError(ErrorKind::DivisionByZero, "division by zero");
  if (characteristic_ == 0) {
    rat_ /= other.rat_;
  } else {
    res_ = (res_ * mod_inverse(other.res_, characteristic_)) % characteristic_;
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw TropError(ErrorKind::DivisionByZero, "inverse of zero");
  return one(characteristic_) / *this;
}

bool FieldElement::operator==(const FieldElement& other) const {
  check_same_field(other);
  return characteristic_ == 0 ? rat_ == other.rat_ : res_ == other.res_;
}

std::string FieldElement::str() const {
  if (characteristic_ == 0) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace tropreal
