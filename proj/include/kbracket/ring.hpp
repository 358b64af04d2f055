#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kbracket {

// Element of Z_m, stored fully reduced to [0, m).  The modulus travels with
// the value; mixing moduli throws.
class RingElem {
public:
  RingElem() : value_(0), mod_(2) {}
  RingElem(std::int64_t value, std::int64_t modulus) : mod_(modulus) {
    if (modulus < 2)
      throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    value_ = value % modulus;
    if (value_ < 0)
      value_ += modulus;
  }

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return mod_; }

  friend bool operator==(const RingElem &a, const RingElem &b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }
  friend bool operator!=(const RingElem &a, const RingElem &b) { return !(a == b); }

  friend RingElem operator+(const RingElem &a, const RingElem &b) {
    check_moduli(a, b);
    return RingElem(a.value_ + b.value_, a.mod_);
  }
  friend RingElem operator-(const RingElem &a, const RingElem &b) {
    check_moduli(a, b);
    return RingElem(a.value_ - b.value_, a.mod_);
  }
  friend RingElem operator*(const RingElem &a, const RingElem &b) {
    check_moduli(a, b);
    return RingElem(a.value_ * b.value_, a.mod_);
  }
  RingElem operator-() const { return RingElem(-value_, mod_); }

  RingElem &operator+=(const RingElem &b) { return *this = *this + b; }
  RingElem &operator*=(const RingElem &b) { return *this = *this * b; }

private:
  static void check_moduli(const RingElem &a, const RingElem &b) {
    if (a.mod_ != b.mod_)
      throw std::invalid_argument("modulus mismatch: Z_" + std::to_string(a.mod_) +
                                  " vs Z_" + std::to_string(b.mod_));
  }

  std::int64_t value_;
  std::int64_t mod_;
};

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline bool is_unit(const RingElem &a) { return gcd64(a.value(), a.modulus()) == 1; }

// Extended Euclid; requires gcd(a, m) = 1.
inline RingElem inv(const RingElem &a) {
  if (!is_unit(a))
    throw std::invalid_argument("not a unit: " + std::to_string(a.value()) +
                                " mod " + std::to_string(a.modulus()));
  std::int64_t r0 = a.modulus(), r1 = a.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return RingElem(s0, a.modulus());
}

// a^e with e < 0 allowed for units.
inline RingElem pow(const RingElem &a, std::int64_t e) {
  RingElem base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  RingElem acc(1, a.modulus());
  while (e > 0) {
    if (e & 1)
      acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

} // namespace kbracket
