#ifndef SVB_GRADING_HPP
#define SVB_GRADING_HPP

#include <compare>
#include <cstdlib>
#include <string>

#include "svb/scalar.hpp"

namespace svb {

/// Half-integer degree, stored as its doubled value so m ∈ ℤ and k ∈ ½+ℤ
/// share one exact representation.
struct HalfInt {
  int doubled = 0;

  HalfInt() = default;
  static HalfInt from_doubled(int d) { return HalfInt{d}; }
  static HalfInt whole(int n) { return HalfInt{2 * n}; }

  bool is_integer() const { return doubled % 2 == 0; }

  HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
  HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }
  HalfInt operator-() const { return HalfInt{-doubled}; }

  HalfInt abs() const { return HalfInt{std::abs(doubled)}; }

  Scalar as_scalar() const { return Scalar(doubled, 2); }

  auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }

private:
  explicit HalfInt(int d) : doubled(d) {}
};

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((int(a) + int(b)) % 2);
}

inline bool is_odd(Parity p) { return p == Parity::odd; }

/// (-1)^{|a||b|}
inline int parity_sign(Parity a, Parity b) {
  return (is_odd(a) && is_odd(b)) ? -1 : 1;
}

/// (-1)^{|a|}
inline int parity_sign(Parity a) { return is_odd(a) ? -1 : 1; }

}  // namespace svb

#endif
