#include <stdexcept>

#include "gridramsey/engine.hpp"

namespace gridramsey {

namespace {

unsigned long exponent_c(unsigned r) { return static_cast<unsigned long>(r) * (r + 1) / 2; }

}  // namespace

Rational case_threshold(unsigned r, std::size_t j, const Rational& constant_c, int* which_case) {
  const Rational rq{static_cast<unsigned long>(r)};
  const Rational r3 = rq * rq * rq;
  const unsigned long s = r / 8;
  const Integer full = ipow(r, exponent_c(r));

  if (2 * j >= s) {
    // Case 1: 1 >= (1+beta)^J r^-C N - 4 r^(-C + ceil(r/8) + 2).
    const Rational beta = 1 / (8 * r3) + constant_c / (r3 * rq);
    const unsigned long ceil_r8 = (r + 7) / 8;
    if (which_case) *which_case = 1;
    return Rational{full + 4 * ipow(r, ceil_r8 + 2)} / qpow(1 + beta, j);
  }
  // Case 2: 1 >= (1 + 1/(4r^3))^(s-J) r^-C N - 2 r^(4r + 1 - C).
  const Rational gamma = 1 / (4 * r3);
  if (which_case) *which_case = 2;
  return Rational{full + 2 * ipow(r, 4UL * r + 1)} / qpow(1 + gamma, s - j);
}

BoundsReport bounds_table(unsigned r, const Rational& constant_c) {
  if (r < 2) throw std::invalid_argument("bounds need r >= 2");
  BoundsReport out;
  out.r = r;
  out.constant_c = constant_c;
  const Integer full = ipow(r, exponent_c(r));
  out.shelah = full + 1;
  out.gyarfas = full - ipow(r, static_cast<unsigned long>(r - 1) * (r - 2) / 2) + 1;

  const std::size_t s = r / 8;
  for (std::size_t j = 0; j <= s; ++j) {
    int which = 0;
    auto value = case_threshold(r, j, constant_c, &which);
    if (j == 0 || value > out.threshold) {
      out.threshold = std::move(value);
      out.worst_j = j;
      out.worst_case = which;
    }
  }

  // The final pigeonhole needs the pinned-edge vertices to fit in r+1 slots: at most 2J
  // rows in case 1 and 4(s - J) columns in case 2.
  const bool fits = 2 * s <= r + 1 && 4 * s <= r + 1;
  if (r < 16) {
    out.note = "floor(r/8)/2 < 1: the case split degenerates for r < 16";
  } else if (!fits) {
    out.note = "pinned-edge vertices exceed r+1";
  } else {
    out.valid = true;
    if (r < 100) out.note = "explicit O(r^-4) constant is only argued for r >= 100";
  }
  return out;
}

}  // namespace gridramsey
