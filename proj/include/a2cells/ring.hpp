#pragma once

#include <cstdint>

namespace a2cells {

// Scalar ring of the geometric representation. One ring per system, chosen as
// the smallest of Z, Z[sqrt2], Z[phi] containing every bond cosine.
enum class RingTag { integer, sqrt2, golden };

// a            (integer)
// a + b*sqrt2  (sqrt2)
// a + b*phi    (golden), phi = (1+sqrt5)/2, phi^2 = phi + 1
struct RingScalar {
  long long a = 0;
  long long b = 0;

  friend bool operator==(const RingScalar&, const RingScalar&) = default;
};

inline RingScalar radd(RingScalar x, RingScalar y) { return {x.a + y.a, x.b + y.b}; }
inline RingScalar rsub(RingScalar x, RingScalar y) { return {x.a - y.a, x.b - y.b}; }
inline RingScalar rneg(RingScalar x) { return {-x.a, -x.b}; }
inline bool is_zero(RingScalar x) { return x.a == 0 && x.b == 0; }

inline RingScalar rmul(RingTag tag, RingScalar x, RingScalar y) {
  switch (tag) {
    case RingTag::integer:
      return {x.a * y.a, 0};
    case RingTag::sqrt2:
      return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    case RingTag::golden:
      return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  return {};
}

namespace detail {
// Exact sign of p + q*sqrt(d) for nonsquare d; p, q of mixed sign resolved by
// comparing p^2 against d*q^2.
inline int surd_sign(long long p, long long q, long long d) {
  if (p == 0 && q == 0) return 0;
  if (p >= 0 && q >= 0) return 1;
  if (p <= 0 && q <= 0) return -1;
  __int128 lhs = static_cast<__int128>(p) * p;
  __int128 rhs = static_cast<__int128>(d) * q * q;
  if (p > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}
}  // namespace detail

// Exact sign of the real number represented by x.
inline int ring_sign(RingTag tag, RingScalar x) {
  switch (tag) {
    case RingTag::integer:
      return (x.a > 0) - (x.a < 0);
    case RingTag::sqrt2:
      return detail::surd_sign(x.a, x.b, 2);
    case RingTag::golden:
      // a + b*phi = ((2a+b) + b*sqrt5) / 2
      return detail::surd_sign(2 * x.a + x.b, x.b, 5);
  }
  return 0;
}

}  // namespace a2cells
