#pragma once

// Exact integer and rational arithmetic used throughout the library.
// All ranks, multiplicities and character values are exact; floating
// point appears nowhere in the mathematical core.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace excol {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Subsets of markings 0..n-1 as bitmasks; n <= 20 everywhere we enumerate.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Elements of a mask in increasing order.
inline std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<int>& bits) {
  Mask m = 0;
  for (int b : bits) m |= Mask{1} << b;
  return m;
}

// All subsets of `universe` with exactly k bits, in increasing mask order.
inline std::vector<Mask> subsets_of_size(Mask universe, int k) {
  std::vector<Mask> out;
  const auto bits = mask_bits(universe);
  const int n = static_cast<int>(bits.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << bits[i];
    out.push_back(m);
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::int64_t to_int64(const Int& v) {
  return static_cast<std::int64_t>(v);
}

}  // namespace excol
