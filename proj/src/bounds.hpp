#pragma once

namespace loadcol {

/// Edge-density thresholds. A bipartite graph with m >= b_bound(c,k,n) and a
/// general graph with m >= f_bound(c,k,n) are always Yes-instances (for c a
/// power of two); kernel_edge_factor(c) * k bounds the kernel's edge count.

constexpr long long b_bound(long long c, long long k, long long n) {
  return c * c * k + n * (c - 1);
}

constexpr long long f_bound(long long c, long long k, long long n) {
  return (2 * c - 1) * c * k + 2 * n * (c - 1);
}

constexpr long long kernel_edge_factor(long long c) {  // K(c)
  return c <= 1 ? 1 : 16 * c * c - 6 * c;
}

inline long long approx_ratio_product(int c) {  // P(c) = prod K(i)/i, an integer
  long long p = 1;
  for (int i = 2; i <= c; ++i) p *= 16LL * i - 6;
  return p;
}

inline long long approx_guarantee(int c) {  // 2^{c-1} P(c)
  return (1LL << (c - 1)) * approx_ratio_product(c);
}

constexpr int next_pow2(int c) {
  int p = 1;
  while (p < c) p <<= 1;
  return p;
}

}  // namespace loadcol
