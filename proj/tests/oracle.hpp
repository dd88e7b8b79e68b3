#pragma once

// Naive index-loop reference routines for tests. They share no code with the
// library kernels: every amplitude is located by explicit bit arithmetic.

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;
using Mat = std::vector<Vec>;

inline std::size_t bit(std::size_t index, std::size_t q, std::size_t n) { return (index >> (n - 1 - q)) & 1u; }

// Sparse ket written as {"0101": amp, ...}.
inline Vec ket(const std::map<std::string, cplx>& terms, std::size_t n) {
  Vec v(std::size_t{1} << n);
  for (const auto& [bits, amp] : terms) {
    std::size_t idx = 0;
    for (char c : bits) idx = 2 * idx + static_cast<std::size_t>(c - '0');
    v[idx] += amp;
  }
  return v;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

// <bell|_{q1,q2} |psi>, leaving the other qubits in ascending order.
inline Vec project_pair(const Vec& psi, std::size_t n, std::size_t q1, std::size_t q2, const Vec& bell) {
  Vec out(std::size_t{1} << (n - 2));
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const std::size_t k = 2 * bit(idx, q1, n) + bit(idx, q2, n);
    std::size_t rest = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == q1 || q == q2) continue;
      rest = 2 * rest + bit(idx, q, n);
    }
    out[rest] += std::conj(bell[k]) * psi[idx];
  }
  return out;
}

inline Vec bell(int which) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: return {s, 0, 0, s};    // Phi+
    case 1: return {s, 0, 0, -s};   // Phi-
    case 2: return {0, s, s, 0};    // Psi+
    default: return {0, s, -s, 0};  // Psi-
  }
}

// Single-qubit gate on qubit q of an n-qubit ket.
inline Vec apply1(const Vec& psi, std::size_t n, std::size_t q, const Mat& g) {
  Vec out(psi.size());
  const std::size_t mask = std::size_t{1} << (n - 1 - q);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const std::size_t b = (idx & mask) ? 1 : 0;
    const std::size_t i0 = idx & ~mask;
    const std::size_t i1 = idx | mask;
    out[idx] = g[b][0] * psi[i0] + g[b][1] * psi[i1];
  }
  return out;
}

inline double norm2(const Vec& v) {
  double s = 0;
  for (auto a : v) s += std::norm(a);
  return s;
}

inline cplx dot(const Vec& a, const Vec& b) {
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double max_diff(const Vec& a, const Vec& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
