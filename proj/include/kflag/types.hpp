#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kflag {

/// Exact arbitrary-precision integer; all coefficient arithmetic is done in it.
using Int = boost::multiprecision::cpp_int;

/// One coordinate of a lattice point (weight coordinates, exponents, matrix entries).
using Coord = std::int32_t;

/// A point of a finite-rank lattice, e.g. an exponent vector of a Laurent monomial.
using Expo = std::vector<Coord>;

/// Small integer matrix, row-major: rows[i][j].
using IMatrix = std::vector<Expo>;

/// Invalid (type, rank, flag, ...) combination supplied by the caller.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (group order, degree bound, ...) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal mathematical invariant failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline Expo add(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Expo sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Expo neg(const Expo& a) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

/// Matrix-vector product over Coord; m has out_rank rows.
inline Expo apply(const IMatrix& m, const Expo& v) {
  Expo r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Coord acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    r[i] = acc;
  }
  return r;
}

inline IMatrix matmul(const IMatrix& a, const IMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  IMatrix r(n, Expo(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline IMatrix identity_matrix(std::size_t n) {
  IMatrix r(n, Expo(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

}  // namespace kflag
