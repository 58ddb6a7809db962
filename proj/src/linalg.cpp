#include "chow/linalg.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
          clean = false;
        }
      }
      if (clean) {
        // The pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < cols && clean; ++j) {
            if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
              for (std::size_t c = t; c < cols; ++c) m(t, c) += m(i, c);
              clean = false;
            }
          }
        }
      }
    }
    out.push_back(abs(m(t, t)));
    ++t;
  }
  return out;
}

}  // namespace chow
