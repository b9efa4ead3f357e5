#include "k3lat/matrix.hpp"

#include <utility>

namespace k3lat {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Row echelon form over Z restricted to the first col_limit columns, using
// unimodular row operations only. Returns the number of pivot rows.
std::size_t integer_echelon(IntMatrix& m, std::size_t col_limit, bool reduce_above) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < col_limit && r < m.rows(); ++j) {
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (m(i, j) != 0 && (best == m.rows() || abs(m(i, j)) < abs(m(best, j)))) best = i;
      }
      if (best == m.rows()) break;
      m.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, j) == 0) continue;
        add_row_multiple(m, i, r, -(m(i, j) / m(r, j)));
        if (m(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, j) == 0) continue;
    if (m(r, j) < 0) negate_row(m, r);
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) add_row_multiple(m, i, r, -floor_div(m(i, j), m(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector q;
  q.reserve(v.size());
  for (const auto& x : v) q.emplace_back(x);
  return q;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) fail_invalid("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(i, k);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return s * m(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) fail_invalid("determinant of a non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> diag(n, Integer(0));
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = m.rows(), pj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (m(i, j) != 0 && (pi == m.rows() || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m.rows()) return diag;  // remaining block is zero
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        add_row_multiple(m, i, t, -(m(i, t) / m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        add_col_multiple(m, j, t, -(m(t, j) / m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m.rows();
      for (std::size_t i = t + 1; i < m.rows() && bad == m.rows(); ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m.rows()) break;
      add_row_multiple(m, t, bad, 1);
    }
    diag[t] = abs(m(t, t));
  }
  return diag;
}

IntMatrix hermite_rows(IntMatrix m) {
  std::size_t r = integer_echelon(m, m.cols(), true);
  IntMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t a = m.rows();
  const std::size_t n = m.cols();
  IntMatrix aug(n, a + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a; ++k) aug(i, k) = m(k, i);
    aug(i, a + i) = 1;
  }
  std::size_t r = integer_echelon(aug, a, false);
  IntMatrix tails(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tails(i - r, j) = aug(i, a + j);
  return hermite_rows(std::move(tails)).transpose();
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && m(p, j) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, j) == 0) continue;
      Rational f = m(i, j) / m(r, j);
      for (std::size_t k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& input) {
  if (!input.is_square()) fail_invalid("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix m = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(p, k);
    inv.swap_rows(p, k);
    Rational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail_invalid("dot product dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace k3lat
