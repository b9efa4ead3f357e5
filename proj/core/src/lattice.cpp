#include "k3lat/lattice.hpp"

#include <optional>
#include <utility>

#include "k3lat/error.hpp"

namespace k3lat {

namespace {

std::optional<Signature> try_signature(const IntMatrix& gram) {
  RationalMatrix a = to_rational(gram);
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: replace e_i by e_i + e_j for
      // some nonzero off-diagonal entry, which makes a(i, i) = 2 a(i, j).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) return std::nullopt;
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      p = bi;
    }
    a.swap_rows(p, k);
    a.swap_cols(p, k);
    const Rational pivot = a(k, k);
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      a(i, k) = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return sig;
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) fail_invalid("Gram matrix must be square");
  if (gram_.rows() == 0) fail_invalid("lattice rank must be at least 1");
  if (!gram_.is_symmetric()) fail_invalid("Gram matrix must be symmetric");
}

Integer Lattice::pairing(const LatticeVector& a, const LatticeVector& b) const {
  if (a.size() != rank() || b.size() != rank()) fail_invalid("vector length does not match lattice rank");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * b[j];
    s += a[i] * row;
  }
  return s;
}

Integer norm(const Lattice& lattice, const LatticeVector& v) { return lattice.pairing(v, v); }

Signature signature(const Lattice& lattice) {
  auto sig = try_signature(lattice.gram());
  if (!sig) fail_precondition("signature: degenerate Gram matrix");
  return *sig;
}

Integer determinant(const Lattice& lattice) { return determinant(lattice.gram()); }

bool is_nondegenerate(const Lattice& lattice) { return determinant(lattice) != 0; }

bool is_positive_definite(const Lattice& lattice) {
  auto sig = try_signature(lattice.gram());
  return sig && sig->negative == 0;
}

bool is_negative_definite(const Lattice& lattice) {
  auto sig = try_signature(lattice.gram());
  return sig && sig->positive == 0;
}

std::vector<Integer> discriminant_group(const Lattice& lattice) {
  if (!is_nondegenerate(lattice)) fail_precondition("discriminant group: degenerate Gram matrix");
  std::vector<Integer> out;
  for (auto& d : smith_invariants(lattice.gram())) {
    if (d > 1) out.push_back(std::move(d));
  }
  return out;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b(i, j);
  return Lattice(std::move(g));
}

Lattice twist(const Lattice& lattice, const Integer& a) {
  if (a == 0) fail_precondition("twist: scale factor must be nonzero");
  return Lattice(lattice.gram().scaled(a));
}

Lattice pullback(const Lattice& lattice, const IntMatrix& basis) {
  if (basis.rows() != lattice.rank()) fail_invalid("basis rows do not match lattice rank");
  return Lattice(basis.transpose() * lattice.gram() * basis);
}

Complement orthogonal_complement(const Lattice& lattice, const LatticeVector& v) {
  if (v.size() != lattice.rank()) fail_invalid("vector length does not match lattice rank");
  if (content(v) == 0) fail_precondition("orthogonal complement of the zero vector");
  if (lattice.rank() < 2) fail_precondition("orthogonal complement in a rank-1 lattice is zero");
  if (!is_nondegenerate(lattice)) fail_precondition("orthogonal complement: degenerate lattice");
  IntVector w = lattice.gram() * v;
  IntMatrix row(1, w.size());
  for (std::size_t j = 0; j < w.size(); ++j) row(0, j) = w[j];
  IntMatrix basis = integer_kernel(row);
  Lattice sub = pullback(lattice, basis);
  return Complement{std::move(sub), std::move(basis)};
}

bool is_primitive(const Lattice& lattice, const LatticeVector& v) {
  if (v.size() != lattice.rank()) fail_invalid("vector length does not match lattice rank");
  Integer g = content(v);
  if (g == 0) fail_precondition("primitivity of the zero vector");
  return g == 1;
}

}  // namespace k3lat
