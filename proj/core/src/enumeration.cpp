#include "k3lat/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "k3lat/binary_forms.hpp"
#include "k3lat/error.hpp"

namespace k3lat {

namespace {

// Upper-triangular Cholesky data: Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct CholeskyForm {
  std::vector<Rational> diag;
  RationalMatrix mu;
};

std::optional<CholeskyForm> rational_cholesky(const RationalMatrix& gram) {
  const std::size_t n = gram.rows();
  RationalMatrix q = gram;
  CholeskyForm out{std::vector<Rational>(n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) return std::nullopt;
    out.diag[i] = q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = q(i, j) / q(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) {
        q(k, l) -= out.mu(i, k) * q(i, l);
        q(l, k) = q(k, l);
      }
  }
  return out;
}

// Integers x with d (x - c)^2 <= r.
std::pair<Integer, Integer> admissible_range(const Rational& c, const Rational& r, const Rational& d) {
  const Rational ratio = r / d;
  // floor(sqrt(p/q)) = floor(isqrt(p q) / q)
  const Integer t = isqrt(numerator(ratio) * denominator(ratio)) / denominator(ratio);
  const Integer base = floor(c);
  Integer lo = base - t - 1;
  Integer hi = base + t + 2;
  auto ok = [&](const Integer& x) {
    Rational diff = Rational(x) - c;
    return d * diff * diff <= r;
  };
  while (lo <= hi && !ok(lo)) ++lo;
  while (hi >= lo && !ok(hi)) --hi;
  return {lo, hi};
}

void enumerate_level(const CholeskyForm& form, std::size_t level, const Rational& remaining, IntVector& x,
                     std::vector<LatticeVector>& out) {
  Rational center = 0;
  for (std::size_t j = level + 1; j < x.size(); ++j) center -= form.mu(level, j) * x[j];
  auto [lo, hi] = admissible_range(center, remaining, form.diag[level]);
  for (Integer v = lo; v <= hi; ++v) {
    x[level] = v;
    Rational diff = Rational(v) - center;
    Rational rest = remaining - form.diag[level] * diff * diff;
    if (level == 0) {
      out.push_back(x);
    } else {
      enumerate_level(form, level - 1, rest, x, out);
    }
  }
  x[level] = 0;
}

std::string describe_gram(const Lattice& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < l.rank(); ++j) {
      if (j) s += ",";
      s += to_string(l(i, j));
    }
  }
  return s + "]";
}

void require_positive_definite(const Lattice& l, const char* what) {
  if (!is_positive_definite(l)) {
    fail_precondition(std::string(what) + ": lattice " + describe_gram(l) + " is not positive definite");
  }
}

// Backtracking over column images; callback returns false to stop.
void search_embeddings(const Lattice& source, const Lattice& target,
                       const std::function<bool(const std::vector<const LatticeVector*>&)>& accept) {
  const std::size_t k = source.rank();
  std::map<Integer, std::vector<LatticeVector>> by_norm;
  for (std::size_t j = 0; j < k; ++j) {
    if (!by_norm.count(source(j, j))) by_norm.emplace(source(j, j), vectors_of_norm(target, source(j, j)));
  }
  std::vector<const std::vector<LatticeVector>*> candidates(k);
  for (std::size_t j = 0; j < k; ++j) candidates[j] = &by_norm.at(source(j, j));

  // Cache G v for every candidate so pairings are plain dot products.
  std::map<Integer, std::vector<IntVector>> dual;
  for (const auto& [n, list] : by_norm) {
    auto& d = dual[n];
    d.reserve(list.size());
    for (const auto& v : list) d.push_back(target.gram() * v);
  }

  std::vector<const LatticeVector*> chosen(k, nullptr);
  std::vector<const IntVector*> chosen_dual(k, nullptr);
  bool stop = false;
  std::function<void(std::size_t)> step = [&](std::size_t col) {
    if (stop) return;
    if (col == k) {
      if (!accept(chosen)) stop = true;
      return;
    }
    const auto& list = *candidates[col];
    const auto& duals = dual.at(source(col, col));
    for (std::size_t idx = 0; idx < list.size() && !stop; ++idx) {
      bool ok = true;
      for (std::size_t prev = 0; prev < col && ok; ++prev) {
        if (dot(*chosen_dual[prev], list[idx]) != source(prev, col)) ok = false;
      }
      if (!ok) continue;
      chosen[col] = &list[idx];
      chosen_dual[col] = &duals[idx];
      step(col + 1);
    }
  };
  step(0);
}

IntMatrix columns_to_matrix(const std::vector<const LatticeVector*>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = (*cols[j])[i];
  return m;
}

Integer sup_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s = std::max(s, abs(x));
  return s;
}

// b = P + <-d> with P positive definite.
struct SplitLattice {
  Lattice positive;
  Integer d;
};

std::optional<SplitLattice> split_negative_line(const Lattice& b) {
  const std::size_t n = b.rank();
  if (n < 2 || b(n - 1, n - 1) >= 0) return std::nullopt;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (b(i, n - 1) != 0) return std::nullopt;
  IntMatrix p(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) p(i, j) = b(i, j);
  Lattice pl(p);
  if (!is_positive_definite(pl)) return std::nullopt;
  return SplitLattice{pl, -b(n - 1, n - 1)};
}

// For each last coordinate z, the rest solves P(x) = q + d z^2.
void collect_split(const SplitLattice& s, const Integer& bound, std::map<Integer, std::vector<LatticeVector>>& by_norm) {
  for (auto& [q, list] : by_norm) {
    for (Integer z = -bound; z <= bound; ++z) {
      Integer target = q + s.d * z * z;
      if (target < 0) continue;
      for (auto& x : vectors_of_norm(s.positive, target)) {
        if (sup_norm(x) > bound) continue;
        x.push_back(z);
        list.push_back(std::move(x));
      }
    }
  }
}

void collect_box(const Lattice& b, const Integer& bound, std::map<Integer, std::vector<LatticeVector>>& by_norm) {
  const std::size_t n = b.rank();
  IntVector x(n, -bound);
  while (true) {
    auto it = by_norm.find(norm(b, x));
    if (it != by_norm.end()) it->second.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(IntMatrix matrix, Lattice source, Lattice target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    fail_invalid("embedding matrix must be rank(target) x rank(source)");
  }
  if (matrix_.transpose() * target_.gram() * matrix_ != source_.gram()) {
    fail_precondition("embedding matrix is not Gram-compatible");
  }
}

bool EmbeddingMatrix::is_primitive() const {
  for (const auto& d : smith_invariants(matrix_)) {
    if (d != 1) return false;
  }
  return true;
}

std::vector<LatticeVector> short_vectors(const RationalMatrix& gram, const Rational& bound) {
  if (!gram.is_square() || gram.rows() == 0) fail_invalid("short_vectors: Gram matrix must be square");
  auto form = rational_cholesky(gram);
  if (!form) fail_precondition("short_vectors: Gram matrix is not positive definite");
  std::vector<LatticeVector> out;
  if (bound < 0) return out;
  IntVector x(gram.rows(), Integer(0));
  enumerate_level(*form, gram.rows() - 1, bound, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> vectors_of_norm(const Lattice& lattice, const Integer& n) {
  require_positive_definite(lattice, "vectors_of_norm");
  if (n < 0) fail_precondition("vectors_of_norm: norm must be non-negative");
  std::vector<LatticeVector> all = short_vectors(to_rational(lattice.gram()), Rational(n));
  std::vector<LatticeVector> out;
  for (auto& v : all) {
    if (norm(lattice, v) == n) out.push_back(std::move(v));
  }
  return out;
}

std::vector<EmbeddingMatrix> embeddings(const Lattice& source, const Lattice& target, bool primitive_only) {
  require_positive_definite(source, "embeddings");
  require_positive_definite(target, "embeddings");
  if (source.rank() > target.rank()) fail_precondition("embeddings: source rank exceeds target rank");
  std::vector<EmbeddingMatrix> out;
  search_embeddings(source, target, [&](const std::vector<const LatticeVector*>& cols) {
    EmbeddingMatrix e(columns_to_matrix(cols, target.rank()), source, target);
    if (!primitive_only || e.is_primitive()) out.push_back(std::move(e));
    return true;
  });
  return out;
}

std::optional<EmbeddingMatrix> is_isometric_definite(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) fail_precondition("is_isometric_definite: ranks differ");
  const bool a_pos = is_positive_definite(a), b_pos = is_positive_definite(b);
  const bool a_neg = !a_pos && is_negative_definite(a), b_neg = !b_pos && is_negative_definite(b);
  if (!(a_pos || a_neg) || !(b_pos || b_neg) || a_pos != b_pos) {
    fail_precondition("is_isometric_definite: lattices must be definite of the same sign");
  }
  if (a == b) return EmbeddingMatrix(IntMatrix::identity(a.rank()), a, b);
  if (determinant(a) != determinant(b)) return std::nullopt;
  const Lattice pa = a_pos ? a : twist(a, -1);
  const Lattice pb = b_pos ? b : twist(b, -1);
  std::optional<EmbeddingMatrix> found;
  search_embeddings(pa, pb, [&](const std::vector<const LatticeVector*>& cols) {
    found.emplace(columns_to_matrix(cols, b.rank()), a, b);
    return false;
  });
  return found;
}

IsometrySearch indefinite_isometry_search(const Lattice& a, const Lattice& b, const Integer& height_bound) {
  IsometrySearch result;
  if (a.rank() != b.rank()) {
    result.outcome = SearchOutcome::not_isometric;
    result.detail = "ranks differ";
    return result;
  }
  if (determinant(a) != determinant(b)) {
    result.outcome = SearchOutcome::not_isometric;
    result.detail = "determinants differ";
    return result;
  }
  if (!is_nondegenerate(a)) fail_precondition("indefinite_isometry_search: degenerate lattice");
  if (signature(a) != signature(b)) {
    result.outcome = SearchOutcome::not_isometric;
    result.detail = "signatures differ";
    return result;
  }
  if (a == b) {
    result.outcome = SearchOutcome::isometric;
    result.witness.emplace(IntMatrix::identity(a.rank()), a, b);
    result.detail = "identical Gram matrices";
    return result;
  }
  if (height_bound < 0) fail_precondition("indefinite_isometry_search: negative height bound");

  const std::size_t n = a.rank();
  const Integer side = 2 * height_bound + 1;

  // Vectors of the box [-B, B]^n bucketed by the norms we need.
  std::map<Integer, std::vector<LatticeVector>> by_norm;
  for (std::size_t j = 0; j < n; ++j) by_norm[a(j, j)];
  if (auto split = split_negative_line(b)) {
    collect_split(*split, height_bound, by_norm);
  } else {
    if (pow(side, static_cast<unsigned>(n)) > Integer(20'000'000)) {
      fail_precondition("indefinite_isometry_search: search box too large for rank " + std::to_string(n));
    }
    collect_box(b, height_bound, by_norm);
  }
  for (auto& [q, list] : by_norm) {
    std::stable_sort(list.begin(), list.end(), [](const IntVector& u, const IntVector& v) {
      Integer su = sup_norm(u), sv = sup_norm(v);
      if (su != sv) return su < sv;
      return u < v;
    });
  }

  // Fill columns with the fewest candidates first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return by_norm.at(a(i, i)).size() < by_norm.at(a(j, j)).size();
  });

  std::vector<const LatticeVector*> chosen(n, nullptr);
  std::vector<IntVector> chosen_dual(n);
  std::function<bool(std::size_t)> step = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t col = order[depth];
    for (const auto& v : by_norm.at(a(col, col))) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        if (dot(chosen_dual[order[d]], v) != a(order[d], col)) ok = false;
      }
      if (!ok) continue;
      chosen[col] = &v;
      chosen_dual[col] = b.gram() * v;
      if (step(depth + 1)) return true;
    }
    return false;
  };
  if (step(0)) {
    result.outcome = SearchOutcome::isometric;
    result.witness.emplace(columns_to_matrix(chosen, n), a, b);
    result.detail = "witness found";
  } else {
    result.outcome = SearchOutcome::inconclusive;
    result.detail = "no witness with entries bounded by " + to_string(height_bound);
  }
  return result;
}

OrbitInvariant orbit_invariant(const Lattice& lattice, const LatticeVector& v) {
  if (v.size() != lattice.rank()) fail_invalid("orbit_invariant: vector length does not match lattice rank");
  if (lattice.rank() < 2 || lattice.rank() > 3) fail_precondition("orbit_invariant: lattice rank must be 2 or 3");
  Signature sig = signature(lattice);
  if (sig.positive != 1) fail_precondition("orbit_invariant: lattice must have signature (1, m)");
  if (!is_primitive(lattice, v)) fail_precondition("orbit_invariant: vector must be primitive");
  const Integer q = norm(lattice, v);
  if (q <= 0) fail_precondition("orbit_invariant: vector must have positive norm");

  Complement comp = orthogonal_complement(lattice, v);
  IntMatrix basis = comp.basis;
  const std::size_t m = basis.cols();

  IntMatrix frame(lattice.rank(), lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    frame(i, 0) = v[i];
    for (std::size_t j = 0; j < m; ++j) frame(i, j + 1) = basis(i, j);
  }
  if (determinant(frame) < 0) {
    for (std::size_t i = 0; i < lattice.rank(); ++i) basis(i, m - 1) = -basis(i, m - 1);
  }
  const IntMatrix neg = pullback(lattice, basis).gram().scaled(-1);

  OrbitInvariant inv;
  inv.norm = q;
  inv.discriminant_group = discriminant_group(lattice);
  inv.complement_discriminant_group = discriminant_group(Lattice(neg));
  if (m == 1) {
    inv.complement_gram = neg;
    inv.complement_gram_unoriented = neg;
    return inv;
  }
  auto to_gram = [](const BinaryForm& f) { return IntMatrix{{f.a, f.b / 2}, {f.b / 2, f.c}}; };
  BinaryForm f{neg(0, 0), 2 * neg(0, 1), neg(1, 1)};
  BinaryForm oriented = reduce(f).form;
  BinaryForm mirrored = reduce(BinaryForm{f.a, -f.b, f.c}).form;
  inv.complement_gram = to_gram(oriented);
  inv.complement_gram_unoriented = to_gram(std::min(oriented, mirrored));
  return inv;
}

}  // namespace k3lat
