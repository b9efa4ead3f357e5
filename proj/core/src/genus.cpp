#include "k3lat/genus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k3lat/error.hpp"

namespace k3lat {

namespace {

int rational_valuation(const Rational& q, const Integer& p) {
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

Rational p_power(const Integer& p, int k) {
  if (k >= 0) return Rational(pow(p, static_cast<unsigned>(k)));
  return Rational(Integer(1), pow(p, static_cast<unsigned>(-k)));
}

// Residue of a 2-adic unit (odd numerator and denominator) modulo 8.
int unit_mod8(const Rational& u) {
  Integer r = mod_floor(numerator(u) * denominator(u), 8);
  return static_cast<int>(r);
}

struct RawConstituent {
  std::size_t dim = 0;
  Rational unit_det = 1;
  bool has_odd = false;
  int oddity = 0;
};

// Splits off one Jordan piece at a time. Entries stay p-integral because
// the pivot always has minimal valuation.
std::map<int, RawConstituent> decompose(const Lattice& lattice, const Integer& p) {
  if (!is_prime(p)) fail_precondition("p-adic symbol: " + to_string(p) + " is not prime");
  if (!is_nondegenerate(lattice)) fail_precondition("p-adic symbol: degenerate lattice");
  RationalMatrix a = to_rational(lattice.gram());
  std::map<int, RawConstituent> pieces;
  const bool two = p == 2;

  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    int best = 0;
    bool any = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (a(i, j) == 0) continue;
        int v = rational_valuation(a(i, j), p);
        // Prefer diagonal entries on ties.
        bool better = !any || v < best || (v == best && i == j && bi != bj);
        if (better) {
          best = v;
          bi = i;
          bj = j;
          any = true;
        }
      }
    if (!any) fail_precondition("p-adic symbol: degenerate lattice");

    std::size_t block = 1;
    if (bi != bj) {
      if (!two) {
        // e_i <- e_i + e_j makes a(i, i) of minimal valuation.
        for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
        for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
        bj = bi;
      } else {
        block = 2;
      }
    }
    // Move the pivot rows to the front.
    a.swap_rows(0, bi);
    a.swap_cols(0, bi);
    if (block == 2) {
      std::size_t other = bj == 0 ? bi : bj;
      a.swap_rows(1, other);
      a.swap_cols(1, other);
    }

    RawConstituent& piece = pieces[best];
    const Rational scale = p_power(p, best);
    if (block == 1) {
      Rational u = a(0, 0) / scale;
      piece.dim += 1;
      piece.unit_det *= u;
      if (two) {
        piece.has_odd = true;
        piece.oddity = (piece.oddity + unit_mod8(u)) % 8;
      }
    } else {
      Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      piece.dim += 2;
      piece.unit_det *= det / (scale * scale);
    }

    // Schur complement of the pivot block.
    const std::size_t m = n - block;
    RationalMatrix rest(m, m);
    if (block == 1) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          rest(i, j) = a(i + 1, j + 1) - a(i + 1, 0) * a(0, j + 1) / a(0, 0);
    } else {
      Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      // inverse of [[x, y], [y, z]] is [[z, -y], [-y, x]] / det
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Rational& ci0 = a(i + 2, 0);
          const Rational& ci1 = a(i + 2, 1);
          const Rational& c0j = a(0, j + 2);
          const Rational& c1j = a(1, j + 2);
          Rational corr = (ci0 * (a(1, 1) * c0j - a(0, 1) * c1j) + ci1 * (-a(1, 0) * c0j + a(0, 0) * c1j)) / det;
          rest(i, j) = a(i + 2, j + 2) - corr;
        }
    }
    a = std::move(rest);
  }
  return pieces;
}

int sign_of_unit(const Rational& u, const Integer& p) {
  if (p == 2) {
    int r = unit_mod8(u);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return legendre(numerator(u) * denominator(u), p);
}

}  // namespace

GenusSymbol jordan_decomposition(const Lattice& lattice, const Integer& p) {
  GenusSymbol sym;
  sym.prime = p;
  for (const auto& [scale, piece] : decompose(lattice, p)) {
    JordanBlock b;
    b.scale = scale;
    b.dim = piece.dim;
    b.sign = sign_of_unit(piece.unit_det, p);
    if (p == 2) {
      b.type = piece.has_odd ? BlockType::odd : BlockType::even;
      b.oddity = piece.has_odd ? piece.oddity : 0;
    }
    sym.blocks.push_back(b);
  }
  return sym;
}

GenusSymbol padic_symbol(const Lattice& lattice, const Integer& p) {
  GenusSymbol sym = jordan_decomposition(lattice, p);
  if (p != 2) return sym;

  auto& blocks = sym.blocks;
  const std::size_t n = blocks.size();
  auto odd = [&](std::size_t i) { return blocks[i].type == BlockType::odd; };

  // Compartments: maximal runs of odd constituents with consecutive scales.
  std::vector<int> compartment(n, -1);
  std::vector<int> compartment_oddity;
  std::vector<std::size_t> compartment_head;
  for (std::size_t i = 0; i < n; ++i) {
    if (!odd(i)) continue;
    if (i > 0 && odd(i - 1) && blocks[i - 1].scale + 1 == blocks[i].scale) {
      compartment[i] = compartment[i - 1];
      int c = compartment[i];
      compartment_oddity[c] = (compartment_oddity[c] + *blocks[i].oddity) % 8;
    } else {
      compartment[i] = static_cast<int>(compartment_oddity.size());
      compartment_oddity.push_back(*blocks[i].oddity);
      compartment_head.push_back(i);
    }
  }

  // Trains: neighbours i-1, i share a train when every pair of adjacent
  // scales between them (missing scales count as even) has an odd member.
  std::vector<std::vector<std::size_t>> trains;
  for (std::size_t i = 0; i < n; ++i) {
    bool joined = false;
    if (i > 0) {
      int gap = blocks[i].scale - blocks[i - 1].scale;
      if (gap == 1) joined = odd(i - 1) || odd(i);
      if (gap == 2) joined = odd(i - 1) && odd(i);
    }
    if (joined) {
      trains.back().push_back(i);
    } else {
      trains.push_back({i});
    }
  }

  // Sign walking: push every sign to the front of its train; each step
  // changes the total oddity of the compartments it touches by 4.
  for (const auto& train : trains) {
    for (std::size_t k = train.size(); k-- > 1;) {
      std::size_t cur = train[k], prev = train[k - 1];
      if (blocks[cur].sign == 1) continue;
      blocks[cur].sign = 1;
      blocks[prev].sign = -blocks[prev].sign;
      std::set<int> touched;
      if (compartment[cur] >= 0) touched.insert(compartment[cur]);
      if (compartment[prev] >= 0) touched.insert(compartment[prev]);
      for (int c : touched) compartment_oddity[c] = (compartment_oddity[c] + 4) % 8;
    }
  }

  for (std::size_t i = 0; i < n; ++i) blocks[i].oddity.reset();
  for (std::size_t c = 0; c < compartment_head.size(); ++c) {
    blocks[compartment_head[c]].oddity = compartment_oddity[c];
  }
  return sym;
}

std::vector<Integer> genus_primes(const Lattice& lattice) {
  Integer det = determinant(lattice);
  if (det == 0) fail_precondition("genus: degenerate lattice");
  std::vector<Integer> primes = prime_divisors(2 * det);
  return primes;
}

bool same_genus(const Lattice& a, const Lattice& b) {
  if (!is_nondegenerate(a) || !is_nondegenerate(b)) fail_precondition("same_genus: degenerate lattice");
  if (a.rank() != b.rank()) return false;
  if (signature(a) != signature(b)) return false;
  if (determinant(a) != determinant(b)) return false;
  for (const Integer& p : genus_primes(a)) {
    if (padic_symbol(a, p) != padic_symbol(b, p)) return false;
  }
  return true;
}

}  // namespace k3lat
