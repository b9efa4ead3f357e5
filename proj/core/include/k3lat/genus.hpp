#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

enum class BlockType { odd, even };

// One Jordan constituent p^scale * f with f unimodular of dimension dim.
//
// sign is the Legendre symbol (det f / p) for odd p, and for p = 2 the
// Kronecker symbol (2 / det f), i.e. +1 iff det f = +-1 mod 8. type and
// oddity only appear for p = 2; in a canonical symbol the oddity is the
// total oddity of the compartment and is stored on its first constituent.
struct JordanBlock {
  int scale = 0;
  std::size_t dim = 0;
  int sign = 1;
  std::optional<BlockType> type;
  std::optional<int> oddity;

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

struct GenusSymbol {
  Integer prime;
  std::vector<JordanBlock> blocks;  // increasing scale, nonzero dimension

  friend bool operator==(const GenusSymbol&, const GenusSymbol&) = default;
};

// Jordan decomposition over Z_p by exact elimination. For p = 2 each
// constituent carries the oddity of its own diagonal part (no fusion or
// sign walking applied).
GenusSymbol jordan_decomposition(const Lattice& lattice, const Integer& p);

// Canonical p-adic symbol; for p = 2 oddity fusion and sign walking are
// applied so that equality of symbols is equivalent to Z_2-equivalence.
GenusSymbol padic_symbol(const Lattice& lattice, const Integer& p);

// 2 and the primes dividing the determinant.
std::vector<Integer> genus_primes(const Lattice& lattice);

bool same_genus(const Lattice& a, const Lattice& b);

}  // namespace k3lat
