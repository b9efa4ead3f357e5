#include "k3lat/cm_twistor.hpp"

#include <algorithm>

#include "k3lat/error.hpp"

namespace k3lat {

namespace {

const CMField& field_of(const PeriodVector& pv) {
  if (pv.mu.empty()) fail_invalid("period vector: no coordinates");
  return pv.mu.front().field();
}

void check_shape(const PeriodVector& pv) {
  if (pv.mu.size() != pv.lattice.rank()) fail_invalid("period vector: coordinate count does not match lattice rank");
  const CMField& k = field_of(pv);
  for (const auto& m : pv.mu) {
    if (!(m.field() == k)) fail_invalid("period vector: coordinates live in different fields");
  }
}

// (gamma_i . sigma) for each i.
std::vector<CMElement> pairings(const PeriodVector& pv) {
  const CMField& k = field_of(pv);
  std::vector<CMElement> out;
  for (std::size_t i = 0; i < pv.lattice.rank(); ++i) {
    CMElement s = k.zero();
    for (std::size_t j = 0; j < pv.lattice.rank(); ++j) s = s + pv.mu[j].scaled(Rational(pv.lattice(i, j)));
    out.push_back(s);
  }
  return out;
}

RationalMatrix coordinate_matrix(const PeriodVector& pv) {
  const std::size_t r = pv.mu.size(), n = field_of(pv).degree();
  RationalMatrix c(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = pv.mu[i].coords()[j];
  return c;
}

struct Minor {
  std::size_t i = 0, j = 0;
  CMElement delta;
};

Minor nonzero_minor(const PeriodVector& pv) {
  const std::size_t r = pv.mu.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      CMElement delta = pv.mu[i] * pv.mu[j].conj() - pv.mu[j] * pv.mu[i].conj();
      if (!delta.is_zero()) return Minor{i, j, delta};
    }
  fail_precondition("period vector: every 2x2 minor of (mu, mu-bar) vanishes");
}

unsigned long max_root_order(const CMField& k) { return max_cyclotomic_order(static_cast<unsigned>(k.degree())); }

}  // namespace

PeriodVector normalize_period(const PeriodVector& pv) {
  check_shape(pv);
  CMElement s1 = pairings(pv).front();
  if (s1.is_zero()) fail_precondition("period vector: (gamma_1 . sigma) = 0, cannot normalize");
  CMElement inv = *s1.inverse();
  PeriodVector out{pv.lattice, {}};
  for (const auto& m : pv.mu) out.mu.push_back(m * inv);
  return out;
}

CMElement pairing_sigma_sigmabar(const PeriodVector& pv) {
  check_shape(pv);
  const CMField& k = field_of(pv);
  CMElement s = k.zero();
  for (std::size_t i = 0; i < pv.lattice.rank(); ++i)
    for (std::size_t j = 0; j < pv.lattice.rank(); ++j) {
      if (pv.lattice(i, j) == 0) continue;
      s = s + (pv.mu[i] * pv.mu[j].conj()).scaled(Rational(pv.lattice(i, j)));
    }
  if (!s.is_totally_positive()) {
    fail_precondition("period vector: (sigma . sigma-bar) = " + s.to_string() + " is not totally positive");
  }
  return s;
}

void validate_period(const PeriodVector& pv) {
  check_shape(pv);
  const CMField& k = field_of(pv);
  CMElement iso = k.zero();
  for (std::size_t i = 0; i < pv.lattice.rank(); ++i)
    for (std::size_t j = 0; j < pv.lattice.rank(); ++j)
      iso = iso + (pv.mu[i] * pv.mu[j]).scaled(Rational(pv.lattice(i, j)));
  if (!iso.is_zero()) fail_precondition("period vector: (sigma)^2 = " + iso.to_string() + " is not zero");
  pairing_sigma_sigmabar(pv);
  if (rank(coordinate_matrix(pv)) != pv.mu.size()) {
    fail_precondition("period vector: not general (sigma lies in a proper sublattice)");
  }
  if (!(pairings(pv).front() == k.one())) fail_precondition("period vector: not normalized, (gamma_1 . sigma) != 1");
}

std::optional<LambdaSolution> solve_lambda(const PeriodVector& pv, const EmbeddingMatrix& phi) {
  check_shape(pv);
  const std::size_t r = pv.lattice.rank();
  const IntMatrix& m = phi.matrix();
  if (m.rows() != r + 1 || m.cols() != r) fail_invalid("solve_lambda: phi must be (rank + 1) x rank");
  const CMField& k = field_of(pv);
  std::vector<CMElement> y;
  for (std::size_t i = 0; i < r; ++i) {
    CMElement s = k.zero();
    for (std::size_t c = 0; c < r; ++c) s = s + pv.mu[c].scaled(Rational(m(i, c)));
    y.push_back(s);
  }
  Minor mn = nonzero_minor(pv);
  const CMElement& mi = pv.mu[mn.i];
  const CMElement& mj = pv.mu[mn.j];
  CMElement lambda = (y[mn.i] * mj.conj() - y[mn.j] * mi.conj()) / mn.delta;
  CMElement lambda_prime = (mi * y[mn.j] - mj * y[mn.i]) / mn.delta;
  for (std::size_t i = 0; i < r; ++i) {
    if (!(y[i] == lambda * pv.mu[i] + lambda_prime * pv.mu[i].conj())) return std::nullopt;
  }
  CMElement nu = k.zero();
  for (std::size_t c = 0; c < r; ++c) nu = nu + pv.mu[c].scaled(Rational(m(r, c)));
  return LambdaSolution{lambda, lambda_prime, nu};
}

bool verify_norm_equation(const CMElement& lambda, const CMElement& lambda_prime, const CMElement& nu,
                          const Integer& d, const CMElement& ssb, const Integer& index) {
  if (!ssb.is_totally_positive()) fail_precondition("verify_norm_equation: (sigma . sigma-bar) must be totally positive");
  CMElement lhs = lambda * lambda.conj() + lambda_prime * lambda_prime.conj() +
                  (nu * nu.conj()).scaled(Rational(d)) / ssb;
  return lhs == ssb.field().from_rational(Rational(index * index));
}

std::vector<CMElement> enumerate_bounded_integers(const CMField& field, const Integer& bound) {
  if (bound < 0) fail_precondition("enumerate_bounded_integers: bound must be non-negative");
  const std::size_t n = field.degree();
  // Tr(x x-bar) = sum_g |g(x)|^2 <= n bound^2 on the integral basis.
  RationalMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = (field.basis_element(i) * field.basis_element(j).conj()).trace();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational avg = (gram(i, j) + gram(j, i)) / 2;
      gram(i, j) = gram(j, i) = avg;
    }
  const Integer b2 = bound * bound;
  std::vector<CMElement> out;
  for (const auto& v : short_vectors(gram, Rational(b2 * static_cast<long>(n)))) {
    CMElement x = field.from_integral_coords(v);
    if ((field.from_rational(Rational(b2)) - x * x.conj()).is_totally_nonnegative()) out.push_back(std::move(x));
  }
  return out;
}

std::optional<unsigned> is_root_of_unity(const CMElement& x) {
  if (!x.is_integral()) return std::nullopt;
  if (!(x * x.conj() == x.field().one())) return std::nullopt;
  const unsigned long limit = max_root_order(x.field());
  CMElement power = x;
  for (unsigned m = 1; m <= limit; ++m) {
    if (power == x.field().one()) return m;
    power = power * x;
  }
  return std::nullopt;
}

std::vector<CMElement> roots_of_unity(const CMField& field) {
  std::vector<std::pair<unsigned, CMElement>> tagged;
  for (auto& x : enumerate_bounded_integers(field, 1)) {
    if (auto m = is_root_of_unity(x)) tagged.emplace_back(*m, std::move(x));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<CMElement> out;
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

Integer scaling_denominator(const PeriodVector& pv) {
  check_shape(pv);
  Minor mn = nonzero_minor(pv);
  const CMElement& mi = pv.mu[mn.i];
  const CMElement& mj = pv.mu[mn.j];
  Integer n = 1;
  for (const auto& mk : pv.mu) {
    for (const CMElement& e : {mk * mj.conj(), mk * mi.conj(), mi * mk, mj * mk}) {
      n = lcm(n, (e / mn.delta).denominator_over_integral_basis());
    }
  }
  return n;
}

PeriodEmbeddingSearch enumerate_period_embeddings(const PeriodVector& pv, const Integer& d, const Integer& index) {
  validate_period(pv);
  if (d <= 0) fail_precondition("enumerate_period_embeddings: d must be positive");
  if (index <= 0) fail_precondition("enumerate_period_embeddings: index must be positive");
  const CMField& k = field_of(pv);
  const std::size_t r = pv.lattice.rank();
  const CMElement ssb = pairing_sigma_sigmabar(pv);
  const Lattice source = index == 1 ? pv.lattice : twist(pv.lattice, index * index);
  const Lattice target = direct_sum(pv.lattice, Lattice{{d}});
  const Integer n2 = index * index;

  PeriodEmbeddingSearch result;
  result.scaling = scaling_denominator(pv);
  const Rational inv_n(Integer(1), result.scaling);
  std::vector<CMElement> lambdas;
  for (const auto& x : enumerate_bounded_integers(k, result.scaling * index)) lambdas.push_back(x.scaled(inv_n));

  // Rows of P solve p C = coords(Y_i); C has full row rank by generality.
  const RationalMatrix c = coordinate_matrix(pv);
  const RationalMatrix ct = c.transpose();
  const RationalMatrix right_inverse = ct * *inverse(c * ct);
  const RationalMatrix g = to_rational(pv.lattice.gram());

  for (const auto& lambda : lambdas) {
    CMElement rest = k.from_rational(Rational(n2)) - lambda * lambda.conj();
    if (!rest.is_totally_nonnegative()) continue;
    for (const auto& lambda_prime : lambdas) {
      if (!(rest - lambda_prime * lambda_prime.conj()).is_totally_nonnegative()) continue;
      ++result.candidates;
      // P mu = lambda mu + lambda' mu-bar
      IntMatrix p(r, r);
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        CMElement yi = lambda * pv.mu[i] + lambda_prime * pv.mu[i].conj();
        const std::vector<Rational>& yc = yi.coords();
        std::vector<Rational> sol(r, Rational(0));
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t t = 0; t < yc.size(); ++t) sol[a] += yc[t] * right_inverse(t, a);
        for (std::size_t t = 0; t < yc.size() && ok; ++t) {
          Rational s = 0;
          for (std::size_t a = 0; a < r; ++a) s += sol[a] * c(a, t);
          if (s != yc[t]) ok = false;
        }
        for (std::size_t a = 0; a < r && ok; ++a) {
          if (!is_integral(sol[a])) ok = false;
          else p(i, a) = numerator(sol[a]);
        }
      }
      if (!ok) {
        ++result.unlifted;
        continue;
      }
      // d b b^T = index^2 G - P^T G P
      RationalMatrix pr = to_rational(p);
      RationalMatrix defect = g.scaled(Rational(n2)) - pr.transpose() * g * pr;
      IntVector b(r, Integer(0));
      for (std::size_t a = 0; a < r && ok; ++a) {
        Rational q = defect(a, a) / Rational(d);
        if (q < 0 || !is_integral(q) || !is_square(numerator(q))) ok = false;
        else b[a] = isqrt(numerator(q));
      }
      if (ok) {
        // fix relative signs from the off-diagonal entries
        std::size_t lead = r;
        for (std::size_t a = 0; a < r; ++a)
          if (b[a] != 0 && lead == r) lead = a;
        for (std::size_t a = 0; a < r && lead < r; ++a) {
          if (a == lead || b[a] == 0) continue;
          if (defect(lead, a) / Rational(d) < 0) b[a] = -b[a];
        }
        for (std::size_t a = 0; a < r && ok; ++a)
          for (std::size_t e = 0; e < r && ok; ++e)
            if (defect(a, e) != Rational(d * b[a] * b[e])) ok = false;
      }
      if (!ok) {
        ++result.unlifted;
        continue;
      }
      bool zero_b = std::all_of(b.begin(), b.end(), [](const Integer& x) { return x == 0; });
      for (int s : {1, -1}) {
        if (s == -1 && zero_b) break;
        IntMatrix m(r + 1, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t a = 0; a < r; ++a) m(i, a) = p(i, a);
        for (std::size_t a = 0; a < r; ++a) m(r, a) = s * b[a];
        EmbeddingMatrix phi(std::move(m), source, target);
        auto sol = solve_lambda(pv, phi);
        if (!sol || !(sol->lambda == lambda) || !(sol->lambda_prime == lambda_prime) ||
            !verify_norm_equation(sol->lambda, sol->lambda_prime, sol->nu, d, ssb, index)) {
          fail_precondition("enumerate_period_embeddings: reconstructed embedding failed re-verification");
        }
        result.embeddings.push_back(PeriodEmbedding{std::move(phi), std::move(*sol)});
      }
    }
  }
  std::sort(result.embeddings.begin(), result.embeddings.end(),
            [](const PeriodEmbedding& a, const PeriodEmbedding& b) { return a.phi.matrix() < b.phi.matrix(); });
  return result;
}

unsigned long euler_phi(unsigned long m) {
  if (m == 0) fail_invalid("euler_phi: m must be positive");
  unsigned long result = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long max_cyclotomic_order(unsigned degree) {
  if (degree == 0) fail_precondition("max_cyclotomic_order: degree must be positive");
  // phi(m) >= sqrt(m / 2), so m <= 2 degree^2.
  const unsigned long limit = 2UL * degree * degree + 2;
  unsigned long best = 1;
  for (unsigned long m = 1; m <= limit; ++m)
    if (euler_phi(m) <= degree) best = m;
  return best;
}

unsigned long twistor_fiber_bound(unsigned degree, std::optional<unsigned long> roots_of_unity) {
  if (degree < 1 || degree > 21) fail_precondition("twistor_fiber_bound: degree must lie in [1, 21]");
  if (roots_of_unity) return 2 * *roots_of_unity;
  return 2 * max_cyclotomic_order(degree);
}

}  // namespace k3lat
