#include "k3lat/k3_census.hpp"

#include <algorithm>
#include <set>

#include "k3lat/error.hpp"
#include "k3lat/genus.hpp"

namespace k3lat {

namespace {

void check_family_preconditions(const Integer& p, const Integer& d0) {
  if (!is_prime(p)) fail_precondition("unbounded family: p = " + to_string(p) + " is not prime");
  if (mod_floor(p, 4) != 3) fail_precondition("unbounded family: p = " + to_string(p) + " is not 3 mod 4");
  if (d0 <= 0 || mod_floor(d0, 2) == 0) fail_precondition("unbounded family: d0 must be odd and positive");
  if (!is_cube_free(p * d0)) fail_precondition("unbounded family: p*d0 must be cube-free");
}

Lattice ternary_of(const BinaryForm& f, const Integer& d0) {
  return direct_sum(form_to_lattice(f), Lattice{{-d0}});
}

LatticeVector last_column(const IntMatrix& m) { return m.column(m.cols() - 1); }

bool first_nonzero_positive(const LatticeVector& v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

Integer sup_norm(const LatticeVector& v) {
  Integer s = 0;
  for (const auto& x : v) s = std::max(s, abs(x));
  return s;
}

template <typename Key>
std::size_t count_distinct(const std::vector<std::optional<OrbitInvariant>>& invs, Key key) {
  std::vector<IntMatrix> seen;
  for (const auto& inv : invs) {
    if (!inv) continue;
    IntMatrix k = key(*inv);
    if (std::find(seen.begin(), seen.end(), k) == seen.end()) seen.push_back(std::move(k));
  }
  return seen.size();
}

// Vectors v = (x, z) of norm -d0 in P + <-d0>, i.e. P(x) = d0 (z^2 - 1).
// When det(v^perp) = det(P) the sum Zv + v^perp is everything, so a basis of
// v^perp carried to forms[j] followed by v is an isometry onto ternaries[0].
void complement_search(UnboundedFamilyCertificate& cert, const Integer& alpha_bound) {
  const Lattice& base = cert.ternaries.front();
  const Lattice positive = form_to_lattice(cert.forms.front());
  std::size_t missing = cert.missing_witnesses().size();
  for (Integer z = 1; z <= alpha_bound && missing > 0; ++z) {
    for (auto& x : vectors_of_norm(positive, cert.d0 * (z * z - 1))) {
      LatticeVector v = x;
      v.push_back(z);
      Complement comp = orthogonal_complement(base, v);
      if (determinant(comp.lattice) != cert.p) continue;
      const IntMatrix& g = comp.lattice.gram();
      if (mod_floor(g(0, 0), 2) != 0 || mod_floor(g(1, 1), 2) != 0) continue;
      Reduction red = reduce(BinaryForm{g(0, 0) / 2, g(0, 1), g(1, 1) / 2});
      auto it = std::find(cert.forms.begin(), cert.forms.end(), red.form);
      if (it == cert.forms.end()) continue;
      auto j = static_cast<std::size_t>(it - cert.forms.begin());
      if (cert.isometry_witnesses[j]) continue;
      IntMatrix head = comp.basis * red.transform;
      IntMatrix m(3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        m(i, 0) = head(i, 0);
        m(i, 1) = head(i, 1);
        m(i, 2) = v[i];
      }
      if (determinant(m) < 0) m = m.scaled(-1);
      cert.isometry_witnesses[j].emplace(std::move(m), cert.ternaries[j], base);
      cert.witness_methods[j] = "complement_search";
      if (--missing == 0) break;
    }
  }
}

}  // namespace

bool UnboundedFamilyCertificate::genus_only() const { return !missing_witnesses().empty(); }

std::vector<std::size_t> UnboundedFamilyCertificate::missing_witnesses() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < isometry_witnesses.size(); ++j) {
    if (!isometry_witnesses[j]) out.push_back(j);
  }
  return out;
}

std::size_t UnboundedFamilyCertificate::distinct_oriented_invariants() const {
  std::vector<OrbitInvariant> seen;
  for (const auto& inv : complement_invariants) {
    if (inv && std::find(seen.begin(), seen.end(), *inv) == seen.end()) seen.push_back(*inv);
  }
  return seen.size();
}

std::size_t UnboundedFamilyCertificate::distinct_unoriented_invariants() const {
  return count_distinct(complement_invariants, [](const OrbitInvariant& i) { return i.complement_gram_unoriented; });
}

UnboundedFamilyCertificate build_unbounded_family(const Integer& p, const Integer& d0, const Integer& height_bound,
                                                  const Integer& alpha_bound) {
  check_family_preconditions(p, d0);
  UnboundedFamilyCertificate cert;
  cert.p = p;
  cert.d0 = d0;
  cert.degree = 4 * d0;
  cert.height_bound = height_bound;
  cert.alpha_bound = alpha_bound;

  FormClassGroup group = class_group(-p);
  cert.forms = group.elements;
  cert.h = group.order();
  for (const auto& f : cert.forms) cert.ternaries.push_back(ternary_of(f, d0));

  const std::size_t h = cert.h;
  cert.genus_checks.assign(h, std::vector<bool>(h, true));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) {
      bool same = same_genus(cert.ternaries[i], cert.ternaries[j]);
      cert.genus_checks[i][j] = cert.genus_checks[j][i] = same;
      if (!same) {
        fail_precondition("unbounded family: ternaries " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not in the same genus");
      }
    }

  const Lattice& base = cert.ternaries.front();
  cert.isometry_witnesses.resize(h);
  cert.witness_methods.assign(h, "");
  cert.isometry_witnesses[0].emplace(IntMatrix::identity(base.rank()), base, base);
  cert.witness_methods[0] = "identity";
  for (std::size_t j = 1; j < h; ++j) {
    IsometrySearch search = indefinite_isometry_search(cert.ternaries[j], base, height_bound);
    if (search.outcome == SearchOutcome::not_isometric) {
      fail_precondition("unbounded family: ternary " + std::to_string(j) + " proven non-isometric: " + search.detail);
    }
    if (search.outcome != SearchOutcome::isometric) continue;
    IntMatrix m = search.witness->matrix();
    if (determinant(m) < 0) m = m.scaled(-1);
    cert.isometry_witnesses[j].emplace(std::move(m), cert.ternaries[j], base);
    cert.witness_methods[j] = "bounded_search";
  }
  if (height_bound < 0 || alpha_bound < 0) fail_precondition("unbounded family: negative search bound");
  complement_search(cert, alpha_bound);

  cert.ns_lattice = twist(base, -4);
  cert.classes.resize(h);
  cert.complement_invariants.resize(h);
  for (std::size_t j = 0; j < h; ++j) {
    if (!cert.isometry_witnesses[j]) continue;
    LatticeVector alpha = last_column(cert.isometry_witnesses[j]->matrix());
    cert.complement_invariants[j] = orbit_invariant(cert.ns_lattice, alpha);
    cert.classes[j] = std::move(alpha);
  }
  std::size_t present = h - cert.missing_witnesses().size();
  if (cert.distinct_oriented_invariants() != present) {
    fail_precondition("unbounded family: complement invariants are not pairwise distinct");
  }
  cert.minus_two_free = !has_minus_two_class(cert.ns_lattice, height_bound);
  if (!cert.minus_two_free) fail_precondition("unbounded family: N contains a (-2)-class");
  return cert;
}

void verify_certificate(const UnboundedFamilyCertificate& cert) {
  auto check = [](bool ok, const std::string& what) {
    if (!ok) fail_precondition("certificate check failed: " + what);
  };
  check_family_preconditions(cert.p, cert.d0);
  check(cert.degree == 4 * cert.d0, "degree is 4*d0");
  FormClassGroup group = class_group(-cert.p);
  check(cert.forms == group.elements, "forms are the reduced forms of Cl(-p)");
  check(cert.h == group.order(), "h equals the class number");
  const std::size_t h = cert.h;
  check(cert.ternaries.size() == h && cert.isometry_witnesses.size() == h && cert.classes.size() == h &&
            cert.witness_methods.size() == h &&
            cert.complement_invariants.size() == h && cert.genus_checks.size() == h,
        "list lengths equal h");
  for (std::size_t j = 0; j < h; ++j) {
    check(cert.ternaries[j] == ternary_of(cert.forms[j], cert.d0), "ternary " + std::to_string(j));
  }
  for (std::size_t i = 0; i < h; ++i) {
    check(cert.genus_checks[i].size() == h, "genus check row length");
    for (std::size_t j = 0; j < h; ++j) {
      check(cert.genus_checks[i][j], "genus check entry is true");
      if (i < j) check(same_genus(cert.ternaries[i], cert.ternaries[j]), "recomputed genus check");
    }
  }
  check(cert.ns_lattice == twist(cert.ternaries[0], -4), "N is the first ternary twisted by -4");
  std::vector<OrbitInvariant> seen;
  for (std::size_t j = 0; j < h; ++j) {
    const auto& w = cert.isometry_witnesses[j];
    check(w.has_value() == cert.classes[j].has_value(), "class present iff witness present");
    check(w.has_value() == cert.complement_invariants[j].has_value(), "invariant present iff witness present");
    check(w.has_value() != cert.witness_methods[j].empty(), "witness method recorded");
    if (!w) continue;
    check(w->source() == cert.ternaries[j] && w->target() == cert.ternaries[0], "witness endpoints");
    check(determinant(w->matrix()) == 1, "witness has determinant 1");
    const LatticeVector& alpha = *cert.classes[j];
    check(alpha == last_column(w->matrix()), "class is the image of the <-d0> generator");
    check(norm(cert.ns_lattice, alpha) == cert.degree, "class has square 4*d0");
    check(is_primitive(cert.ns_lattice, alpha), "class is primitive");
    OrbitInvariant inv = orbit_invariant(cert.ns_lattice, alpha);
    check(inv == *cert.complement_invariants[j], "recomputed orbit invariant");
    check(std::find(seen.begin(), seen.end(), inv) == seen.end(), "orbit invariants pairwise distinct");
    seen.push_back(std::move(inv));
  }
  check(cert.minus_two_free, "minus_two_free flag");
  check(!has_minus_two_class(cert.ns_lattice, cert.height_bound), "N has no (-2)-class");
}

MinusTwoResult find_minus_two_class(const Lattice& lattice, const Integer& search_bound) {
  MinusTwoResult r;
  bool all_div4 = true;
  for (std::size_t i = 0; i < lattice.rank() && all_div4; ++i) {
    if (mod_floor(lattice(i, i), 4) != 0) all_div4 = false;
    for (std::size_t j = i + 1; j < lattice.rank(); ++j)
      if (mod_floor(lattice(i, j), 2) != 0) all_div4 = false;
  }
  if (all_div4) {
    r.conclusive = true;
    r.method = MinusTwoMethod::congruence;
    return r;
  }
  if (is_positive_definite(lattice)) {
    r.conclusive = true;
    r.method = MinusTwoMethod::positive_definite;
    return r;
  }
  if (is_negative_definite(lattice)) {
    r.conclusive = true;
    r.method = MinusTwoMethod::negative_definite;
    for (auto& v : vectors_of_norm(twist(lattice, -1), 2)) {
      if (first_nonzero_positive(v)) {
        r.found = true;
        r.witness = std::move(v);
        break;
      }
    }
    return r;
  }

  r.method = MinusTwoMethod::box_search;
  const std::size_t n = lattice.rank();
  if (search_bound < 0) fail_precondition("(-2)-class search: negative bound");
  if (pow(2 * search_bound + 1, static_cast<unsigned>(n)) > Integer(20'000'000)) {
    fail_precondition("(-2)-class search: box too large");
  }
  IntVector x(n, -search_bound);
  while (true) {
    if (first_nonzero_positive(x) && norm(lattice, x) == -2) {
      if (!r.witness || sup_norm(x) < sup_norm(*r.witness) ||
          (sup_norm(x) == sup_norm(*r.witness) && x < *r.witness)) {
        r.witness = x;
      }
    }
    std::size_t i = 0;
    while (i < n && x[i] == search_bound) {
      x[i] = -search_bound;
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  r.found = r.witness.has_value();
  r.conclusive = r.found;
  return r;
}

bool has_minus_two_class(const Lattice& lattice, const Integer& search_bound) {
  return find_minus_two_class(lattice, search_bound).found;
}

TwistorCount count_integral_twistor_classes(const Lattice& positive, const Integer& d) {
  if (positive.rank() > 3) fail_precondition("twistor count: rank must be at most 3");
  if (!is_positive_definite(positive)) fail_precondition("twistor count: lattice must be positive definite");
  if (d <= 0) fail_precondition("twistor count: d must be positive");
  TwistorCount out;
  for (auto& v : vectors_of_norm(positive, d)) {
    if (first_nonzero_positive(v)) out.representatives.push_back(std::move(v));
  }
  out.count = out.representatives.size();
  return out;
}

int tau(const Integer& d) {
  if (d <= 0 || mod_floor(d, 2) != 0) fail_precondition("tau: d must be even and positive");
  return static_cast<int>(prime_divisors(d / 2).size());
}

Integer fm_partner_count(const Integer& d) {
  int t = tau(d);
  if (t == 0) return 1;
  return pow(Integer(2), static_cast<unsigned>(t - 1));
}

std::string to_string(MinusTwoMethod method) {
  switch (method) {
    case MinusTwoMethod::congruence:
      return "congruence";
    case MinusTwoMethod::positive_definite:
      return "positive_definite";
    case MinusTwoMethod::negative_definite:
      return "negative_definite";
    case MinusTwoMethod::box_search:
      return "box_search";
  }
  return "unknown";
}

}  // namespace k3lat
