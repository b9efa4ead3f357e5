#include "k3lat/binary_forms.hpp"

#include <algorithm>
#include <set>

#include "k3lat/error.hpp"

namespace k3lat {

namespace {

std::string describe(const BinaryForm& f) {
  return "(" + to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c) + ")";
}

void require_positive_definite(const BinaryForm& f, const char* what) {
  if (!is_positive_definite(f)) {
    fail_precondition(std::string(what) + ": form " + describe(f) + " is not positive definite");
  }
}

const IntMatrix kSwap{{0, -1}, {1, 0}};

IntMatrix translation(const Integer& k) { return IntMatrix{{1, k}, {0, 1}}; }

}  // namespace

Integer discriminant(const BinaryForm& f) { return f.b * f.b - 4 * f.a * f.c; }

Integer content(const BinaryForm& f) { return gcd(gcd(f.a, f.b), f.c); }

bool is_positive_definite(const BinaryForm& f) { return f.a > 0 && discriminant(f) < 0; }

bool is_reduced(const BinaryForm& f) {
  if (!is_positive_definite(f)) return false;
  if (abs(f.b) > f.a || f.a > f.c) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

BinaryForm act(const BinaryForm& f, const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) fail_invalid("form transform must be 2x2");
  const Integer& al = m(0, 0);
  const Integer& be = m(0, 1);
  const Integer& ga = m(1, 0);
  const Integer& de = m(1, 1);
  BinaryForm out;
  out.a = f.a * al * al + f.b * al * ga + f.c * ga * ga;
  out.b = 2 * f.a * al * be + f.b * (al * de + be * ga) + 2 * f.c * ga * de;
  out.c = f.a * be * be + f.b * be * de + f.c * de * de;
  return out;
}

Reduction reduce(const BinaryForm& input) {
  require_positive_definite(input, "reduce");
  BinaryForm f = input;
  IntMatrix m = IntMatrix::identity(2);
  while (true) {
    // Bring b into (-a, a].
    Integer k = floor_div(f.a - f.b, 2 * f.a);
    if (k != 0) {
      IntMatrix t = translation(k);
      f = act(f, t);
      m = m * t;
    }
    if (f.a > f.c) {
      f = act(f, kSwap);
      m = m * kSwap;
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) {
    f = act(f, kSwap);
    m = m * kSwap;
  }
  return {f, m};
}

std::optional<IntMatrix> is_equivalent(const BinaryForm& f, const BinaryForm& g) {
  if (!is_positive_definite(f) || !is_positive_definite(g)) return std::nullopt;
  if (discriminant(f) != discriminant(g)) return std::nullopt;
  if (f == g) return IntMatrix::identity(2);
  Reduction rf = reduce(f);
  Reduction rg = reduce(g);
  if (rf.form != rg.form) return std::nullopt;
  // f.Mf = r = g.Mg, hence f.(Mf Mg^-1) = g.
  const IntMatrix& n = rg.transform;
  IntMatrix n_inv{{n(1, 1), -n(0, 1)}, {-n(1, 0), n(0, 0)}};
  return rf.transform * n_inv;
}

bool is_valid_negative_discriminant(const Integer& d) {
  if (d >= 0) return false;
  Integer r = mod_floor(d, 4);
  return r == 0 || r == 1;
}

BinaryForm principal_form(const Integer& d) {
  if (!is_valid_negative_discriminant(d)) fail_precondition("invalid discriminant " + to_string(d));
  Integer b = mod_floor(d, 2);
  return {1, b, (b * b - d) / 4};
}

BinaryForm inverse(const BinaryForm& f) { return reduce(BinaryForm{f.a, -f.b, f.c}).form; }

FormClassGroup class_group(const Integer& d) {
  if (!is_valid_negative_discriminant(d)) {
    fail_precondition("class group: discriminant " + to_string(d) + " must be negative and 0 or 1 mod 4");
  }
  FormClassGroup group;
  group.discriminant = d;
  const Integer abs_d = -d;
  for (Integer a = 1; 3 * a * a <= abs_d; ++a) {
    for (Integer b = a; b >= -a; --b) {
      if (mod_floor(b - d, 2) != 0) continue;
      Integer num = b * b - d;
      if (num % (4 * a) != 0) continue;
      BinaryForm f{a, b, num / (4 * a)};
      if (is_reduced(f) && content(f) == 1) group.elements.push_back(f);
    }
  }
  return group;
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& g) {
  require_positive_definite(f, "compose");
  require_positive_definite(g, "compose");
  const Integer d = discriminant(f);
  if (discriminant(g) != d) {
    fail_precondition("compose: discriminants differ (" + to_string(d) + " vs " + to_string(discriminant(g)) + ")");
  }
  if (content(f) != 1 || content(g) != 1) fail_precondition("compose: forms must be primitive");

  // Dirichlet composition (united forms) following Cohen, Alg. 5.4.7.
  BinaryForm f1 = f, f2 = g;
  if (f1.a > f2.a) std::swap(f1, f2);
  const Integer s = (f1.b + f2.b) / 2;
  const Integer n = f2.b - s;

  Integer y1, d0;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d0 = f1.a;
  } else {
    ExtendedGcd e = extended_gcd(f2.a, f1.a);
    y1 = e.x;
    d0 = e.g;
  }
  Integer x2, y2, d1;
  if (s % d0 == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d0;
  } else {
    ExtendedGcd e = extended_gcd(s, d0);
    x2 = e.x;
    y2 = -e.y;
    d1 = e.g;
  }
  const Integer v1 = f1.a / d1;
  const Integer v2 = f2.a / d1;
  const Integer r = mod_floor(y1 * y2 * n - x2 * f2.c, v1);
  BinaryForm out;
  out.a = v1 * v2;
  out.b = f2.b + 2 * v2 * r;
  Integer num = out.b * out.b - d;
  if (num % (4 * out.a) != 0) fail_precondition("compose: internal error, non-integral coefficient");
  out.c = num / (4 * out.a);
  return reduce(out).form;
}

bool verify_principal_genus(const Integer& p) {
  if (!is_prime(p) || mod_floor(p, 4) != 3) {
    fail_precondition("principal genus check needs a prime p = 3 mod 4, got " + to_string(p));
  }
  FormClassGroup group = class_group(-p);
  std::set<BinaryForm> squares;
  for (const auto& x : group.elements) squares.insert(compose(x, x));
  std::set<BinaryForm> all(group.elements.begin(), group.elements.end());
  return squares == all;
}

Lattice form_to_lattice(const BinaryForm& f) { return Lattice{{2 * f.a, f.b}, {f.b, 2 * f.c}}; }

}  // namespace k3lat
