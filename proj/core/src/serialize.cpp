#include "k3lat/serialize.hpp"

#include <optional>

#include "k3lat/error.hpp"

namespace k3lat::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail_invalid(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) fail_invalid(std::string("json: ") + what + " must be an array");
}

template <typename T, typename F>
Matrix<T> decode_matrix(const Json& j, F decode) {
  require_array(j, "matrix");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) {
    require_array(r, "matrix row");
    std::vector<T> row;
    for (const auto& x : r) row.push_back(decode(x));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix<T>();
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) fail_invalid("json: ragged matrix");
  }
  return Matrix<T>::from_rows(rows);
}

template <typename T, typename F>
Json encode_matrix(const Matrix<T>& m, F enc) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(enc(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json encode(const Integer& x) {
  if (fits_int64(x)) return Json(static_cast<std::int64_t>(x));
  return Json(to_string(x));
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail_invalid("json: expected an integer, got " + j.dump());
}

Json encode(const Rational& q) { return Json(to_string(q)); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(decode_integer(j));
}

Json encode(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

std::vector<Integer> decode_integer_vector(const Json& j) {
  require_array(j, "vector");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(decode_integer(x));
  return out;
}

Json encode(const IntMatrix& m) {
  return encode_matrix(m, [](const Integer& x) { return encode(x); });
}

IntMatrix decode_int_matrix(const Json& j) { return decode_matrix<Integer>(j, decode_integer); }

Json encode(const RationalMatrix& m) {
  return encode_matrix(m, [](const Rational& x) { return encode(x); });
}

RationalMatrix decode_rational_matrix(const Json& j) { return decode_matrix<Rational>(j, decode_rational); }

Json encode(const Lattice& l) { return encode(l.gram()); }

Lattice decode_lattice(const Json& j) { return Lattice(decode_int_matrix(j)); }

Json encode(const Signature& s) { return Json{{"positive", s.positive}, {"negative", s.negative}}; }

Json encode(const BinaryForm& f) { return Json::array({encode(f.a), encode(f.b), encode(f.c)}); }

BinaryForm decode_form(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail_invalid("json: a form is an array [a, b, c]");
  return BinaryForm{decode_integer(j[0]), decode_integer(j[1]), decode_integer(j[2])};
}

Json encode(const FormClassGroup& g) {
  Json forms = Json::array();
  for (const auto& f : g.elements) forms.push_back(encode(f));
  return Json{{"discriminant", encode(g.discriminant)}, {"h", g.order()}, {"forms", forms}};
}

FormClassGroup decode_class_group(const Json& j) {
  FormClassGroup g;
  g.discriminant = decode_integer(field(j, "discriminant"));
  const Json& forms = field(j, "forms");
  require_array(forms, "forms");
  for (const auto& f : forms) g.elements.push_back(decode_form(f));
  if (decode_integer(field(j, "h")) != Integer(g.elements.size())) fail_invalid("json: h does not match form count");
  return g;
}

Json encode(const GenusSymbol& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) {
    Json jb{{"scale", b.scale}, {"dim", b.dim}, {"sign", b.sign}};
    jb["type"] = b.type ? Json(*b.type == BlockType::odd ? "odd" : "even") : Json(nullptr);
    jb["oddity"] = b.oddity ? Json(*b.oddity) : Json(nullptr);
    blocks.push_back(std::move(jb));
  }
  return Json{{"p", encode(s.prime)}, {"blocks", blocks}};
}

GenusSymbol decode_genus_symbol(const Json& j) {
  GenusSymbol s;
  s.prime = decode_integer(field(j, "p"));
  const Json& blocks = field(j, "blocks");
  require_array(blocks, "blocks");
  for (const auto& jb : blocks) {
    JordanBlock b;
    b.scale = field(jb, "scale").get<int>();
    b.dim = field(jb, "dim").get<std::size_t>();
    b.sign = field(jb, "sign").get<int>();
    const Json& type = field(jb, "type");
    if (!type.is_null()) {
      std::string t = type.get<std::string>();
      if (t != "odd" && t != "even") fail_invalid("json: block type must be odd or even");
      b.type = t == "odd" ? BlockType::odd : BlockType::even;
    }
    const Json& oddity = field(jb, "oddity");
    if (!oddity.is_null()) b.oddity = oddity.get<int>();
    s.blocks.push_back(b);
  }
  return s;
}

Json encode(const EmbeddingMatrix& e) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < e.matrix().cols(); ++j) cols.push_back(encode(e.matrix().column(j)));
  return Json{{"columns", cols}, {"source", encode(e.source())}, {"target", encode(e.target())}};
}

EmbeddingMatrix decode_embedding(const Json& j) {
  Lattice source = decode_lattice(field(j, "source"));
  Lattice target = decode_lattice(field(j, "target"));
  const Json& cols = field(j, "columns");
  require_array(cols, "columns");
  std::vector<std::vector<Integer>> columns;
  for (const auto& c : cols) {
    columns.push_back(decode_integer_vector(c));
    if (columns.back().size() != target.rank()) fail_invalid("json: embedding column length differs from target rank");
  }
  return EmbeddingMatrix(IntMatrix::from_columns(columns, target.rank()), source, target);
}

Json encode(const OrbitInvariant& inv) {
  return Json{{"norm", encode(inv.norm)},
              {"discriminant_group", encode(inv.discriminant_group)},
              {"complement_discriminant_group", encode(inv.complement_discriminant_group)},
              {"complement_gram", encode(inv.complement_gram)},
              {"complement_gram_unoriented", encode(inv.complement_gram_unoriented)}};
}

OrbitInvariant decode_orbit_invariant(const Json& j) {
  OrbitInvariant inv;
  inv.norm = decode_integer(field(j, "norm"));
  inv.discriminant_group = decode_integer_vector(field(j, "discriminant_group"));
  inv.complement_discriminant_group = decode_integer_vector(field(j, "complement_discriminant_group"));
  inv.complement_gram = decode_int_matrix(field(j, "complement_gram"));
  inv.complement_gram_unoriented = decode_int_matrix(field(j, "complement_gram_unoriented"));
  return inv;
}

Json encode(const UnboundedFamilyCertificate& cert) {
  Json out;
  out["p"] = encode(cert.p);
  out["d0"] = encode(cert.d0);
  out["degree"] = encode(cert.degree);
  out["h"] = cert.h;
  out["height_bound"] = encode(cert.height_bound);
  out["alpha_bound"] = encode(cert.alpha_bound);
  Json forms = Json::array(), ternaries = Json::array(), witnesses = Json::array(), methods = Json::array(),
       classes = Json::array(), invariants = Json::array();
  for (const auto& f : cert.forms) forms.push_back(encode(f));
  for (const auto& t : cert.ternaries) ternaries.push_back(encode(t));
  for (const auto& w : cert.isometry_witnesses) witnesses.push_back(w ? encode(*w) : Json(nullptr));
  for (const auto& m : cert.witness_methods) methods.push_back(m.empty() ? Json(nullptr) : Json(m));
  for (const auto& c : cert.classes) classes.push_back(c ? encode(*c) : Json(nullptr));
  for (const auto& i : cert.complement_invariants) invariants.push_back(i ? encode(*i) : Json(nullptr));
  out["forms"] = forms;
  out["ternaries"] = ternaries;
  out["genus_checks"] = cert.genus_checks;
  out["isometry_witnesses"] = witnesses;
  out["witness_methods"] = methods;
  out["ns_lattice"] = encode(cert.ns_lattice);
  out["classes"] = classes;
  out["complement_invariants"] = invariants;
  out["minus_two_free"] = cert.minus_two_free;
  out["genus_only"] = cert.genus_only();
  out["missing_witnesses"] = cert.missing_witnesses();
  out["distinct_oriented_invariants"] = cert.distinct_oriented_invariants();
  out["distinct_unoriented_invariants"] = cert.distinct_unoriented_invariants();
  return out;
}

UnboundedFamilyCertificate decode_certificate(const Json& j) {
  UnboundedFamilyCertificate cert;
  cert.p = decode_integer(field(j, "p"));
  cert.d0 = decode_integer(field(j, "d0"));
  cert.degree = decode_integer(field(j, "degree"));
  cert.h = field(j, "h").get<std::size_t>();
  cert.height_bound = decode_integer(field(j, "height_bound"));
  cert.alpha_bound = decode_integer(field(j, "alpha_bound"));
  for (const auto& f : field(j, "forms")) cert.forms.push_back(decode_form(f));
  for (const auto& t : field(j, "ternaries")) cert.ternaries.push_back(decode_lattice(t));
  const Json& checks = field(j, "genus_checks");
  require_array(checks, "genus_checks");
  for (const auto& row : checks) {
    require_array(row, "genus_checks row");
    std::vector<bool> r;
    for (const auto& x : row) {
      if (!x.is_boolean()) fail_invalid("json: genus checks must be booleans");
      r.push_back(x.get<bool>());
    }
    cert.genus_checks.push_back(std::move(r));
  }
  for (const auto& w : field(j, "isometry_witnesses")) {
    cert.isometry_witnesses.push_back(w.is_null() ? std::nullopt : std::optional(decode_embedding(w)));
  }
  for (const auto& m : field(j, "witness_methods")) cert.witness_methods.push_back(m.is_null() ? "" : m.get<std::string>());
  cert.ns_lattice = decode_lattice(field(j, "ns_lattice"));
  for (const auto& c : field(j, "classes")) {
    cert.classes.push_back(c.is_null() ? std::nullopt : std::optional(decode_integer_vector(c)));
  }
  for (const auto& i : field(j, "complement_invariants")) {
    cert.complement_invariants.push_back(i.is_null() ? std::nullopt : std::optional(decode_orbit_invariant(i)));
  }
  const Json& free = field(j, "minus_two_free");
  if (!free.is_boolean()) fail_invalid("json: minus_two_free must be a boolean");
  cert.minus_two_free = free.get<bool>();
  return cert;
}

Json encode(const CMField& k) {
  Json poly = Json::array();
  for (const auto& c : k.min_poly().integer_coefficients()) poly.push_back(encode(c));
  return Json{{"min_poly", poly}, {"conjugation", encode(k.conjugation())}, {"integral_basis", encode(k.integral_basis())}};
}

CMField decode_field(const Json& j) {
  Polynomial f = Polynomial::from_integers(decode_integer_vector(field(j, "min_poly")));
  RationalMatrix conj = decode_rational_matrix(field(j, "conjugation"));
  std::optional<RationalMatrix> basis;
  if (j.contains("integral_basis")) basis = decode_rational_matrix(j.at("integral_basis"));
  return CMField::from_data(f, conj, basis);
}

Json encode(const CMElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(encode(c));
  return out;
}

CMElement decode_element(const CMField& k, const Json& j) {
  require_array(j, "field element");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(decode_rational(x));
  return k.from_coords(std::move(c));
}

Json encode(const PeriodEmbedding& e) {
  return Json{{"phi", encode(e.phi)},
              {"lambda", encode(e.solution.lambda)},
              {"lambda_prime", encode(e.solution.lambda_prime)},
              {"nu", encode(e.solution.nu)}};
}

}  // namespace k3lat::json
