#pragma once

#include <nlohmann/json.hpp>

#include "k3lat/binary_forms.hpp"
#include "k3lat/cm_field.hpp"
#include "k3lat/cm_twistor.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/integer.hpp"
#include "k3lat/k3_census.hpp"
#include "k3lat/lattice.hpp"

// JSON encodings. Integers are numbers when they fit in 64 bits and
// decimal strings otherwise; rationals are "p/q" strings. Readers accept
// both integer forms and throw InvalidArgument on malformed documents.
namespace k3lat::json {

using Json = nlohmann::ordered_json;

Json encode(const Integer& x);
Integer decode_integer(const Json& j);
Json encode(const Rational& q);
Rational decode_rational(const Json& j);

Json encode(const std::vector<Integer>& v);
std::vector<Integer> decode_integer_vector(const Json& j);

// Row-major array of rows.
Json encode(const IntMatrix& m);
IntMatrix decode_int_matrix(const Json& j);
Json encode(const RationalMatrix& m);
RationalMatrix decode_rational_matrix(const Json& j);

Json encode(const Lattice& l);  // Gram rows
Lattice decode_lattice(const Json& j);

Json encode(const Signature& s);

Json encode(const BinaryForm& f);  // [a, b, c]
BinaryForm decode_form(const Json& j);
Json encode(const FormClassGroup& g);
FormClassGroup decode_class_group(const Json& j);

Json encode(const GenusSymbol& s);
GenusSymbol decode_genus_symbol(const Json& j);

// {"columns": column-major images, "source": gram, "target": gram}
Json encode(const EmbeddingMatrix& e);
EmbeddingMatrix decode_embedding(const Json& j);

Json encode(const OrbitInvariant& inv);
OrbitInvariant decode_orbit_invariant(const Json& j);

Json encode(const UnboundedFamilyCertificate& cert);
UnboundedFamilyCertificate decode_certificate(const Json& j);

Json encode(const CMField& k);  // {"min_poly", "conjugation", "integral_basis"}
CMField decode_field(const Json& j);
Json encode(const CMElement& x);  // power-basis coordinates
CMElement decode_element(const CMField& k, const Json& j);

Json encode(const PeriodEmbedding& e);  // {"phi", "lambda", "lambda_prime", "nu"}

}  // namespace k3lat::json
