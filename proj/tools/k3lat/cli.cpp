#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cache.hpp"
#include "k3lat/binary_forms.hpp"
#include "k3lat/cm_field.hpp"
#include "k3lat/cm_twistor.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/error.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/k3_census.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/serialize.hpp"

namespace k3lat::cli {

namespace {

using Json = json::Json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<Integer> parse_integers(const std::string& text, const char* what) {
  if (trim(text).empty()) fail_invalid(std::string(what) + ": empty");
  std::vector<Integer> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_integer(part));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_invalid("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = Json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) fail_invalid(path + " is not valid JSON");
  return doc;
}

// "a,b;b,c" or @file.json holding rows or {"gram": rows}.
Lattice parse_gram(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    Json doc = read_json_file(spec.substr(1));
    if (doc.is_object() && doc.contains("gram")) doc = doc["gram"];
    return json::decode_lattice(doc);
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : split(spec, ';')) rows.push_back(parse_integers(row, "gram row"));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail_invalid("gram matrix \"" + spec + "\" is not square");
  }
  return Lattice(IntMatrix::from_rows(rows));
}

BinaryForm parse_form(const std::string& text) {
  auto v = parse_integers(text, "form");
  if (v.size() != 3) fail_invalid("a form is written a,b,c");
  return BinaryForm{v[0], v[1], v[2]};
}

LatticeVector parse_vector(const std::string& text, const Lattice& l) {
  auto v = parse_integers(text, "vector");
  if (v.size() != l.rank()) fail_invalid("vector length " + std::to_string(v.size()) + " does not match rank " +
                                         std::to_string(l.rank()));
  return v;
}

// qi:<m> | cyc:<m> | @field.json
CMField parse_field(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return json::decode_field(read_json_file(spec.substr(1)));
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail_invalid("field spec must be qi:<m>, cyc:<m> or @file.json");
  std::string kind = spec.substr(0, colon);
  Integer m = parse_integer(spec.substr(colon + 1));
  if (kind == "qi") return CMField::imaginary_quadratic(m);
  if (kind == "cyc") {
    if (m <= 0 || m > 1000) fail_invalid("cyclotomic order out of range");
    return CMField::cyclotomic(static_cast<unsigned>(m));
  }
  fail_invalid("unknown field kind \"" + kind + "\"");
}

// One power-basis coordinate list per mu_i: "c0,c1;c0,c1".
std::vector<CMElement> parse_mu(const std::string& spec, const CMField& k) {
  std::vector<CMElement> out;
  for (const auto& row : split(spec, ';')) {
    std::vector<Rational> c;
    for (const auto& part : split(row, ',')) c.push_back(parse_rational(part));
    out.push_back(k.from_coords(std::move(c)));
  }
  return out;
}

std::string canonical(const Lattice& l) { return json::encode(l).dump(); }

Json columns_of(const IntMatrix& m) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(json::encode(m.column(j)));
  return cols;
}

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::isometric:
      return "isometric";
    case SearchOutcome::not_isometric:
      return "not_isometric";
    case SearchOutcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

// Human table: one "key  value" line per field, nested objects indented,
// arrays of objects numbered.
void render(const Json& value, const std::string& indent, std::string& out) {
  if (!value.is_object()) {
    out += indent + value.dump() + "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : value.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : value.items()) {
    std::string label = indent + k + std::string(width - k.size(), ' ');
    if (v.is_object()) {
      out += label + "\n";
      render(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out += label + "  (" + std::to_string(v.size()) + ")\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += indent + "  [" + std::to_string(i) + "]\n";
        render(v[i], indent + "    ", out);
      }
    } else if (v.is_string()) {
      out += label + "  " + v.get<std::string>() + "\n";
    } else {
      out += label + "  " + v.dump() + "\n";
    }
  }
}

struct Context {
  bool json = false;
  bool timing = false;
  std::string cache_dir;
  std::string warnings;

  std::optional<Cache> cache() const {
    if (cache_dir.empty()) return std::nullopt;
    return Cache(cache_dir);
  }
};

FormClassGroup cached_class_group(const Integer& d, Context& ctx) {
  auto cache = ctx.cache();
  const std::string key = to_string(d);
  if (cache) {
    if (auto hit = cache->get("classgroup", key, ctx.warnings)) {
      try {
        FormClassGroup g = json::decode_class_group(*hit);
        bool sane = g.discriminant == d && !g.elements.empty();
        for (const auto& f : g.elements) sane = sane && is_reduced(f) && discriminant(f) == d;
        if (sane) return g;
      } catch (const Error&) {
      } catch (const nlohmann::json::exception&) {
      }
      ctx.warnings += "warning: ignoring corrupt cache entry " + cache->path_for("classgroup", key).string() + "\n";
    }
  }
  FormClassGroup g = class_group(d);
  if (cache) cache->put("classgroup", key, json::encode(g), ctx.warnings);
  return g;
}

std::vector<LatticeVector> cached_vectors(const Lattice& l, const Integer& n, Context& ctx) {
  auto cache = ctx.cache();
  const std::string key = canonical(l) + "|" + to_string(n);
  if (cache) {
    if (auto hit = cache->get("vectors", key, ctx.warnings)) {
      try {
        std::vector<LatticeVector> out;
        bool sane = hit->is_array();
        for (const auto& v : *hit) {
          out.push_back(json::decode_integer_vector(v));
          sane = sane && out.back().size() == l.rank() && norm(l, out.back()) == n;
        }
        sane = sane && std::is_sorted(out.begin(), out.end());
        if (sane) return out;
      } catch (const Error&) {
      } catch (const nlohmann::json::exception&) {
      }
      ctx.warnings += "warning: ignoring corrupt cache entry " + cache->path_for("vectors", key).string() + "\n";
    }
  }
  auto out = vectors_of_norm(l, n);
  if (cache) {
    Json arr = Json::array();
    for (const auto& v : out) arr.push_back(json::encode(v));
    cache->put("vectors", key, arr, ctx.warnings);
  }
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  Context ctx;
  if (const char* env = std::getenv("K3LAT_CACHE_DIR")) ctx.cache_dir = env;

  CLI::App app{"Exact lattice, quadratic form and CM-field computations", "k3lat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Machine-readable JSON payload");
  app.add_flag("--timing", ctx.timing, "Report wall time on stderr");
  app.add_option("--cache-dir", ctx.cache_dir, "Memo cache directory (default $K3LAT_CACHE_DIR)");

  std::string command;
  std::function<Json()> action;
  auto bind = [&](CLI::App* sub, const std::string& name, std::function<Json()> fn) {
    sub->callback([&command, &action, name, fn] {
      command = name;
      action = fn;
    });
  };

  std::string gram, other, vec, form_a, form_b, field_spec, mu_spec, out_path, cert_path;
  std::string int_a, iso_height, unb_d0, unb_height, unb_alpha, m2_bound, fib_index, roots_text;
  bool primitive = false;

  // qform
  auto* qform = app.add_subcommand("qform", "Binary quadratic forms");
  qform->require_subcommand(1);
  auto* q_reduce = qform->add_subcommand("reduce", "Reduced form and transform");
  q_reduce->add_option("--form,-f", form_a, "a,b,c")->required();
  bind(q_reduce, "qform reduce", [&] {
    BinaryForm f = parse_form(form_a);
    Reduction r = reduce(f);
    return Json{{"input", json::encode(f)}, {"discriminant", json::encode(discriminant(f))},
                {"form", json::encode(r.form)}, {"transform", json::encode(r.transform)}};
  });
  auto* q_cg = qform->add_subcommand("classgroup", "Reduced primitive forms of discriminant D");
  q_cg->add_option("-D,--discriminant", int_a, "negative discriminant")->required();
  bind(q_cg, "qform classgroup", [&] { return json::encode(cached_class_group(parse_integer(int_a), ctx)); });
  auto* q_comp = qform->add_subcommand("compose", "Dirichlet composition");
  q_comp->add_option("--f", form_a, "a,b,c")->required();
  q_comp->add_option("--g", form_b, "a,b,c")->required();
  bind(q_comp, "qform compose", [&] {
    BinaryForm f = parse_form(form_a), g = parse_form(form_b);
    return Json{{"f", json::encode(f)}, {"g", json::encode(g)}, {"composition", json::encode(compose(f, g))}};
  });
  auto* q_gen = qform->add_subcommand("genus-check", "Check Cl(-p) = Cl(-p)^2");
  q_gen->add_option("-p,--prime", int_a, "prime p = 3 mod 4")->required();
  bind(q_gen, "qform genus-check", [&] {
    Integer p = parse_integer(int_a);
    bool ok = verify_principal_genus(p);
    FormClassGroup g = cached_class_group(-p, ctx);
    Json squares = Json::array();
    for (const auto& f : g.elements) squares.push_back(json::encode(compose(f, f)));
    return Json{{"p", json::encode(p)}, {"h", g.order()}, {"squares", squares}, {"principal_genus", ok}};
  });

  // lattice
  auto* lat = app.add_subcommand("lattice", "Integral lattices");
  lat->require_subcommand(1);
  auto* l_norm = lat->add_subcommand("norm", "v^T G v");
  l_norm->add_option("--gram,-g", gram)->required();
  l_norm->add_option("--vector,-v", vec)->required();
  bind(l_norm, "lattice norm", [&] {
    Lattice l = parse_gram(gram);
    return Json{{"norm", json::encode(norm(l, parse_vector(vec, l)))}};
  });
  auto* l_sig = lat->add_subcommand("signature", "Signature of a nondegenerate lattice");
  l_sig->add_option("--gram,-g", gram)->required();
  bind(l_sig, "lattice signature", [&] {
    Lattice l = parse_gram(gram);
    Json out = json::encode(signature(l));
    out["determinant"] = json::encode(determinant(l));
    return out;
  });
  auto* l_disc = lat->add_subcommand("disc-group", "Invariant factors of the discriminant group");
  l_disc->add_option("--gram,-g", gram)->required();
  bind(l_disc, "lattice disc-group", [&] {
    Lattice l = parse_gram(gram);
    return Json{{"determinant", json::encode(determinant(l))},
                {"discriminant_group", json::encode(discriminant_group(l))}};
  });
  auto* l_vec = lat->add_subcommand("vectors", "All vectors of a given norm");
  l_vec->add_option("--gram,-g", gram)->required();
  l_vec->add_option("-n,--norm", int_a)->required();
  bind(l_vec, "lattice vectors", [&] {
    Lattice l = parse_gram(gram);
    Integer n = parse_integer(int_a);
    auto vs = cached_vectors(l, n, ctx);
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(json::encode(v));
    return Json{{"norm", json::encode(n)}, {"count", vs.size()}, {"vectors", arr}};
  });
  auto* l_emb = lat->add_subcommand("embeddings", "Isometric embeddings between definite lattices");
  l_emb->add_option("--source,-s", gram)->required();
  l_emb->add_option("--target,-t", other)->required();
  l_emb->add_flag("--primitive", primitive, "Only primitive embeddings");
  bind(l_emb, "lattice embeddings", [&] {
    Lattice s = parse_gram(gram), t = parse_gram(other);
    auto es = embeddings(s, t, primitive);
    Json arr = Json::array();
    for (const auto& e : es) arr.push_back(columns_of(e.matrix()));
    return Json{{"source", json::encode(s)}, {"target", json::encode(t)}, {"primitive_only", primitive},
                {"count", es.size()}, {"embeddings", arr}};
  });
  auto* l_iso = lat->add_subcommand("isometric", "Isometry test (exhaustive if definite, bounded otherwise)");
  l_iso->add_option("--gram,-g", gram)->required();
  l_iso->add_option("--other,-o", other)->required();
  l_iso->add_option("--height-bound", iso_height, "entry bound for indefinite search")->default_val("10");
  bind(l_iso, "lattice isometric", [&] {
    Lattice a = parse_gram(gram), b = parse_gram(other);
    const bool definite = a.rank() == b.rank() && (is_positive_definite(a) || is_negative_definite(a)) &&
                          (is_positive_definite(b) || is_negative_definite(b));
    Json out{{"definite", definite}};
    if (definite && is_positive_definite(a) != is_positive_definite(b)) {
      out["outcome"] = "not_isometric";
      out["witness"] = nullptr;
      out["detail"] = "signatures differ";
    } else if (definite) {
      auto w = is_isometric_definite(a, b);
      out["outcome"] = w ? "isometric" : "not_isometric";
      out["witness"] = w ? columns_of(w->matrix()) : Json(nullptr);
      out["detail"] = "exhaustive embedding search";
    } else {
      auto s = indefinite_isometry_search(a, b, parse_integer(iso_height));
      out["outcome"] = outcome_name(s.outcome);
      out["witness"] = s.witness ? columns_of(s.witness->matrix()) : Json(nullptr);
      out["detail"] = s.detail;
    }
    return out;
  });
  auto* l_comp = lat->add_subcommand("complement", "Orthogonal complement of a vector");
  l_comp->add_option("--gram,-g", gram)->required();
  l_comp->add_option("--vector,-v", vec)->required();
  bind(l_comp, "lattice complement", [&] {
    Lattice l = parse_gram(gram);
    Complement c = orthogonal_complement(l, parse_vector(vec, l));
    return Json{{"basis", columns_of(c.basis)}, {"gram", json::encode(c.lattice)},
                {"discriminant_group", json::encode(discriminant_group(c.lattice))}};
  });

  // genus
  auto* gen = app.add_subcommand("genus", "p-adic genus symbols");
  gen->require_subcommand(1);
  auto* g_sym = gen->add_subcommand("symbol", "Canonical p-adic symbols");
  g_sym->add_option("--gram,-g", gram)->required();
  g_sym->add_option("-p,--prime", int_a, "prime (default: 2 and the primes dividing det)");
  bind(g_sym, "genus symbol", [&] {
    Lattice l = parse_gram(gram);
    std::vector<Integer> primes = int_a.empty() ? genus_primes(l) : std::vector<Integer>{parse_integer(int_a)};
    Json arr = Json::array();
    for (const auto& p : primes) arr.push_back(json::encode(padic_symbol(l, p)));
    return Json{{"determinant", json::encode(determinant(l))}, {"signature", json::encode(signature(l))},
                {"symbols", arr}};
  });
  auto* g_same = gen->add_subcommand("same", "Same genus test");
  g_same->add_option("--gram,-g", gram)->required();
  g_same->add_option("--other,-o", other)->required();
  bind(g_same, "genus same", [&] { return Json{{"same_genus", same_genus(parse_gram(gram), parse_gram(other))}}; });

  // k3
  auto* k3 = app.add_subcommand("k3", "K3 lattice constructions and counts");
  k3->require_subcommand(1);
  auto* k_unb = k3->add_subcommand("unbounded", "Certificate for h(-p) distinct orbits of degree 4*d0");
  k_unb->add_option("-p,--prime", int_a)->required();
  k_unb->add_option("--d0", unb_d0)->default_val("1");
  k_unb->add_option("--height-bound", unb_height)->default_val("10");
  k_unb->add_option("--alpha-bound", unb_alpha)->default_val("200");
  k_unb->add_option("--out,-o", out_path, "Write the certificate JSON here");
  bind(k_unb, "k3 unbounded", [&] {
    auto cert = build_unbounded_family(parse_integer(int_a), parse_integer(unb_d0), parse_integer(unb_height),
                                       parse_integer(unb_alpha));
    Json doc = json::encode(cert);
    if (out_path.empty()) return doc;
    std::ofstream out(out_path);
    out << doc.dump(2) << "\n";
    if (!out) fail_precondition("cannot write " + out_path);
    return Json{{"written", out_path},
                {"p", doc["p"]},
                {"d0", doc["d0"]},
                {"h", cert.h},
                {"genus_only", cert.genus_only()},
                {"distinct_oriented_invariants", cert.distinct_oriented_invariants()},
                {"minus_two_free", cert.minus_two_free}};
  });
  auto* k_ver = k3->add_subcommand("verify", "Re-verify a certificate file");
  k_ver->add_option("--cert,-c", cert_path)->required();
  bind(k_ver, "k3 verify", [&] {
    auto cert = json::decode_certificate(read_json_file(cert_path));
    verify_certificate(cert);
    return Json{{"verified", true},
                {"p", json::encode(cert.p)},
                {"d0", json::encode(cert.d0)},
                {"h", cert.h},
                {"genus_only", cert.genus_only()},
                {"distinct_oriented_invariants", cert.distinct_oriented_invariants()}};
  });
  auto* k_fm = k3->add_subcommand("fm-count", "2^(tau(d)-1) Fourier-Mukai partners");
  k_fm->add_option("-d,--degree", int_a)->required();
  bind(k_fm, "k3 fm-count", [&] {
    Integer d = parse_integer(int_a);
    return Json{{"d", json::encode(d)}, {"tau", tau(d)}, {"fm_partner_count", json::encode(fm_partner_count(d))}};
  });
  auto* k_tw = k3->add_subcommand("twistor-count", "Antipodal pairs of norm-d classes in a definite lattice");
  k_tw->add_option("--gram,-g", gram)->required();
  k_tw->add_option("-d,--degree", int_a)->required();
  bind(k_tw, "k3 twistor-count", [&] {
    auto r = count_integral_twistor_classes(parse_gram(gram), parse_integer(int_a));
    Json reps = Json::array();
    for (const auto& v : r.representatives) reps.push_back(json::encode(v));
    return Json{{"count", r.count}, {"representatives", reps}};
  });
  auto* k_m2 = k3->add_subcommand("minus-two", "Search for (-2)-classes");
  k_m2->add_option("--gram,-g", gram)->required();
  k_m2->add_option("--bound", m2_bound)->default_val("10");
  bind(k_m2, "k3 minus-two", [&] {
    auto r = find_minus_two_class(parse_gram(gram), parse_integer(m2_bound));
    return Json{{"found", r.found},
                {"conclusive", r.conclusive},
                {"method", to_string(r.method)},
                {"witness", r.witness ? json::encode(*r.witness) : Json(nullptr)}};
  });

  // cm
  auto* cm = app.add_subcommand("cm", "CM fields and twistor fibres");
  cm->require_subcommand(1);
  auto* c_fib = cm->add_subcommand("fibers", "Embeddings T -> T + Z(d) compatible with a CM period");
  c_fib->add_option("--field,-k", field_spec, "qi:<m>, cyc:<m> or @field.json")->required();
  c_fib->add_option("--gram,-g", gram)->required();
  c_fib->add_option("--mu", mu_spec, "power-basis coordinates of each mu_i, rows separated by ';'")->required();
  c_fib->add_option("-d,--degree", int_a)->required();
  c_fib->add_option("--index", fib_index)->default_val("1");
  bind(c_fib, "cm fibers", [&] {
    CMField k = parse_field(field_spec);
    PeriodVector pv{parse_gram(gram), parse_mu(mu_spec, k)};
    pv = normalize_period(pv);
    auto r = enumerate_period_embeddings(pv, parse_integer(int_a), parse_integer(fib_index));
    Json arr = Json::array();
    for (const auto& e : r.embeddings) {
      Json item = json::encode(e);
      item["phi"] = columns_of(e.phi.matrix());
      arr.push_back(std::move(item));
    }
    Json mu = Json::array();
    for (const auto& m : pv.mu) mu.push_back(json::encode(m));
    const auto units = roots_of_unity(k).size();
    return Json{{"field", json::encode(k)},
                {"mu", mu},
                {"sigma_sigmabar", json::encode(pairing_sigma_sigmabar(pv))},
                {"scaling", json::encode(r.scaling)},
                {"candidates", r.candidates},
                {"unlifted", r.unlifted},
                {"count", r.embeddings.size()},
                {"roots_of_unity", units},
                {"bound", twistor_fiber_bound(static_cast<unsigned>(k.degree()), units)},
                {"embeddings", arr}};
  });
  auto* c_bound = cm->add_subcommand("bound", "Twistor fibre bound 2 * max{m : phi(m) <= degree}");
  c_bound->add_option("--degree", int_a)->required();
  c_bound->add_option("--roots", roots_text, "number of roots of unity, if known");
  bind(c_bound, "cm bound", [&] {
    Integer deg = parse_integer(int_a);
    if (deg < 1 || deg > 21) fail_precondition("degree must lie in [1, 21]");
    auto d = static_cast<unsigned>(deg);
    std::optional<unsigned long> roots;
    if (!roots_text.empty()) {
      Integer r = parse_integer(roots_text);
      if (r < 1 || !fits_int64(r)) fail_invalid("--roots must be a positive count");
      roots = static_cast<unsigned long>(r);
    }
    Json out{{"degree", d}, {"max_cyclotomic_order", max_cyclotomic_order(d)}};
    if (roots) out["roots_of_unity"] = *roots;
    out["bound"] = twistor_fiber_bound(d, roots);
    return out;
  });
  auto* c_roots = cm->add_subcommand("roots", "Roots of unity of O_K");
  c_roots->add_option("--field,-k", field_spec)->required();
  bind(c_roots, "cm roots", [&] {
    CMField k = parse_field(field_spec);
    Json arr = Json::array();
    for (const auto& x : roots_of_unity(k)) arr.push_back(Json{{"order", *is_root_of_unity(x)}, {"element", json::encode(x)}});
    return Json{{"field", json::encode(k)}, {"count", arr.size()}, {"roots", arr}};
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.errors = std::string("error: ") + e.what() + "\n";
    return result;
  }

  Json payload;
  payload["schema"] = kSchema;
  payload["command"] = command;
  try {
    Json body = action();
    payload["status"] = "ok";
    payload["result"] = std::move(body);
  } catch (const InvalidArgument& e) {
    result.exit_code = 2;
    payload["status"] = "error";
    payload["error"] = e.what();
  } catch (const PreconditionError& e) {
    result.exit_code = 1;
    payload["status"] = "error";
    payload["error"] = e.what();
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = 2;
    payload["status"] = "error";
    payload["error"] = std::string("malformed JSON input: ") + e.what();
  } catch (const Error& e) {
    result.exit_code = 1;
    payload["status"] = "error";
    payload["error"] = e.what();
  }

  if (payload["status"] == "error") result.errors += "error: " + payload["error"].get<std::string>() + "\n";
  if (ctx.json) {
    result.output = payload.dump(2) + "\n";
  } else if (result.exit_code == 0) {
    render(payload["result"], "", result.output);
  }
  result.errors = ctx.warnings + result.errors;
  result.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ctx.timing) {
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << "time: " << result.timing_ms << " ms\n";
    result.errors += t.str();
  }
  return result;
}

}  // namespace k3lat::cli
