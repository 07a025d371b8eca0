#include "hopfcyc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hopfcyc::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar(const json& j, const FieldSpec& f) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f.order);
  fail("scalar must be a string or an integer, got " + j.dump());
}

std::vector<Scalar> scalars(const json& j, const FieldSpec& f, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    fail(std::string(what) + " needs " + std::to_string(size) + " entries");
  }
  std::vector<Scalar> out;
  for (const auto& v : j) out.push_back(scalar(v, f));
  return out;
}

BasisIndex index(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= bound) {
    fail(std::string(what) + " index out of range: " + j.dump());
  }
  return j.get<BasisIndex>();
}

std::vector<StructureTerm> structure(const json& j, const FieldSpec& f, std::size_t dim,
                                     const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a list");
  std::vector<StructureTerm> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4) fail(std::string(what) + " terms are [i, j, k, c]");
    out.push_back({index(t[0], dim, what), index(t[1], dim, what), index(t[2], dim, what),
                   scalar(t[3], f)});
  }
  return out;
}

FieldSpec field_spec(const json& j) {
  if (!j.contains("field")) return {};
  const json& f = j.at("field");
  std::string const kind = field(f, "kind").get<std::string>();
  if (kind == "rational") return {};
  if (kind == "cyclotomic") {
    unsigned const order = field(f, "order").get<unsigned>();
    if (order < 1) fail("cyclotomic order must be positive");
    return {order};
  }
  fail("unknown field kind '" + kind + "'");
}

std::vector<std::string> basis_labels(const json& j) {
  if (j.contains("basis")) {
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != labels.size()) {
      fail("dim does not match basis");
    }
    return labels;
  }
  std::size_t const d = field(j, "dim").get<std::size_t>();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

FiniteAlgebra::Presentation algebra_presentation(const json& j) {
  FiniteAlgebra::Presentation p;
  p.name = j.value("name", std::string("A"));
  p.field = field_spec(j);
  p.basis = basis_labels(j);
  std::size_t const d = p.basis.size();
  if (d == 0) fail("algebra must have positive dimension");
  p.unit = scalars(field(j, "unit"), p.field, d, "unit");
  p.product = structure(field(j, "product"), p.field, d, "product");
  return p;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    fail(std::string("invalid input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid input: ") + e.what());
  }
}

FiniteHopf hopf_from(const json& j) {
  FiniteHopf::Presentation p;
  p.name = j.value("name", std::string("H"));
  p.field = field_spec(j);
  p.basis = basis_labels(j);
  std::size_t const d = p.basis.size();
  if (d == 0) fail("Hopf algebra must have positive dimension");
  p.unit = scalars(field(j, "unit"), p.field, d, "unit");
  p.product = structure(field(j, "product"), p.field, d, "product");
  p.coproduct = structure(field(j, "coproduct"), p.field, d, "coproduct");
  p.counit = scalars(field(j, "counit"), p.field, d, "counit");
  for (const auto& t : field(j, "antipode")) {
    if (!t.is_array() || t.size() != 3) fail("antipode terms are [i, j, c]");
    p.antipode.push_back({index(t[0], d, "antipode"), index(t[1], d, "antipode"), scalar(t[2], p.field)});
  }
  if (j.contains("characters")) {
    for (const auto& [name, values] : j.at("characters").items()) {
      p.characters[name] = scalars(values, p.field, d, "character");
    }
  }
  return FiniteHopf(std::move(p));
}

Element dense_element(const json& j, const FieldSpec& f, std::size_t dim) {
  return FiniteHopf::from_coefficients(scalars(j, f, dim, "element"));
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FiniteHopf parse_hopf(const std::string& text) {
  return guarded([&] { return hopf_from(parse_json(text)); });
}

FiniteHopf load_hopf(const std::filesystem::path& path) { return parse_hopf(read_file(path)); }

std::string hopf_to_json(const FiniteHopf& h) {
  const auto& p = h.presentation();
  auto s = [](const Scalar& c) -> json {
    if (c.is_rational() && c.rational_value().get_den() == 1 && c.rational_value().get_num().fits_slong_p()) {
      return c.rational_value().get_num().get_si();
    }
    return c.to_string();
  };
  auto list = [&](const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(s(c));
    return a.dump();
  };
  auto rows = [](const std::vector<json>& r) {
    std::string out = "[";
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? ",\n    " : "\n    ") + r[k].dump();
    return out + (r.empty() ? "]" : "\n  ]");
  };
  std::vector<json> product;
  for (const auto& t : p.product) product.push_back({t.a, t.b, t.c, s(t.coef)});
  std::vector<json> coproduct;
  for (const auto& t : p.coproduct) coproduct.push_back({t.a, t.b, t.c, s(t.coef)});
  std::vector<json> antipode;
  for (const auto& t : p.antipode) antipode.push_back({t.from, t.to, s(t.coef)});
  json const field = p.field.is_rational() ? json{{"kind", "rational"}}
                                           : json{{"kind", "cyclotomic"}, {"order", p.field.order}};
  std::string out = "{\n";
  out += "  \"name\": " + json(p.name).dump() + ",\n";
  out += "  \"field\": " + field.dump() + ",\n";
  out += "  \"basis\": " + json(p.basis).dump() + ",\n";
  out += "  \"unit\": " + list(p.unit) + ",\n";
  out += "  \"product\": " + rows(product) + ",\n";
  out += "  \"coproduct\": " + rows(coproduct) + ",\n";
  out += "  \"counit\": " + list(p.counit) + ",\n";
  out += "  \"antipode\": " + rows(antipode) + ",\n";
  out += "  \"characters\": {";
  bool first = true;
  for (const auto& [name, values] : p.characters) {
    out += (first ? "\n    " : ",\n    ") + json(name).dump() + ": " + list(values);
    first = false;
  }
  out += first ? "}\n" : "\n  }\n";
  return out + "}\n";
}

InputKind detect_kind(const std::string& text) {
  json const j = parse_json(text);
  return j.is_object() && j.contains("brackets") ? InputKind::Lie : InputKind::Hopf;
}

LieInput parse_lie(const std::string& text) {
  return guarded([&]() -> LieInput {
    json const j = parse_json(text);
    std::size_t const d = field(j, "dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<BracketTerm> brackets;
    for (const auto& t : field(j, "brackets")) {
      if (!t.is_array() || t.size() != 4) fail("bracket terms are [i, j, k, c]");
      brackets.push_back({index(t[0], d, "bracket"), index(t[1], d, "bracket"),
                          index(t[2], d, "bracket"), scalar(t[3], {})});
    }
    LieAlgebra g(d, brackets, labels);
    json const c = j.value("character", json("adjoint"));
    std::optional<LieCharacter> delta;
    if (c == "adjoint") {
      delta = LieCharacter::modular(g);
    } else if (c == "trivial") {
      delta = LieCharacter::trivial(g);
    } else {
      delta = LieCharacter(g, scalars(c, {}, d, "character"));
    }
    return {g, *delta, j.value("name", std::string("g"))};
  });
}

FiniteAlgebra parse_algebra(const std::string& text) {
  return guarded([&] { return FiniteAlgebra(algebra_presentation(parse_json(text))); });
}

GammaInput load_gamma(const std::filesystem::path& path) {
  std::string const text = read_file(path);
  return guarded([&]() -> GammaInput {
    json const j = parse_json(text);
    const json& hj = field(j, "hopf");
    FiniteHopf h = hj.is_string() ? load_hopf(path.parent_path() / hj.get<std::string>()) : hopf_from(hj);
    FiniteAlgebra a(algebra_presentation(field(j, "algebra")));
    const json& aj = field(j, "action");
    HopfAction act;
    if (aj == "trivial") {
      act = HopfAction::trivial(h, a);
    } else if (aj == "translation") {
      const json& table = field(j, "table");
      act = HopfAction::translation(table.get<std::vector<std::vector<BasisIndex>>>());
    } else {
      if (!aj.is_array() || aj.size() != h.dim()) fail("action needs one matrix per Hopf basis element");
      for (const auto& m : aj) {
        std::vector<SparseMatrix::Triplet> triplets;
        for (const auto& t : m) {
          if (!t.is_array() || t.size() != 3) fail("action entries are [row, col, c]");
          triplets.push_back({index(t[0], a.dim(), "action"), index(t[1], a.dim(), "action"),
                              scalar(t[2], a.field())});
        }
        act.matrices.push_back(SparseMatrix::from_triplets(a.dim(), a.dim(), std::move(triplets)));
      }
    }
    const json& tj = field(j, "trace");
    Trace t = tj == "sum" ? summation_trace(a) : Trace{scalars(tj, a.field(), a.dim(), "trace")};
    std::optional<std::string> character;
    if (j.contains("character")) character = j.at("character").get<std::string>();
    return {std::move(h), std::move(a), std::move(act), std::move(t), character};
  });
}

Cochain PairInput::cochain(const AlgebraCochainModule& am) const {
  if (trace) {
    return make_cochain(am, degree, [&](const std::vector<BasisIndex>& x) {
      Element prod = algebra.basis_element(x[0]);
      for (std::size_t k = 1; k < x.size(); ++k) prod = algebra.multiply(prod, algebra.basis_element(x[k]));
      return (*trace)(prod);
    });
  }
  std::vector<SparseVector::Entry> e;
  for (std::size_t k = 0; k < cochain_support.size(); ++k) {
    e.emplace_back(am.encode(cochain_support[k]), cochain_values[k]);
  }
  return {degree, SparseVector::from_entries(std::move(e))};
}

PairInput load_pair(const std::filesystem::path& path) {
  std::string const text = read_file(path);
  return guarded([&]() -> PairInput {
    json const j = parse_json(text);
    PairInput in(FiniteAlgebra(algebra_presentation(field(j, "algebra"))));
    const FiniteAlgebra& a = in.algebra;
    const json& cj = field(j, "cochain");
    in.degree = field(cj, "degree").get<unsigned>();
    if (in.degree != 0 && in.degree != 2) fail("cochain degree must be 0 or 2");
    if (cj.contains("trace")) {
      in.trace = Trace{scalars(cj.at("trace"), a.field(), a.dim(), "trace")};
    } else {
      for (const auto& t : field(cj, "entries")) {
        if (!t.is_array() || t.size() != in.degree + 2) fail("cochain entries are [i0, .., in, c]");
        std::vector<BasisIndex> x;
        for (unsigned k = 0; k <= in.degree; ++k) x.push_back(index(t[k], a.dim(), "cochain"));
        in.cochain_support.push_back(x);
        in.cochain_values.push_back(scalar(t[in.degree + 1], a.field()));
      }
    }
    const json& ej = field(j, "idempotent");
    in.idempotent.q = field(ej, "q").get<unsigned>();
    const json& entries = field(ej, "entries");
    if (!entries.is_array() || entries.size() != in.idempotent.q * in.idempotent.q) {
      fail("idempotent needs q*q entries");
    }
    for (const auto& e : entries) in.idempotent.entries.push_back(dense_element(e, a.field(), a.dim()));
    if (j.contains("units")) {
      for (const auto& u : j.at("units")) {
        in.units.emplace_back(dense_element(field(u, "element"), a.field(), a.dim()),
                              dense_element(field(u, "inverse"), a.field(), a.dim()));
      }
    }
    in.conjugations = j.value("conjugations", std::size_t{20});
    return in;
  });
}

}  // namespace hopfcyc::io
