#include "chowmod/serialize.hpp"

#include <cctype>
#include <charconv>

namespace chowmod {

namespace {

const Json& req(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidArgument, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string req_string(const Json& j, const char* key) {
  const Json& v = req(j, key);
  if (!v.is_string()) fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

unsigned req_unsigned(const Json& j, const char* key) {
  const Json& v = req(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<unsigned>();
}

long opt_mult(const Json& j) {
  if (!j.contains("mult")) return 1;
  const Json& v = j.at("mult");
  if (!v.is_number_integer()) fail(ErrorCode::InvalidArgument, "\"mult\" must be an integer");
  return v.get<long>();
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::InvalidArgument, "expected an unsigned integer, got \"" + std::string(s) + "\"");
  return v;
}

std::vector<mpq_class> parse_mu(std::string_view text, const FieldPtr& prime) {
  VarSet vars{0, 0, true};
  UPoly mu = parse_poly(text, prime, vars).to_upoly(vars.u());
  std::vector<mpq_class> out;
  for (const auto& c : mu.coeffs()) out.push_back(c.scalar());
  return out;
}

std::vector<Element> elements_from(const Json& arr, const FieldPtr& field) {
  if (!arr.is_array()) fail(ErrorCode::InvalidArgument, "expected an array of field elements");
  std::vector<Element> out;
  for (const auto& x : arr) {
    if (x.is_string())
      out.push_back(parse_element(x.get<std::string>(), field));
    else if (x.is_number_integer())
      out.push_back(field->from_int(x.get<long>()));
    else
      fail(ErrorCode::InvalidArgument, "field elements are strings or integers");
  }
  return out;
}

Json elements_to(const std::vector<Element>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(x.to_string());
  return arr;
}

Model model_from(const Json& j, Model fallback) {
  if (!j.contains("model")) return fallback;
  return parse_model(req_string(j, "model"));
}

}  // namespace

FieldPtr parse_field_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "Q") {
    if (colon == std::string_view::npos) return Field::rationals();
    return Field::make(0, parse_mu(rest, Field::rationals()));
  }
  if (head == "Fp") {
    if (colon == std::string_view::npos) fail(ErrorCode::InvalidArgument, "Fp needs a prime: Fp:<p>");
    return Field::make(parse_uint(rest));
  }
  if (head == "Fq") {
    auto c2 = rest.find(':');
    if (colon == std::string_view::npos || c2 == std::string_view::npos)
      fail(ErrorCode::InvalidArgument, "Fq needs Fq:<p>:<mu> or Fq:<p>:<degree>");
    std::uint64_t p = parse_uint(rest.substr(0, c2));
    std::string_view tail = rest.substr(c2 + 1);
    if (!is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    bool digits = !tail.empty() && std::all_of(tail.begin(), tail.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (digits) {
      auto d = static_cast<unsigned>(parse_uint(tail));
      if (d < 2) fail(ErrorCode::InvalidArgument, "extension degree must be at least 2");
      return Field::finite(p, d);
    }
    return Field::make(p, parse_mu(tail, Field::prime(p)));
  }
  fail(ErrorCode::InvalidArgument, "unknown field \"" + std::string(text) + "\" (expected Q, Fp:p or Fq:p:mu)");
}

Json field_to_json(const FieldPtr& field) { return Json{{"spec", field->spec_string()}}; }

FieldPtr field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  return parse_field_spec(req_string(j, "spec"));
}

ModulusDatum parse_modulus_exponents(std::string_view text, const FieldPtr& field) {
  std::vector<unsigned> m;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    auto v = parse_uint(part);
    if (v == 0) fail(ErrorCode::InvalidArgument, "modulus exponents must be at least 1");
    m.push_back(static_cast<unsigned>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ModulusDatum::monomial(field, m);
}

Json modulus_to_json(const ModulusDatum& d) {
  if (d.exponents) return Json{{"exponents", *d.exponents}};
  return Json{{"poly", d.divisor.to_string()}};
}

ModulusDatum modulus_from_json(const Json& j, const FieldPtr& field, unsigned r) {
  if (j.contains("exponents")) {
    const Json& e = j.at("exponents");
    if (!e.is_array()) fail(ErrorCode::InvalidArgument, "\"exponents\" must be an array");
    std::vector<unsigned> m;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long>() < 1)
        fail(ErrorCode::InvalidArgument, "modulus exponents must be integers >= 1");
      m.push_back(x.get<unsigned>());
    }
    if (m.size() != r) fail(ErrorCode::InvalidArgument, "modulus has " + std::to_string(m.size()) + " exponents, r = " + std::to_string(r));
    return ModulusDatum::monomial(field, m);
  }
  return ModulusDatum::general(parse_poly(req_string(j, "poly"), field, VarSet{r, 0, false}));
}

RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field) {
  VarSet vars{1, 0, false};
  auto as_upoly = [&](std::string_view s) { return parse_poly(s, field, vars).to_upoly(0); };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t k = i; k < text.size(); ++k) {
      if (text[k] == '(') ++depth;
      if (text[k] == ')' && --depth == 0) {
        close = k;
        break;
      }
    }
    if (close != std::string_view::npos) {
      std::size_t k = close + 1;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == '/') {
        std::size_t m = k + 1;
        while (m < text.size() && std::isspace(static_cast<unsigned char>(text[m]))) ++m;
        if (m < text.size() && text[m] == '(')
          return RatFunc(as_upoly(text.substr(i + 1, close - i - 1)), as_upoly(text.substr(m)));
      }
    }
  }
  return RatFunc(as_upoly(text));
}

Json cycle_to_json(const HypersurfaceCycle& z, const ModulusDatum* d) {
  Json j;
  j["field"] = field_to_json(z.field());
  j["model"] = model_name(z.model());
  j["r"] = z.r();
  j["n"] = z.n();
  if (d) j["modulus"] = modulus_to_json(*d);
  Json terms = Json::array();
  for (const auto& [f, m] : z.terms()) terms.push_back(Json{{"mult", m}, {"poly", f.to_string()}});
  j["terms"] = terms;
  return j;
}

CycleInput cycle_from_json(const Json& j) {
  FieldPtr field = field_from_json(req(j, "field"));
  unsigned r = req_unsigned(j, "r"), n = req_unsigned(j, "n");
  Model model = model_from(j, Model::Psi);
  CycleInput in{HypersurfaceCycle(field, r, n, model), std::nullopt};
  VarSet vars{r, n, false};
  const Json& terms = req(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::InvalidArgument, "\"terms\" must be an array");
  for (const auto& t : terms) in.cycle.add(parse_poly(req_string(t, "poly"), field, vars), opt_mult(t));
  if (j.contains("modulus")) in.modulus = modulus_from_json(j.at("modulus"), field, r);
  return in;
}

Json point_to_json(const ClosedPoint& p, const FieldPtr& base) {
  Json j;
  if (*p.field != *base) j["field"] = field_to_json(p.field);
  j["t"] = elements_to(p.t);
  j["y"] = elements_to(p.y);
  return j;
}

ClosedPoint point_from_json(const Json& j, const FieldPtr& base) {
  FieldPtr field = j.contains("field") ? field_from_json(j.at("field")) : base;
  if (field->characteristic() != base->characteristic())
    fail(ErrorCode::WrongField, "point field " + field->spec_string() + " over base " + base->spec_string());
  ClosedPoint p{field, elements_from(req(j, "t"), field), {}};
  if (j.contains("y")) p.y = elements_from(j.at("y"), field);
  return p;
}

Json zero_cycle_to_json(const ZeroCycle& z, const ModulusDatum* d) {
  Json j;
  j["field"] = field_to_json(z.base());
  j["model"] = model_name(z.model());
  j["r"] = z.r();
  j["n"] = z.n();
  if (d) j["modulus"] = modulus_to_json(*d);
  Json pts = Json::array();
  for (const auto& [p, m] : z.terms()) {
    Json pj = point_to_json(p, z.base());
    Json entry{{"mult", m}};
    for (auto it = pj.begin(); it != pj.end(); ++it) entry[it.key()] = it.value();
    pts.push_back(entry);
  }
  j["points"] = pts;
  return j;
}

ZeroCycleInput zero_cycle_from_json(const Json& j) {
  FieldPtr field = field_from_json(req(j, "field"));
  unsigned r = req_unsigned(j, "r"), n = req_unsigned(j, "n");
  ZeroCycleInput in{ZeroCycle(field, r, n, model_from(j, Model::Original)), std::nullopt};
  const Json& pts = req(j, "points");
  if (!pts.is_array()) fail(ErrorCode::InvalidArgument, "\"points\" must be an array");
  for (const auto& p : pts) in.cycle.add(point_from_json(p, field), opt_mult(p));
  if (j.contains("modulus")) in.modulus = modulus_from_json(j.at("modulus"), field, r);
  return in;
}

namespace {

template <class Entry, class Parse>
SymbolSum<Entry> sum_from_json(const Json& j, const FieldPtr& field, Parse parse) {
  auto parse_entries = [&](const Json& arr) {
    if (!arr.is_array()) fail(ErrorCode::InvalidArgument, "\"entries\" must be an array");
    std::vector<Entry> out;
    for (const auto& x : arr) {
      if (!x.is_string() && !x.is_number_integer())
        fail(ErrorCode::InvalidArgument, "symbol entries are strings or integers");
      out.push_back(parse(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>())));
    }
    return out;
  };
  if (j.contains("entries")) {
    auto entries = parse_entries(j.at("entries"));
    SymbolSum<Entry> s(field, static_cast<unsigned>(entries.size()));
    s.add(entries, opt_mult(j));
    return s;
  }
  SymbolSum<Entry> s(field, req_unsigned(j, "n"));
  const Json& terms = req(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::InvalidArgument, "\"terms\" must be an array");
  for (const auto& t : terms) s.add(parse_entries(req(t, "entries")), opt_mult(t));
  return s;
}

template <class Entry>
Json sum_to_json(const SymbolSum<Entry>& e) {
  Json j;
  j["field"] = field_to_json(e.field());
  j["n"] = e.n();
  Json terms = Json::array();
  for (const auto& [s, m] : e.terms()) {
    Json entries = Json::array();
    for (const auto& x : s) entries.push_back(entry_string(x));
    terms.push_back(Json{{"mult", m}, {"entries", entries}});
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

Json symbol_to_json(const MilnorElement& e) { return sum_to_json(e); }

MilnorElement symbol_from_json(const Json& j) {
  FieldPtr field = field_from_json(req(j, "field"));
  return sum_from_json<Element>(j, field, [&](const std::string& s) { return parse_element(s, field); });
}

Json function_symbol_to_json(const FunctionMilnorElement& e) { return sum_to_json(e); }

FunctionMilnorElement function_symbol_from_json(const Json& j) {
  FieldPtr field = field_from_json(req(j, "field"));
  return sum_from_json<RatFunc>(j, field, [&](const std::string& s) { return parse_ratfunc(s, field); });
}

Json place_to_json(const Place& v) {
  if (v.at_infinity()) return Json{{"infinity", true}};
  return Json{{"pi", v.to_string()}};
}

Place place_from_json(const Json& j, const FieldPtr& field) {
  if (j.contains("infinity") && j.at("infinity") == true) return Place::infinity(field);
  UPoly pi = parse_poly(req_string(j, "pi"), field, VarSet{1, 0, false}).to_upoly(0);
  if (pi.degree() < 1) fail(ErrorCode::InvalidArgument, "a place needs a nonconstant pi");
  if (!is_irreducible(pi)) fail(ErrorCode::InvalidArgument, pi.to_string("t1") + " is not irreducible");
  return Place::finite(pi);
}

Json curve_to_json(const ParamCurve& c) {
  Json j;
  j["field"] = field_to_json(c.field);
  j["model"] = model_name(c.model);
  Json base = Json::array(), comps = Json::array();
  for (const auto& f : c.base) base.push_back(f.to_string());
  for (const auto& f : c.components) comps.push_back(f.to_string());
  j["base"] = base;
  j["components"] = comps;
  return j;
}

ParamCurve curve_from_json(const Json& j) {
  ParamCurve c;
  c.field = field_from_json(req(j, "field"));
  c.model = model_from(j, Model::Original);
  for (const auto& key : {"base", "components"}) {
    const Json& arr = req(j, key);
    if (!arr.is_array()) fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be an array");
    auto& dst = std::string_view(key) == "base" ? c.base : c.components;
    for (const auto& x : arr) {
      if (!x.is_string()) fail(ErrorCode::InvalidArgument, "curve coordinates are strings");
      dst.push_back(parse_ratfunc(x.get<std::string>(), c.field));
    }
  }
  c.validate();
  return c;
}

Json error_to_json(const Error& e) {
  std::string what = e.what();
  std::string name(error_name(e.code()));
  std::string message = what.rfind(name + ": ", 0) == 0 ? what.substr(name.size() + 2) : what;
  Json err{{"code", name}, {"message", message}};
  if (auto* s = dynamic_cast<const SyntaxError*>(&e)) err["position"] = s->position();
  return Json{{"error", err}};
}

}  // namespace chowmod
