#include "chowmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "chowmod/suite.hpp"

namespace chowmod {

namespace {

struct Options {
  std::string file;
  std::string inline_text;
  std::string field = "Q";
  std::string model;
  std::string modulus;
  std::string level0 = "on";
  std::string sign = "native";
  std::uint64_t seed = 42;
  std::string out;
  bool certificate = false;

  // Subcommand specific.
  unsigned r = 0, n = 0;
  std::string a;
  std::string entries, place, point, variant = "plain";
  unsigned base_dims = 0;
  unsigned max_q = 16;
  std::string kind = "steinberg", x, f1, rest, f, g, u, pi;
  int power = 1;
  bool literal = false;
  std::vector<std::string> only, sizes;
  bool serial = false;
  std::string mutate = "none";
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::SyntaxError, path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Element> elements(const std::string& text, const FieldPtr& field) {
  std::vector<Element> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_element(s, field));
  return out;
}

std::vector<RatFunc> ratfuncs(const std::string& text, const FieldPtr& field) {
  std::vector<RatFunc> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_ratfunc(s, field));
  return out;
}

unsigned max_index(const std::string& text, char var) {
  unsigned best = 0;
  std::regex re(std::string(1, var) + "([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
    best = std::max(best, static_cast<unsigned>(std::stoul((*it)[1])));
  return best;
}

ComplexOptions complex_options(const Options& o) {
  if (o.level0 != "on" && o.level0 != "off") fail(ErrorCode::InvalidArgument, "--level0-degeneracy is on or off");
  return {o.level0 == "on", o.sign == "reversed" ? SignConvention::Reversed : SignConvention::Native};
}

SignConvention sign_of(const Options& o) {
  return o.sign == "reversed" ? SignConvention::Reversed : SignConvention::Native;
}

/// A cycle from --file, or from --inline text (one component, r and n read
/// off the variables unless given).
CycleInput load_cycle(const Options& o) {
  CycleInput in;
  if (!o.file.empty()) {
    in = cycle_from_json(read_json_file(o.file));
    if (!o.model.empty() && parse_model(o.model) != in.cycle.model())
      fail(ErrorCode::WrongModel, "--model differs from the file; use convert-model");
  } else if (!o.inline_text.empty()) {
    FieldPtr field = parse_field_spec(o.field);
    unsigned r = o.r ? o.r : max_index(o.inline_text, 't');
    unsigned n = o.n ? o.n : max_index(o.inline_text, 'y');
    Model model = o.model.empty() ? Model::Psi : parse_model(o.model);
    in.cycle = HypersurfaceCycle(field, r, n, model);
    in.cycle.add(parse_poly(o.inline_text, field, in.cycle.vars()));
  } else {
    fail(ErrorCode::InvalidArgument, "give --file or --inline");
  }
  if (!o.modulus.empty()) in.modulus = parse_modulus_exponents(o.modulus, in.cycle.field());
  return in;
}

ModulusDatum modulus_or_default(const std::optional<ModulusDatum>& d, const FieldPtr& field, unsigned r) {
  return d ? *d : ModulusDatum::monomial(field, std::vector<unsigned>(r, 1));
}

Json points_to_json(const std::map<ClosedPoint, MilnorElement>& m, const FieldPtr& base) {
  Json arr = Json::array();
  for (const auto& [p, s] : m) arr.push_back(Json{{"point", point_to_json(p, base)}, {"symbol", symbol_to_json(s)}});
  return arr;
}

Outcome check_cycle(const Options& o) {
  if (!o.file.empty()) {
    Json j = read_json_file(o.file);
    if (j.contains("points")) {
      ZeroCycleInput z = zero_cycle_from_json(j);
      if (!o.modulus.empty()) z.modulus = parse_modulus_exponents(o.modulus, z.cycle.base());
      ModulusDatum d = modulus_or_default(z.modulus, z.cycle.base(), z.cycle.r());
      PointFaceReport face = check_face_condition(z.cycle);
      bool off = check_modulus_zerocycle(z.cycle, d);
      Json rep{{"face", face.pass ? "pass" : "fail"}, {"modulus", off ? "Certified" : "ViolatesNecessary"}};
      return {rep, face.pass && off ? kExitOk : kExitVerificationFailure};
    }
  }
  CycleInput in = load_cycle(o);
  ModulusDatum d = modulus_or_default(in.modulus, in.cycle.field(), in.cycle.r());
  FaceReport face = check_face_condition(in.cycle);
  ModulusReport mod = check_modulus_codim1(in.cycle, d);
  Json rep{{"face", face.pass ? "pass" : "fail"}, {"modulus", verdict_name(mod.verdict)}};
  if (!face.pass) {
    Json v = Json::array();
    for (const auto& f : face.violations) v.push_back(f.to_string());
    rep["violations"] = v;
  }
  bool ok = face.pass && mod.verdict == ModulusVerdict::Certified;
  return {rep, ok ? kExitOk : kExitVerificationFailure};
}

Outcome boundary_cmd(const Options& o) {
  CycleInput in = load_cycle(o);
  HypersurfaceCycle b = boundary(in.cycle, complex_options(o));
  return {cycle_to_json(b, in.modulus ? &*in.modulus : nullptr)};
}

Outcome rho_cmd(const Options& o) {
  CycleInput in = load_cycle(o);
  if (o.certificate && in.cycle.n() == 2) {
    ModulusDatum d = modulus_or_default(in.modulus, in.cycle.field(), in.cycle.r());
    Certificate c = verify_rho_reciprocity(in.cycle, d, complex_options(o));
    return {c.to_json(), c.valid() ? kExitOk : kExitVerificationFailure};
  }
  Element value = rho(in.cycle, in.modulus ? &*in.modulus : nullptr);
  return {Json{{"rho", value.to_string()}}};
}

Outcome witness_bounding(const Options& o) {
  CycleInput in = load_cycle(o);
  ModulusDatum d = modulus_or_default(in.modulus, in.cycle.field(), in.cycle.r());
  Certificate c = bounding_surface(in.cycle, d, sign_of(o));
  return {c.to_json(), c.valid() ? kExitOk : kExitVerificationFailure};
}

Outcome witness_zero_cycle(const Options& o) {
  ZeroCycleInput in;
  if (!o.file.empty()) {
    in = zero_cycle_from_json(read_json_file(o.file));
  } else if (!o.point.empty()) {
    FieldPtr field = parse_field_spec(o.field);
    auto parts = split(o.point, ';');
    ClosedPoint p{field, elements(parts.empty() ? "" : parts[0], field),
                  elements(parts.size() > 1 ? parts[1] : "", field)};
    in.cycle = ZeroCycle(field, static_cast<unsigned>(p.t.size()), static_cast<unsigned>(p.y.size()), Model::Original);
    in.cycle.add(p);
  } else {
    fail(ErrorCode::InvalidArgument, "give --file or --point");
  }
  if (!o.modulus.empty()) in.modulus = parse_modulus_exponents(o.modulus, in.cycle.base());
  ModulusDatum d = modulus_or_default(in.modulus, in.cycle.base(), in.cycle.r());
  Json certs = Json::array();
  bool ok = true;
  for (const auto& [p, m] : in.cycle.terms()) {
    Certificate c = zero_cycle_vanishing_witness(p, d, parse_variant(o.variant), o.base_dims);
    ok = ok && c.valid();
    certs.push_back(Json{{"mult", m}, {"certificate", c.to_json()}});
  }
  return {Json{{"certificates", certs}}, ok ? kExitOk : kExitVerificationFailure};
}

Outcome generator_cmd(const Options& o) {
  FieldPtr field = parse_field_spec(o.field);
  if (o.a.empty()) fail(ErrorCode::InvalidArgument, "give --a");
  GeneratorResult g = generator_cycle(parse_element(o.a, field), o.r ? o.r : 2);
  ModulusDatum d = ModulusDatum::monomial(field, std::vector<unsigned>(g.cycle.r(), 1));
  Json rep{{"cycle", cycle_to_json(g.cycle, &d)}, {"certificate", g.certificate.to_json()}};
  return {rep, g.certificate.valid() ? kExitOk : kExitVerificationFailure};
}

MilnorElement load_symbol(const Options& o) {
  if (!o.file.empty()) return symbol_from_json(read_json_file(o.file));
  FieldPtr field = parse_field_spec(o.field);
  return make_symbol(field, elements(o.entries, field));
}

FunctionMilnorElement load_function_symbol(const Options& o) {
  if (!o.file.empty()) return function_symbol_from_json(read_json_file(o.file));
  FieldPtr field = parse_field_spec(o.field);
  return make_function_symbol(field, ratfuncs(o.entries, field));
}

Outcome ktheory_reduce(const Options& o) {
  ReduceResult r = symbol_reduce(load_symbol(o), o.certificate);
  return {Json{{"value", symbol_to_json(r.value)}, {"status", r.status}}};
}

Place load_place(const Options& o, const FieldPtr& field) {
  if (o.place == "inf" || o.place == "infinity") return place_from_json(Json{{"infinity", true}}, field);
  return place_from_json(Json{{"pi", o.place}}, field);
}

Outcome ktheory_tame(const Options& o) {
  FunctionMilnorElement s = load_function_symbol(o);
  Place v = load_place(o, s.field());
  return {Json{{"place", place_to_json(v)}, {"value", symbol_to_json(tame_symbol(v, s))}}};
}

Outcome ktheory_delta(const Options& o) {
  Json arr = Json::array();
  for (const auto& [v, e] : total_delta(load_function_symbol(o)))
    arr.push_back(Json{{"place", place_to_json(v)}, {"value", symbol_to_json(e)}});
  return {Json{{"places", arr}}};
}

Outcome ktheory_k2_table(const Options& o) {
  Json table = Json::array();
  bool all = true;
  for (unsigned q = 2; q <= o.max_q; ++q) {
    try {
      K2Result k = k2_presentation_oracle(q);
      Json inv = Json::array();
      for (const auto& d : k.invariants) inv.push_back(d.get_str());
      all = all && k.invariants.empty();
      table.push_back(Json{{"q", q},
                           {"generators", k.generators},
                           {"relations", k.relations},
                           {"invariants", inv},
                           {"trivial", k.invariants.empty()}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPrimePower) throw;
    }
  }
  return {Json{{"table", table}, {"all_trivial", all}}, all ? kExitOk : kExitVerificationFailure};
}

Outcome curve_report(const ParamCurve& c, const CurveCheck& check) {
  Json rep{{"curve", curve_to_json(c)},
           {"boundary", zero_cycle_to_json(check.boundary)},
           {"expected", zero_cycle_to_json(check.expected)},
           {"ok", check.ok}};
  if (!check.ok) rep["detail"] = check.detail;
  return {rep, check.ok ? kExitOk : kExitVerificationFailure};
}

Outcome curves_totaro(const Options& o) {
  FieldPtr field = parse_field_spec(o.field);
  std::vector<Element> x = elements(o.x, field);
  if (o.kind == "steinberg") {
    Element f1 = parse_element(o.f1, field);
    std::vector<Element> rest = elements(o.rest, field);
    if (o.literal) {
      ParamCurve c = totaro_steinberg_curve_literal(field, x, f1, rest);
      return {Json{{"curve", curve_to_json(c)}, {"boundary", zero_cycle_to_json(param_curve_boundary(c))}}};
    }
    return curve_report(totaro_steinberg_curve(field, x, f1, rest), verify_steinberg_curve(field, x, f1, rest));
  }
  if (o.kind == "mult") {
    Element f = parse_element(o.f, field), g = parse_element(o.g, field);
    return curve_report(totaro_mult_curve(field, x, f, g), verify_mult_curve(field, x, f, g));
  }
  fail(ErrorCode::InvalidArgument, "--kind is steinberg or mult");
}

Outcome curves_xi(const Options& o) {
  FieldPtr field = parse_field_spec(o.field);
  std::vector<RatFunc> f = ratfuncs(o.f, field);
  RatFunc u = parse_ratfunc(o.u.empty() ? "1" : o.u, field);
  UPoly pi = parse_poly(o.pi, field, VarSet{1, 0, false}).to_upoly(0);
  return curve_report(xi_curve(f, u, pi, o.power), verify_xi_curve(f, u, pi, o.power));
}

Outcome curves_boundary(const Options& o) {
  if (o.file.empty()) fail(ErrorCode::InvalidArgument, "give --file");
  ParamCurve c = curve_from_json(read_json_file(o.file));
  return {Json{{"boundary", zero_cycle_to_json(param_curve_boundary(c, sign_of(o)))}}};
}

Outcome curves_square(const Options& o) {
  if (o.file.empty()) fail(ErrorCode::InvalidArgument, "give --file");
  ParamCurve c = curve_from_json(read_json_file(o.file));
  SquareCheck sq = verify_commuting_square(c);
  Json rep{{"ok", sq.ok},
           {"phi_of_boundary", points_to_json(sq.phi_of_boundary, c.field)},
           {"delta_of_theta", points_to_json(sq.delta_of_theta, c.field)}};
  return {rep, sq.ok ? kExitOk : kExitVerificationFailure};
}

Outcome convert_model(const Options& o) {
  if (o.model.empty()) fail(ErrorCode::InvalidArgument, "give the target --model");
  Model target = parse_model(o.model);
  if (o.file.empty()) {
    Options psi = o;
    psi.model.clear();
    CycleInput in = load_cycle(psi);
    return {cycle_to_json(psi_convert(in.cycle, target), in.modulus ? &*in.modulus : nullptr)};
  }
  Json j = read_json_file(o.file);
  if (j.contains("points")) {
    ZeroCycleInput z = zero_cycle_from_json(j);
    return {zero_cycle_to_json(psi_convert(z.cycle, target), z.modulus ? &*z.modulus : nullptr)};
  }
  CycleInput in = cycle_from_json(j);
  return {cycle_to_json(psi_convert(in.cycle, target), in.modulus ? &*in.modulus : nullptr)};
}

Outcome suite_cmd(const Options& o) {
  SuiteOptions so;
  so.seed = o.seed;
  for (const auto& s : o.sizes) {
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(ErrorCode::InvalidArgument, "--size takes name=count");
    so.sizes[s.substr(0, eq)] = std::stoul(s.substr(eq + 1));
  }
  if (o.mutate == "boundary-sign-flip")
    so.mutation = Mutation::BoundarySignFlip;
  else if (o.mutate != "none")
    fail(ErrorCode::InvalidArgument, "unknown mutation \"" + o.mutate + "\"");
  SuiteReport r = o.serial ? run_suites_serial(so, o.only) : run_suites(so, o.only);
  return {r.to_json(), r.all_pass() ? kExitOk : kExitVerificationFailure};
}

Outcome verify_cmd(const Options& o) {
  if (o.file.empty()) fail(ErrorCode::InvalidArgument, "give --file");
  Json j = read_json_file(o.file);
  bool valid = verify_certificate(j);
  return {Json{{"valid", valid}}, valid ? kExitOk : kExitVerificationFailure};
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--file", o.file, "JSON input");
  sub->add_option("--inline", o.inline_text, "Polynomial text for a one-component cycle");
  sub->add_option("--field", o.field, "Q | Q:mu | Fp:p | Fq:p:mu");
  sub->add_option("--model", o.model, "original | psi");
  sub->add_option("--modulus", o.modulus, "Exponents m1,...,mr");
  sub->add_option("--r", o.r, "Number of t-coordinates for --inline");
  sub->add_option("--n", o.n, "Number of cube coordinates for --inline");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--level0-degeneracy", o.level0, "on | off")->check(CLI::IsMember({"on", "off"}));
  sub->add_option("--sign", o.sign, "native | reversed")->check(CLI::IsMember({"native", "reversed"}));
  sub->add_option("--seed", o.seed, "Seed for random corpora");
  sub->add_option("--out", o.out, "Write the report here instead of stdout");
  sub->add_flag("--certificate", o.certificate, "Certificate mode");
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot write " + o.out);
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Cycles with modulus, residue invariants and Milnor K-theory witnesses", "chowmod"};
  app.require_subcommand(1);
  std::map<CLI::App*, Outcome (*)(const Options&)> handlers;

  auto plain = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_input(sub, o);
    add_common(sub, o);
    handlers[sub] = fn;
    return sub;
  };
  plain("check-cycle", "Face condition and modulus verdict", check_cycle);
  plain("boundary", "Boundary of a cycle", boundary_cmd);
  plain("rho", "Residue invariant of a level-1 cycle (level 2 with --certificate: reciprocity)", rho_cmd);
  plain("witness-bounding", "Bounding surface certificate for a level-0 cycle", witness_bounding);
  plain("convert-model", "Change of coordinates between the two cube models", convert_model);
  plain("verify", "Re-check a certificate", verify_cmd);

  CLI::App* wz = plain("witness-zero-cycle", "Vanishing witnesses for points", witness_zero_cycle);
  wz->add_option("--point", o.point, "t1,...,tr;y1,...,yn");
  wz->add_option("--variant", o.variant, "plain | product-base");
  wz->add_option("--base-dims", o.base_dims, "Base dimensions for product-base");

  CLI::App* gen = plain("generator", "Generator cycle Z_a with its certificate", generator_cmd);
  gen->add_option("--a", o.a, "Field element");

  CLI::App* kt = app.add_subcommand("ktheory", "Milnor K-theory");
  kt->require_subcommand(1);
  auto ksub = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = kt->add_subcommand(name, help);
    sub->add_option("--file", o.file, "JSON input");
    sub->add_option("--field", o.field, "Q | Q:mu | Fp:p | Fq:p:mu");
    sub->add_option("--entries", o.entries, "Comma separated symbol entries");
    add_common(sub, o);
    handlers[sub] = fn;
    return sub;
  };
  ksub("reduce", "Reduce a symbol", ktheory_reduce);
  ksub("tame", "Tame symbol at a place", ktheory_tame)->add_option("--place", o.place, "pi in t1, or inf");
  ksub("delta", "Tame symbols at every place", ktheory_delta);
  ksub("k2-table", "K2 of finite fields from the presentation", ktheory_k2_table)
      ->add_option("--max-q", o.max_q, "Largest q");

  CLI::App* cv = app.add_subcommand("curves", "Witness curves");
  cv->require_subcommand(1);
  auto csub = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = cv->add_subcommand(name, help);
    sub->add_option("--field", o.field, "Q | Q:mu | Fp:p | Fq:p:mu");
    add_common(sub, o);
    handlers[sub] = fn;
    return sub;
  };
  CLI::App* tot = csub("totaro", "Steinberg or multiplicativity curve", curves_totaro);
  tot->add_option("--kind", o.kind, "steinberg | mult")->check(CLI::IsMember({"steinberg", "mult"}));
  tot->add_option("--x", o.x, "Base point t1,...,tr");
  tot->add_option("--f1", o.f1, "Steinberg entry");
  tot->add_option("--rest", o.rest, "Further entries");
  tot->add_option("--f", o.f, "First factor");
  tot->add_option("--g", o.g, "Second factor");
  tot->add_flag("--literal", o.literal, "Use the uncorrected Steinberg parametrization");
  CLI::App* xi = csub("xi", "Curve realizing the tame symbol identity", curves_xi);
  xi->add_option("--f", o.f, "Comma separated functions of t1");
  xi->add_option("--u", o.u, "Unit");
  xi->add_option("--pi", o.pi, "Monic irreducible in t1");
  xi->add_option("--r", o.power, "Power of pi");
  csub("boundary", "Boundary of a parametrized curve", curves_boundary)->add_option("--file", o.file, "Curve JSON");
  csub("square", "Compare phi of the boundary with the tame symbols of theta", curves_square)
      ->add_option("--file", o.file, "Curve JSON");

  CLI::App* su = app.add_subcommand("suite", "Run the property suites");
  su->add_option("--seed", o.seed, "Seed");
  su->add_option("--out", o.out, "Write the report here instead of stdout");
  su->add_option("--only", o.only, "Run only these suites");
  su->add_option("--size", o.sizes, "Override a suite size: name=count");
  su->add_flag("--serial", o.serial, "Run without threads");
  su->add_option("--mutate", o.mutate, "Inject a fault: none | boundary-sign-flip");
  handlers[su] = suite_cmd;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_to_json(Error(ErrorCode::InvalidArgument, e.what())).dump(2) << "\n";
    return kExitInputError;
  }

  for (const auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    try {
      Outcome r = fn(o);
      emit(r.report, o, out);
      return r.code;
    } catch (const Error& e) {
      out << error_to_json(e).dump(2) << "\n";
      return kExitInputError;
    } catch (const Json::exception& e) {
      out << error_to_json(Error(ErrorCode::InvalidArgument, e.what())).dump(2) << "\n";
      return kExitInputError;
    } catch (const std::invalid_argument& e) {
      out << error_to_json(Error(ErrorCode::InvalidArgument, e.what())).dump(2) << "\n";
      return kExitInputError;
    }
  }
  out << app.help();
  return kExitInputError;
}

}  // namespace chowmod
