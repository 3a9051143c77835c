#include "orbitpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <sstream>

#include "orbitpoly/classes.hpp"
#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/group.hpp"
#include "orbitpoly/invariants.hpp"
#include "orbitpoly/structfactor.hpp"
#include "orbitpoly/tower.hpp"
#include "orbitpoly/verify.hpp"

namespace orbitpoly {

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "orbitpoly/1";

struct Options {
  std::uint32_t p = 0;
  unsigned m = 1;
  bool json = false;
  std::uint64_t seed = 0;
  std::string s;
  std::vector<std::string> gens;
  unsigned ext = 1;
  unsigned k = 1;
  std::string lambda;
  bool oracle_check = false;
  bool pgl = false;
  std::string suite = "paper-examples";
};

FieldPtr field_of(const Options& o) {
  if (o.p == 0) raise(ErrorKind::UsageError, "--p is required");
  return Field::create(o.p, o.m);
}

json doc(const std::string& command, const FieldPtr& F) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  if (F) j["field"] = F->name();
  return j;
}

std::string pt(const Field& F, const ProjPoint& z) { return format_point(F, z); }

std::vector<Moebius> parse_gens(const FieldPtr& F, const std::vector<std::string>& gens) {
  if (gens.empty()) raise(ErrorKind::UsageError, "--gens needs at least one generator");
  std::vector<Moebius> out;
  for (const auto& g : gens) out.push_back(parse_moebius(F, g));
  return out;
}

json factorization_json(const Factorization& f) {
  json j;
  j["unit"] = f.unit.code;
  json arr = json::array();
  for (const auto& [h, e] : f.factors) arr.push_back({{"factor", to_string(h)}, {"multiplicity", e}});
  j["factors"] = arr;
  return j;
}

void print_factorization(std::ostream& out, const Field& F, const Factorization& f) {
  out << "unit: " << F.format(f.unit) << "\n";
  for (const auto& [h, e] : f.factors) out << "  " << to_string(h) << (e > 1 ? "   ^" + std::to_string(e) : "") << "\n";
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  return a.unit == b.unit && a.factors == b.factors;
}

// ---------------------------------------------------------------------------

int cmd_factor(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  if (o.s.empty()) raise(ErrorKind::UsageError, "--s is required");
  const Mat2 s = parse_mat2(F, o.s);
  int code = kExitOk;
  json j = doc("factor", F);
  j["s"] = to_string(s);

  if (o.k > 1) {
    const GeneralKResult r = factor_general_k(s, o.k, o.seed);
    j["k"] = o.k;
    j["input"] = to_string(r.input);
    j["structured"] = r.structured;
    j["warning"] = r.warning;
    j["factorization"] = factorization_json(r.factorization);
    std::optional<bool> oracle_ok;
    if (o.oracle_check) {
      oracle_ok = same_factorization(r.factorization, factorize(r.input, o.seed));
      j["oracle_check"] = *oracle_ok ? "PASS" : "FAIL";
      if (!*oracle_ok) code = kExitViolation;
    }
    if (o.json) {
      out << j.dump(2) << "\n";
      return code;
    }
    out << "input: " << to_string(r.input) << " over " << F->name() << "\n";
    out << "k: " << o.k << (r.structured ? "  (structured)" : "  (oracle fallback)") << "\n";
    if (!r.warning.empty()) out << "warning: " << r.warning << "\n";
    print_factorization(out, *F, r.factorization);
    if (oracle_ok) out << "oracle check: " << (*oracle_ok ? "PASS" : "FAIL") << "\n";
    return code;
  }

  const StructuredFactorization r = factor_by_orbit(s, o.seed);
  const bool rebuilt = r.reconstruct() == r.input;
  if (!rebuilt) code = kExitViolation;
  j["input"] = to_string(r.input);
  j["kind"] = std::string(to_string(r.kind));
  j["order"] = r.order;
  j["unit"] = F->format(r.unit);
  j["degree_r"] = r.degree_r;
  j["family"] = r.family;
  j["parameter"] = to_string(r.parameter);
  j["reconstruction"] = rebuilt ? "PASS" : "FAIL";
  json lin = json::array();
  for (const auto& l : r.removed_linear) lin.push_back(to_string(l));
  j["removed_linear"] = lin;
  json rows = json::array();
  std::vector<std::tuple<std::string, std::string, bool>> table;
  for (const auto& f : r.factors) {
    const bool mp = minimal_poly(f.source_field, f.source, F) == f.factor;
    if (!mp) code = kExitViolation;
    table.emplace_back(to_string(f.factor), pt(*F, f.lambda), mp);
    rows.push_back({{"factor", to_string(f.factor)}, {"lambda", pt(*F, f.lambda)}, {"minimal_poly_check", mp}});
  }
  j["factors"] = rows;
  std::optional<bool> oracle_ok;
  if (o.oracle_check) {
    oracle_ok = same_factorization(r.as_factorization(), factorize(r.input, o.seed));
    j["oracle_check"] = *oracle_ok ? "PASS" : "FAIL";
    if (!*oracle_ok) code = kExitViolation;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  out << "input: " << to_string(r.input) << " over " << F->name() << "\n";
  out << "s: " << to_string(s) << "  kind " << to_string(r.kind) << ", order " << r.order << "\n";
  out << "family: " << r.family << "\n";
  out << "parameter t = " << to_string(r.parameter) << "\n";
  out << "unit: " << F->format(r.unit) << "\n";
  for (const auto& l : r.removed_linear) out << "removed linear: " << to_string(l) << "\n";
  std::size_t w = 6;
  for (const auto& [f, l, mp] : table) w = std::max(w, f.size());
  out << std::left << std::setw(static_cast<int>(w)) << "factor" << "  " << std::setw(8) << "lambda" << "minpoly\n";
  for (const auto& [f, l, mp] : table)
    out << std::setw(static_cast<int>(w)) << f << "  " << std::setw(8) << l << (mp ? "ok" : "MISMATCH") << "\n";
  out << std::right;
  out << "reconstruction: " << (rebuilt ? "PASS" : "FAIL") << "\n";
  if (oracle_ok) out << "oracle check: " << (*oracle_ok ? "PASS" : "FAIL") << "\n";
  return code;
}

int cmd_orbit_poly(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  const Subgroup G = generate(F, parse_gens(F, o.gens));
  const OrbitPolynomial P = orbit_polynomial(G);
  json j = doc("orbit-poly", F);
  j["group_order"] = G.order();
  json coeffs = json::array();
  for (const auto& c : P.coeffs) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  j["parameter_index"] = P.param_index;
  j["parameter"] = to_string(P.parameter());
  j["family"] = family_string(P);
  std::optional<RatFunc> phi;
  if (G.order() >= 2) {
    phi = invariant_generator(P);
    j["invariant_generator"] = to_string(*phi);
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "group order: " << G.order() << "\n";
  for (std::size_t i = P.coeffs.size(); i-- > 0;) out << "  T^" << i << ": " << to_string(P.coeffs[i]) << "\n";
  out << "parameter t = coefficient of T^" << P.param_index << " = " << to_string(P.parameter()) << "\n";
  out << "family: " << family_string(P) << "\n";
  if (phi) out << "invariant generator: " << to_string(*phi) << "\n";
  return kExitOk;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  RatFunc phi(Poly::from_ints(F, {0}));
  std::size_t order = 0;
  if (o.pgl) {
    phi = pgl_generator(F);
    order = static_cast<std::size_t>(F->card() * F->card() * F->card() - F->card());
  } else {
    const Subgroup G = generate(F, parse_gens(F, o.gens));
    phi = invariant_generator(G);
    order = G.order();
  }
  json j = doc("invariant", F);
  j["group_order"] = order;
  j["numerator"] = to_string(phi.num(), "x");
  j["denominator"] = to_string(phi.den(), "x");
  j["degree"] = phi.degree();
  if (o.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "group order: " << order << "\n";
  out << "f = " << to_string(phi.num(), "x") << "\n";
  out << "g = " << to_string(phi.den(), "x") << "\n";
  out << "degree: " << phi.degree() << "\n";
  return kExitOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  const Subgroup G = generate(F, parse_gens(F, o.gens));
  const OrbitReport rep = orbit_decomposition(G, o.ext);
  json j = doc("orbits", F);
  j["group_order"] = G.order();
  j["ext"] = o.ext;
  json arr = json::array();
  for (const auto& orb : rep.orbits) {
    json pts = json::array();
    for (const auto& z : orb.points) pts.push_back(pt(*rep.ext, z));
    arr.push_back({{"size", orb.points.size()}, {"stabilizer_order", orb.stabilizer.order()}, {"regular", orb.regular}, {"points", pts}});
  }
  j["orbits"] = arr;
  std::optional<Census> census;
  std::optional<RiemannHurwitz> rh;
  if (G.order() >= 2) {
    census = nonregular_census(G);
    rh = riemann_hurwitz_audit(G);
    json c = json::array();
    for (const auto& n : census->orbits) c.push_back({{"size", n.size}, {"stabilizer_order", n.stabilizer_order}});
    j["nonregular_census"] = c;
    j["riemann_hurwitz"] = {{"different_sum", rh->different_sum}, {"tame_sum", rh->tame_sum},
                            {"expected", rh->expected}, {"pass", rh->pass}, {"tame_inequality", rh->tame_inequality}};
  }
  const int code = rh && !rh->pass ? kExitViolation : kExitOk;
  if (o.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  out << "group order " << G.order() << ", orbits on P^1(" << rep.ext->name() << "): " << rep.orbits.size() << "\n";
  for (const auto& orb : rep.orbits) {
    out << "  size " << orb.points.size() << "  stabilizer " << orb.stabilizer.order() << (orb.regular ? "  regular" : "") << "  {";
    const std::size_t show = std::min<std::size_t>(orb.points.size(), 8);
    for (std::size_t i = 0; i < show; ++i) out << (i ? ", " : "") << pt(*rep.ext, orb.points[i]);
    out << (orb.points.size() > show ? ", ...}" : "}") << "\n";
  }
  if (census) {
    out << "non-regular orbits over the closure:";
    for (const auto& n : census->orbits) out << " " << n.size << " (stabilizer " << n.stabilizer_order << ")";
    out << "\nRiemann-Hurwitz: sum delta = " << rh->different_sum << ", 2|G|-2 = " << rh->expected
        << (rh->pass ? "  PASS" : "  FAIL") << "\n";
  }
  return code;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  const std::uint64_t q = F->card();
  json j = doc("classes", F);
  // The lambda correspondence needs Phi of degree q^3; keep it to small q.
  const bool with_lambda = q <= 16 && q * q * q <= limits().enumeration_cap;
  std::optional<ClassContext> ctx;
  std::vector<ClassLabel> classes;
  if (with_lambda) {
    ctx = make_class_context(F);
    classes = ctx->classes;
  } else {
    classes = conjugacy_classes(F);
  }
  std::vector<std::vector<std::string>> lambdas(classes.size());
  json by_lambda = json::object();
  if (ctx) {
    for (const auto& z : projective_line(*F)) {
      const auto lc = class_of_lambda(*ctx, z, o.seed);
      json idx = json::array();
      for (std::size_t i : lc.classes) {
        lambdas[i].push_back(pt(*F, z) + (lc.ambiguous ? "?" : ""));
        idx.push_back(i);
      }
      by_lambda[pt(*F, z)] = {{"classes", idx}, {"ambiguous", lc.ambiguous}};
    }
    j["mu"] = F->format(ctx->mu);
    j["by_lambda"] = by_lambda;
  }
  json arr = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    arr.push_back({{"index", i}, {"kind", std::string(to_string(c.kind))}, {"order", c.order},
                   {"representative", to_string(c.representative)}, {"size", c.size},
                   {"centralizer_order", c.centralizer_order}, {"lambda", lambdas[i]}});
  }
  j["classes"] = arr;

  std::optional<LambdaClass> query;
  std::optional<FactorPattern> pred, obs;
  int code = kExitOk;
  if (!o.lambda.empty()) {
    if (!ctx) raise(ErrorKind::SizeCapExceeded, "--lambda needs q <= 16");
    const ProjPoint z = parse_point(*F, o.lambda);
    query = class_of_lambda(*ctx, z, o.seed);
    json qj;
    qj["lambda"] = pt(*F, z);
    qj["classes"] = query->classes;
    qj["ambiguous"] = query->ambiguous;
    if (!z.infinite) {
      pred = factor_pattern_of_class(*ctx, z.value, o.seed);
      obs = observed_pattern(*ctx, z.value, o.seed);
      auto pj = [](const FactorPattern& f) {
        return json{{"degree", f.degree}, {"count", f.count}, {"multiplicity", f.multiplicity}, {"ambiguous", f.ambiguous}};
      };
      qj["predicted"] = pj(*pred);
      qj["observed"] = obs ? pj(*obs) : json(nullptr);
      qj["match"] = obs && *obs == *pred;
      if (!(obs && *obs == *pred)) code = kExitViolation;
    }
    j["query"] = qj;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  out << F->name() << ": " << classes.size() << " conjugacy classes of PGL(2," << q << ")";
  if (ctx) out << ", mu = " << F->format(ctx->mu);
  out << "\n";
  out << std::left << std::setw(4) << "#" << std::setw(23) << "kind" << std::setw(7) << "order" << std::setw(24)
      << "representative" << std::setw(7) << "size" << std::setw(13) << "centralizer" << "lambda\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const bool inv = c.kind == ClassKind::SplitInvolution || c.kind == ClassKind::NonSplitInvolution ||
                     (c.order == 2 && F->characteristic() == 2);
    std::string lam;
    for (const auto& l : lambdas[i]) lam += (lam.empty() ? "" : ",") + l;
    out << std::setw(4) << i << std::setw(23) << (std::string(to_string(c.kind)) + (inv ? " *" : "")) << std::setw(7)
        << c.order << std::setw(24) << to_string(c.representative) << std::setw(7) << c.size << std::setw(13)
        << c.centralizer_order << lam << "\n";
  }
  out << std::right << "(* involution class; '?' marks the ambiguous value mu)\n";
  if (query) {
    out << "lambda " << o.lambda << " -> class";
    for (std::size_t i : query->classes) out << " " << i;
    if (query->ambiguous) out << " (ambiguous)";
    out << "\n";
    if (pred) {
      out << "predicted: " << pred->count << " factors of degree " << pred->degree << ", multiplicity " << pred->multiplicity << "\n";
      if (obs) out << "observed:  " << obs->count << " factors of degree " << obs->degree << ", multiplicity " << obs->multiplicity << "\n";
      else out << "observed:  mixed shape\n";
      out << "match: " << (obs && *obs == *pred ? "PASS" : "FAIL") << "\n";
    }
  }
  return code;
}

int cmd_lambda_report(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  if (o.s.empty()) raise(ErrorKind::UsageError, "--s is required");
  const Moebius s = parse_moebius(F, o.s);
  const LambdaReport rep = lambda_family_report(s, o.seed);
  const NumeratorStructure ns = numerator_structure_check(s);
  json j = doc("lambda-report", F);
  j["s"] = to_string(s);
  j["f"] = to_string(rep.phi.num(), "x");
  j["g"] = to_string(rep.phi.den(), "x");
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back({{"degree", r.degree}, {"count", r.count}, {"euler_phi", r.expected}});
  j["rows"] = rows;
  json lam = json::object();
  for (const auto& [c, d] : rep.degree_of_lambda) lam[F->format(Elem{c})] = d;
  j["degree_of_lambda"] = lam;
  j["total"] = rep.total;
  j["pass"] = rep.pass;
  j["numerator_structure"] = ns.pass;
  const int code = rep.pass && ns.pass ? kExitOk : kExitViolation;
  if (o.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  out << "s = " << to_string(s) << " over " << F->name() << "\n";
  out << "f = " << to_string(rep.phi.num(), "x") << "\ng = " << to_string(rep.phi.den(), "x") << "\n";
  out << "degree  #lambda  phi(degree)\n";
  for (const auto& r : rep.rows) out << std::setw(6) << r.degree << std::setw(9) << r.count << std::setw(13) << r.expected << "\n";
  out << "total " << rep.total << (rep.saw_linear ? " (linear factor seen)" : "") << "\n";
  out << "lambda -> degree:";
  for (const auto& [c, d] : rep.degree_of_lambda) out << " " << F->format(Elem{c}) << ":" << d;
  out << "\nreport: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  out << "numerator structure: " << (ns.pass ? "PASS" : "FAIL") << "\n";
  return code;
}

int cmd_lang(const Options& o, std::ostream& out) {
  const FieldPtr F = field_of(o);
  if (o.s.empty()) raise(ErrorKind::UsageError, "--s is required");
  const Moebius s = parse_moebius(F, o.s);
  const LangSolution L = lang_solve(s, o.seed);
  const bool count_ok = L.finite_count == F->card() || L.finite_count == F->card() + 1;
  const bool ok = L.equation_ok && L.image_ok && count_ok;
  json j = doc("lang", F);
  j["s"] = to_string(s);
  j["r"] = L.r;
  j["ext"] = L.ext->name();
  j["t"] = to_string(L.t);
  json xs = json::array();
  for (const auto& z : L.xs) xs.push_back(pt(*L.ext, z));
  j["solutions"] = xs;
  j["finite_count"] = L.finite_count;
  j["equation_ok"] = L.equation_ok;
  j["image_ok"] = L.image_ok;
  j["count_ok"] = count_ok;
  j["exhaustive"] = L.used_exhaustive;
  if (o.json) {
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  out << "s = " << to_string(s) << " over " << F->name() << ", order " << L.r << "\n";
  out << "t = " << to_string(L.t) << " over " << L.ext->name() << (L.used_exhaustive ? " (exhaustive)" : "") << "\n";
  out << "s = sigma(t)^-1 t: " << (L.equation_ok ? "PASS" : "FAIL") << "\n";
  out << "solutions of s(z) = z^q: " << L.xs.size() << " (" << L.finite_count << " finite)\n";
  out << "X_s = t^-1(P^1(F_q)): " << (L.image_ok ? "PASS" : "FAIL") << "\n";
  out << "|X_s| in {q, q+1}: " << (count_ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitViolation;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyReport rep;
  FieldPtr F;
  if (o.suite == "paper-examples") {
    rep = verify_worked_examples(o.seed);
  } else if (o.suite == "lemmas") {
    F = field_of(o);
    rep = verify_lemmas(F, o.seed);
  } else {
    raise(ErrorKind::UsageError, "unknown suite '" + o.suite + "'");
  }
  json j = doc("verify", F);
  j["suite"] = rep.suite;
  json arr = json::array();
  for (const auto& c : rep.checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = arr;
  j["failures"] = rep.failures();
  const int code = rep.pass() ? kExitOk : kExitViolation;
  if (o.json) {
    out << j.dump(2) << "\n";
    return code;
  }
  for (const auto& c : rep.checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
  out << rep.suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " passed\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!load_limits_from_env()) {
    err << "error: ORBITPOLY_SIZE_CAP must be a positive decimal integer\n";
    return kExitUsage;
  }

  CLI::App app{"Orbit polynomials and structured factorization over finite fields", "orbitpoly"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic");
    sub->add_option("--m", o.m, "extension degree of F_q over F_p")->capture_default_str();
    sub->add_flag("--json", o.json, "structured output");
    sub->add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
  };

  auto* factor = app.add_subcommand("factor", "factor c T^(q+1) + d T^q - a T - b through the orbit polynomial");
  common(factor);
  factor->add_option("--s", o.s, "transformation (a*x+b)/(c*x+d)");
  factor->add_option("--k", o.k, "use T^(q^k) in place of T^q")->capture_default_str();
  factor->add_flag("--oracle-check", o.oracle_check, "compare with generic factorization");

  auto* orbit_poly = app.add_subcommand("orbit-poly", "orbit polynomial of a generated subgroup");
  common(orbit_poly);
  orbit_poly->add_option("--gens", o.gens, "generators")->delimiter(';');

  auto* invariant = app.add_subcommand("invariant", "generator of the invariant field");
  common(invariant);
  invariant->add_flag("--pgl", o.pgl, "use the closed form for PGL(2,q)");
  invariant->add_option("--gens", o.gens, "generators")->delimiter(';');

  auto* orbits = app.add_subcommand("orbits", "orbits on P^1 of an extension");
  common(orbits);
  orbits->add_option("--gens", o.gens, "generators")->delimiter(';');
  orbits->add_option("--ext", o.ext, "degree k of F_{q^k}")->capture_default_str();

  auto* classes = app.add_subcommand("classes", "conjugacy classes of PGL(2,q) and their lambda values");
  common(classes);
  classes->add_option("--lambda", o.lambda, "query one lambda (element or inf)");

  auto* lambda_report = app.add_subcommand("lambda-report", "factor degrees of f - lambda g for s of order q+1");
  common(lambda_report);
  lambda_report->add_option("--s", o.s, "transformation of order q+1");

  auto* lang = app.add_subcommand("lang", "solve s = sigma(t)^-1 t");
  common(lang);
  lang->add_option("--s", o.s, "transformation");

  auto* verify = app.add_subcommand("verify", "replay built-in checks");
  common(verify);
  verify->add_option("--suite", o.suite, "paper-examples or lemmas")->capture_default_str();

  std::vector<std::string> storage{"orbitpoly"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (factor->parsed()) return cmd_factor(o, out);
    if (orbit_poly->parsed()) return cmd_orbit_poly(o, out);
    if (invariant->parsed()) return cmd_invariant(o, out);
    if (orbits->parsed()) return cmd_orbits(o, out);
    if (classes->parsed()) return cmd_classes(o, out);
    if (lambda_report->parsed()) return cmd_lambda_report(o, out);
    if (lang->parsed()) return cmd_lang(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace orbitpoly
