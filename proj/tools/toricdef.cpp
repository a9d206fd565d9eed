#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "toricdef.hpp"

using namespace toricdef;

namespace {

enum Exit { kOk = 0, kInput = 2, kUncertified = 3, kViolation = 4, kDomain = 5 };

struct Options {
  std::string cone = "hexagon";
  std::string deg = "Rstar";
  std::string t, s, deg1, deg2;
  std::string identity = "dd-zero";
  long height = 10;
  int an = 1;
  int samples = 5;
  std::uint64_t seed = 1;
  bool json = false;
  bool pipeline = false;
  bool trace = false;
};

int emit(const Report& r, const Options& o, int code = kOk) {
  std::cout << (o.json ? r.as_json() : r.text());
  return code;
}

json span_dims(const DegreeComplex& dc) {
  json faces = json::object();
  for (const auto& row : dc.spans)
    for (const auto& s : row) faces[s.face.name()] = s.span.dim();
  return faces;
}

int run_t1(const Options& o) {
  Cone c = load_cone(o.cone);
  MVector R = parse_degree(c, o.deg);
  auto h = span_complex_cohomology(c, R);
  Report r;
  r.set("degree", R.str()).set("spans", span_dims(h.complex));
  r.set("t0", h.t[0]).set("t1", h.t[1]);
  json reps = json::array();
  for (const auto& v : h.representatives[1]) reps.push_back(to_string(v));
  r.set("basis", reps);
  return emit(r, o);
}

int run_t2(const Options& o) {
  Cone c = load_cone(o.cone);
  MVector R = parse_degree(c, o.deg);
  Report r;
  r.set("degree", R.str());
  auto m = c.rstar ? rstar_multiple(c, R) : std::nullopt;
  if (m && *m >= 2 && c.over_polygon) {
    auto md = mrstar_model(c, *m);
    r.set("model", "mrstar").set("t2", md.t2_dim());
    return emit(r, o);
  }
  if (t2_vanishing_by_support(c, R)) r.set("support", "at most two rays pair positively");
  auto h = span_complex_cohomology(c, R);
  r.set("model", "span complex").set("spans", span_dims(h.complex)).set("t2", h.t[2]);
  return emit(r, o);
}

int run_cup(const Options& o) {
  Cone c = load_cone(o.cone);
  auto v = v_space(c);
  QVec t = parse_rational_list(o.t), s = parse_rational_list(o.s);
  if (t.size() != static_cast<std::size_t>(c.size()) || s.size() != t.size())
    throw InputError("t and s need one entry per edge");
  auto md = mrstar_model(c, 2);
  auto cls = cup_closed_form(c, md, v, t, s);
  Report r;
  r.set("t", to_string(t)).set("s", to_string(s));
  r.set("residue", to_string(cls.residue.residue)).set("class", cls.is_zero() ? "zero" : "nonzero");
  if (cls.preimage) r.set("preimage", to_string(*cls.preimage));
  if (!o.pipeline) return emit(r, o);
  auto pc = pipeline_cup(c, md, v, t, s, o.height);
  r.set("pipeline residue", to_string(pc.cls.residue.residue));
  bool agree = pc.cls == cls;
  r.set("pipeline agrees", agree ? "yes" : "no");
  if (o.trace) {
    json faces = json::object();
    for (const auto& f : pc.trace.delta_g) faces[f.face.name()] = to_string(f.values);
    r.set("delta G", faces).set("equations", pc.trace.equations);
  }
  return emit(r, o, agree ? kOk : kViolation);
}

int run_versal(const Options& o) {
  Cone c = load_cone(o.cone);
  auto v = v_space(c);
  json forms = json::array();
  for (const auto& q : versal_quadratics(c, v)) forms.push_back(q.str());
  Report r;
  r.set("dim V", v.V.dim()).set("quadrics", forms);
  return emit(r, o);
}

SpecialDegree parse_special(const Cone& c, const std::string& text) {
  auto v = parse_int_list(text);
  if (v.size() != 3) throw InputError("special degree needs j,p,q");
  if (v[0] < 1 || v[0] > c.size()) throw InputError("edge index out of range");
  return SpecialDegree{static_cast<int>(v[0] - 1), v[1], v[2]};
}

int run_cup_special(const Options& o) {
  Cone c = load_cone(o.cone);
  SpecialDegree d1 = parse_special(c, o.deg1), d2 = parse_special(c, o.deg2);
  auto res = special_degree_cup(c, d1, d2, o.height);
  Report r;
  r.set("R1", res.R1.str()).set("R2", res.R2.str()).set("verdict", to_string(res.verdict));
  if (res.cls) {
    r.set("t1(R1)", res.t1_first).set("t1(R2)", res.t1_second).set("t2(R1+R2)", res.t2_sum);
    r.set("residue", to_string(res.cls->residue.residue));
  }
  if (o.trace && res.trace) {
    json faces = json::object();
    for (const auto& f : res.trace->delta_g) faces[f.face.name()] = to_string(f.values);
    r.set("delta G", faces).set("equations", res.trace->equations);
  }
  return emit(r, o);
}

void report_verify(Report& r, const std::string& key, const VerifyReport& v) {
  json e = json::object();
  e["checked"] = v.checked;
  e["uncertified"] = v.uncertified;
  e["violations"] = v.violations;
  if (!v.examples.empty()) e["examples"] = v.examples;
  r.set(key, e);
}

int run_oracle(const Options& o) {
  Cone c = load_cone(o.cone);
  RationalSampler rs(o.seed);
  Report r;
  r.set("identity", o.identity).set("height", o.height).set("samples", o.samples);
  VerifyReport total;
  if (o.identity == "dd-zero") {
    Window w = make_window(c, o.height);
    for (int i = 0; i < o.samples; ++i)
      for (int n = 1; n <= 2; ++n) {
        auto table = random_table(w, n, rs);
        total.merge(verify_pointwise(differential(differential(table.cochain())), zero_cochain(n + 2), w));
      }
  } else if (o.identity == "sle-C" || o.identity == "hj") {
    auto v = v_space(c);
    for (int i = 0; i < o.samples; ++i) {
      Pipeline p(c, seed_from_t(c, v, rs.in(v.V)), seed_from_t(c, v, rs.in(v.V)), o.height);
      auto ids = verify_pipeline_identities(p);
      total.merge(o.identity == "sle-C" ? ids.dC : ids.dh);
    }
  } else if (o.identity == "bracket-cases") {
    if (c.rank != 2) throw InputError("bracket-cases needs a rank 2 cone");
    Window w = make_window(c, o.height);
    MVector S = parse_degree(c, o.deg);
    auto h = span_complex_cohomology(c, S);
    for (int i = 0; i < o.samples; ++i) {
      MVector R = MVector{rs.integer(-2, 2), rs.integer(-2, 2)};
      SkewBiadditive xi{rs.next(), R, ShiftConvention::Truncated, &c};
      auto mu = seed_from_cocycle(h.complex, rs.in(kernel_at(h.complex, 1)));
      auto rep = case_identity_check(BracketRepresentative(c, xi, mu), w);
      VerifyReport v;
      for (int k = 1; k <= 4; ++k) v.checked += rep.triples[k];
      v.violations = rep.total_violations();
      v.examples = rep.examples;
      total.merge(v);
    }
  } else {
    throw InputError("unknown identity '" + o.identity + "'");
  }
  report_verify(r, "result", total);
  return emit(r, o, total.ok() ? kOk : kViolation);
}

int run_gerstenhaber(const Options& o) {
  auto cert = verify_surface_zero(o.an, o.height);
  Report r;
  r.set("n", cert.n).set("height", cert.height);
  json entries = json::array();
  for (const auto& e : cert.entries) {
    json j = json::object();
    j["k"] = e.k;
    j["R"] = e.R.str();
    j["S"] = e.S.str();
    j["skew certified"] = e.skew_certified;
    j["case violations"] = e.cases.total_violations();
    j["cocycle checked"] = e.cocycle_checked;
    j["cocycle violations"] = e.cocycle_violations;
    j["support checked"] = e.support_checked;
    j["support violations"] = e.support_violations;
    entries.push_back(j);
  }
  r.set("degrees", entries).set("skipped", cert.skipped);
  r.set("zero map", cert.ok() ? "certified" : "not certified");
  return emit(r, o, cert.ok() ? kOk : kViolation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of affine toric varieties: T1, T2, cup and Gerstenhaber products"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool cone = true) {
    if (cone) sub->add_option("--cone", o.cone, "cone file (JSON) or builtin name")->capture_default_str();
    sub->add_flag("--json", o.json, "structured report");
  };
  auto* t1 = app.add_subcommand("t1", "dimension of T1 in degree -R");
  common(t1);
  t1->add_option("--deg", o.deg, "degree: Rstar, mRstar or coordinates")->capture_default_str();
  auto* t2 = app.add_subcommand("t2", "dimension of T2 in degree -R");
  common(t2);
  t2->add_option("--deg", o.deg, "degree: Rstar, mRstar or coordinates")->capture_default_str();
  auto* cup = app.add_subcommand("cup", "cup product T1(-R*) x T1(-R*) -> T2(-2R*)");
  common(cup);
  cup->add_option("--t", o.t, "comma separated rationals")->required();
  cup->add_option("--s", o.s, "comma separated rationals")->required();
  cup->add_flag("--pipeline", o.pipeline, "also run the window pipeline and compare");
  cup->add_flag("--trace", o.trace, "include the pipeline trace");
  cup->add_option("--height", o.height, "window height")->capture_default_str()->check(CLI::PositiveNumber);
  auto* versal = app.add_subcommand("versal", "quadratic equations of the versal base");
  common(versal);
  auto* special = app.add_subcommand("cup-special", "cup product of two special degrees j,p,q");
  common(special);
  special->add_option("--deg1", o.deg1, "j,p,q (edge index from 1)")->required();
  special->add_option("--deg2", o.deg2, "k,p,q")->required();
  special->add_option("--height", o.height, "window height")->capture_default_str()->check(CLI::PositiveNumber);
  special->add_flag("--trace", o.trace, "include the pipeline trace");
  auto* oracle = app.add_subcommand("oracle-verify", "pointwise identity checks on a window");
  common(oracle);
  oracle->add_option("--identity", o.identity, "dd-zero | sle-C | hj | bracket-cases")
      ->check(CLI::IsMember({"dd-zero", "sle-C", "hj", "bracket-cases"}))
      ->capture_default_str();
  oracle->add_option("--height", o.height, "window height")->capture_default_str()->check(CLI::PositiveNumber);
  oracle->add_option("--samples", o.samples, "random instances")->capture_default_str();
  oracle->add_option("--seed", o.seed, "random seed")->capture_default_str();
  oracle->add_option("--deg", o.deg, "degree S for bracket-cases")->capture_default_str();
  auto* gers = app.add_subcommand("gerstenhaber", "Gerstenhaber product certificate for A_n");
  common(gers, false);
  gers->add_option("--an", o.an, "n")->capture_default_str()->check(CLI::PositiveNumber);
  gers->add_option("--height", o.height, "window height")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    if (*t1) return run_t1(o);
    if (*t2) return run_t2(o);
    if (*cup) return run_cup(o);
    if (*versal) return run_versal(o);
    if (*special) return run_cup_special(o);
    if (*oracle) return run_oracle(o);
    if (*gers) return run_gerstenhaber(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const UncertifiedError& e) {
    std::cerr << "uncertified: " << e.what() << "\n";
    return kUncertified;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kViolation;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kInput;
}
