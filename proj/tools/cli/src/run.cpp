#include <kfin/cli/run.hpp>

#include <kfin/cli/parse.hpp>
#include <kfin/curve_algebra.hpp>
#include <kfin/multigraded.hpp>
#include <kfin/semigroup.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>

namespace kfin::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::size_t kmax = 10;
  std::string point;
  std::string tau;
  std::size_t k = 1;
  std::optional<std::size_t> ray;
  bool json = false;
  std::vector<std::string> extra_rays;
};

struct Report {
  json doc = json::object();
  std::string text;
  int exit_code = kExitOk;

  void line(const std::string& s) { text += s + "\n"; }
};

json caveats_json(const std::vector<Caveat>& caveats) {
  json arr = json::array();
  for (const auto& c : caveats) arr.push_back({{"code", c.code}, {"message", c.message}});
  return arr;
}

json point_json(const LatticePoint& p) { return json::array({p.k, p.b}); }

MultigradedAlgebra algebra_of(const InputDocument& doc) {
  if (const auto* m = std::get_if<MultigradedDocument>(&doc)) return MultigradedAlgebra(m->rank, m->generators);
  const auto& c = std::get<CurveDocument>(doc);
  std::vector<Generator> gens;
  for (const auto& f : c.basis) gens.push_back({f.dehomogenize(), Weight{1}});
  return MultigradedAlgebra(1, std::move(gens));
}

// The curve a curve-level command works on: the document itself, or the
// Veronese along the --ray-th extreme ray of a multigraded document.
CurveAlgebra curve_of(const InputDocument& doc, const Options& opt, Report& r) {
  if (const auto* c = std::get_if<CurveDocument>(&doc)) return new_curve(c->ambient_degree, c->basis);
  if (!opt.ray) throw PreconditionError("multigraded input needs --ray <index> for this command");
  const MultigradedAlgebra algebra = algebra_of(doc);
  const auto rays = weight_cone_rays(algebra).rays;
  if (*opt.ray >= rays.size()) {
    throw PreconditionError("--ray " + std::to_string(*opt.ray) + " out of range: the weight cone has " +
                            std::to_string(rays.size()) + " extreme rays");
  }
  RayCurveData data = ray_curve(algebra, rays[*opt.ray], std::max<std::size_t>(opt.kmax, 1));
  r.doc["ray"] = data.ray;
  r.doc["lambda"] = data.lambda;
  r.line("ray " + to_string(data.ray) + ", lambda=" + std::to_string(data.lambda) + ", D=" +
         std::to_string(data.big_degree));
  return std::move(data.curve);
}

PointP1 point_of(const Options& opt) {
  if (!opt.point.empty()) return parse_point(opt.point);
  if (!opt.tau.empty()) return point_for(parse_tau(opt.tau));
  throw PreconditionError("a point is required: pass --point a,b or --t <rational|inf>");
}

std::string verdict_text(const KfVerdict& v) {
  if (const auto* f = std::get_if<KfFinite>(&v)) return "Finite, witness k=" + std::to_string(f->witness_k);
  if (const auto* u = std::get_if<KfUnknown>(&v)) {
    return "Unknown, no witness up to k=" + std::to_string(u->kmax_searched);
  }
  return "Unsupported: " + std::get<KfUnsupported>(v).reason;
}

void put_verdict(json& j, const KfVerdict& v) {
  j["verdict"] = verdict_name(v);
  if (const auto* f = std::get_if<KfFinite>(&v)) j["witness_k"] = f->witness_k;
  if (const auto* u = std::get_if<KfUnknown>(&v)) j["kmax_searched"] = u->kmax_searched;
  if (const auto* s = std::get_if<KfUnsupported>(&v)) j["reason"] = s->reason;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string set_text(const std::vector<std::int64_t>& values) {
  std::vector<std::string> parts;
  for (auto v : values) parts.push_back(std::to_string(v));
  return "{" + join(parts, ", ") + "}";
}

void cmd_hilbert(const InputDocument& doc, const Options& opt, Report& r) {
  const CurveAlgebra curve = curve_of(doc, opt, r);
  const auto dims = hilbert(curve, opt.kmax);
  r.doc["verdict"] = "ok";
  r.doc["hilbert"] = dims;
  std::vector<std::string> parts;
  for (auto d : dims) parts.push_back(std::to_string(d));
  r.line("dim L^k, k=0.." + std::to_string(opt.kmax) + ": " + join(parts, " "));
}

void cmd_invariants(const InputDocument& doc, const Options& opt, Report& r) {
  const CurveAlgebra curve = curve_of(doc, opt, r);
  const GenusReport g = genus_classification(curve, opt.kmax);
  r.doc["verdict"] = to_string(g.classification);
  r.doc["degree"] = g.invariants.degree;
  r.doc["genus"] = g.invariants.genus;
  r.doc["stabilization_k"] = g.invariants.stabilization_k;
  r.line("degree " + std::to_string(g.invariants.degree) + ", genus " + std::to_string(g.invariants.genus) +
         ", Hilbert polynomial from k=" + std::to_string(g.invariants.stabilization_k));
  r.line(to_string(g.classification));
}

void grid(const SemigroupSample& sample, const std::vector<LatticePoint>& gens, Report& r) {
  std::int64_t top = 0;
  for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
    if (!sample.slice(k).empty()) top = std::max(top, sample.slice(k).back());
  }
  const std::set<LatticePoint> gen_set(gens.begin(), gens.end());
  const int width = static_cast<int>(std::to_string(std::max(top, sample.kmax())).size());
  auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  for (std::int64_t b = top; b >= 0; --b) {
    std::string row = pad(std::to_string(b)) + " |";
    for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
      char c = '.';
      if (gen_set.count({k, b})) c = 'G';
      else if (sample.contains(k, b)) c = '*';
      row += " " + pad(std::string(1, c));
    }
    r.line(row);
  }
  std::string axis = pad("") + " +";
  std::string labels = pad("") + "  ";
  for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
    axis += std::string(width + 1, '-');
    labels += " " + pad(std::to_string(k));
  }
  r.line(axis);
  r.line(labels + "  k");
}

void cmd_semigroup(const InputDocument& doc, const Options& opt, Report& r) {
  const CurveAlgebra curve = curve_of(doc, opt, r);
  const PointP1 q = point_of(opt);
  const CommonFactor reduced = reduce_common_factor(curve);
  if (reduced.factor.degree() > 0) {
    r.line("removed base locus " + to_string(reduced.factor) + "; values below are for the reduced system");
  }
  const CurveInvariants inv =
      invariants(reduced.reduced, stable_sample_depth(reduced.reduced, opt.kmax));
  const SemigroupSample sample = value_semigroup(reduced.reduced, q, opt.kmax);
  const auto gens = minimal_generators(sample);
  const FgVerdict fg = fg_verdict(sample, inv.degree);
  const Interval body = no_body_estimate(sample);

  r.doc["point"] = to_string(q);
  r.doc["degree"] = inv.degree;
  r.doc["base_locus"] = to_string(reduced.factor);
  json slices = json::array();
  for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
    slices.push_back({{"k", k}, {"values", sample.slice(k)}});
    r.line("S_" + std::to_string(k) + " = " + set_text(sample.slice(k)));
  }
  r.doc["slices"] = slices;
  json gj = json::array();
  std::vector<std::string> gtext;
  for (const auto& g : gens) {
    gj.push_back(point_json(g));
    gtext.push_back(to_string(g));
  }
  r.doc["generators"] = gj;
  r.line("minimal generators up to k=" + std::to_string(sample.kmax()) + ": " + join(gtext, " "));
  r.doc["no_body"] = {{"lo", body.lo.get_str()}, {"hi", body.hi.get_str()}};
  r.line("Newton-Okounkov segment estimate [" + body.lo.get_str() + ", " + body.hi.get_str() + "]");
  grid(sample, gens, r);
  if (const auto* f = std::get_if<FgFinite>(&fg)) {
    r.doc["verdict"] = "Finite";
    r.doc["witnesses"] = {{"bottom", point_json(f->bottom_witness)}, {"top", point_json(f->top_witness)}};
    r.line("Finite, witnesses " + to_string(f->bottom_witness) + " " + to_string(f->top_witness));
  } else {
    const auto& u = std::get<FgUnknown>(fg);
    json missing = json::array();
    std::vector<std::string> mtext;
    for (const auto& m : u.missing_rays) {
      missing.push_back(point_json(m));
      mtext.push_back(to_string(m));
    }
    r.doc["verdict"] = "Unknown";
    r.doc["missing_rays"] = missing;
    r.line("Unknown, no witness up to k=" + std::to_string(u.kmax) + " for ray " + join(mtext, " "));
    r.exit_code = kExitUnknown;
  }
}

void cmd_kf_test(const InputDocument& doc, const Options& opt, Report& r) {
  const CurveAlgebra curve = curve_of(doc, opt, r);
  const PointP1 q = point_of(opt);
  const KfVerdict v = kf_test(curve, q, opt.kmax);
  r.doc["point"] = to_string(q);
  put_verdict(r.doc, v);
  r.line(verdict_text(v));
  if (is_unknown(v)) r.exit_code = kExitUnknown;
}

void cmd_kf_locus(const InputDocument& doc, const Options& opt, Report& r) {
  const CurveAlgebra curve = curve_of(doc, opt, r);
  const KfLocus locus = kf_locus(curve, opt.k);
  r.doc["verdict"] = "ok";
  r.doc["k"] = locus.k;
  r.doc["degree"] = locus.degree;
  r.doc["identically_satisfied"] = locus.identically_satisfied;
  r.doc["locus_form"] = to_string(locus.form, "alpha", "beta");
  json roots = json::array();
  std::vector<std::string> rtext;
  for (const auto& [q, m] : locus.roots.roots) {
    roots.push_back({{"point", to_string(q)}, {"multiplicity", m}});
    rtext.push_back(to_string(q) + " x" + std::to_string(m));
  }
  r.doc["roots"] = roots;
  r.doc["residual_degree"] = locus.roots.residual_degree;
  if (locus.identically_satisfied) {
    r.line("L^" + std::to_string(locus.k) + " is all of Sym^" + std::to_string(locus.form.degree()) +
           ": every point passes");
    return;
  }
  r.line("G(alpha,beta) = " + to_string(locus.form, "alpha", "beta"));
  r.line("rational points: " + (rtext.empty() ? std::string("none") : join(rtext, ", ")));
  r.line("residual degree " + std::to_string(locus.roots.residual_degree));
}

void cmd_rays(const InputDocument& doc, const Options&, Report& r) {
  const ConeZm cone = weight_cone_rays(algebra_of(doc));
  r.doc["verdict"] = "ok";
  r.doc["rays"] = cone.rays;
  for (std::size_t i = 0; i < cone.rays.size(); ++i) r.line(std::to_string(i) + ": " + to_string(cone.rays[i]));
}

void cmd_ray_curve(const InputDocument& doc, const Options& opt, Report& r) {
  const MultigradedAlgebra algebra = algebra_of(doc);
  const auto rays = weight_cone_rays(algebra).rays;
  const std::size_t index = opt.ray.value_or(0);
  if (index >= rays.size()) throw PreconditionError("--ray " + std::to_string(index) + " out of range");
  const RayCurveData data = ray_curve(algebra, rays[index], opt.kmax);
  r.doc["verdict"] = "ok";
  r.doc["ray"] = data.ray;
  r.doc["lambda"] = data.lambda;
  r.doc["big_degree"] = data.big_degree;
  std::vector<std::string> forms;
  for (const auto& f : data.curve.basis_forms()) forms.push_back(to_string(f));
  r.doc["basis"] = forms;
  r.line("ray " + to_string(data.ray) + ", lambda=" + std::to_string(data.lambda) + ", D=" +
         std::to_string(data.big_degree));
  r.line("L = <" + join(forms, ", ") + ">");
}

void cmd_kf(const InputDocument& doc, const Options& opt, Report& r) {
  if (opt.tau.empty()) throw PreconditionError("kf needs --t <rational|inf>");
  const Tau tau = parse_tau(opt.tau);
  std::vector<Weight> extra;
  for (const auto& e : opt.extra_rays) extra.push_back(parse_weight(e));
  const MultigradedKfReport report = multigraded_kf(algebra_of(doc), tau, opt.kmax, extra);
  r.doc["tau"] = to_string(tau);
  json per_ray = json::array();
  for (const auto& entry : report.per_ray) {
    json j = {{"ray", entry.ray}, {"extra", entry.extra}, {"lambda", entry.lambda}};
    put_verdict(j, entry.verdict);
    per_ray.push_back(j);
    r.line("ray " + to_string(entry.ray) + (entry.extra ? " (extra)" : "") + ": " + verdict_text(entry.verdict));
  }
  r.doc["per_ray"] = per_ray;
  put_verdict(r.doc, report.combined);
  r.doc["caveats"] = caveats_json(report.caveats);
  r.line("combined: " + verdict_text(report.combined));
  for (const auto& c : report.caveats) r.line("caveat [" + c.code + "]: " + c.message);
  if (is_unknown(report.combined)) r.exit_code = kExitUnknown;
}

void cmd_hkf(const InputDocument& doc, const Options& opt, Report& r) {
  const HkfReport report = hkf_report(algebra_of(doc), opt.kmax);
  r.doc["verdict"] = to_string(report.verdict);
  json per_ray = json::array();
  for (const auto& g : report.per_ray) {
    per_ray.push_back({{"ray", g.ray}, {"lambda", g.lambda}, {"degree", g.degree}, {"genus", g.genus}});
  }
  r.doc["per_ray"] = per_ray;
  r.doc["caveats"] = caveats_json(report.caveats);
  if (report.offending) {
    const RayGenus& g = report.per_ray[*report.offending];
    r.doc["offending_ray"] = g.ray;
    r.line(to_string(report.verdict) + ": ray " + to_string(g.ray) + " genus " + std::to_string(g.genus));
  } else {
    r.line(to_string(report.verdict));
  }
  for (const auto& g : report.per_ray) {
    r.line("ray " + to_string(g.ray) + ": degree " + std::to_string(g.degree) + ", genus " +
           std::to_string(g.genus));
  }
  for (const auto& c : report.caveats) r.line("caveat [" + c.code + "]: " + c.message);
}

using Handler = void (*)(const InputDocument&, const Options&, Report&);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanskii-finiteness of valuations on curve and almost toric algebras", "kfin"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    bool point, k, ray, extra;
  };
  const Command commands[] = {
      {"hilbert", "dimensions of L^k for k=0..kmax", cmd_hilbert, false, false, true, false},
      {"invariants", "degree, arithmetic genus and genus class", cmd_invariants, false, false, true, false},
      {"semigroup", "value semigroup slices, minimal generators, finite generation", cmd_semigroup, true,
       false, true, false},
      {"kf-test", "search for a Khovanskii-finiteness witness at a point", cmd_kf_test, true, false, true,
       false},
      {"kf-locus", "the form cutting out the points that pass at level k", cmd_kf_locus, false, true, true,
       false},
      {"rays", "extreme rays of the weight cone", cmd_rays, false, false, false, false},
      {"ray-curve", "the curve algebra of a ray Veronese", cmd_ray_curve, false, false, true, false},
      {"kf", "per-ray and combined verdicts at a point of the t-line", cmd_kf, false, false, false, true},
      {"hkf", "homogeneous Khovanskii-finiteness via ray genera", cmd_hkf, false, false, false, false},
  };

  Handler chosen = nullptr;
  std::string chosen_name;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", opt.file, "input document (.kv)")->required();
    sub->add_option("--kmax", opt.kmax, "largest level sampled")->capture_default_str();
    sub->add_flag("--json", opt.json, "emit one JSON object");
    if (c.point) {
      auto* p = sub->add_option("--point", opt.point, "point a,b meaning (a:b)");
      auto* t = sub->add_option("--t", opt.tau, "point (1:t), or inf for (0:1)");
      p->excludes(t);
    }
    if (std::string(c.name) == "kf") sub->add_option("--t", opt.tau, "rational value of t, or inf");
    if (c.k) sub->add_option("--k", opt.k, "level")->capture_default_str();
    if (c.ray) sub->add_option("--ray", opt.ray, "index of an extreme ray (multigraded input)");
    if (c.extra) sub->add_option("--extra-ray", opt.extra_rays, "additional ray, e.g. 1,1 (repeatable)");
    sub->callback([&chosen, &chosen_name, &c] {
      chosen = c.handler;
      chosen_name = c.name;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Report report;
  report.doc["command"] = chosen_name;
  report.doc["input"] = opt.file;
  report.doc["caveats"] = json::array();
  try {
    const InputDocument doc = read_document(opt.file);
    chosen(doc, opt, report);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (opt.json) out << report.doc.dump(2) << "\n";
  else out << report.text;
  return report.exit_code;
}

}  // namespace kfin::cli
