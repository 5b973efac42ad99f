#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <random>
#include <set>

#include "unbendable/families.hpp"
#include "unbendable/formats.hpp"
#include "unbendable/report.hpp"

namespace unbendable {

namespace {

struct RunConfig {
  int order = 4;
  std::uint64_t seed = 0;
  int probes = 3;
  std::string format = "text";
  std::size_t max_steps = 0;
};

// Single seeded source of every random choice.
class ProbeSource {
 public:
  explicit ProbeSource(std::uint64_t seed) : rng_(seed) {}
  long next(long lo, long hi) { return lo + long(rng_() % std::uint64_t(hi - lo + 1)); }
  PointQ point(std::size_t n) {
    PointQ p(n);
    for (auto& x : p) x = next(-9, 9);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

std::string join_fields(const std::vector<VectorField>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? " ; " : "") + fs[i].to_string();
  return s;
}

// Random probe points at which every generator is defined.
std::vector<PointQ> valid_probes(const std::vector<VectorField>& gens, std::size_t dim, int count, ProbeSource& src) {
  std::vector<PointQ> out;
  for (int tries = 0; int(out.size()) < count && tries < 50 * count; ++tries) {
    PointQ p = src.point(dim);
    try {
      rank_at(gens, p);
      out.push_back(p);
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

void put_flag(Report& r, const std::string& name, const FlagReport& f) {
  auto& s = r.section(name);
  s.set("mode", to_string(f.mode));
  s.set("growth_vector", format_sizes(f.growth_vector));
  std::vector<std::size_t> probe;
  for (const auto& st : f.steps) probe.push_back(st.probe_rank);
  s.set("probe_ranks", format_sizes(probe));
  s.set("bracket_generating", format_bool(f.bracket_generating));
  s.set("stabilized_at", std::to_string(f.stabilized_at));
  s.set("rank_convention", FlagReport::rank_convention);
}

void put_classification(Report& r, const Rank2Classification& c) {
  auto& s = r.section("classification");
  s.set("kind", to_string(c.kind));
  s.set("growth_vector", format_sizes(c.strong.growth_vector));
  s.set("reason", c.reason);
}

PointQ base_probe(const DistributionSpec& d, ProbeSource& src) {
  if (!d.probe.empty()) return d.probe;
  auto ps = valid_probes(d.generators, d.chart.size(), 1, src);
  if (ps.empty()) throw PreconditionError("no valid probe point found, supply one");
  return ps[0];
}

int cmd_growth(const RunConfig& cfg, const std::string& path, Report& r) {
  auto d = parse_distribution_file(read_text_file(path), path);
  ProbeSource src(cfg.seed);
  PointQ probe = base_probe(d, src);
  auto& in = r.section("input");
  in.set("file", path);
  in.set("chart", std::to_string(d.chart.size()));
  in.set("generators", join_fields(d.generators));
  in.set("probe", format_vector(probe));
  auto strong = derived_flag(d, FlagMode::Strong, cfg.max_steps, probe);
  auto weak = derived_flag(d, FlagMode::Weak, cfg.max_steps, probe);
  put_flag(r, "flag.strong", strong);
  put_flag(r, "flag.weak", weak);
  r.section("flags").set("agree", format_bool(strong.growth_vector == weak.growth_vector));
  auto probes = valid_probes(d.generators, d.chart.size(), cfg.probes, src);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    auto& s = r.section("probe." + std::to_string(i));
    s.set("point", format_vector(probes[i]));
    s.set("growth", format_sizes(growth_vector_at(d, probes[i])));
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& path, Report& r) {
  auto d = parse_distribution_file(read_text_file(path), path);
  ProbeSource src(cfg.seed);
  PointQ probe = base_probe(d, src);
  r.section("input").set("file", path).set("probe", format_vector(probe));
  put_classification(r, classify_rank2(d, probe));
  auto ch = cauchy_characteristic(d, probe);
  r.section("cauchy").set("generic_rank", std::to_string(ch.generic_rank)).set("rank_at_point", std::to_string(ch.rank_at_point));
  r.section("regularity").set("regular", format_bool(regularity_check(d, probe)));
  return kExitOk;
}

int cmd_jet(const RunConfig& cfg, int k, Report& r) {
  auto d = build_jet_distribution(k);
  auto& j = r.section("jet");
  j.set("order", std::to_string(k));
  j.set("dimension", std::to_string(d.chart.size()));
  j.set("generators", join_fields(d.generators));
  auto strong = derived_flag(d, FlagMode::Strong, cfg.max_steps, d.probe);
  auto weak = derived_flag(d, FlagMode::Weak, cfg.max_steps, d.probe);
  put_flag(r, "flag.strong", strong);
  put_flag(r, "flag.weak", weak);
  r.section("flags").set("agree", format_bool(strong.growth_vector == weak.growth_vector));
  put_classification(r, classify_rank2(d, d.probe));
  return kExitOk;
}

int cmd_ode(const RunConfig& cfg, const std::vector<std::string>& args, Report& r) {
  OdeSpec o;
  if (args.size() == 1 && args[0].find('=') == std::string::npos)
    o = parse_ode_file(read_text_file(args[0]), args[0]);
  else
    o = parse_ode_args(args);
  r.section("ode").set("order", std::to_string(o.order)).set("rhs", o.rhs.to_string());
  auto form = check_goursat_ode_form(o);
  auto& g = r.section("goursat_form");
  g.set("admissible", format_bool(form.admissible));
  if (form.admissible)
    for (int i = 0; i < 4; ++i) g.set("a" + std::to_string(i), form.a[std::size_t(i)].to_string());
  else
    g.set("witness", form.witness);
  auto d = ode_to_distribution(o);
  r.section("distribution").set("generators", join_fields(d.generators));
  put_flag(r, "flag.strong", derived_flag(d, FlagMode::Strong, cfg.max_steps, d.probe));
  put_classification(r, classify_rank2(d, d.probe));
  return kExitOk;
}

void put_profile(Report& r, const std::string& name, const FfProfile& p) {
  auto& s = r.section(name);
  s.set("point", format_vector(p.point));
  s.set("tangent_dim", std::to_string(p.tangent_dim));
  if (!p.ranks.empty()) s.set("ranks", format_sizes(p.ranks));
  if (!p.note.empty()) s.set("note", p.note);
}

int cmd_vmrt(const RunConfig& cfg, const std::string& path, const std::string& point, Report& r) {
  auto hf = parse_hypersurface_file(read_text_file(path), path);
  VecQ x;
  if (!point.empty())
    x = parse_rational_list(point);
  else if (hf.point)
    x = *hf.point;
  else
    for (std::size_t i = 0; i < hf.line.p.size(); ++i) x.push_back(hf.line.p[i] + hf.line.q[i]);
  if (x.size() != hf.surface.ring.size()) throw PreconditionError("point has the wrong number of coordinates");
  r.section("input").set("file", path).set("point", format_vector(x));
  auto prof = ff_profile_at_point(hf.surface, hf.line, x, cfg.order);
  auto& eq = r.section("equations");
  for (std::size_t k = 0; k < prof.equations.size(); ++k) eq.set("h" + std::to_string(k + 1), prof.equations[k].to_string());
  auto& af = r.section("affine");
  if (!prof.affine.empty()) {
    std::string vars;
    for (const auto& v : prof.affine.front().ring().names()) vars += (vars.empty() ? "" : " ") + v;
    af.set("variables", vars);
  }
  for (std::size_t k = 0; k < prof.affine.size(); ++k) af.set("g" + std::to_string(k + 1), prof.affine[k].to_string());
  auto& t = r.section("tangent");
  t.set("dimension", std::to_string(prof.tangent_dim));
  if (!prof.germ) {
    t.set("note", prof.note);
    return kExitInconclusive;
  }
  const auto& germ = *prof.germ;
  const auto& zr = prof.affine.front().ring();
  t.set("direction", zr.name(germ.transverse));
  auto& g = r.section("germ");
  g.set("transverse", zr.name(germ.transverse));
  g.set("order", std::to_string(germ.series.order));
  for (int k = 1; k <= germ.series.order; ++k) g.set("c" + std::to_string(k), format_vector(germ.series.coefficient(k)));
  g.set("exact", format_bool(germ.series.exact));
  auto& o = r.section("osculating");
  o.set("ranks", format_sizes(prof.ranks));
  for (int k = 2; k <= germ.series.order; ++k) o.set("ff" + std::to_string(k) + "_nonzero", format_bool(prof.ff_nonzero(k)));
  return kExitOk;
}

std::vector<Rational> line_probes(const RunConfig& cfg) {
  ProbeSource src(cfg.seed);
  std::set<long> seen;
  std::vector<Rational> out;
  while (int(out.size()) < cfg.probes && seen.size() < 19) {
    long v = src.next(-9, 9);
    if (seen.insert(v).second) out.push_back(Rational(v));
  }
  return out;
}

int cmd_line_type(const RunConfig& cfg, const std::string& path, Report& r) {
  auto hf = parse_hypersurface_file(read_text_file(path), path);
  auto probes = line_probes(cfg);
  auto rep = classify_line_family(hf.surface, hf.line, probes, cfg.order);
  r.section("input").set("file", path).set("line", format_vector(hf.line.p) + " " + format_vector(hf.line.q));
  auto& l = r.section("line");
  l.set("contained", format_bool(rep.contains_line));
  if (rep.contains_line) {
    l.set("smooth_along_line", format_bool(rep.smooth_along_line));
    std::string rows;
    for (std::size_t i = 0; i < rep.change.rows(); ++i) rows += (i ? " " : "") + format_vector(rep.change.row(i));
    l.set("coordinate_change", rows);
  }
  if (rep.normal_bundle) {
    auto& nb = r.section("normal_bundle");
    nb.set("splitting", rep.normal_bundle->to_string());
    nb.set("h0_twists", format_sizes(rep.normal_bundle->h0_twists));
    nb.set("unbendable", format_bool(rep.normal_bundle->unbendable()));
  }
  if (rep.ff3) {
    const auto& f = *rep.ff3;
    auto& s = r.section("ff3");
    s.set("locus_kind", to_string(f.kind));
    s.set("locus", f.locus.to_string());
    s.set("rational_zeros", format_vector(f.rational_zeros));
    s.set("infinity_ff3_nonzero", format_bool(f.infinity_ff3_nonzero));
    s.set("infinity_ranks", format_sizes(f.infinity_ranks));
    s.set("exceptional", f.exceptional.to_string());
    s.set("unresolved", f.unresolved.to_string());
    s.set("degree_bound_ok", format_bool(f.degree_bound_ok));
    if (!f.reason.empty()) s.set("reason", f.reason);
  }
  for (std::size_t i = 0; i < rep.profiles.size(); ++i) {
    put_profile(r, "probe." + std::to_string(i), rep.profiles[i]);
    r.section("probe." + std::to_string(i)).set("s", probes[i].to_string());
  }
  auto& v = r.section("verdict");
  v.set("verdict", to_string(rep.verdict));
  v.set("reason", rep.reason);
  if (rep.certificate) v.set("certificate", format_vector(*rep.certificate));
  return rep.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_zelenko(const RunConfig& cfg, const std::string& path, Report& r) {
  auto d = parse_distribution_file(read_text_file(path), path);
  ProbeSource src(cfg.seed);
  PointQ probe = base_probe(d, src);
  auto z = zelenko_null_field(d, probe);
  auto& s = r.section("zelenko");
  std::string chart;
  for (const auto& n : z.chart.names()) chart += (chart.empty() ? "" : " ") + n;
  s.set("chart", chart);
  s.set("sigma_rank", std::to_string(z.sigma_rank));
  s.set("null_field", z.null_field.to_string());
  s.set("theta_vanishes", format_bool(z.theta_vanishes));
  s.set("transverse_to_fiber", format_bool(z.transverse_to_fiber));
  s.set("projects_into_d", format_bool(z.projects_into_d));
  s.set("null_dims_at_probes", format_sizes(z.null_dims_at_probes));
  s.set("passed", format_bool(z.passed()));
  return z.passed() ? kExitOk : kExitInconclusive;
}

int cmd_family(const RunConfig& cfg, const std::string& path, Report& r) {
  auto ff = parse_family_file(read_text_file(path), path);
  auto fc = blowup_family_chart(ff.zeta);
  PointQ probe = ff.probe ? *ff.probe : fc.probe;
  std::string zeta;
  for (const auto& z : ff.zeta) zeta += (zeta.empty() ? "" : ", ") + z.to_string();
  r.section("family").set("zeta", zeta).set("F", fc.F[0].to_string()).set("probe", format_vector(probe));
  std::size_t max_k = cfg.max_steps ? cfg.max_steps : ff.zeta.size() - 1;
  auto flag = family_flag(fc, max_k, probe);
  auto& f = r.section("flag");
  f.set("ranks", format_sizes(flag.growth_vector));
  std::vector<std::size_t> pr;
  for (const auto& s : flag.steps) pr.push_back(s.probe_rank);
  f.set("probe_ranks", format_sizes(pr));
  f.set("bracket_generating", format_bool(flag.bracket_generating));
  auto& c = r.section("checks");
  bool ok = true;
  for (std::size_t k = 1; k <= 3; ++k) {
    bool inv = check_F_invariance(fc, k, probe);
    c.set("F_invariance.k" + std::to_string(k), format_bool(inv));
    ok = ok && inv;
  }
  bool t2 = check_T2_identity(fc, probe);
  c.set("T2_identity", format_bool(t2));
  auto ranks = osculating_flag(zeta_germ(ff.zeta, probe[0], int(max_k))).ranks;
  std::vector<std::size_t> flag_inc, germ_inc;
  for (std::size_t k = 1; k <= max_k; ++k) {
    flag_inc.push_back(flag.steps[k].probe_rank - flag.steps[k - 1].probe_rank);
    germ_inc.push_back(ranks[k - 1] - (k == 1 ? 0 : ranks[k - 2]));
  }
  auto& x = r.section("osculating_cross_check");
  x.set("flag_increments", format_sizes(flag_inc));
  x.set("germ_increments", format_sizes(germ_inc));
  x.set("agree", format_bool(flag_inc == germ_inc));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for distributions, jets, VMRTs and curve families"};
  app.name("unbendable_cli");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--order", cfg.order, "series depth")->check(CLI::Range(2, 64));
  app.add_option("--seed", cfg.seed, "seed for probe points");
  app.add_option("--probes", cfg.probes, "number of random probes")->check(CLI::Range(1, 19));
  app.add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-steps", cfg.max_steps, "flag step limit (0 = dimension + 1)");

  std::string file, point;
  int jet_order = 0;
  std::vector<std::string> ode_args;
  auto* growth = app.add_subcommand("growth", "derived flags of a distribution file");
  growth->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify", "rank-2 classification of a distribution file");
  classify->add_option("file", file)->required();
  auto* jet = app.add_subcommand("jet", "canonical system on k-jets");
  jet->add_option("k", jet_order)->required()->check(CLI::Range(1, 12));
  auto* ode = app.add_subcommand("ode", "ODE file, or order=N and F=... arguments");
  ode->add_option("args", ode_args)->required();
  auto* vmrt = app.add_subcommand("vmrt", "VMRT equations and fundamental forms at a point");
  vmrt->add_option("file", file)->required();
  vmrt->add_option("--point", point, "point on the line, e.g. [1,1,0,0,0,0,0]");
  auto* line_type = app.add_subcommand("line-type", "normal bundle, FF3 locus and verdict for a line");
  line_type->add_option("file", file)->required();
  auto* zelenko = app.add_subcommand("zelenko", "null-field checks for a (2,3,5) distribution");
  zelenko->add_option("file", file)->required();
  auto* family = app.add_subcommand("family", "flags and checks for a blowup family file");
  family->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report report;
  int code = kExitOk;
  try {
    if (growth->parsed()) code = cmd_growth(cfg, file, report);
    else if (classify->parsed()) code = cmd_classify(cfg, file, report);
    else if (jet->parsed()) code = cmd_jet(cfg, jet_order, report);
    else if (ode->parsed()) code = cmd_ode(cfg, ode_args, report);
    else if (vmrt->parsed()) code = cmd_vmrt(cfg, file, point, report);
    else if (line_type->parsed()) code = cmd_line_type(cfg, file, report);
    else if (zelenko->parsed()) code = cmd_zelenko(cfg, file, report);
    else if (family->parsed()) code = cmd_family(cfg, file, report);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << (cfg.format == "structured" ? report.to_structured() : report.to_text());
  return code;
}

}  // namespace unbendable
