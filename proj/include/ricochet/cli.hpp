#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ricochet/degree.hpp"
#include "ricochet/document.hpp"
#include "ricochet/svg.hpp"

namespace ricochet::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDegenerate = 3;
inline constexpr int kViolation = 4;

inline constexpr const char* kUsageText =
    "usage: ricochet <command> [args]\n"
    "\n"
    "commands:\n"
    "  construct-rico A C D B [--json OUT]  build the ricochet configuration; points are fractions or inf\n"
    "  pascals IN.json                      the 60 Pascal lines with coincidence classes\n"
    "  membership IN.json                   decide membership by invariants and by alignment search\n"
    "  invariants IN.json                   I2, I4, I6, I10, U6, U10 of the sextic\n"
    "  degree z1 z2 z3 z4                   count the aligned sextuples through four points\n"
    "  shuffle [--t VALUE | --symbolic]     the shuffle group; VALUE is a fraction or sqrt(r)\n"
    "  plot IN.json OUT.svg [--auto-chart]  draw the sextuple and its Pascal or ricochet lines\n"
    "\n"
    "exit status: 0 ok, 2 malformed input, 3 degenerate geometry, 4 theorem violation\n";

inline int exit_code(Errc code) {
  switch (code) {
    case Errc::malformed_scalar:
    case Errc::malformed_document:
      return kUsage;
    case Errc::theorem_violation:
    case Errc::derivation_failure:
      return kViolation;
    default:
      return kDegenerate;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A fraction, or "inf" for the point at infinity.
inline ConicPoint<Rational> parse_point(const std::string& token) {
  if (token == "inf") return ConicPoint<Rational>::infinity();
  return ConicPoint<Rational>::at(Rational::parse(token));
}

/// A fraction, or sqrt(r) for a fraction r.
inline QuadExt parse_quad(const std::string& token) {
  if (token.rfind("sqrt(", 0) == 0 && token.size() > 6 && token.back() == ')')
    return QuadExt::sqrt(Rational::parse(token.substr(5, token.size() - 6)));
  return QuadExt(Rational::parse(token));
}

template <Field K>
std::string point_string(const ConicPoint<K>& p) {
  return to_string(p.normalized());
}

/// Coefficients scaled so the first nonzero one is 1.
template <Field K>
Json plane_json(const PlanePoint<K>& p) {
  K lead(Rational(1));
  for (int k = 0; k < 3; ++k)
    if (!p[k].is_zero()) {
      lead = p[k];
      break;
    }
  Json out = Json::array();
  for (int k = 0; k < 3; ++k) out.push_back(to_string(p[k] / lead));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write " + path);
  o << text;
}

inline void expect_args(const std::vector<std::string>& args, std::size_t n, const char* shape) {
  if (args.size() != n) throw UsageError(std::string("expected: ") + shape);
}

inline int cmd_construct(std::vector<std::string> args, std::ostream& out) {
  std::string json_path;
  for (std::size_t k = 0; k < args.size(); ++k)
    if (args[k] == "--json") {
      if (k + 1 >= args.size()) throw UsageError("--json needs a path");
      json_path = args[k + 1];
      args.erase(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k) + 2);
      break;
    }
  expect_args(args, 4, "construct-rico A C D B [--json OUT]");
  std::array<ConicPoint<Rational>, 4> in;
  for (std::size_t k = 0; k < 4; ++k) in[k] = parse_point(args[k]);
  const RicoConfig<Rational> cfg = build_ricochet(in[0], in[1], in[2], in[3]);
  const RicochetReport<Rational> report = verify_ricochet_theorem(cfg);

  Json j;
  Json pts;
  for (int k = 0; k < 6; ++k) pts[letter_name(k)] = point_string(cfg[k]);
  j["points"] = pts;
  j["Z"] = point_string(cfg.z);
  j["U"] = plane_json(cfg.u);
  j["V"] = plane_json(cfg.v);
  j["W"] = plane_json(cfg.w);
  j["pline"] = plane_json(cfg.pline.pole());
  j["t"] = cfg.t.to_string();
  j["pascal"] = plane_json(report.common.pole());
  j["theorem_holds"] = true;
  out << j.dump(2) << "\n";

  if (!json_path.empty()) {
    std::vector<ConicPoint<QuadExt>> lifted;
    for (const auto& p : cfg.points) lifted.push_back(lift<Rational, QuadExt>(p.normalized()));
    write_file(json_path, emit_document(make_document(lifted)));
  }
  return kOk;
}

inline int cmd_pascals(const std::vector<std::string>& args, std::ostream& out) {
  expect_args(args, 1, "pascals IN.json");
  const SextupleDocument doc = parse_document(read_file(args[0]));
  const PascalCensus<QuadExt> census = all_pascals(std::span<const ConicPoint<QuadExt>>(doc.points));
  Json classes = Json::array();
  for (const auto& e : census.entries)
    classes.push_back({{"array", pattern_name(e.pattern)}, {"pole", plane_json(e.pascal.line.pole())}, {"group", e.group}});
  Json coincident = Json::array();
  for (const auto& g : census.groups) {
    if (g.size() < 2) continue;
    Json names = Json::array();
    for (int idx : g) names.push_back(pattern_name(census.entries[static_cast<std::size_t>(idx)].pattern));
    coincident.push_back(names);
  }
  Json j;
  j["classes"] = classes;
  j["distinct_lines"] = census.groups.size();
  j["coincidences"] = coincident;
  out << j.dump(2) << "\n";
  return kOk;
}

template <Ring R>
Json invariants_json(const SexticInvariants<R>& inv) {
  return {{"I2", to_string(inv.i2)}, {"I4", to_string(inv.i4)}, {"I6", to_string(inv.i6)}, {"I10", to_string(inv.i10)}};
}

inline int cmd_membership(const std::vector<std::string>& args, std::ostream& out) {
  expect_args(args, 1, "membership IN.json");
  const SextupleDocument doc = parse_document(read_file(args[0]));
  const MembershipVerdict<QuadExt> v = membership(std::span<const ConicPoint<QuadExt>>(doc.points));
  Json aligns = Json::array();
  for (const auto& a : v.alignments) {
    Json labels;
    for (int k = 0; k < 6; ++k) labels[letter_name(k)] = a.indices[static_cast<std::size_t>(k)];
    aligns.push_back({{"labels", labels},
                      {"t", to_string(a.t)},
                      {"witness", {to_string(a.witness.a()), to_string(a.witness.b()), to_string(a.witness.c()), to_string(a.witness.d())}}});
  }
  Json j;
  j["is_rico"] = v.vanishes;
  j["agreement"] = v.agreement;
  j["U6"] = to_string(v.u6);
  j["U10"] = to_string(v.u10);
  j["invariants"] = invariants_json(v.invariants);
  j["alignment_count"] = v.alignments.size();
  j["alignments"] = aligns;
  out << j.dump(2) << "\n";
  return v.agreement ? kOk : kViolation;
}

inline int cmd_invariants(const std::vector<std::string>& args, std::ostream& out) {
  expect_args(args, 1, "invariants IN.json");
  const SextupleDocument doc = parse_document(read_file(args[0]));
  const BinaryForm<QuadExt> phi = form_from_roots(std::span<const ConicPoint<QuadExt>>(doc.points));
  const SexticInvariants<QuadExt> inv = sextic_invariants(phi);
  using S = SexticInvariants<QuadExt>;
  Json j = invariants_json(inv);
  j["U6"] = to_string(u6_value(inv));
  j["U10"] = to_string(u10_value(inv));
  j["sextic"] = to_string(phi);
  j["recipes"] = {{"I2", S::recipe_i2}, {"I4", S::recipe_i4}, {"I6", S::recipe_i6}, {"I10", S::recipe_i10}};
  j["relations"] = {{"U6", relation_to_string(u6_coefficients(), 6)}, {"U10", relation_to_string(u10_coefficients(), 10)}};
  out << j.dump(2) << "\n";
  return kOk;
}

inline int cmd_degree(const std::vector<std::string>& args, std::ostream& out) {
  expect_args(args, 4, "degree z1 z2 z3 z4");
  std::vector<ConicPoint<Rational>> z;
  for (const auto& a : args) z.push_back(parse_point(a));
  const ExperimentReport r = run_experiment(z);
  Json configs = Json::array();
  for (const auto& c : r.configurations) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(point_string(p));
    configs.push_back({{"d", c.d.get_si()}, {"points", pts}, {"type", c.type}, {"hits", c.assignments.size()}});
  }
  Json j;
  j["quadruple"] = args;
  j["tally"] = {{"type2", r.tally[0]}, {"type3", r.tally[1]}, {"type4", r.tally[2]}};
  j["extensions"] = {{"type2", r.extension_count[0]}, {"type3", r.extension_count[1]}, {"type4", r.extension_count[2]}};
  j["generic"] = r.generic();
  if (r.generic()) j["distinct_configurations"] = r.count();
  j["from_type2"] = r.from_type2;
  j["from_type3"] = r.from_type3;
  j["orbits_of_eight"] = r.orbits_of_eight;
  j["violations"] = r.violations;
  j["configurations"] = configs;
  out << j.dump(2) << "\n";
  return r.generic() ? kOk : kDegenerate;
}

template <Field K>
Json shuffle_json(const K& t, const std::string& label) {
  const ShuffleGroup g = shuffle_group(t);
  Json elems = Json::array();
  for (const auto& e : g.elements) elems.push_back(e.to_string());
  return {{"t", label}, {"order", g.order()}, {"generated_by_uv", g.generated_by_uv}, {"relations", g.relations},
          {"closed", g.closed}, {"elements", elems}};
}

inline int cmd_shuffle(const std::vector<std::string>& args, std::ostream& out) {
  Json j;
  if (args.empty() || (args.size() == 1 && args[0] == "--symbolic")) {
    j = shuffle_json(RatFunc::t(), "t");
  } else if (args.size() == 2 && args[0] == "--t") {
    const QuadExt t = parse_quad(args[1]);
    j = t.is_rational() ? shuffle_json(t.a(), t.to_string()) : shuffle_json(t, t.to_string());
  } else {
    throw UsageError("expected: shuffle [--t VALUE | --symbolic]");
  }
  out << j.dump(2) << "\n";
  return j["closed"].get<bool>() ? kOk : kViolation;
}

/// Scene of six points: the ricochet construction when the points admit an
/// alignment, otherwise the Pascal line of the array [[1, 2, 3], [6, 5, 4]].
inline SvgScene build_scene(std::span<const ConicPoint<QuadExt>> pts) {
  using P = ConicPoint<QuadExt>;
  SvgScene scene;
  const auto aligns = alignment_search(pts);
  Sextuple<QuadExt> h;
  for (std::size_t k = 0; k < 6; ++k) h[k] = pts[aligns.empty() ? k : static_cast<std::size_t>(aligns.front().indices[k])];
  for (int k = 0; k < 6; ++k) scene.markers.push_back({letter_name(k), veronese(h[static_cast<std::size_t>(k)])});
  auto chord_seg = [&](const P& a, const P& b) { scene.segments.push_back({veronese(a), veronese(b)}); };
  for (auto [a, b] : std::array<std::pair<int, int>, 6>{{{A, E}, {B, F}, {B, D}, {C, E}, {A, D}, {C, F}}})
    chord_seg(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]);
  if (!aligns.empty()) {
    const RicoConfig<QuadExt> cfg = build_ricochet(h[A], h[C], h[D], h[B]);
    scene.markers.push_back({"V", cfg.v});
    scene.markers.push_back({"W", cfg.w});
    scene.markers.push_back({"U", cfg.u});
    scene.markers.push_back({"Z", veronese(cfg.z)});
    chord_seg(cfg[B], cfg.z);
    chord_seg(cfg.z, cfg[E]);
    scene.lines.push_back({"p-line", cfg.pline});
    scene.caption = "ricochet configuration, t = " + to_string(cfg.t);
  } else {
    const PascalLine<QuadExt> pl = pascal(SexArray<QuadExt>({h[A], h[B], h[C]}, {h[F], h[E], h[D]}));
    for (std::size_t k = 0; k < 3; ++k) scene.markers.push_back({"P" + std::to_string(k + 1), pl.crosshairs[k]});
    scene.lines.push_back({"pascal", pl.line});
    scene.caption = "Pascal line of [[A, B, C], [F, E, D]]";
  }
  return scene;
}

/// Fixed re-normalizations tried by --auto-chart, identity first.
inline std::vector<Mobius<QuadExt>> chart_candidates() {
  std::vector<Mobius<QuadExt>> out{Mobius<QuadExt>::identity()};
  for (long k = 1; k <= 6; ++k) {
    out.emplace_back(QuadExt(1), QuadExt(k), QuadExt(0), QuadExt(1));   // s + k
    out.emplace_back(QuadExt(k + 1), QuadExt(0), QuadExt(0), QuadExt(1));  // (k + 1) s
    out.emplace_back(QuadExt(1), QuadExt(k), QuadExt(-k), QuadExt(1));  // (s + k)/(1 - k s)
    out.emplace_back(QuadExt(1), QuadExt(-k), QuadExt(0), QuadExt(1));  // s - k
    out.emplace_back(QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(k + 1));  // s/(k + 1)
  }
  return out;
}

inline int cmd_plot(std::vector<std::string> args, std::ostream& out) {
  bool auto_chart = false;
  if (auto it = std::find(args.begin(), args.end(), "--auto-chart"); it != args.end()) {
    auto_chart = true;
    args.erase(it);
  }
  expect_args(args, 2, "plot IN.json OUT.svg [--auto-chart]");
  const SextupleDocument doc = parse_document(read_file(args[0]));
  // with --auto-chart every candidate is tried and the best marker spread wins
  std::optional<SvgScene> best;
  double best_spread = 0;
  std::string applied;
  for (const auto& m : auto_chart ? chart_candidates() : std::vector<Mobius<QuadExt>>{Mobius<QuadExt>::identity()}) {
    std::vector<ConicPoint<QuadExt>> moved;
    for (const auto& p : doc.points) moved.push_back(m(p));
    try {
      SvgScene scene = build_scene(moved);
      const double spread = marker_spread(scene);
      for (const auto& l : scene.lines) chart_line(l.line);
      if (best && spread <= best_spread) continue;
      best = std::move(scene);
      best_spread = spread;
      applied = to_string(m.a()) + "," + to_string(m.b()) + "," + to_string(m.c()) + "," + to_string(m.d());
    } catch (const Error& e) {
      if (e.code() != Errc::rendering_chart || !auto_chart) throw;
    }
  }
  if (!best) throw Error(Errc::rendering_chart, "no candidate re-normalization gives a drawable chart");
  const std::string svg = render_svg(*best);
  write_file(args[1], svg);
  out << Json({{"svg", args[1]}, {"mobius", applied}}).dump(2) << "\n";
  return kOk;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsageText;
    return kUsage;
  }
  const std::string& cmd = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsageText;
      return kOk;
    }
    if (cmd == "construct-rico") return cmd_construct(rest, out);
    if (cmd == "pascals") return cmd_pascals(rest, out);
    if (cmd == "membership") return cmd_membership(rest, out);
    if (cmd == "invariants") return cmd_invariants(rest, out);
    if (cmd == "degree") return cmd_degree(rest, out);
    if (cmd == "shuffle") return cmd_shuffle(rest, out);
    if (cmd == "plot") return cmd_plot(rest, out);
    err << "unknown command: " << cmd << "\n" << kUsageText;
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace ricochet::cli
