#include "superlink/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "superlink/blocks.hpp"
#include "superlink/errors.hpp"
#include "superlink/kl.hpp"
#include "superlink/limits.hpp"
#include "superlink/oracle.hpp"
#include "superlink/root_data.hpp"
#include "superlink/weyl.hpp"
#include "superlink/whittaker.hpp"

namespace superlink::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  std::string type;
  std::string weight;
  std::string mu;
  std::string nu;
  std::string w;
  std::string x;
  std::string zeta = "none";
  std::string box;
  std::string mult_table;
  std::string config;
  std::size_t jobs = 1;
  bool json = false;
  bool length = false;
  bool no_enlarge = false;
};

// Thrown for bad flag combinations found after parsing.
struct UsageError : Error {
  using Error::Error;
};

Limits load_config(const std::string& path) {
  Limits limits;
  if (path.empty()) return limits;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\"");
      const auto b = s.find_last_not_of(" \t\r\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::size_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoull(value, &used);
      if (used != value.size() || parsed == 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": '" + value + "' is not a positive integer");
    }
    if (key == "box_cap") {
      limits.box_cap = parsed;
    } else if (key == "subgroup_cap") {
      limits.subgroup_cap = parsed;
    } else if (key == "kl_group_cap") {
      limits.kl_group_cap = parsed;
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return limits;
}

RootDatum make_datum(const Options& o) {
  const std::string& f = o.family;
  if (f == "gl") return build_root_datum(FamilySpec::gl(o.m, o.n));
  if (f == "osp" || f == "osp2") return build_root_datum(FamilySpec::osp2(o.n));
  if (f == "p") return build_root_datum(FamilySpec::p(o.n));
  if (f == "osp32") return build_root_datum(FamilySpec::osp32());
  if (f == "reductive") {
    if (o.type.empty()) throw UsageError("--family reductive needs --type, e.g. A2 or A1xC2");
    return build_root_datum(FamilySpec::reductive(parse_reductive_type(o.type)));
  }
  throw UsageError("unknown family '" + f + "' (gl, osp, p, osp32, reductive)");
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return value;
}

WhittakerCharacter parse_zeta(const RootDatum& datum, const std::string& text) {
  if (text == "all") return WhittakerCharacter::nonsingular(datum);
  if (text == "none" || text.empty()) return WhittakerCharacter::zero();
  std::vector<std::size_t> support;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || k < 1 || static_cast<std::size_t>(k) > datum.rank()) {
      throw UsageError("--zeta entries are 1-based simple-root indices in 1.." + std::to_string(datum.rank()) +
                       ", got '" + item + "'");
    }
    support.push_back(static_cast<std::size_t>(k - 1));
  }
  return WhittakerCharacter(datum, support);
}

ojson support_json(const std::vector<std::size_t>& support) {
  ojson a = ojson::array();
  for (auto s : support) a.push_back(s + 1);
  return a;
}

ojson roots_json(const RootDatum& datum, const std::vector<Root>& roots) {
  ojson a = ojson::array();
  for (const auto& r : roots) a.push_back(format_weight(datum, r.weight));
  return a;
}

std::string roots_text(const RootDatum& datum, const std::vector<Root>& roots) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : " ") + format_weight(datum, r.weight);
  return s.empty() ? "-" : s;
}

std::string type_name(WeylType t) {
  switch (t) {
    case WeylType::A:
      return "A";
    case WeylType::B:
      return "B";
    case WeylType::C:
      return "C";
  }
  return "?";
}

ojson schema_head(const char* command) {
  ojson j;
  j["schema"] = std::string("superlink.") + command + "/1";
  return j;
}

void emit(std::ostream& out, const Options& o, const ojson& j, const std::string& text) {
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    out << text << "\n";
  }
}

int cmd_root_data(const Options& o, const RootDatum& d, std::ostream& out) {
  ojson j = schema_head("root-data");
  j["datum"] = d.name;
  j["dim"] = d.dim;
  ojson sig = ojson::array();
  for (const auto& s : d.signature) sig.push_back(to_string(s));
  j["signature"] = sig;
  j["simple_even"] = roots_json(d, d.simple_even);
  j["even_positive"] = roots_json(d, d.even_positive);
  j["odd_positive"] = roots_json(d, d.odd_positive);
  j["odd_roots"] = roots_json(d, d.odd_roots);
  j["isotropic_roots"] = roots_json(d, d.isotropic_roots);
  j["rho0"] = format_weight(d, d.rho0);
  j["rho1"] = format_weight(d, d.rho1);
  j["rho"] = format_weight(d, d.rho);
  ojson comps = ojson::array();
  std::string weyl_text;
  for (const auto& c : d.weyl_components) {
    ojson cj;
    cj["type"] = type_name(c.type);
    ojson coords = ojson::array();
    std::string coord_text;
    for (auto k : c.coords) {
      coords.push_back(k + 1);
      coord_text += (coord_text.empty() ? "" : ",") + std::to_string(k + 1);
    }
    cj["coords"] = coords;
    comps.push_back(cj);
    weyl_text += (weyl_text.empty() ? "" : " x ") + type_name(c.type) + "{" + coord_text + "}";
  }
  j["weyl_components"] = comps;
  std::ostringstream t;
  t << "datum " << d.name << "\n"
    << "dim " << d.dim << "\n"
    << "simple_even " << roots_text(d, d.simple_even) << "\n"
    << "even_positive " << roots_text(d, d.even_positive) << "\n"
    << "odd_positive " << roots_text(d, d.odd_positive) << "\n"
    << "isotropic " << roots_text(d, d.isotropic_roots) << "\n"
    << "rho0 " << format_weight(d, d.rho0) << "\n"
    << "rho1 " << format_weight(d, d.rho1) << "\n"
    << "rho " << format_weight(d, d.rho) << "\n"
    << "weyl " << (weyl_text.empty() ? "trivial" : weyl_text);
  emit(out, o, j, t.str());
  return kExitOk;
}

int cmd_dot(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const WeylElement w = parse_weyl_element(d, need(o.w, "--w"));
  const Weight result = dot(d, w, lambda);
  ojson j = schema_head("dot");
  j["w"] = w.to_cycle_string();
  j["weight"] = format_weight(d, lambda);
  j["result"] = format_weight(d, result);
  emit(out, o, j, format_weight(d, result));
  return kExitOk;
}

int cmd_antidom(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const Parabolic sub = o.zeta == "none" ? Parabolic::full(d) : weyl_subgroup_of(d, parse_zeta(d, o.zeta));
  const auto [rep, w] = antidominant_rep(d, lambda, sub);
  ojson j = schema_head("antidom");
  j["weight"] = format_weight(d, lambda);
  j["sub"] = support_json(sub.simple);
  j["rep"] = format_weight(d, rep);
  j["w"] = w.to_cycle_string();
  emit(out, o, j, format_weight(d, rep) + " " + w.to_cycle_string());
  return kExitOk;
}

int cmd_stab(const Options& o, const RootDatum& d, std::ostream& out, const Limits& limits) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const auto roots = stabilizer_roots(d, lambda);
  const auto orbit = orbit_dot(d, lambda, Parabolic::full(d), limits.subgroup_cap);
  ojson j = schema_head("stab");
  j["weight"] = format_weight(d, lambda);
  j["roots"] = roots_json(d, roots);
  j["orbit_size"] = orbit.size();
  emit(out, o, j, roots_text(d, roots));
  return kExitOk;
}

int cmd_classify(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const auto zeta = parse_zeta(d, o.zeta);
  const auto param = classify_simple(d, lambda, zeta);
  ojson j = schema_head("classify");
  j["datum"] = param.datum;
  j["zeta"] = support_json(param.zeta.support());
  j["weight"] = format_weight(d, lambda);
  j["rep"] = format_weight(d, param.rep);
  emit(out, o, j, format_weight(d, param.rep));
  return kExitOk;
}

int cmd_upsilon(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight nu = parse_weight(d, need(o.weight, "--weight"));
  const auto ups = upsilon_of(d, nu);
  ojson j = schema_head("upsilon");
  j["weight"] = format_weight(d, nu);
  j["upsilon"] = support_json(ups);
  std::string text;
  for (auto k : ups) text += (text.empty() ? "" : ",") + std::to_string(k + 1);
  emit(out, o, j, text.empty() ? "none" : text);
  return kExitOk;
}

int cmd_in_x(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight nu = parse_weight(d, need(o.nu, "--nu"));
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const bool x0 = in_X0(d, nu, lambda);
  const bool x = in_X(d, nu, lambda);
  ojson j = schema_head("in-x");
  j["nu"] = format_weight(d, nu);
  j["weight"] = format_weight(d, lambda);
  j["in_X0"] = x0;
  j["in_X"] = x;
  emit(out, o, j, std::string(x ? "true" : "false"));
  return kExitOk;
}

int cmd_typicality(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const auto t = typicality(d, lambda);
  ojson j = schema_head("typicality");
  j["weight"] = format_weight(d, lambda);
  std::string text;
  switch (t.kind) {
    case Typicality::Kind::Typical:
      text = "typical";
      break;
    case Typicality::Kind::Atypical:
      text = "atypical";
      break;
    case Typicality::Kind::NotApplicable:
      text = "not-applicable";
      break;
  }
  j["kind"] = text;
  j["degree"] = t.degree;
  if (t.kind == Typicality::Kind::Atypical) text += " " + std::to_string(t.degree);
  emit(out, o, j, text);
  return kExitOk;
}

int cmd_block_label(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const std::string label = label_to_json(block_label(d, lambda));
  if (o.json) {
    ojson j = schema_head("block-label");
    j["weight"] = format_weight(d, lambda);
    j["label"] = ojson::parse(label);
    out << j.dump() << "\n";
  } else {
    out << label << "\n";
  }
  return kExitOk;
}

int cmd_same_block(const Options& o, const RootDatum& d, std::ostream& out) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const Weight mu = parse_weight(d, need(o.mu, "--mu"));
  const auto status = same_block(d, lambda, mu);
  ojson j = schema_head("same-block");
  j["weight"] = format_weight(d, lambda);
  j["mu"] = format_weight(d, mu);
  j["status"] = to_string(status);
  emit(out, o, j, to_string(status));
  return kExitOk;
}

WeightBox box_for(const Options& o, const RootDatum& d) { return parse_box(d.dim, need(o.box, "--box")); }

int cmd_enumerate_block(const Options& o, const RootDatum& d, std::ostream& out, const Limits& limits) {
  const Weight seed = parse_weight(d, need(o.weight, "--weight"));
  const WeightBox box = box_for(o, d);
  const auto gens = LinkageGenerators::for_family(d);
  std::vector<Weight> points;
  if (o.jobs > 1) {
    const auto report = partition_box(d, box, gens, false, o.jobs, limits.box_cap);
    for (const auto& c : report.components)
      if (std::binary_search(c.points.begin(), c.points.end(), seed)) points = c.points;
    if (points.empty()) throw DomainError("seed " + format_weight(d, seed) + " is outside " + box.str());
  } else {
    points = bfs_linkage_closure(d, seed, box, gens, limits.box_cap);
  }
  const std::string label = label_to_json(block_label(d, seed));
  ojson j = schema_head("enumerate-block");
  j["seed"] = format_weight(d, seed);
  j["box"] = box.str();
  j["label"] = ojson::parse(label);
  j["size"] = points.size();
  ojson pts = ojson::array();
  std::string text = "label " + label + "\nsize " + std::to_string(points.size());
  for (const auto& p : points) {
    pts.push_back(format_weight(d, p));
    text += "\n" + format_weight(d, p);
  }
  j["points"] = pts;
  emit(out, o, j, text);
  return kExitOk;
}

int cmd_klpoly(const Options& o, const RootDatum& d, std::ostream& out, const Limits& limits) {
  const WeylElement x = parse_weyl_element(d, need(o.x, "--x"));
  const WeylElement w = parse_weyl_element(d, need(o.w, "--w"));
  const auto p = kl_polynomial(d, x, w, limits.kl_group_cap);
  ojson j = schema_head("klpoly");
  j["x"] = x.to_cycle_string();
  j["w"] = w.to_cycle_string();
  j["bruhat_leq"] = !p.is_zero();
  j["coeffs"] = p.coeffs();
  j["poly"] = p.str();
  emit(out, o, j, p.str());
  return kExitOk;
}

int cmd_mult(const Options& o, const RootDatum& d, std::ostream& out, const Limits& limits) {
  const Weight lambda = parse_weight(d, need(o.weight, "--weight"));
  const auto zeta = parse_zeta(d, o.zeta);
  const MultTable table =
      o.mult_table.empty() ? MultTable::builtin(limits.kl_group_cap) : load_mult_table(d, o.mult_table);
  ojson j = schema_head("mult");
  j["weight"] = format_weight(d, lambda);
  j["zeta"] = support_json(zeta.support());
  j["table"] = to_string(table.provenance());
  std::int64_t value = 0;
  if (o.length) {
    value = whittaker_length(d, lambda, zeta, table);
    j["length"] = value;
  } else {
    const Weight mu = parse_weight(d, need(o.mu, "--mu"));
    value = whittaker_mult(d, lambda, mu, zeta, table);
    j["mu"] = format_weight(d, mu);
    j["gamma"] = format_weight(d, whittaker_gamma_set(d, mu, zeta).front());
    j["mult"] = value;
  }
  emit(out, o, j, std::to_string(value));
  return kExitOk;
}

int cmd_validate(const Options& o, const RootDatum& d, std::ostream& out, const Limits& limits) {
  const WeightBox box = box_for(o, d);
  const auto report = partition_box(d, box, LinkageGenerators::for_family(d), !o.no_enlarge, o.jobs, limits.box_cap);
  if (o.json) {
    out << report.to_json() << "\n";
  } else {
    std::size_t points = 0;
    for (const auto& c : report.components) points += c.points.size();
    out << "datum " << d.name << "\n"
        << "box " << report.box.str() << "\n"
        << "points " << points << "\n"
        << "components " << report.components.size() << "\n"
        << "labels " << report.label_count() << "\n"
        << "soundness " << (report.sound() ? "ok" : "FAILED") << " (" << report.soundness_failures.size()
        << " multi-label components)\n";
    for (const auto& split : report.splits) {
      out << "split " << split.label << " components " << split.components << " merged_after_enlargement "
          << (split.merged_after_enlargement ? "yes" : "no") << "\n";
    }
    if (!report.enlarged_box.empty())
      out << "enlarged " << report.enlarged_box << " soundness_failures " << report.enlarged_soundness_failures
          << "\n";
    out << "complete_within_box " << (report.complete() ? "yes" : "no") << "\n";
  }
  return report.sound() ? kExitOk : kExitFailure;
}

const char* kFooter = R"TXT(Output: plain text by default; --json prints one JSON object per command with a
"schema" key "superlink.<command>/1" (validate: "superlink.partition/1").
Weight literals: comma-separated rationals p or p/q; '|' separates the even
blocks of gl(m|n) and reductive factors, ';' follows the epsilon coordinate of
osp(2|2n). Weyl elements: signed cycles on 1-based coordinates, e.g. "(1 2)",
"(1 -1)", "()" for the identity.
--zeta: 1-based indices into the even simple roots ("1,3"), "all" or "none".
The dominant partner of a support is the minimal integral dominant weight whose
rho0-shift is constant on each connected piece of the support and drops by one
between pieces.
Exit codes: 0 ok, 1 validate found a soundness failure, 2 usage error,
3 unsupported input (non-integral, singular orbit without a table, caps).)TXT";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"superlink: exact weight combinatorics for Whittaker modules over Lie superalgebras"};
  app.name("superlink");
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  auto datum_flags = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "gl | osp | p | osp32 | reductive")->required();
    sub->add_option("--m", o.m, "m of gl(m|n)");
    sub->add_option("--n", o.n, "n of gl(m|n), osp(2|2n), p(n)");
    sub->add_option("--type", o.type, "reductive type, e.g. A2, C2, A1xC2");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--config", o.config, "key=value file: box_cap, subgroup_cap, kl_group_cap");
  };
  struct Entry {
    const char* name;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {"root-data", "print roots, Weyl vectors and Weyl group"},
      {"dot", "dot action w . lambda (--w, --weight)"},
      {"antidom", "antidominant representative of the dot-orbit (--weight, optional --zeta subgroup)"},
      {"stab", "even positive roots fixing lambda + rho0 (--weight)"},
      {"classify", "canonical simple Whittaker parameter (--zeta, --weight)"},
      {"upsilon", "singular simple roots of a dominant integral weight (--weight)"},
      {"in-x", "membership of --weight in X(nu) (--nu)"},
      {"typicality", "typical / atypical degree of --weight"},
      {"block-label", "canonical block label of --weight"},
      {"same-block", "linkage status of --weight and --mu"},
      {"enumerate-block", "linkage component of --weight inside --box"},
      {"klpoly", "Kazhdan-Lusztig polynomial P_{x,w} (--x, --w)"},
      {"mult", "standard Whittaker multiplicity [M(lambda,zeta):L(mu,zeta)], or --length"},
      {"validate", "oracle partition of --box checked against block labels"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    datum_flags(sub);
    subs[e.name] = sub;
  }
  for (auto name : {"dot", "antidom", "stab", "classify", "upsilon", "in-x", "typicality", "block-label",
                    "same-block", "enumerate-block", "mult"})
    subs[name]->add_option("--weight", o.weight, "weight literal");
  subs["dot"]->add_option("--w", o.w, "Weyl element in cycle notation");
  subs["klpoly"]->add_option("--w", o.w, "Weyl element w");
  subs["klpoly"]->add_option("--x", o.x, "Weyl element x");
  subs["antidom"]->add_option("--zeta", o.zeta, "parabolic support (default: full group)");
  subs["classify"]->add_option("--zeta", o.zeta, "character support");
  subs["mult"]->add_option("--zeta", o.zeta, "character support");
  subs["mult"]->add_option("--mu", o.mu, "weight literal of the simple quotient parameter");
  subs["mult"]->add_option("--mult-table", o.mult_table, "multiplicity table file");
  subs["mult"]->add_flag("--length", o.length, "print the composition length of M(lambda, zeta)");
  subs["same-block"]->add_option("--mu", o.mu, "second weight literal");
  subs["in-x"]->add_option("--nu", o.nu, "dominant integral weight nu");
  for (auto name : {"enumerate-block", "validate"}) {
    subs[name]->add_option("--box", o.box, "\"lo..hi\" or per-coordinate \"lo..hi,lo..hi,...\"");
    subs[name]->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  }
  subs["validate"]->add_flag("--no-enlarge", o.no_enlarge, "skip the enlarged-box completeness pass");

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
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const Limits limits = load_config(o.config);
    const RootDatum d = make_datum(o);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "root-data") return cmd_root_data(o, d, out);
    if (cmd == "dot") return cmd_dot(o, d, out);
    if (cmd == "antidom") return cmd_antidom(o, d, out);
    if (cmd == "stab") return cmd_stab(o, d, out, limits);
    if (cmd == "classify") return cmd_classify(o, d, out);
    if (cmd == "upsilon") return cmd_upsilon(o, d, out);
    if (cmd == "in-x") return cmd_in_x(o, d, out);
    if (cmd == "typicality") return cmd_typicality(o, d, out);
    if (cmd == "block-label") return cmd_block_label(o, d, out);
    if (cmd == "same-block") return cmd_same_block(o, d, out);
    if (cmd == "enumerate-block") return cmd_enumerate_block(o, d, out, limits);
    if (cmd == "klpoly") return cmd_klpoly(o, d, out, limits);
    if (cmd == "mult") return cmd_mult(o, d, out, limits);
    if (cmd == "validate") return cmd_validate(o, d, out, limits);
    err << "error: unknown command " << cmd << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace superlink::cli
