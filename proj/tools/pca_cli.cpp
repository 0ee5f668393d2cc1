// SPDX-License-Identifier: Apache-2.0
// Command-line front end.  Exit codes: 0 yes/feasible/verified, 1 no or
// domain error, 2 usage, 3 internal invariant violation.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "pca/construct.hpp"
#include "pca/decide.hpp"
#include "pca/io.hpp"
#include "pca/labeling.hpp"
#include "pca/oracle.hpp"
#include "pca/solver.hpp"
#include "pca/syngraph.hpp"

using json = nlohmann::ordered_json;
using namespace pca;

namespace {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json jint(Int v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return to_string(v);
}

json jrat(const Rational& r) {
  if (r.is_inf()) return "inf";
  return json{{"num", jint(r.num())}, {"den", jint(r.den())}};
}

Int read_int(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  return j.get<long long>();
}

json cycle_json(const GreedyCycle& c) { return c.vertices; }

json cert_json(const NegCert& c) {
  return {{"k", c.k}, {"g_hollow", cycle_json(c.g_hollow)}, {"g_nose", cycle_json(c.g_nose)}};
}

json syn_json(const SynGraph& g) {
  json edges = json::array();
  for (const SynEdge& e : g.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"kind", e.kind == EdgeKind::Hollow ? "hollow" : "nose"},
                     {"order", e.order},
                     {"bal", e.bal},
                     {"ext", e.ext}});
  return {{"k", g.k}, {"edges", edges}};
}

bool internal_code(Errc e) {
  return e == Errc::InternalVerificationFailed || e == Errc::PreconditionViolated || e == Errc::CycleInReduced ||
         e == Errc::Overflow;
}

struct Opts {
  std::string model, other, cert, labels, sidecar;
  long long k = 1, lambda = 2, copies = 2, n = 8, a = 0, b = 0;
  std::string c, ell;
  std::uint64_t seed = 1;
  bool json = false, dot = false, pig = false, disconnected = false, saturated = false, uca = false;
};

void emit(const Opts& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_validate(const Opts& o) {
  Model m = load_model(o.model);
  emit(o, {{"valid", true}, {"n", m.n()}}, "valid n=" + std::to_string(m.n()) + "\n");
  return 0;
}

int cmd_info(const Opts& o) {
  Model m = load_model(o.model);
  Nav nav = navigation(m);
  Classification cl = classify(m, nav);
  Id w = omega(m, nav);
  json j{{"n", m.n()},
         {"c", jint(m.c)},
         {"omega", w},
         {"pig", cl.pig},
         {"spca", cl.spca},
         {"connected", cl.connected},
         {"saturated", cl.saturated}};
  if (cl.connected) {
    Geometry geo = rows_cols(m, nav, w);
    j["Rows"] = geo.rows;
    j["Cols"] = geo.cols;
    j["row"] = geo.row;
    j["col"] = geo.col0;
  }
  std::ostringstream t;
  t << "n " << m.n() << "\nomega " << w << "\nkind " << (cl.pig ? "PIG" : "SPCA") << "\nconnected "
    << cl.connected << "\nsaturated " << cl.saturated << "\n";
  if (cl.connected) t << "Rows " << j["Rows"] << "\nCols " << j["Cols"] << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_syn(const Opts& o) {
  Model m = load_model(o.model);
  SynGraph g = build_syn(m, static_cast<Id>(o.k));
  json j = syn_json(g);
  Geometry geo = rows_cols(m);
  j["rows"] = geo.row;
  j["cols"] = geo.col0;
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_draw(const Opts& o) {
  Model m = load_model(o.model);
  Drawing d = drawing_arrows(m, static_cast<Id>(o.k), static_cast<Id>(o.copies));
  auto kind = [](const Segment& s) {
    return std::string(s.kind == EdgeKind::Hollow ? "hollow" : "nose") + (s.backward ? "-back" : "");
  };
  if (o.dot) {
    std::cout << "digraph drawing {\n  node [shape=point];\n";
    for (const Segment& s : d.segments) {
      auto node = [](Int x, Int y) { return "\"" + to_string(x) + "," + to_string(y) + "\""; };
      std::cout << "  " << node(s.x1, s.y1) << " [pos=\"" << to_string(s.x1) << "," << to_string(s.y1) << "!\"];\n";
      std::cout << "  " << node(s.x2, s.y2) << " [pos=\"" << to_string(s.x2) << "," << to_string(s.y2) << "!\"];\n";
      std::cout << "  " << node(s.x1, s.y1) << " -> " << node(s.x2, s.y2) << " [label=\"" << kind(s) << "\"];\n";
    }
    std::cout << "}\n";
  } else {
    for (const Segment& s : d.segments)
      std::cout << to_string(s.x1) << '\t' << to_string(s.y1) << '\t' << to_string(s.x2) << '\t' << to_string(s.y2)
                << '\t' << kind(s) << '\n';
  }
  for (auto [x, y] : d.crossings) std::cerr << "crossing " << x << ' ' << y << '\n';
  return d.crossings.empty() ? 0 : 3;
}

int cmd_solve(const Opts& o) {
  if (o.c.empty() || o.ell.empty()) throw CLI::RequiredError("--c and --ell");
  Model m = load_model(o.model);
  SolveResult r = solve_fixed(m, static_cast<Id>(o.k), parse_int(o.c), parse_int(o.ell));
  if (r.feasible) {
    emit(o, {{"feasible", true}, {"model", write_model(r.model)}, {"parity_warning", r.parity_warning}},
         write_model(r.model));
    return 0;
  }
  json j{{"cycle", r.cert.cycle}, {"weight", jint(r.cert.weight)}, {"constraints", r.cert.constraints}};
  if (r.parity_warning) j["parity_warning"] = true;
  std::cout << j.dump() << "\n";
  return 1;
}

int cmd_decide(const Opts& o) {
  Model m = load_model(o.model);
  Decision d = decide(m, static_cast<Id>(o.k));
  if (d.yes) {
    emit(o, {{"answer", "yes"}, {"pig", d.pig}, {"inserted", d.inserted}}, "yes\n");
    return 0;
  }
  std::cout << cert_json(*d.cert).dump() << "\n";
  return 1;
}

int cmd_authenticate(const Opts& o) {
  Model m = load_model(o.model);
  std::ifstream f(o.cert);
  if (!f) throw Error(Errc::SyntaxError, "cannot open " + o.cert);
  json j = json::parse(f);
  NegCert cert;
  cert.k = j.contains("k") ? j["k"].get<Id>() : static_cast<Id>(o.k);
  cert.g_hollow.flavor = EdgeKind::Hollow;
  cert.g_hollow.vertices = j.at("g_hollow").get<std::vector<Id>>();
  cert.g_nose.vertices = j.at("g_nose").get<std::vector<Id>>();
  AuthResult r = authenticate_negative(m, cert);
  emit(o, {{"authentic", r.ok}, {"reason", r.reason}}, r.ok ? "authentic\n" : "rejected: " + r.reason + "\n");
  return r.ok ? 0 : 1;
}

int cmd_construct(const Opts& o) {
  Model m = load_model(o.model);
  Id k = static_cast<Id>(o.k);
  Decision d = decide(m, k);
  if (!d.yes) {
    std::cout << cert_json(*d.cert).dump() << "\n";
    return 1;
  }
  Construction r = construct(m, k);
  json side{{"c", jint(r.c)},
            {"ell", jint(r.ell)},
            {"ratio", jrat(r.ratio)},
            {"RATIO", jrat(r.RATIO)},
            {"scaled_by", jint(r.d)},
            {"fully_verified", r.fully_verified}};
  if (o.json) {
    side["model"] = write_model(r.model);
    std::cout << side.dump() << "\n";
    return 0;
  }
  std::cout << write_model(r.model);
  if (!o.sidecar.empty()) {
    std::ofstream(o.sidecar) << side.dump() << "\n";
  } else {
    std::cerr << side.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  Model u = load_model(o.model);
  Model m = load_model(o.other);
  VerifyReport r = verify_k_multiplicative(u, m, static_cast<Id>(o.k));
  json j{{"ok", r.ok}};
  if (!r.ok) j["failed_i"] = r.failed_i, j["detail"] = r.detail;
  std::cout << j.dump() << "\n";
  return r.ok ? 0 : 1;
}

int cmd_label(const Opts& o) {
  Model u = load_model(o.model);
  LabelSet ls = make_labels(u, static_cast<Id>(o.k));
  std::cout << "# c " << to_string(ls.c) << " ell " << to_string(ls.ell) << " k " << ls.k << "\n";
  for (Id a = 0; a < static_cast<Id>(ls.labels.size()); ++a) std::cout << a << '\t' << to_string(ls.labels[a]) << '\n';
  return 0;
}

int cmd_query(const Opts& o) {
  std::ifstream f(o.labels);
  if (!f) throw Error(Errc::SyntaxError, "cannot open " + o.labels);
  LabelSet ls;
  ls.k = static_cast<Id>(o.k);
  std::string line;
  while (std::getline(f, line)) {
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "#") {
      for (std::string key, val; ss >> key >> val;) {
        if (key == "c") ls.c = parse_int(val);
        if (key == "ell") ls.ell = parse_int(val);
      }
      continue;
    }
    std::string s;
    ss >> s;
    ls.labels.push_back(parse_int(s));
  }
  if (!o.c.empty()) ls.c = parse_int(o.c);
  if (!o.ell.empty()) ls.ell = parse_int(o.ell);
  Id n = static_cast<Id>(ls.labels.size());
  if (o.a < 0 || o.b < 0 || o.a >= n || o.b >= n) throw Error(Errc::OutOfRange, "arc id out of range");
  Id d = query_distance(ls, static_cast<Id>(o.a), static_cast<Id>(o.b));
  std::string cls = o.a == o.b ? "zero" : d == kMoreThanK ? ">k" : std::to_string(d);
  emit(o, {{"class", cls}}, cls + "\n");
  return 0;
}

int cmd_power(const Opts& o) {
  Model m = load_model(o.model);
  PowerModel p = power(m, static_cast<Id>(o.k));
  json arcs = json::array();
  std::ostringstream t;
  t << "circle " << to_string(p.c) << "\n";
  for (const PowerArc& a : p.arcs) {
    arcs.push_back({{"s", jint(a.s)}, {"t", jint(a.t.base)}, {"eps", jint(a.t.eps)}});
    t << "arc " << to_string(a.s) << " " << to_string(a.t.base) << "+" << to_string(a.t.eps) << "e\n";
  }
  emit(o, {{"c", jint(p.c)}, {"arcs", arcs}}, t.str());
  return 0;
}

int cmd_multiply(const Opts& o) {
  std::cout << write_model(multiply(load_model(o.model), o.k));
  return 0;
}

int cmd_unroll(const Opts& o) {
  Unrolled u = unroll(load_model(o.model), static_cast<Id>(o.lambda));
  std::cout << write_model(u.model);
  return 0;
}

int cmd_gen(const Opts& o) {
  Model m;
  if (o.uca) {
    m = gen_uca(static_cast<Id>(o.n), o.seed);
  } else {
    GenOptions g;
    g.n = static_cast<Id>(o.n);
    g.spca = !o.pig;
    g.connected = !o.disconnected;
    g.saturated = o.saturated;
    g.seed = o.seed;
    m = gen_random(g);
  }
  std::cout << write_model(m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper circular-arc models: k-multiplicative decision, construction and labels"};
  app.require_subcommand(1);
  Opts o;
  std::function<int(const Opts&)> run;

  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Opts&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  auto model_arg = [&](CLI::App* s) { s->add_option("model", o.model, "Model file, - for stdin")->required(); };
  auto k_opt = [&](CLI::App* s) { s->add_option("--k", o.k, "Power bound")->check(CLI::NonNegativeNumber); };

  auto* s = add("validate", "Check a model file", cmd_validate);
  model_arg(s);
  s = add("info", "Print n, omega, class, Rows and Cols", cmd_info);
  model_arg(s);
  s = add("syn", "Synthetic graph as JSON", cmd_syn);
  k_opt(s);
  model_arg(s);
  s = add("draw", "Drawing segments as TSV", cmd_draw);
  k_opt(s);
  s->add_option("--copies", o.copies, "Copies side by side")->check(CLI::PositiveNumber);
  s->add_flag("--dot", o.dot, "Emit DOT instead of TSV");
  model_arg(s);
  s = add("solve", "Solve for fixed c and ell", cmd_solve);
  k_opt(s);
  s->add_option("--c", o.c, "Circle length")->required();
  s->add_option("--ell", o.ell, "Arc length minus one")->required();
  model_arg(s);
  s = add("decide", "Decide k-multiplicativity", cmd_decide);
  k_opt(s);
  model_arg(s);
  s = add("authenticate", "Check a negative certificate", cmd_authenticate);
  k_opt(s);
  model_arg(s);
  s->add_option("cert", o.cert, "Certificate JSON")->required();
  s = add("construct", "Build a k-multiplicative UCA model", cmd_construct);
  k_opt(s);
  s->add_option("--sidecar", o.sidecar, "Write the parameter JSON here instead of stderr");
  model_arg(s);
  s = add("verify", "Check that a UCA model is k-multiplicative for a model", cmd_verify);
  k_opt(s);
  s->add_option("uca", o.model, "Candidate UCA model")->required();
  s->add_option("model", o.other, "Reference model")->required();
  s = add("label", "Distance labels of a UCA model", cmd_label);
  k_opt(s);
  model_arg(s);
  s = add("query", "Distance class between two arcs", cmd_query);
  k_opt(s);
  s->add_option("--c", o.c, "Circle length (overrides the label header)");
  s->add_option("--ell", o.ell, "Arc length minus one (overrides the label header)");
  s->add_option("labels", o.labels, "Labels TSV")->required();
  s->add_option("a", o.a, "Source arc")->required();
  s->add_option("b", o.b, "Target arc")->required();
  s = add("power", "k-th power model", cmd_power);
  k_opt(s);
  model_arg(s);
  s = add("multiply", "k-multiple of a UCA model", cmd_multiply);
  k_opt(s);
  model_arg(s);
  s = add("unroll", "Loop unrolling", cmd_unroll);
  s->add_option("--lambda", o.lambda, "Copies")->check(CLI::PositiveNumber);
  model_arg(s);
  s = add("gen", "Random model", cmd_gen);
  s->add_option("--n", o.n, "Number of arcs")->check(CLI::PositiveNumber);
  s->add_option("--seed", o.seed, "Seed");
  s->add_flag("--pig", o.pig, "No external arcs");
  s->add_flag("--disconnected", o.disconnected, "Allow gaps");
  s->add_flag("--saturated", o.saturated, "Every beginning point covered");
  s->add_flag("--uca", o.uca, "Uniform arc lengths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run(o);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return internal_code(e.code()) ? 3 : 1;
  } catch (const json::exception& e) {
    std::cout << json{{"error", "SyntaxError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
}
