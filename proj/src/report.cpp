#include "endtangle/report.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "endtangle/errors.hpp"
#include "endtangle/finite_oracle.hpp"

namespace endtangle {

namespace {

Json labels_json(const GraphFamily& g, const VertexList& vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(g.label(v));
  return arr;
}

const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kLowerBound:
      return "lower-bound";
    case BoundKind::kInfinite:
      return "infinite";
  }
  return "?";
}

const char* category_name(CohesionCategory c) {
  switch (c) {
    case CohesionCategory::kBounded:
      return "bounded";
    case CohesionCategory::kUnbounded:
      return "unbounded";
    case CohesionCategory::kInfinite:
      return "infinite";
    case CohesionCategory::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string cohesion_summary(const CohesionReport& r) {
  switch (r.category) {
    case CohesionCategory::kBounded:
      return "Bounded(" + std::to_string(r.bounded_value) + ")";
    case CohesionCategory::kUnbounded:
      return "Unbounded";
    case CohesionCategory::kInfinite:
      return "Infinite";
    case CohesionCategory::kInconclusive:
      return "Inconclusive(>=Bounded(" + std::to_string(r.lower_bound_value) +
             "))";
  }
  return "?";
}

}  // namespace

Json budgets_json(const Budgets& b) {
  Json j;
  j["window"] = b.window;
  j["inner_level"] = b.inner_level;
  j["patience"] = b.patience;
  j["budget"] = b.budget;
  j["margin"] = b.margin;
  j["threshold"] = b.threshold;
  j["search_level"] = b.search_level;
  j["d_max"] = b.d_max;
  j["z_samples"] = b.z_samples;
  j["divergence_bound"] = b.divergence_bound;
  j["seed"] = b.seed;
  return j;
}

Json family_json(const GraphFamily& g) {
  Json j;
  j["name"] = g.name();
  Json params = Json::object();
  for (const auto& [key, val] : g.params()) params[key] = val;
  j["params"] = params;
  return j;
}

Json cohesion_json(const GraphFamily& g, const CohesionReport& r) {
  Json j;
  j["category"] = category_name(r.category);
  j["summary"] = cohesion_summary(r);
  if (r.category == CohesionCategory::kBounded) {
    j["value"] = r.bounded_value;
  }
  if (r.category == CohesionCategory::kInconclusive) {
    j["lower_bound"] = r.lower_bound_value;
  }
  Json dom;
  dom["kind"] = kind_name(r.domination.kind);
  dom["value"] = r.domination.value;
  dom["witnesses"] = labels_json(g, r.domination.witnesses);
  Json evidence = Json::array();
  for (const auto& [v, check] : r.domination.evidence) {
    Json e;
    e["vertex"] = g.label(v);
    e["verdict"] = check.verdict == Verdict::kTrue    ? "dominates"
                   : check.verdict == Verdict::kFalse ? "does-not-dominate"
                                                      : "inconclusive";
    e["certificate"] = check.certificate_kind;
    if (!check.separator.empty()) {
      e["separator"] = labels_json(g, check.separator);
    }
    evidence.push_back(e);
  }
  dom["evidence"] = evidence;
  j["domination"] = dom;
  if (r.degree_computed) {
    Json deg;
    deg["kind"] = kind_name(r.degree.kind);
    deg["value"] = r.degree.value;
    deg["series"] = r.degree.series;
    deg["certificate"] = r.degree.certificate;
    j["degree"] = deg;
  }
  return j;
}

Json certificate_json(const GraphFamily& g, const DeciderCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["X"] = labels_json(g, c.X);
  j["D"] = labels_json(g, c.D);
  Json rays = Json::array();
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    Json r;
    r["tail"] = labels_json(g, c.rays[i]);
    r["prefix"] = labels_json(g, c.full_rays[i]);
    r["tail_rule"] = c.tail_rules.size() > i ? c.tail_rules[i] : "";
    rays.push_back(r);
  }
  j["rays"] = rays;
  Json paths = Json::array();
  for (std::size_t i = 0; i < c.linking_paths.size(); ++i) {
    Json p;
    p["elements"] = Json::array(
        {c.linked_elements[i].first, c.linked_elements[i].second});
    p["path"] = labels_json(g, c.linking_paths[i]);
    paths.push_back(p);
  }
  j["linking_paths"] = paths;
  j["window"] = c.window;
  return j;
}

Json verify_json(const VerifyResult& r) {
  Json j;
  j["ok"] = r.ok;
  j["separations_checked"] = r.separations_checked;
  j["effective_inner_level"] = r.effective_inner_level;
  j["violations"] = r.violations;
  return j;
}

Json separation_json(const OrientedSeparation& s) {
  Json j;
  j["canonical"] = s.canonical_text();
  j["order"] = s.order();
  j["separator"] = labels_json(*s.family, s.separator);
  j["in_tau"] = s.in_tau();
  j["window"] = s.window;
  return j;
}

Json closure_json(const GraphFamily& g, const ClosureVerdict& v) {
  Json j;
  j["k"] = v.k;
  j["closed"] = v.closed;
  j["route"] = v.route == ClosureRoute::kParameter ? "parameter"
               : v.route == ClosureRoute::kDecider ? "decider"
                                                   : "limit-point";
  if (v.decider) j["decider"] = certificate_json(g, *v.decider);
  if (v.evidence) {
    Json e;
    e["D"] = labels_json(g, v.evidence->D);
    e["target"] = separation_json(v.evidence->target);
    Json samples = Json::array();
    for (const auto& s : v.evidence->samples) {
      Json sj;
      sj["Z"] = labels_json(g, s.Z);
      sj["agreeing"] = separation_json(s.agreeing);
      sj["restrict_ok"] = s.restrict_ok;
      samples.push_back(sj);
    }
    e["samples"] = samples;
    j["evidence"] = e;
  }
  return j;
}

namespace {

Json oracle_selftest_json(unsigned seed) {
  std::mt19937 rng(seed);
  int cut_checks = 0, cut_pass = 0;
  int sep_checks = 0, sep_pass = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FiniteGraph g;
    g.n = 2 + static_cast<int>(rng() % 9);  // 2..10
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) {
        if (rng() % 10 < 4) g.edges.emplace_back(u, v);
      }
    }
    int t = static_cast<int>(rng() % g.n);
    std::vector<int> X, forbidden;
    for (int v = 0; v < g.n; ++v) {
      if (v != t && rng() % 2) X.push_back(v);
    }
    if (X.empty()) X.push_back((t + 1) % g.n);
    for (int x : X) {
      if (rng() % 10 < 3) forbidden.push_back(x);
    }

    ++cut_checks;
    BruteCut brute = brute_min_vertex_cut(g, X, t, forbidden);
    NodeCutResult flow = flow_min_cut(g, X, t, forbidden);
    if (brute.infinite == flow.infinite &&
        (brute.infinite || brute.value == flow.value)) {
      ++cut_pass;
    }

    ++sep_checks;
    try {
      int k = 1 + static_cast<int>(rng() % 4);
      all_separations(g, k);  // throws on generation mismatch
      ++sep_pass;
    } catch (const Error&) {
      // counted as failure
    }
  }

  FiniteGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
  std::size_t triangle_count = all_separations(triangle, 2).size();

  Json j;
  j["cut_checks"] = cut_checks;
  j["cut_pass"] = cut_pass;
  j["separation_checks"] = sep_checks;
  j["separation_pass"] = sep_pass;
  j["triangle_order2_count"] = triangle_count;
  j["ok"] = cut_pass == cut_checks && sep_pass == sep_checks &&
            triangle_count == 8;
  return j;
}

struct CliOptions {
  std::string family = "ray";
  std::vector<std::string> params;
  std::string family_spec_file;
  std::string emit = "json";
  Budgets budgets;
};

FamilyPtr resolve_family(const CliOptions& opt) {
  if (!opt.family_spec_file.empty()) {
    std::ifstream in(opt.family_spec_file);
    if (!in) throw InvalidParam("cannot read " + opt.family_spec_file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_family_spec(text);
  }
  std::map<std::string, int> params;
  for (const std::string& kv : opt.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw InvalidParam("--param expects key=value, got: " + kv);
    }
    params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
  }
  return make_family(opt.family, params);
}

VertexList ball_vertices(const GraphFamily& g, int level) {
  VertexList out;
  for (int l = 0; l <= level; ++l) {
    VertexList layer = g.vertices_at_level(l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void emit_text(const Json& report, std::ostream& out) {
  const Json& body = report.at("result");
  const std::string command = report.at("command");
  out << "family: " << report.at("family").at("name").get<std::string>()
      << "\n";
  if (command == "cohesion") {
    out << "cohesion: " << body.at("summary").get<std::string>() << "\n";
  } else if (command == "closure") {
    out << "k=" << body.at("k") << " closed=" << body.at("closed")
        << " route=" << body.at("route").get<std::string>() << "\n";
  } else if (command == "decider") {
    out << "k=" << body.at("certificate").at("k")
        << " X=" << body.at("certificate").at("X").dump()
        << " verified=" << body.at("verification").at("ok") << "\n";
  } else if (command == "limit-point") {
    out << "witness: " << body.at("canonical").get<std::string>() << "\n";
  } else if (command == "oracle-selftest") {
    out << "ok=" << body.at("ok") << " cut " << body.at("cut_pass") << "/"
        << body.at("cut_checks") << " separations "
        << body.at("separation_pass") << "/" << body.at("separation_checks")
        << "\n";
  } else if (command == "sweep") {
    for (const Json& entry : body) {
      out << "k=" << entry.at("k") << " closed=" << entry.at("closed")
          << " route=" << entry.at("route").get<std::string>() << "\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"analysis toolkit for end tangles of infinite graphs"};
  app.require_subcommand(1);

  CliOptions opt;
  int k = 1;
  int k_max = 4;
  int z_level = 2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", opt.family, "built-in family name");
    cmd->add_option("--param", opt.params, "family parameter key=value");
    cmd->add_option("--family-spec", opt.family_spec_file,
                    "family spec file (family=... / param.<key>=...)");
    cmd->add_option("--window", opt.budgets.window, "truncation level")
        ->envname("ENDTANGLE_WINDOW");
    cmd->add_option("--inner-level", opt.budgets.inner_level,
                    "max separator level")
        ->envname("ENDTANGLE_INNER_LEVEL");
    cmd->add_option("--budget", opt.budgets.budget, "expansion cap")
        ->envname("ENDTANGLE_BUDGET");
    cmd->add_option("--patience", opt.budgets.patience, "plateau length")
        ->envname("ENDTANGLE_PATIENCE");
    cmd->add_option("--seed", opt.budgets.seed, "oracle RNG seed")
        ->envname("ENDTANGLE_SEED");
    cmd->add_option("--emit", opt.emit, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* cmd_cohesion = app.add_subcommand("cohesion", "cohesion report");
  CLI::App* cmd_closure =
      app.add_subcommand("closure", "is the order-< k slice closed?");
  cmd_closure->add_option("--k", k, "separation order bound")->required();
  CLI::App* cmd_decider =
      app.add_subcommand("decider", "find and verify a size-k decider");
  cmd_decider->add_option("--k", k, "decider size")->required();
  CLI::App* cmd_limit =
      app.add_subcommand("limit-point", "tangle member agreeing on a ball");
  cmd_limit->add_option("--k", k, "separation order bound")->required();
  cmd_limit->add_option("--z-level", z_level, "ball level for Z");
  CLI::App* cmd_oracle =
      app.add_subcommand("oracle-selftest", "finite brute-force comparisons");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "closure for k=1..k-max");
  cmd_sweep->add_option("--k-max", k_max, "largest k");
  for (CLI::App* cmd : {cmd_cohesion, cmd_closure, cmd_decider, cmd_limit,
                        cmd_oracle, cmd_sweep}) {
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream diag;
    int code = app.exit(e, diag, diag);
    err << diag.str();
    return code == 0 ? 0 : 1;
  }

  Json report;
  report["schema_version"] = kSchemaVersion;
  int exit_code = 0;
  auto start = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand(cmd_oracle)) {
      report["command"] = "oracle-selftest";
      report["family"] = Json{{"name", "finite-oracle"}, {"params", Json::object()}};
      report["budgets"] = budgets_json(opt.budgets);
      report["result"] = oracle_selftest_json(opt.budgets.seed);
      if (!report["result"]["ok"].get<bool>()) exit_code = 1;
    } else {
      FamilyPtr g = resolve_family(opt);
      report["family"] = family_json(*g);
      report["budgets"] = budgets_json(opt.budgets);
      if (app.got_subcommand(cmd_cohesion)) {
        report["command"] = "cohesion";
        report["result"] = cohesion_json(*g, cohesion(g, opt.budgets));
      } else if (app.got_subcommand(cmd_closure)) {
        report["command"] = "closure";
        report["result"] = closure_json(*g, closure_check(g, k, opt.budgets));
      } else if (app.got_subcommand(cmd_decider)) {
        report["command"] = "decider";
        DeciderCertificate cert = find_relative_decider(g, k, opt.budgets);
        VerifyResult ver =
            verify_decider(g, cert.X, k, opt.budgets.inner_level,
                           opt.budgets.window, opt.budgets);
        Json body;
        body["certificate"] = certificate_json(*g, cert);
        body["verification"] = verify_json(ver);
        report["result"] = body;
        if (!ver.ok) exit_code = 1;
      } else if (app.got_subcommand(cmd_limit)) {
        report["command"] = "limit-point";
        VertexList Z = ball_vertices(*g, z_level);
        OrientedSeparation s = limit_point_witness(g, k, Z, opt.budgets);
        Json body = separation_json(s);
        body["Z"] = labels_json(*g, Z);
        report["result"] = body;
      } else if (app.got_subcommand(cmd_sweep)) {
        report["command"] = "sweep";
        Json per_k = Json::array();
        for (int kk = 1; kk <= k_max; ++kk) {
          try {
            per_k.push_back(closure_json(*g, closure_check(g, kk, opt.budgets)));
          } catch (const Inconclusive& e) {
            Json entry;
            entry["k"] = kk;
            entry["closed"] = nullptr;
            entry["route"] = "inconclusive";
            entry["error"] = e.what();
            per_k.push_back(entry);
            exit_code = 2;
          }
        }
        report["result"] = per_k;
      }
    }
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report["timing"] = Json{{"total_ms", elapsed.count()}};

  if (opt.emit == "json") {
    out << report.dump(2) << "\n";
  } else {
    emit_text(report, out);
  }
  return exit_code;
}

}  // namespace endtangle
