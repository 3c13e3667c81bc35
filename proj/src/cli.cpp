#include "merv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <ostream>

#include "merv/encode.hpp"
#include "merv/equitable.hpp"
#include "merv/io.hpp"
#include "merv/oracle.hpp"
#include "merv/reductions.hpp"
#include "merv/rules.hpp"

namespace merv::cli {
namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string engine = "fast";
  std::uint64_t budget = default_budget();

  Options options() const {
    Options o;
    o.engine = parse_engine(engine);
    o.budget = budget;
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--engine", c.engine, "Canonical labeling engine")->check(CLI::IsMember({"lex", "fast"}));
  app->add_option("--budget", c.budget, "Search node budget");
}

struct ProfileInput {
  Profile profile;
  DecisionSpace space;
};

// The decision comes from --decision, or from a '# decision <D>' comment in
// the file.
ProfileInput load(const std::string& path, const std::string& decision, bool need_decision) {
  std::string text = io::read_file(path);
  Profile p = io::parse_profile_text(text, path);
  DecisionSpace space{Kind::Committee, 1};
  if (!decision.empty()) {
    space = DecisionSpace::parse(decision);
  } else if (auto declared = io::declared_decision(text)) {
    space = *declared;
  } else if (need_decision) {
    throw InputError("no --decision given and none declared in " + path);
  }
  if (need_decision) space.validate(p.m());
  return {std::move(p), space};
}

std::string roles_sidecar(const EncodedGraph& enc) {
  std::string out;
  for (std::size_t v = 0; v < enc.roles.size(); ++v)
    out += "r " + std::to_string(v + 1) + " " + role_letter(enc.roles[v]) + "\n";
  return out;
}

std::string instance_text(const ReductionInstance& inst) {
  return "# decision " + inst.space.to_string() + "\n" + io::write_profile(to_profile(inst.histogram));
}

json alternatives_json(const std::vector<int>& alts) {
  if (alts.empty()) return json::array();
  // Always contiguous: report the range.
  return json::array({alts.front(), alts.back()});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Most equitable voting rules, tie-breaking and ANR verdicts", "merv"};
  app.require_subcommand(1);
  Common common;
  std::string decision, file, file2, output, rule = "app:1", variant = "m2c1", iota = "2", kappa = "m-1";
  bool solve = false, no_fast = false, labeling = false;
  int bounded = 7;

  auto* anr = app.add_subcommand("anr", "ANR-possibility verdict");
  auto* merv_cmd = app.add_subcommand("merv", "Most equitable decision with verification bit");
  auto* tiebreak = app.add_subcommand("tiebreak", "Canonical tie-breaking of an approval rule");
  auto* orbits = app.add_subcommand("orbits", "Automorphism partition of the alternatives");
  for (auto* sc : {anr, merv_cmd, tiebreak, orbits}) {
    add_common(sc, common);
    sc->add_option("file", file, "Profile file")->required();
    sc->add_flag("--no-fast-paths", no_fast, "Always use the graph path");
    sc->add_option("--bounded-m", bounded, "Brute-force threshold on m (0 disables)");
  }
  for (auto* sc : {anr, merv_cmd, tiebreak}) sc->add_option("--decision", decision, "Decision space, C:<k> or L:<k>");
  tiebreak->add_option("--rule", rule, "Approval rule app:<t>");

  auto* encode = app.add_subcommand("encode", "Encode a profile as a graph");
  encode->add_option("file", file, "Profile file")->required();
  encode->add_option("-o,--output", output, "Graph output (roles go to <output>.roles)")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Canonical form of a graph");
  add_common(canon_cmd, common);
  canon_cmd->add_option("file", file, "Graph file")->required();
  canon_cmd->add_flag("--labeling", labeling, "Also print the canonical labeling");

  auto* reduce = app.add_subcommand("reduce", "Build ANR instances from graph problems");
  reduce->require_subcommand(1);
  auto* gi2anr = reduce->add_subcommand("gi2anr", "Graph isomorphism instances");
  gi2anr->add_option("g1", file, "First graph")->required();
  gi2anr->add_option("g2", file2, "Second graph")->required();
  gi2anr->add_option("-o,--output", output, "Output directory")->required();
  gi2anr->add_option("--variant", variant, "m2c1 or mm")->check(CLI::IsMember({"m2c1", "mm"}));
  gi2anr->add_option("--iota", iota, "Vote size function of m (mm variant)");
  gi2anr->add_option("--kappa", kappa, "Decision size function of m (mm variant)");
  auto* ga2anr = reduce->add_subcommand("ga2anr", "Graph automorphism instance");
  ga2anr->add_option("g", file, "Graph")->required();
  ga2anr->add_option("-o,--output", output, "Output profile")->required();
  ga2anr->add_option("--kappa", kappa, "Decision size function of m");
  for (auto* sc : {gi2anr, ga2anr}) {
    add_common(sc, common);
    sc->add_flag("--solve", solve, "Also decide every instance and print the verdict");
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  std::vector<CLI::App*> oracle_prof, oracle_graph;
  for (const char* name : {"anr", "ap", "fpd"}) {
    auto* sc = oracle_cmd->add_subcommand(name, std::string("Brute-force ") + name);
    sc->add_option("file", file, "Profile file")->required();
    if (std::string(name) != "ap") sc->add_option("--decision", decision, "Decision space");
    oracle_prof.push_back(sc);
  }
  for (const char* name : {"canon", "gi", "ga"}) {
    auto* sc = oracle_cmd->add_subcommand(name, std::string("Brute-force ") + name);
    sc->add_option("file", file, "Graph file")->required();
    if (std::string(name) == "gi") sc->add_option("file2", file2, "Second graph file")->required();
    oracle_graph.push_back(sc);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Options opts = common.options();
    opts.fast_paths = !no_fast;
    opts.bounded_m_threshold = bounded;

    if (anr->parsed()) {
      auto in = load(file, decision, true);
      bool ok = anr_verify(in.profile, in.space, opts);
      out << (ok ? "POSSIBLE" : "IMPOSSIBLE") << "\n";
      return ok ? kOk : kImpossible;
    }
    if (merv_cmd->parsed()) {
      auto in = load(file, decision, true);
      out << to_json(clr(in.profile, in.space, opts)) << "\n";
      return kOk;
    }
    if (tiebreak->parsed()) {
      auto in = load(file, decision, true);
      int t = parse_approval_rule(rule);
      auto winners = cowinners(in.profile, t, in.space);
      out << to_json(cltb(in.profile, in.space, winners, opts)) << "\n";
      return kOk;
    }
    if (orbits->parsed()) {
      auto in = load(file, decision, false);
      out << render_partition(compute_ap(hist(in.profile), opts).ap, 0) << "\n";
      return kOk;
    }
    if (encode->parsed()) {
      auto in = load(file, "", false);
      EncodedGraph enc = common_hist_to_graph(hist(in.profile));
      io::write_file(output, io::write_graph(enc.graph));
      io::write_file(output + ".roles", roles_sidecar(enc));
      json rec;
      rec["vertices"] = enc.graph.num_vertices();
      rec["edges"] = enc.graph.num_edges();
      for (Role r : {Role::A, Role::N, Role::V, Role::T, Role::X, Role::Y})
        rec[std::string(1, role_letter(r))] = enc.count(r);
      out << rec.dump() << "\n";
      return kOk;
    }
    if (canon_cmd->parsed()) {
      ColoredGraph g = io::parse_graph(file);
      CanonResult cr = canon(g, opts.canon());
      ColoredGraph c = g.relabeled(cr.labeling);
      out << io::write_graph(c);
      if (labeling) {
        out << "l";
        for (int v : cr.labeling) out << " " << v + 1;
        out << "\n";
      }
      return kOk;
    }
    if (gi2anr->parsed()) {
      ColoredGraph g1 = io::parse_graph(file), g2 = io::parse_graph(file2);
      ReductionBundle b = variant == "mm" ? gi_to_anr_mm(g1, g2, parse_size_fn(iota), parse_size_fn(kappa))
                                          : gi_to_anr_m2c1(g1, g2);
      std::filesystem::path dir(output);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw InputError(output + ": cannot create directory");
      json manifest;
      manifest["variant"] = variant;
      manifest["combiner"] = combiner_name(b.combiner);
      manifest["source_vertices"] = b.source_vertices;
      manifest["complemented"] = b.complemented;
      if (variant == "mm") {
        manifest["case"] = b.case_number;
        manifest["m_star"] = b.m_star;
        manifest["k"] = b.k;
        manifest["x"] = alternatives_json(b.x_alternatives);
        manifest["y"] = alternatives_json(b.y_alternatives);
      }
      json files = json::array();
      std::vector<bool> verdicts;
      for (std::size_t i = 0; i < b.instances.size(); ++i) {
        std::string name = "instance_" + std::to_string(i + 1) + ".prof";
        io::write_file((dir / name).string(), instance_text(b.instances[i]));
        json entry;
        entry["file"] = name;
        entry["decision"] = b.instances[i].space.to_string();
        entry["alternatives"] = b.instances[i].histogram.m();
        if (solve) {
          bool possible = anr_verify(b.instances[i].histogram, b.instances[i].space, opts);
          verdicts.push_back(possible);
          entry["anr"] = possible ? "POSSIBLE" : "IMPOSSIBLE";
        }
        files.push_back(entry);
      }
      manifest["instances"] = files;
      io::write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
      json rec;
      rec["instances"] = b.instances.size();
      rec["combiner"] = combiner_name(b.combiner);
      if (solve) rec["isomorphic"] = combine(b.combiner, verdicts);
      out << rec.dump() << "\n";
      return kOk;
    }
    if (ga2anr->parsed()) {
      ColoredGraph g = io::parse_graph(file);
      GaInstance inst = ga_to_anr(g, parse_size_fn(kappa));
      io::write_file(output, instance_text({inst.histogram, inst.space}));
      json rec;
      rec["alternatives"] = inst.m_star;
      rec["decision"] = inst.space.to_string();
      if (solve) {
        bool possible = anr_verify(inst.histogram, inst.space, opts);
        rec["anr"] = possible ? "POSSIBLE" : "IMPOSSIBLE";
        rec["nontrivial_automorphism"] = !possible;
      }
      out << rec.dump() << "\n";
      return kOk;
    }
    for (auto* sc : oracle_prof) {
      if (!sc->parsed()) continue;
      bool ap_only = sc->get_name() == "ap";
      auto in = load(file, decision, !ap_only);
      Histogram h = hist(in.profile);
      if (ap_only) {
        out << render_partition(oracle::ap_brute(h), 0) << "\n";
        return kOk;
      }
      if (sc->get_name() == "anr") {
        bool ok = oracle::anr_brute(h, in.space);
        out << (ok ? "POSSIBLE" : "IMPOSSIBLE") << "\n";
        return ok ? kOk : kImpossible;
      }
      for (const auto& d : oracle::fpd_brute(h, in.space)) out << d.to_string() << "\n";
      return kOk;
    }
    for (auto* sc : oracle_graph) {
      if (!sc->parsed()) continue;
      ColoredGraph g = io::parse_graph(file);
      if (sc->get_name() == "canon") {
        CanonResult cr = oracle::canon_brute(g);
        out << io::write_graph(g.relabeled(cr.labeling));
      } else if (sc->get_name() == "gi") {
        out << (oracle::gi_brute(g, io::parse_graph(file2)) ? "YES" : "NO") << "\n";
      } else {
        out << (oracle::ga_brute(g) ? "YES" : "NO") << "\n";
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  err << "no command\n";
  return kUsage;
}

}  // namespace merv::cli
