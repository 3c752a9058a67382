// Command-line surface. Subcommands:
//
//   arq gamma        AR quiver export (dot or json)
//   crystal gen      generate a highest-weight crystal graph
//   crystal verify   re-check the crystal axioms on a saved graph
//   crystal compare-ssyt   compare a module crystal with the tableau crystal
//   kr gen           Kirillov-Reshetikhin graph (affine color 0 included)
//   promote          apply the promotion operator to a saved module class
//   eps-star         print the eps^* string vector of a saved module class
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#pragma once

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "promotion.hpp"
#include "tableaux.hpp"

namespace arcrystal::cli {

inline Quiver parse_quiver(const std::string& family, int rank, const std::string& arrows) {
  QuiverSpec spec;
  if (family == "A")
    spec.family = Family::A;
  else if (family == "D")
    spec.family = Family::D;
  else
    throw std::invalid_argument("--family must be A or D");
  spec.rank = rank;
  if (arrows == "standard") {
    if (spec.family != Family::A)
      throw std::invalid_argument("--arrows standard is the type A orientation n>n-1>...>1");
    for (int i = rank; i >= 2; --i) spec.arrows.emplace_back(i, i - 1);
  } else {
    std::stringstream ss(arrows);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto gt = tok.find('>');
      if (gt == std::string::npos)
        throw std::invalid_argument("arrow '" + tok + "' is not of the form a>b");
      spec.arrows.emplace_back(std::stoi(tok.substr(0, gt)), std::stoi(tok.substr(gt + 1)));
    }
  }
  return build_quiver(spec);
}

inline DimVector parse_weight(const std::string& hw, int rank) {
  DimVector lambda;
  std::stringstream ss(hw);
  std::string tok;
  while (std::getline(ss, tok, ',')) lambda.push_back(std::stoi(tok));
  if (static_cast<int>(lambda.size()) != rank)
    throw std::invalid_argument("--hw needs exactly rank entries");
  return lambda;
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crystal graphs from Auslander-Reiten quivers"};
  app.require_subcommand(1);

  std::string family = "A", arrows = "standard", format = "dot", in_path, hw;
  int rank = 1, jj = 1, mm = 1, threads = 1;
  std::size_t max_nodes = 1'000'000;

  auto add_quiver_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "Dynkin family (A or D)");
    cmd->add_option("--rank", rank, "number of vertices")->required();
    cmd->add_option("--arrows", arrows, "comma list a>b, or 'standard'");
  };

  CLI::App* arq = app.add_subcommand("arq", "Auslander-Reiten quiver commands");
  arq->require_subcommand(1);
  CLI::App* gamma = arq->add_subcommand("gamma", "export the AR quiver");
  add_quiver_opts(gamma);
  gamma->add_option("--out", format, "dot or json");

  CLI::App* crystal = app.add_subcommand("crystal", "crystal graph commands");
  crystal->require_subcommand(1);
  CLI::App* gen = crystal->add_subcommand("gen", "generate a highest-weight crystal");
  add_quiver_opts(gen);
  gen->add_option("--hw", hw, "highest weight pairings c1,...,cN")->required();
  gen->add_option("--format", format, "dot or json");
  gen->add_option("--max-nodes", max_nodes, "node cap");
  gen->add_option("--threads", threads, "worker threads for graph generation");

  CLI::App* verify = crystal->add_subcommand("verify", "check the axioms of a saved graph");
  verify->add_option("--in", in_path, "crystal graph json")->required();

  CLI::App* compare = crystal->add_subcommand("compare-ssyt", "compare with the tableau crystal");
  compare->add_option("--rank", rank, "type A rank")->required();
  compare->add_option("--j", jj, "rows")->required();
  compare->add_option("--m", mm, "columns")->required();

  CLI::App* kr = app.add_subcommand("kr", "Kirillov-Reshetikhin commands");
  kr->require_subcommand(1);
  CLI::App* krgen = kr->add_subcommand("gen", "generate the affine crystal");
  krgen->add_option("--rank", rank, "type A rank")->required();
  krgen->add_option("--j", jj, "rows")->required();
  krgen->add_option("--m", mm, "columns")->required();
  krgen->add_option("--format", format, "dot or json");
  krgen->add_option("--max-nodes", max_nodes, "node cap");
  krgen->add_option("--threads", threads, "worker threads");

  CLI::App* prom = app.add_subcommand("promote", "promotion operator on a module class");
  prom->add_option("--in", in_path, "module class json")->required();
  prom->add_option("--j", jj, "rows")->required();
  prom->add_option("--m", mm, "columns")->required();

  CLI::App* estar = app.add_subcommand("eps-star", "print the eps^* vector");
  estar->add_option("--in", in_path, "module class json")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gamma->parsed()) {
      ARQuiver ar = build_ar_quiver(parse_quiver(family, rank, arrows));
      if (format == "dot")
        out << gamma_to_dot(ar);
      else if (format == "json")
        out << gamma_to_json(ar).dump(2) << "\n";
      else
        throw std::invalid_argument("--out must be dot or json");
      return 0;
    }
    if (gen->parsed()) {
      CrystalModel model(parse_quiver(family, rank, arrows));
      GenOptions opts;
      opts.max_nodes = max_nodes;
      opts.threads = threads;
      CrystalGraph g = generate_crystal(model, parse_weight(hw, rank), opts);
      if (format == "dot")
        out << graph_to_dot(g);
      else if (format == "json")
        out << graph_to_json(g, &model.ar()).dump(2) << "\n";
      else
        throw std::invalid_argument("--format must be dot or json");
      return 0;
    }
    if (verify->parsed()) {
      CrystalGraph g = graph_from_json(load_json(in_path));
      auto report = check_axioms(g);
      for (const std::string& line : report) out << line << "\n";
      if (report.empty()) {
        out << "ok: " << g.size() << " nodes, " << g.edges.size() << " edges\n";
        return 0;
      }
      return 1;
    }
    if (compare->parsed()) {
      PromotionContext ctx(rank);
      CrystalGraph module_side = generate_crystal(ctx.base(), rect_weight(rank, jj, mm));
      CrystalGraph tableau_side = tableau_crystal(rank, jj, mm);
      auto iso = graph_iso(module_side, tableau_side);
      if (iso) {
        out << "isomorphic: " << module_side.size() << " nodes\n";
        return 0;
      }
      out << "not isomorphic\n";
      return 1;
    }
    if (krgen->parsed()) {
      PromotionContext ctx(rank);
      GenOptions opts;
      opts.max_nodes = max_nodes;
      opts.threads = threads;
      CrystalGraph g = kr_graph(ctx, mm, jj, opts);
      if (format == "dot")
        out << graph_to_dot(g);
      else if (format == "json")
        out << graph_to_json(g, &ctx.base().ar()).dump(2) << "\n";
      else
        throw std::invalid_argument("--format must be dot or json");
      return 0;
    }
    if (prom->parsed()) {
      nlohmann::json j = load_json(in_path);
      Quiver q = quiver_from_json(j.at("quiver"));
      if (!is_standard_type_a(q))
        throw std::invalid_argument("promotion needs type A with the standard orientation");
      PromotionContext ctx(q.rank);
      ModClass m = modclass_from_json(ctx.base().ar(), j);
      PrTrace trace;
      ModClass pr = promote(ctx, m, mm, jj, &trace);
      if (trace.pure_removals)
        err << "note: " << trace.pure_removals << " T-step(s) removed a summand without replacement\n";
      out << modclass_to_json(ctx.base().ar(), pr).dump(2) << "\n";
      return 0;
    }
    if (estar->parsed()) {
      nlohmann::json j = load_json(in_path);
      CrystalModel model(quiver_from_json(j.at("quiver")));
      ModClass m = modclass_from_json(model.ar(), j);
      for (int i = 1; i <= model.rank(); ++i) {
        if (i > 1) out << " ";
        out << eps_star(model, m, i);
      }
      out << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace arcrystal::cli
