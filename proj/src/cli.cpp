#include "sic/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sic/harness.hpp"
#include "sic/oracles.hpp"
#include "sic/presenters.hpp"

namespace sic {
namespace {

constexpr double kTableAgreement = 1e-9;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::invalid_argument("failed writing " + path);
}

void print_report(const std::string& algorithm, const std::string& recipe,
                  const GameReport& r) {
  std::cout << "algorithm: " << algorithm << '\n'
            << "recipe: " << recipe << '\n'
            << "omega: " << r.omega_target << '\n'
            << "rounds: " << r.rounds << '\n'
            << "colors_used: " << r.colors_used << '\n'
            << "guaranteed: " << r.guaranteed << '\n'
            << "clique: " << r.clique_number << '\n'
            << "proper: " << (r.proper ? "true" : "false") << '\n'
            << "sigma_ok: " << (r.sigma_ok ? "true" : "false") << '\n'
            << "region_ok: " << (r.region_ok ? "true" : "false") << '\n'
            << "ok: " << (r.ok() ? "true" : "false") << '\n';
}

struct PlayFlags {
  std::string algorithm, recipe, out;
  long long omega = 0;
  std::string sigma, epsilon, gamma;
  long b = 0;
  long levels = -1;
};

int cmd_play(const PlayFlags& f) {
  RecipeDefaults defaults;
  if (!f.epsilon.empty()) defaults.eps = Rational::parse(f.epsilon);
  if (!f.gamma.empty()) defaults.gamma = Rational::parse(f.gamma);
  if (f.levels >= 0) defaults.levels = f.levels;
  RecipePtr recipe = parse_recipe(f.recipe, defaults);

  if (f.algorithm == "firstfit" && (!f.sigma.empty() || f.b != 0))
    throw std::invalid_argument("firstfit takes no --sigma/--b");
  Rational schema_sigma = schema_params(*recipe).sigma;
  Rational sigma = f.sigma.empty() ? schema_sigma : Rational::parse(f.sigma);
  if (f.algorithm == "block" && sigma < schema_sigma)
    throw std::invalid_argument("block sigma " + sigma.str() + " cannot color " + recipe->str() +
                                " (lengths up to " + schema_sigma.str() + ")");

  auto alg = make_algorithm(f.algorithm, sigma, f.b);
  auto presenter = make_presenter(recipe, f.omega);
  Transcript t = run_game(*alg, *presenter);
  if (!f.out.empty()) write_file(f.out, t.to_json() + "\n");

  GameReport report = evaluate(t, *recipe, f.omega);
  print_report(alg->name(), recipe->str(), report);
  return report.ok() ? 0 : 1;
}

struct TableFlags {
  std::string family, gamma;
  long iterations = 0;
};

int cmd_table(const TableFlags& f) {
  Rational gamma = f.gamma.empty() ? Rational(0) : Rational::parse(f.gamma);
  auto rows = recurrence_table(f.family, f.iterations, gamma);

  std::printf("family: %s\n", f.family.c_str());
  std::printf("%-4s %-22s %-16s %-16s %-18s %s\n", "k", "alpha", "alpha~", "closed_form",
              "sigma", "m");
  bool agree = true;
  for (const TableRow& row : rows) {
    double a = row.alpha.to_double();
    bool row_ok = std::fabs(a - row.closed_form) <= kTableAgreement;
    agree = agree && row_ok;
    std::string sigma = row.sigma.str() + (row.k > 0 ? "+eps" : "");
    std::string m = row.m.str() + (row.k > 0 ? "+eps" : "");
    std::printf("%-4ld %-22s %-16.12f %-16.12f %-18s %s%s\n", row.k, row.alpha.str().c_str(), a,
                row.closed_form, sigma.c_str(), m.c_str(), row_ok ? "" : "  [DISAGREES]");
  }
  std::printf("limit: %.12f\n", family_limit(f.family, gamma));
  std::printf("agreement: %s (tolerance %g)\n", agree ? "ok" : "FAILED", kTableAgreement);
  return agree ? 0 : 1;
}

struct ReplayFlags {
  std::string in, sigma, region;
  long long omega = 0;
};

int cmd_replay(const ReplayFlags& f) {
  Transcript t = Transcript::from_json(read_file(f.in));
  Rational sigma = Rational::parse(f.sigma);

  auto colon = f.region.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("region must be \"left:right\" with rational endpoints");
  Interval region(Rational::parse(f.region.substr(0, colon)),
                  Rational::parse(f.region.substr(colon + 1)));

  auto xs = t.intervals();
  int clique = clique_number(xs);
  bool proper = !verify_proper(t).has_value();
  BoundsReport b = bounds_report(t, sigma, region);
  bool ok = proper && clique <= f.omega && b.within_sigma && b.contained;

  std::cout << "rounds: " << t.size() << '\n'
            << "colors_used: " << t.distinct_colors() << '\n'
            << "clique: " << clique << " (bound " << f.omega << ")" << '\n'
            << "proper: " << (proper ? "true" : "false") << '\n'
            << "sigma_ok: " << (b.within_sigma ? "true" : "false") << '\n'
            << "region_ok: " << (b.contained ? "true" : "false") << '\n'
            << "ok: " << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

struct GridFlags {
  std::string config, out;
};

int cmd_grid(const GridFlags& f) {
  GridConfig cfg = parse_grid_config(read_file(f.config));
  auto rows = experiment_grid(cfg);

  std::ostringstream csv;
  write_csv(csv, rows);
  if (f.out.empty())
    std::cout << csv.str();
  else
    write_file(f.out, csv.str());

  bool all_ok = true;
  for (const GridRow& row : rows) all_ok = all_ok && row.report.ok();
  std::cerr << "rows: " << rows.size() << ", all_ok: " << (all_ok ? "true" : "false") << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Online interval coloring: block algorithm, adversary strategies, game harness"};
  app.require_subcommand(1);

  PlayFlags play;
  auto* cmd_p = app.add_subcommand("play", "Run one game and validate the outcome");
  cmd_p->add_option("--algorithm", play.algorithm, "firstfit | block")
      ->required()
      ->check(CLI::IsMember({"firstfit", "block"}));
  cmd_p->add_option("--recipe", play.recipe, "strategy recipe, e.g. \"lower53(base)\"")
      ->required();
  cmd_p->add_option("--omega", play.omega, "clique bound the strategy plays to")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_p->add_option("--sigma", play.sigma, "block algorithm sigma as p/q (default: recipe's)");
  cmd_p->add_option("--b", play.b, "block granularity (default: denominator of sigma)")
      ->check(CLI::NonNegativeNumber);
  cmd_p->add_option("--epsilon", play.epsilon, "recipe epsilon budget as p/q (default 1/100)");
  cmd_p->add_option("--gamma", play.gamma, "default gamma for lower52 recipes, as p/q");
  cmd_p->add_option("--n", play.levels, "default n for lower52 recipes")
      ->check(CLI::NonNegativeNumber);
  cmd_p->add_option("--out", play.out, "write the transcript JSON here");

  TableFlags table;
  auto* cmd_t = app.add_subcommand("table", "Print an iterated-construction table");
  cmd_t->add_option("--family", table.family, "lower32 | lower53 | lower74 | lower52")
      ->required()
      ->check(CLI::IsMember({"lower32", "lower53", "lower74", "lower52"}));
  cmd_t->add_option("--iterations", table.iterations, "rows to print (k = 0..n)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_t->add_option("--gamma", table.gamma, "gamma for lower52, as p/q");

  ReplayFlags replay;
  auto* cmd_r = app.add_subcommand("replay", "Re-validate a stored transcript");
  cmd_r->add_option("--in", replay.in, "transcript JSON file")->required();
  cmd_r->add_option("--omega", replay.omega, "clique bound to check against")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_r->add_option("--sigma", replay.sigma, "length bound as p/q")->required();
  cmd_r->add_option("--region", replay.region, "containment region as left:right")->required();

  GridFlags grid;
  auto* cmd_g = app.add_subcommand("grid", "Run an experiment grid from a JSON config");
  cmd_g->add_option("--config", grid.config, "grid config JSON file")->required();
  cmd_g->add_option("--out", grid.out, "write the CSV here (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_p)) return cmd_play(play);
    if (app.got_subcommand(cmd_t)) return cmd_table(table);
    if (app.got_subcommand(cmd_r)) return cmd_replay(replay);
    if (app.got_subcommand(cmd_g)) return cmd_grid(grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sic
