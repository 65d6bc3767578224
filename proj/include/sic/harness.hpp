#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sic/online_algorithm.hpp"
#include "sic/presenter.hpp"
#include "sic/recipe.hpp"
#include "sic/transcript.hpp"

namespace sic {

struct GameReport {
  long long omega_target = 0;
  int colors_used = 0;
  int clique_number = 0;
  long long guaranteed = 0;
  bool proper = false;
  bool sigma_ok = false;
  bool region_ok = false;
  long long rounds = 0;

  /* Every obligation at once: the coloring is proper, the instance respects
   * the strategy's length/region promises and clique bound, and the
   * algorithm was forced through the guaranteed color count. */
  bool ok() const {
    return proper && sigma_ok && region_ok && colors_used >= guaranteed &&
           clique_number <= omega_target;
  }
};

/* Alternates presenter.next() / algorithm.color() / presenter.observe()
 * until the presenter is done. */
Transcript run_game(OnlineAlgorithm& algorithm, Presenter& presenter);

/* Checks a transcript against the recipe's schema: lengths in [1, sigma],
 * containment in [0, m], propriety, clique vs omega, guaranteed colors. */
GameReport evaluate(const Transcript& t, const Recipe& recipe, long long omega);

/* Same checks against explicit bounds, for instances with no recipe behind
 * them; omega_target becomes the measured clique and guaranteed 0. */
GameReport evaluate_plain(const Transcript& t, const Rational& sigma, const Interval& region);

/* Seeded throwaway instances: left endpoints on the grid {k/D} inside
 * [0, window], lengths 1 + (k/D)(sigma-1). Plumbing for sanity checks, not
 * an adversarial strategy. */
std::vector<Interval> random_instance(std::uint64_t seed, int count, const Rational& sigma,
                                      const Rational& window, long max_denominator);

struct GridAlgorithm {
  std::string name;               // "firstfit" | "block"
  std::optional<Rational> sigma;  // block only; absent = adopt the row's sigma
  long b = 0;                     // block only; 0 = denominator of sigma
};

struct RandomBatch {
  int count = 0;      // instances
  int intervals = 0;  // per instance
  Rational sigma = 1;
  Rational window = 10;       // left endpoints drawn from [0, window]
  long max_denominator = 16;  // endpoint granularity
};

struct GridConfig {
  std::vector<GridAlgorithm> algorithms;
  std::vector<RecipePtr> recipes;
  std::vector<long long> omegas;
  std::uint64_t seed = 0;
  Rational epsilon = Rational(1, 100);  // recipe epsilon budget
  std::optional<RandomBatch> random;
};

/* JSON object {algorithms, recipes, omegas, seed, epsilon?, random?}.
 * Algorithms are names or {name, sigma, b} objects. Unknown keys and
 * malformed values throw std::invalid_argument. */
GridConfig parse_grid_config(const std::string& json_text);

struct GridRow {
  std::string algorithm;  // instantiated name, e.g. "block(sigma=2,b=1)"
  std::string recipe;     // canonical recipe text, or "random/<i>"
  GameReport report;
};

/* One row per (algorithm, recipe, omega), then per (algorithm, random
 * instance), in config order. A block algorithm with explicit sigma must
 * cover every recipe's sigma; checked before any game runs. SIC_WORKERS
 * sets the thread fan-out; results are identical for any worker count. */
std::vector<GridRow> experiment_grid(const GridConfig& config);

void write_csv(std::ostream& out, std::span<const GridRow> rows);

}  // namespace sic
