#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sic/rational.hpp"

namespace sic {

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

/* A presenter strategy, either the one-block clique game or one of the
 * recursive constructions wrapped around an inner recipe. */
struct Recipe {
  enum class Kind { Base, Lower32, Lower53, Lower74, Lower52 };

  Kind kind = Kind::Base;
  RecipePtr inner;   // null iff Base
  Rational eps = 0;  // every wrapper carries a concrete epsilon after parsing
  Rational gamma = 0;
  long levels = 0;  // Lower52's n: 4^n sub-games

  std::string str() const;  // canonical text; parse_recipe(str()) round-trips
};

struct RecipeDefaults {
  Rational eps = Rational(1, 100);  // budget split evenly over wrappers lacking eps=
  std::optional<Rational> gamma;
  std::optional<long> levels;  // defaults to the minimum legal n for the gamma
};

/* Grammar: "base" | "clique" | wrapper "(" recipe {"," key "=" value} ")"
 * with wrapper in {lower32, lower53, lower74, lower52} and keys eps, gamma, n.
 * Throws std::invalid_argument on syntax or constraint violations. */
RecipePtr parse_recipe(std::string_view text, const RecipeDefaults& defaults = {});

struct SchemaParams {
  Rational alpha;  // guaranteed colors / omega, asymptotically
  Rational sigma;  // longest interval the strategy introduces
  Rational m;      // all intervals stay inside [0, m]
};

SchemaParams schema_params(const Recipe& r);

/* Colors forced against any proper online algorithm at clique bound omega. */
long long guaranteed_colors(const Recipe& r, long long omega);

/* Smallest n with (1 + gamma/3)^n >= 5/2 - gamma; gamma in (0,1). */
long f_gamma(const Rational& gamma);

/* One row of a family's iterated-construction table. sigma and m are the
 * epsilon-free parts (the true values add an epsilon of slack). */
struct TableRow {
  long k = 0;
  Rational alpha;
  Rational sigma, m;
  double closed_form = 0;  // alpha_k via the family's closed form
};

/* Families: lower32, lower53, lower74 (gamma ignored), lower52 (gamma used).
 * Row 0 is the base strategy. */
std::vector<TableRow> recurrence_table(const std::string& family, long iterations,
                                       const Rational& gamma);

/* alpha_k limit as k grows: (1+sqrt(5))/2, sqrt(3), (1+sqrt(7))/2, or
 * 5/(2(1+gamma)) respectively. */
double family_limit(const std::string& family, const Rational& gamma);

}  // namespace sic
