#include "sic/recipe.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sic {

namespace {

long long to_ll(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("count out of range: " + v.get_str());
  return v.get_si();
}

long long floor_ll(const Rational& r) { return to_ll(r.floor()); }
long long ceil_ll(const Rational& r) { return to_ll(r.ceil()); }

struct Draft {
  Recipe::Kind kind = Recipe::Kind::Base;
  std::unique_ptr<Draft> inner;
  std::optional<Rational> eps, gamma;
  std::optional<long> levels;
};

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("recipe parse error at offset " + std::to_string(pos) + ": " +
                                what);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return std::string(s.substr(start, pos - start));
  }
  std::string value_token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a value");
    return std::string(s.substr(start, pos - start));
  }

  std::unique_ptr<Draft> parse_node() {
    std::string name = ident();
    auto node = std::make_unique<Draft>();
    if (name == "base" || name == "clique") return node;
    if (name == "lower32")
      node->kind = Recipe::Kind::Lower32;
    else if (name == "lower53")
      node->kind = Recipe::Kind::Lower53;
    else if (name == "lower74")
      node->kind = Recipe::Kind::Lower74;
    else if (name == "lower52")
      node->kind = Recipe::Kind::Lower52;
    else
      fail("unknown recipe '" + name + "'");
    if (!eat('(')) fail("expected '(' after '" + name + "'");
    node->inner = parse_node();
    while (eat(',')) {
      std::string key = ident();
      if (!eat('=')) fail("expected '=' after '" + key + "'");
      std::string val = value_token();
      if (key == "eps" && !node->eps) {
        node->eps = Rational::parse(val);
      } else if (key == "gamma" && !node->gamma) {
        node->gamma = Rational::parse(val);
      } else if (key == "n" && !node->levels) {
        Rational v = Rational::parse(val);
        if (v.den() != 1 || !v.num().fits_slong_p()) fail("n must be a small integer");
        node->levels = v.num().get_si();
      } else if (key == "eps" || key == "gamma" || key == "n") {
        fail("duplicate key '" + key + "'");
      } else {
        fail("unknown key '" + key + "'");
      }
    }
    if (!eat(')')) fail("expected ')'");
    return node;
  }
};

long count_wrappers(const Draft& d) {
  return d.inner ? 1 + count_wrappers(*d.inner) : 0;
}

RecipePtr materialize(const Draft& d, const Rational& eps_share, const RecipeDefaults& defaults) {
  auto r = std::make_shared<Recipe>();
  r->kind = d.kind;
  if (!d.inner) return r;

  r->inner = materialize(*d.inner, eps_share, defaults);
  r->eps = d.eps ? *d.eps : eps_share;
  if (r->eps <= 0) throw std::invalid_argument("recipe needs eps > 0");

  if (d.kind == Recipe::Kind::Lower52) {
    if (d.gamma)
      r->gamma = *d.gamma;
    else if (defaults.gamma)
      r->gamma = *defaults.gamma;
    else
      throw std::invalid_argument("lower52 needs gamma (key gamma= or a default)");
    if (r->gamma <= 0 || r->gamma >= 1)
      throw std::invalid_argument("lower52 needs gamma strictly between 0 and 1");
    long min_levels = f_gamma(r->gamma);
    if (d.levels)
      r->levels = *d.levels;
    else if (defaults.levels)
      r->levels = *defaults.levels;
    else
      r->levels = min_levels;
    if (r->levels < min_levels)
      throw std::invalid_argument("lower52 needs n >= " + std::to_string(min_levels) +
                                  " for gamma = " + r->gamma.str());
  } else if (d.gamma || d.levels) {
    throw std::invalid_argument("gamma/n only apply to lower52");
  }
  return r;
}

}  // namespace

RecipePtr parse_recipe(std::string_view text, const RecipeDefaults& defaults) {
  Parser p{text};
  auto draft = p.parse_node();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  long wrappers = count_wrappers(*draft);
  Rational share = wrappers > 0 ? defaults.eps / wrappers : Rational(0);
  return materialize(*draft, share, defaults);
}

std::string Recipe::str() const {
  switch (kind) {
    case Kind::Base:
      return "base";
    case Kind::Lower32:
      return "lower32(" + inner->str() + ",eps=" + eps.str() + ")";
    case Kind::Lower53:
      return "lower53(" + inner->str() + ",eps=" + eps.str() + ")";
    case Kind::Lower74:
      return "lower74(" + inner->str() + ",eps=" + eps.str() + ")";
    case Kind::Lower52:
      return "lower52(" + inner->str() + ",gamma=" + gamma.str() + ",n=" +
             std::to_string(levels) + ",eps=" + eps.str() + ")";
  }
  return "base";
}

SchemaParams schema_params(const Recipe& r) {
  if (r.kind == Recipe::Kind::Base) return {1, 1, 1};
  SchemaParams in = schema_params(*r.inner);
  switch (r.kind) {
    case Recipe::Kind::Lower32:
      return {2 - Rational(1) / (in.alpha + 1), in.m + r.eps, in.m + 1 + r.eps};
    case Recipe::Kind::Lower53:
      return {2 - Rational(1) / (in.alpha + 2), in.m + r.eps, in.m + 2 + r.eps};
    case Recipe::Kind::Lower74:
      return {2 - Rational(1) / (2 * in.alpha + 2), 2 * in.m + r.eps, 2 * in.m + 2 + r.eps};
    case Recipe::Kind::Lower52: {
      Rational span = pow(Rational(4), static_cast<unsigned long>(r.levels)) * in.m + r.eps;
      return {Rational(5, 4) + (1 - r.gamma) / 2 * in.alpha, span, span};
    }
    default:
      throw std::logic_error("unhandled recipe kind");
  }
}

long long guaranteed_colors(const Recipe& r, long long omega) {
  if (omega <= 0) return 0;
  if (r.kind == Recipe::Kind::Base) return omega;
  Rational alpha = schema_params(*r.inner).alpha;
  switch (r.kind) {
    case Recipe::Kind::Lower32: {
      long long wp = floor_ll(Rational(omega) / (alpha + 1));
      return guaranteed_colors(*r.inner, wp) + omega;
    }
    case Recipe::Kind::Lower53: {
      long long wp = floor_ll(Rational(omega) / (alpha + 2));
      return guaranteed_colors(*r.inner, wp) + wp + omega;
    }
    case Recipe::Kind::Lower74: {
      long long wp = floor_ll(Rational(omega) / (alpha + 1));
      return guaranteed_colors(*r.inner, wp) + wp + ceil_ll(Rational(omega) / (2 * alpha + 2)) +
             omega - wp;
    }
    case Recipe::Kind::Lower52: {
      long long wp = omega / 2;
      long long cin = guaranteed_colors(*r.inner, wp);
      Rational rho = (3 + r.gamma) / 3;
      long long grown = ceil_ll(pow(rho, static_cast<unsigned long>(r.levels)) * cin);
      long long shared = ceil_ll((1 - r.gamma) * cin);
      long long case1 = grown + wp;
      long long case21 = 2 * wp + ceil_ll(Rational(omega) / 4) + shared;
      long long case22 = 2 * wp + omega / 4 + shared;
      return std::min(case1, std::min(case21, case22));
    }
    default:
      throw std::logic_error("unhandled recipe kind");
  }
}

long f_gamma(const Rational& gamma) {
  if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("gamma must be in (0, 1)");
  Rational goal = Rational(5, 2) - gamma;
  Rational step = 1 + gamma / 3, acc = 1;
  for (long n = 1; n <= 1000000; ++n) {
    acc *= step;
    if (acc >= goal) return n;
  }
  throw std::invalid_argument("gamma too small");
}

namespace {

double closed_form(const std::string& family, long k, const Rational& gamma) {
  if (family == "lower32") {
    BigInt hi, lo;
    mpz_fib_ui(hi.get_mpz_t(), static_cast<unsigned long>(2 * k + 2));
    mpz_fib_ui(lo.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
    return Rational(hi, lo).to_double();
  }
  if (family == "lower53") {
    double s = std::sqrt(3.0);
    double up = std::pow(s - 2, k), down = std::pow(-s - 2, k);
    return ((s - 3) * up + (s + 3) * down) / ((s - 1) * up + (s + 1) * down);
  }
  if (family == "lower74") {
    double s = std::sqrt(7.0);
    double up = std::pow(s - 3, k), down = std::pow(-s - 3, k);
    return ((s - 4) * up + (s + 4) * down) / ((s - 1) * up + (s + 1) * down);
  }
  if (family == "lower52") {
    Rational decay = pow((1 - gamma) / 2, static_cast<unsigned long>(k));
    Rational exact = (5 - (3 - 2 * gamma) * decay) / (2 * (1 + gamma));
    return exact.to_double();
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

std::vector<TableRow> recurrence_table(const std::string& family, long iterations,
                                       const Rational& gamma) {
  if (iterations < 0 || iterations > 100)
    throw std::invalid_argument("iterations must be in [0, 100]");
  long f = family == "lower52" ? f_gamma(gamma) : 0;

  std::vector<TableRow> rows;
  Rational alpha = 1, sigma = 1, m = 1;
  for (long k = 0; k <= iterations; ++k) {
    if (k > 0) {
      if (family == "lower32") {
        alpha = 2 - Rational(1) / (alpha + 1);
        sigma = m;
        m = m + 1;
      } else if (family == "lower53") {
        alpha = 2 - Rational(1) / (alpha + 2);
        sigma = m;
        m = m + 2;
      } else if (family == "lower74") {
        alpha = 2 - Rational(1) / (2 * alpha + 2);
        sigma = 2 * m;
        m = 2 * m + 2;
      } else if (family == "lower52") {
        alpha = Rational(5, 4) + (1 - gamma) / 2 * alpha;
        m = pow(Rational(4), static_cast<unsigned long>(f)) * m;
        sigma = m;
      } else {
        throw std::invalid_argument("unknown family '" + family + "'");
      }
    }
    rows.push_back(TableRow{k, alpha, sigma, m, closed_form(family, k, gamma)});
  }
  return rows;
}

double family_limit(const std::string& family, const Rational& gamma) {
  if (family == "lower32") return (1 + std::sqrt(5.0)) / 2;
  if (family == "lower53") return std::sqrt(3.0);
  if (family == "lower74") return (1 + std::sqrt(7.0)) / 2;
  if (family == "lower52") return 5.0 / (2 * (1 + gamma.to_double()));
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace sic
