#include "sic/harness.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "sic/oracles.hpp"
#include "sic/presenters.hpp"

namespace sic {

Transcript run_game(OnlineAlgorithm& algorithm, Presenter& presenter) {
  Transcript t;
  while (auto iv = presenter.next()) {
    int c = algorithm.color(*iv);
    presenter.observe(c);
    t.entries.push_back({*iv, c});
  }
  return t;
}

GameReport evaluate(const Transcript& t, const Recipe& recipe, long long omega) {
  SchemaParams params = schema_params(recipe);
  GameReport r;
  r.omega_target = omega;
  r.colors_used = t.distinct_colors();
  auto xs = t.intervals();
  r.clique_number = clique_number(xs);
  r.guaranteed = guaranteed_colors(recipe, omega);
  r.proper = !verify_proper(t).has_value();
  BoundsReport b = bounds_report(t, params.sigma, Interval(0, params.m));
  r.sigma_ok = b.within_sigma;
  r.region_ok = b.contained;
  r.rounds = static_cast<long long>(t.size());
  return r;
}

GameReport evaluate_plain(const Transcript& t, const Rational& sigma, const Interval& region) {
  GameReport r;
  r.colors_used = t.distinct_colors();
  auto xs = t.intervals();
  r.clique_number = clique_number(xs);
  r.omega_target = r.clique_number;
  r.guaranteed = 0;
  r.proper = !verify_proper(t).has_value();
  BoundsReport b = bounds_report(t, sigma, region);
  r.sigma_ok = b.within_sigma;
  r.region_ok = b.contained;
  r.rounds = static_cast<long long>(t.size());
  return r;
}

std::vector<Interval> random_instance(std::uint64_t seed, int count, const Rational& sigma,
                                      const Rational& window, long max_denominator) {
  if (count < 0) throw std::invalid_argument("negative instance size");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  if (!(window > 0)) throw std::invalid_argument("window must be positive");

  std::mt19937_64 rng(seed);
  auto randint = [&rng](unsigned long n) -> unsigned long {  // uniform-ish over [0, n]
    return n == 0 ? 0 : static_cast<unsigned long>(rng() % (n + 1));
  };

  BigInt grid = (window * max_denominator).floor();
  if (!grid.fits_ulong_p()) throw std::overflow_error("window too wide for the endpoint grid");
  unsigned long left_steps = grid.get_ui();

  std::vector<Interval> xs;
  xs.reserve(static_cast<std::size_t>(count));
  Rational stretch = sigma - 1;
  for (int i = 0; i < count; ++i) {
    Rational left(BigInt(randint(left_steps)), BigInt(max_denominator));
    Rational length =
        Rational(1) +
        Rational(BigInt(randint(static_cast<unsigned long>(max_denominator))),
                 BigInt(max_denominator)) *
            stretch;
    xs.emplace_back(left, left + length);
  }
  return xs;
}

namespace {

Rational json_rational(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("config key \"" + key + "\" must be an integer or \"p/q\" string");
}

long json_long(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer())
    throw std::invalid_argument("config key \"" + key + "\" must be an integer");
  return v.get<long>();
}

void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) throw std::invalid_argument("invalid config key \"" + it.key() + "\" in " + where);
  }
}

GridAlgorithm parse_algorithm(const nlohmann::json& v) {
  GridAlgorithm a;
  if (v.is_string()) {
    a.name = v.get<std::string>();
  } else if (v.is_object()) {
    require_keys(v, {"name", "sigma", "b"}, "algorithms");
    if (!v.contains("name") || !v["name"].is_string())
      throw std::invalid_argument("algorithm entries need a string \"name\"");
    a.name = v["name"].get<std::string>();
    if (v.contains("sigma")) a.sigma = json_rational(v["sigma"], "sigma");
    if (v.contains("b")) a.b = json_long(v["b"], "b");
  } else {
    throw std::invalid_argument("algorithm entries must be names or objects");
  }
  if (a.name != "firstfit" && a.name != "block")
    throw std::invalid_argument("unknown algorithm \"" + a.name + "\"");
  if (a.name == "firstfit" && (a.sigma || a.b != 0))
    throw std::invalid_argument("firstfit takes no sigma/b");
  if (a.b < 0) throw std::invalid_argument("b must be >= 0");
  if (a.sigma && *a.sigma < 1) throw std::invalid_argument("block sigma must be >= 1");
  return a;
}

}  // namespace

GridConfig parse_grid_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  require_keys(j, {"algorithms", "recipes", "omegas", "seed", "epsilon", "random"}, "config");

  GridConfig cfg;
  if (j.contains("epsilon")) cfg.epsilon = json_rational(j["epsilon"], "epsilon");
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      throw std::invalid_argument("seed must be a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }

  if (!j.contains("algorithms") || !j["algorithms"].is_array() || j["algorithms"].empty())
    throw std::invalid_argument("config needs a nonempty \"algorithms\" array");
  for (const auto& v : j["algorithms"]) cfg.algorithms.push_back(parse_algorithm(v));

  if (j.contains("recipes")) {
    if (!j["recipes"].is_array()) throw std::invalid_argument("\"recipes\" must be an array");
    RecipeDefaults defaults;
    defaults.eps = cfg.epsilon;
    for (const auto& v : j["recipes"]) {
      if (!v.is_string()) throw std::invalid_argument("recipe entries must be strings");
      cfg.recipes.push_back(parse_recipe(v.get<std::string>(), defaults));
    }
  }

  if (j.contains("omegas")) {
    if (!j["omegas"].is_array()) throw std::invalid_argument("\"omegas\" must be an array");
    for (const auto& v : j["omegas"]) {
      long long w = json_long(v, "omegas");
      if (w < 1) throw std::invalid_argument("omegas must be >= 1");
      cfg.omegas.push_back(w);
    }
  }

  if (j.contains("random")) {
    const auto& r = j["random"];
    if (!r.is_object()) throw std::invalid_argument("\"random\" must be an object");
    require_keys(r, {"count", "intervals", "sigma", "window", "max_denominator"}, "random");
    RandomBatch rb;
    if (!r.contains("count") || !r.contains("intervals"))
      throw std::invalid_argument("random needs \"count\" and \"intervals\"");
    rb.count = static_cast<int>(json_long(r["count"], "count"));
    rb.intervals = static_cast<int>(json_long(r["intervals"], "intervals"));
    if (rb.count < 1 || rb.intervals < 1)
      throw std::invalid_argument("random count/intervals must be >= 1");
    if (r.contains("sigma")) rb.sigma = json_rational(r["sigma"], "sigma");
    if (r.contains("window")) rb.window = json_rational(r["window"], "window");
    if (r.contains("max_denominator"))
      rb.max_denominator = json_long(r["max_denominator"], "max_denominator");
    if (rb.sigma < 1) throw std::invalid_argument("random sigma must be >= 1");
    if (!(rb.window > 0)) throw std::invalid_argument("random window must be positive");
    if (rb.max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    cfg.random = rb;
  }

  return cfg;
}

namespace {

struct RowTask {
  const GridAlgorithm* alg = nullptr;
  RecipePtr recipe;     // null for random rows
  long long omega = 0;  // recipe rows only
  int batch = -1;       // random rows only
};

GridRow run_row(const GridConfig& cfg, const RowTask& task,
                std::span<const std::vector<Interval>> batches) {
  if (task.recipe) {
    Rational sigma =
        task.alg->sigma ? *task.alg->sigma : schema_params(*task.recipe).sigma;
    auto alg = make_algorithm(task.alg->name, sigma, task.alg->b);
    auto presenter = make_presenter(task.recipe, task.omega);
    Transcript t = run_game(*alg, *presenter);
    return {alg->name(), task.recipe->str(), evaluate(t, *task.recipe, task.omega)};
  }
  const RandomBatch& rb = *cfg.random;
  Rational sigma = task.alg->sigma ? *task.alg->sigma : rb.sigma;
  auto alg = make_algorithm(task.alg->name, sigma, task.alg->b);
  Transcript t;
  for (const Interval& iv : batches[static_cast<std::size_t>(task.batch)])
    t.entries.push_back({iv, alg->color(iv)});
  return {alg->name(), "random/" + std::to_string(task.batch),
          evaluate_plain(t, rb.sigma, Interval(0, rb.window + rb.sigma))};
}

unsigned worker_count(std::size_t tasks) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIC_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

}  // namespace

std::vector<GridRow> experiment_grid(const GridConfig& cfg) {
  for (const GridAlgorithm& a : cfg.algorithms) {
    if (a.name != "block" || !a.sigma) continue;
    for (const RecipePtr& r : cfg.recipes) {
      Rational need = schema_params(*r).sigma;
      if (need > *a.sigma)
        throw std::invalid_argument("block sigma " + a.sigma->str() + " cannot color " +
                                    r->str() + " (lengths up to " + need.str() + ")");
    }
    if (cfg.random && cfg.random->sigma > *a.sigma)
      throw std::invalid_argument("block sigma " + a.sigma->str() +
                                  " cannot color the random batch (sigma " +
                                  cfg.random->sigma.str() + ")");
  }

  std::vector<std::vector<Interval>> batches;
  if (cfg.random) {
    batches.reserve(static_cast<std::size_t>(cfg.random->count));
    for (int i = 0; i < cfg.random->count; ++i)
      batches.push_back(random_instance(cfg.seed + static_cast<std::uint64_t>(i),
                                        cfg.random->intervals, cfg.random->sigma,
                                        cfg.random->window, cfg.random->max_denominator));
  }

  std::vector<RowTask> tasks;
  for (const GridAlgorithm& a : cfg.algorithms) {
    for (const RecipePtr& r : cfg.recipes)
      for (long long w : cfg.omegas) tasks.push_back({&a, r, w, -1});
    for (int i = 0; i < static_cast<int>(batches.size()); ++i)
      tasks.push_back({&a, nullptr, 0, i});
  }

  std::vector<GridRow> rows(tasks.size());
  unsigned workers = worker_count(tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = run_row(cfg, tasks[i], batches);
    return rows;
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = run_row(cfg, tasks[i], batches);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const GridRow> rows) {
  out << "algorithm,recipe,omega,colors_used,guaranteed,clique,ratio,proper,sigma_ok,region_ok\n";
  for (const GridRow& row : rows) {
    const GameReport& r = row.report;
    double ratio = r.omega_target > 0
                       ? static_cast<double>(r.colors_used) / static_cast<double>(r.omega_target)
                       : 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ratio);
    out << csv_quote(row.algorithm) << ',' << csv_quote(row.recipe) << ',' << r.omega_target
        << ',' << r.colors_used << ',' << r.guaranteed << ',' << r.clique_number << ',' << buf
        << ',' << (r.proper ? "true" : "false") << ',' << (r.sigma_ok ? "true" : "false") << ','
        << (r.region_ok ? "true" : "false") << '\n';
  }
}

}  // namespace sic
