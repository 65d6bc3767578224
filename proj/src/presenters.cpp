#include "sic/presenters.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sic/four_split.hpp"
#include "sic/separation.hpp"

namespace sic {

CliquePresenter::CliquePresenter(long long omega, Rational left)
    : omega_(omega), left_(std::move(left)) {}

std::optional<Interval> CliquePresenter::next() {
  if (emitted_ != observed_) throw std::logic_error("next() called with a color still owed");
  if (emitted_ == omega_) return std::nullopt;
  ++emitted_;
  return Interval(left_, left_ + 1);
}

void CliquePresenter::observe(int) {
  if (observed_ == emitted_) throw std::logic_error("observe() without a pending interval");
  ++observed_;
}

namespace {

long long floor_ll(const Rational& r) {
  BigInt f = r.floor();
  if (!f.fits_slong_p()) throw std::overflow_error("count out of range");
  return f.get_si();
}

/* The spatial extremes of a finished separation round: the final interval has
 * to touch all of Y, so take the tightest endpoint among the chosen entries.
 * With no entries (omega' = 0) fall back just outside the anchor window. */
Rational leftmost_right(const SeparationPresenter& sep, long long count) {
  if (count <= 0) return sep.window().right + 1;
  auto ys = sep.extremes(static_cast<int>(count));
  Rational r = ys.front().interval.right;
  for (const Entry& e : ys) r = std::min(r, e.interval.right);
  return r;
}

Rational rightmost_left(const SeparationPresenter& sep, long long count) {
  if (count <= 0) return sep.window().left;
  auto ys = sep.extremes(static_cast<int>(count));
  Rational l = ys.front().interval.left;
  for (const Entry& e : ys) l = std::max(l, e.interval.left);
  return l;
}

/* Lengths in [1, M+eps], region [0, M+1+eps], alpha' = 2 - 1/(alpha+1).
 *
 * Inner game on omega' = floor(omega/(alpha+1)) in [1+eps, M+1+eps] gives X.
 * A separation round sorts X left among omega unit intervals near 0, so the
 * omega' rightmost of them avoid X. The final omega-omega' intervals touch
 * exactly those and the whole inner region, forcing fresh colors. */
Script lower32_script(RecipePtr inner, long long omega, Rational eps) {
  SchemaParams in = schema_params(*inner);
  long long wp = floor_ll(Rational(omega) / (in.alpha + 1));
  long long target = guaranteed_colors(*inner, wp);

  ColorSet x;
  {
    auto sub = make_presenter(inner, wp);
    Rational shift = 1 + eps;
    while (static_cast<long long>(x.size()) < target) {
      auto iv = sub->next();
      if (!iv) break;
      int c = co_await emit(iv->shifted(shift));
      sub->observe(c);
      x.insert(c);
    }
  }

  SeparationPresenter sep(static_cast<int>(omega), Interval(0, eps / 2), x,
                          SeparationPresenter::Side::PushLeft);
  while (auto iv = sep.next()) {
    int c = co_await emit(*iv);
    sep.observe(c);
  }

  Interval fin(leftmost_right(sep, wp), in.m + 1 + eps);
  for (long long i = wp; i < omega; ++i) (void)co_await emit(fin);
}

/* Lengths in [1, M+eps], region [0, M+2+eps], alpha' = 2 - 1/(alpha+2).
 * Two separation rounds, one on each side of the inner region; the final
 * intervals span between the clean extremes of both. */
Script lower53_script(RecipePtr inner, long long omega, Rational eps) {
  SchemaParams in = schema_params(*inner);
  long long wp = floor_ll(Rational(omega) / (in.alpha + 2));
  long long target = guaranteed_colors(*inner, wp);

  ColorSet x;
  {
    auto sub = make_presenter(inner, wp);
    Rational shift = 1 + eps / 2;
    while (static_cast<long long>(x.size()) < target) {
      auto iv = sub->next();
      if (!iv) break;
      int c = co_await emit(iv->shifted(shift));
      sub->observe(c);
      x.insert(c);
    }
  }

  SeparationPresenter left(static_cast<int>(omega), Interval(0, eps / 4), x,
                           SeparationPresenter::Side::PushLeft);
  while (auto iv = left.next()) {
    int c = co_await emit(*iv);
    left.observe(c);
  }
  ColorSet y1 = left.extreme_colors(static_cast<int>(wp));

  SeparationPresenter right(static_cast<int>(omega),
                            Interval(in.m + 1 + eps * 3 / 4, in.m + 1 + eps), set_union(x, y1),
                            SeparationPresenter::Side::PushRight);
  while (auto iv = right.next()) {
    int c = co_await emit(*iv);
    right.observe(c);
  }

  Interval fin(leftmost_right(left, wp), rightmost_left(right, wp));
  for (long long i = wp; i < omega; ++i) (void)co_await emit(fin);
}

/* Lengths in [1, 2M+eps], region [0, 2M+2+eps], alpha' = 2 - 1/(2alpha+2).
 *
 * Two inner games side by side plus a separation round on each flank. With
 * C1/C2 the left/right collections, many colors in C2 \ C1 let the final
 * intervals span both flanks (case 1); otherwise a pre-final column over the
 * right half first harvests omega' colors disjoint from C2 (case 2). */
Script lower74_script(RecipePtr inner, long long omega, Rational eps, BranchLog* log) {
  SchemaParams in = schema_params(*inner);
  long long wp = floor_ll(Rational(omega) / (in.alpha + 1));
  long long target = guaranteed_colors(*inner, wp);

  ColorSet x1, x2;
  for (int side = 0; side < 2; ++side) {
    ColorSet& x = side == 0 ? x1 : x2;
    Rational shift = side == 0 ? 1 + eps / 3 : in.m + 1 + eps * 2 / 3;
    auto sub = make_presenter(inner, wp);
    while (static_cast<long long>(x.size()) < target) {
      auto iv = sub->next();
      if (!iv) break;
      int c = co_await emit(iv->shifted(shift));
      sub->observe(c);
      x.insert(c);
    }
  }

  SeparationPresenter left(static_cast<int>(omega), Interval(0, eps / 6), x1,
                           SeparationPresenter::Side::PushLeft);
  while (auto iv = left.next()) {
    int c = co_await emit(*iv);
    left.observe(c);
  }
  SeparationPresenter right(static_cast<int>(omega),
                            Interval(2 * in.m + 1 + eps * 5 / 6, 2 * in.m + 1 + eps), x2,
                            SeparationPresenter::Side::PushRight);
  while (auto iv = right.next()) {
    int c = co_await emit(*iv);
    right.observe(c);
  }

  ColorSet c1 = set_union(x1, left.extreme_colors(static_cast<int>(wp)));
  ColorSet c2 = set_union(x2, right.extreme_colors(static_cast<int>(wp)));
  long fresh_right = static_cast<long>(set_difference(c2, c1).size());

  Rational r = leftmost_right(left, wp);
  Rational l = rightmost_left(right, wp);

  if (Rational(fresh_right) >= Rational(omega) / (2 * in.alpha + 2)) {
    if (log) log->branch = "case1";
    Interval fin(r, l);
    for (long long i = wp; i < omega; ++i) (void)co_await emit(fin);
    co_return;
  }

  if (log) log->branch = "case2";
  Rational mid = in.m + 1 + eps * 5 / 12;
  Interval pre(mid, l);
  for (long long i = 0; i < wp; ++i) (void)co_await emit(pre);
  Interval fin(r, mid);
  for (long long i = wp; i < omega; ++i) (void)co_await emit(fin);
}

/* Lengths and region both inside [0, 4^n M + eps], alpha' = 5/4 + (1-gamma)/2 * alpha.
 *
 * 4^n inner games in a row, a gap of eps/4^n between consecutive ones. The
 * color sets either union up geometrically (case 1: one full-span column) or
 * four_split hands back four consecutive game ranges sharing >= (1-gamma)C
 * colors; columns Z1/Z2 cover the outer ranges, and either the span between
 * them (case 2.1) or two half-span columns W1/W2 (case 2.2) finish the job. */
Script lower52_script(RecipePtr inner, long long omega, Rational gamma, long levels, Rational eps,
                      BranchLog* log) {
  SchemaParams in = schema_params(*inner);
  long long wp = omega / 2;
  long long target = guaranteed_colors(*inner, wp);
  long long games = 1;
  for (long i = 0; i < levels; ++i) games *= 4;
  Rational gap = eps / games;
  Rational pitch = in.m + gap;
  Rational span = pow(Rational(4), static_cast<unsigned long>(levels)) * in.m + eps;

  std::vector<ColorSet> xs(static_cast<std::size_t>(games));
  std::vector<std::vector<int>> seen_order(xs.size());
  for (std::size_t g = 0; g < xs.size(); ++g) {
    auto sub = make_presenter(inner, wp);
    Rational shift = pitch * static_cast<long>(g);
    while (static_cast<long long>(xs[g].size()) < target) {
      auto iv = sub->next();
      if (!iv) break;
      int c = co_await emit(iv->shifted(shift));
      sub->observe(c);
      if (xs[g].insert(c).second) seen_order[g].push_back(c);
    }
  }

  /* Against a proper opponent every game reaches exactly `target` colors; a
   * scripted one may stall a game early, so truncate to a common size. */
  long k = target > 0 ? static_cast<long>(target) : 0;
  for (const ColorSet& x : xs) k = std::min(k, static_cast<long>(x.size()));
  for (std::size_t g = 0; g < xs.size(); ++g) {
    xs[g] = ColorSet(seen_order[g].begin(), seen_order[g].begin() + k);
  }

  auto split = four_split(xs, k, gamma);
  if (std::holds_alternative<UnionCase>(split)) {
    if (log) log->branch = "case1";
    Interval fin(0, span);
    for (long long i = 0; i < wp; ++i) (void)co_await emit(fin);
    co_return;
  }

  const auto& ranges = std::get<PartitionCase>(split).ranges;
  long r1 = ranges[0].second, r2 = ranges[1].second, l4 = ranges[3].first;
  Rational span_end = pitch * static_cast<long>(games - 1) + in.m;

  Interval z1(0, pitch * r1 - gap / 2);
  ColorSet zs1;
  for (long long i = 0; i < wp; ++i) zs1.insert(co_await emit(z1));
  Interval z2(pitch * (l4 - 1) - gap / 2, span_end);
  ColorSet zs2;
  for (long long i = 0; i < wp; ++i) zs2.insert(co_await emit(z2));

  long fresh = static_cast<long>(set_difference(zs2, zs1).size());
  if (Rational(fresh) >= Rational(omega) / 4) {
    if (log) log->branch = "case2.1";
    Interval w(z1.right, z2.left);
    for (long long i = 0; i < wp; ++i) (void)co_await emit(w);
  } else {
    if (log) log->branch = "case2.2";
    Interval w1(z1.right, pitch * r2 - gap / 2);
    for (long long i = 0; i < wp; ++i) (void)co_await emit(w1);
    Interval w2(w1.right, z2.left);
    for (long long i = 0; i < wp; ++i) (void)co_await emit(w2);
  }
}

}  // namespace

std::unique_ptr<Presenter> make_presenter(const RecipePtr& recipe, long long omega,
                                          BranchLog* log) {
  if (!recipe) throw std::invalid_argument("null recipe");
  if (omega <= 0) return std::make_unique<CliquePresenter>(0);
  switch (recipe->kind) {
    case Recipe::Kind::Base:
      return std::make_unique<CliquePresenter>(omega);
    case Recipe::Kind::Lower32:
      return std::make_unique<ScriptPresenter>(lower32_script(recipe->inner, omega, recipe->eps));
    case Recipe::Kind::Lower53:
      return std::make_unique<ScriptPresenter>(lower53_script(recipe->inner, omega, recipe->eps));
    case Recipe::Kind::Lower74:
      return std::make_unique<ScriptPresenter>(
          lower74_script(recipe->inner, omega, recipe->eps, log));
    case Recipe::Kind::Lower52:
      return std::make_unique<ScriptPresenter>(
          lower52_script(recipe->inner, omega, recipe->gamma, recipe->levels, recipe->eps, log));
  }
  throw std::logic_error("unhandled recipe kind");
}

}  // namespace sic
