#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sic/online_algorithm.hpp"
#include "sic/transcript.hpp"

namespace sic::test {

/* Reference first-fit straight from the definition: scan every earlier
 * interval, take the smallest color unused among intersecting ones. */
class NaiveFirstFit final : public OnlineAlgorithm {
 public:
  int color(const Interval& iv) override {
    for (int c = 0;; ++c) {
      bool taken = false;
      for (const Entry& e : seen_)
        if (e.color == c && intersects(e.interval, iv)) taken = true;
      if (!taken) {
        seen_.push_back({iv, c});
        return c;
      }
    }
  }
  std::string name() const override { return "naive-firstfit"; }

 private:
  std::vector<Entry> seen_;
};

/* A fresh color every round: maximally wasteful, trivially proper. */
class AlwaysFresh final : public OnlineAlgorithm {
 public:
  int color(const Interval&) override { return next_++; }
  std::string name() const override { return "always-fresh"; }

 private:
  int next_ = 0;
};

/* First-fit, except intervals containing `hot` get a fresh color. Fresh ids
 * are negative so the two pools never collide; still proper. */
class FreshPoint final : public OnlineAlgorithm {
 public:
  explicit FreshPoint(Rational hot) : hot_(std::move(hot)) {}

  int color(const Interval& iv) override {
    if (iv.contains(hot_)) {
      int c = --fresh_;
      seen_.push_back({iv, c});
      return c;
    }
    for (int c = 0;; ++c) {
      bool taken = false;
      for (const Entry& e : seen_)
        if (e.color == c && intersects(e.interval, iv)) taken = true;
      if (!taken) {
        seen_.push_back({iv, c});
        return c;
      }
    }
  }
  std::string name() const override { return "fresh-point"; }

 private:
  Rational hot_;
  int fresh_ = 0;
  std::vector<Entry> seen_;
};

/* Largest number of inputs stabbed by any single point. Candidate points are
 * the endpoints themselves: some interval's endpoint lies in every maximal
 * intersection, so checking all endpoints finds the maximum. */
inline int brute_clique(const std::vector<Interval>& xs) {
  int best = 0;
  for (const Interval& probe : xs)
    for (const Rational* p : {&probe.left, &probe.right}) {
      int hit = 0;
      for (const Interval& iv : xs)
        if (iv.contains(*p)) ++hit;
      best = std::max(best, hit);
    }
  return best;
}

inline bool brute_proper(const Transcript& t) {
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = i + 1; j < t.entries.size(); ++j)
      if (t.entries[i].color == t.entries[j].color &&
          intersects(t.entries[i].interval, t.entries[j].interval))
        return false;
  return true;
}

/* Random intervals with endpoints on a 1/denom grid; lengths in [1, sigma]. */
inline std::vector<Interval> random_intervals(std::mt19937_64& rng, int count,
                                              const Rational& sigma, long window,
                                              long denom = 8) {
  std::vector<Interval> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rational left(static_cast<long>(rng() % (window * denom + 1)), denom);
    Rational len = Rational(1) + Rational(static_cast<long>(rng() % (denom + 1)), denom) *
                                     (sigma - 1);
    xs.emplace_back(left, left + len);
  }
  return xs;
}

}  // namespace sic::test
