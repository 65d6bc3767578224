#include "sic/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace sic {

int clique_number(std::span<const Interval> xs) {
  std::vector<std::pair<Rational, int>> events;  // (coordinate, +1 start / -1 end)
  events.reserve(2 * xs.size());
  for (const Interval& iv : xs) {
    events.emplace_back(iv.left, +1);
    events.emplace_back(iv.right, -1);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // starts first: touching intervals overlap
  });
  int depth = 0, best = 0;
  for (const auto& [coord, delta] : events) {
    depth += delta;
    best = std::max(best, depth);
  }
  return best;
}

std::optional<Violation> verify_proper(const Transcript& t) {
  /* Fast no-violation path: a color class is pairwise disjoint iff, sorted by
   * left endpoint, consecutive members are disjoint. */
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    classes[t.entries[i].color].push_back(i);

  bool clean = true;
  for (const auto& [color, members] : classes) {
    std::vector<std::size_t> order = members;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return t.entries[a].interval.left < t.entries[b].interval.left;
    });
    for (std::size_t k = 0; clean && k + 1 < order.size(); ++k)
      if (t.entries[order[k + 1]].interval.left <= t.entries[order[k]].interval.right)
        clean = false;
    if (!clean) break;
  }
  if (clean) return std::nullopt;

  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = i + 1; j < t.entries.size(); ++j)
      if (t.entries[i].color == t.entries[j].color &&
          intersects(t.entries[i].interval, t.entries[j].interval))
        return Violation{i, j};
  return std::nullopt;  // unreachable
}

std::vector<int> offline_optimal_coloring(std::span<const Interval> xs) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (xs[a].left != xs[b].left) return xs[a].left < xs[b].left;
    return a < b;
  });

  using Active = std::pair<Rational, int>;  // (right endpoint, color)
  std::priority_queue<Active, std::vector<Active>, std::greater<>> active;
  std::priority_queue<int, std::vector<int>, std::greater<>> free_colors;
  int fresh = 0;

  std::vector<int> colors(xs.size(), -1);
  for (std::size_t idx : order) {
    while (!active.empty() && active.top().first < xs[idx].left) {
      free_colors.push(active.top().second);
      active.pop();
    }
    int c;
    if (free_colors.empty()) {
      c = fresh++;
    } else {
      c = free_colors.top();
      free_colors.pop();
    }
    colors[idx] = c;
    active.emplace(xs[idx].right, c);
  }
  return colors;
}

BoundsReport bounds_report(const Transcript& t, const Rational& sigma, const Interval& region) {
  BoundsReport r;
  bool first = true;
  for (const Entry& e : t.entries) {
    Rational len = e.interval.length();
    if (first || len < r.min_length) r.min_length = len;
    if (first || len > r.max_length) r.max_length = len;
    first = false;
    if (len < 1 || len > sigma) r.within_sigma = false;
    if (!region.contains(e.interval)) r.contained = false;
  }
  return r;
}

}  // namespace sic
