#include "sic/transcript.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace sic {

int Transcript::distinct_colors() const {
  std::set<int> seen;
  for (const Entry& e : entries) seen.insert(e.color);
  return static_cast<int>(seen.size());
}

std::vector<Interval> Transcript::intervals() const {
  std::vector<Interval> xs;
  xs.reserve(entries.size());
  for (const Entry& e : entries) xs.push_back(e.interval);
  return xs;
}

std::string Transcript::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Entry& e : entries)
    arr.push_back({{"left", e.interval.left.str()},
                   {"right", e.interval.right.str()},
                   {"color", e.color}});
  return arr.dump(2);
}

Transcript Transcript::from_json(std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("transcript is not valid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("transcript must be a JSON array");
  Transcript t;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("left") || !item.contains("right") ||
        !item.contains("color") || !item["left"].is_string() || !item["right"].is_string() ||
        !item["color"].is_number_integer())
      throw std::invalid_argument("transcript entries need string left/right and integer color");
    t.entries.push_back(Entry{
        Interval(Rational::parse(item["left"].get<std::string>()),
                 Rational::parse(item["right"].get<std::string>())),
        item["color"].get<int>()});
  }
  return t;
}

}  // namespace sic
