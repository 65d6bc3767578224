#include "sic/online_algorithm.hpp"

#include <stdexcept>

namespace sic {

int FirstFit::color(const Interval& iv) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& members = classes_[c];
    /* Members with left <= iv.right form a prefix; within a disjoint class,
     * rights grow with lefts, so only the last of them can reach iv.left. */
    auto it = members.upper_bound(iv.right);
    if (it != members.begin() && std::prev(it)->second >= iv.left) continue;
    members.emplace(iv.left, iv.right);
    return static_cast<int>(c);
  }
  classes_.emplace_back();
  classes_.back().emplace(iv.left, iv.right);
  return static_cast<int>(classes_.size()) - 1;
}

BigInt small_block_index(const Rational& x, long b) {
  if (b < 1) throw std::invalid_argument("block width parameter must be >= 1");
  return (x * b).floor();
}

BigInt select_large_block(const BigInt& i, const BigInt& s, long b) {
  if (b < 1) throw std::invalid_argument("block width parameter must be >= 1");
  BigInt r;
  mpz_mod_ui(r.get_mpz_t(), BigInt(i - s).get_mpz_t(), static_cast<unsigned long>(b));
  return i - r;
}

BlockColoring::BlockColoring(Rational sigma, long b) : sigma_(std::move(sigma)), b_(b) {
  if (b_ < 1) throw std::invalid_argument("block algorithm needs b >= 1");
  if (sigma_ < 1) throw std::invalid_argument("block algorithm needs sigma >= 1");
  Rational phi = (1 + sigma_) * b_;
  BigInt c = phi.ceil();
  if (!c.fits_slong_p()) throw std::invalid_argument("phi out of range");
  phi_ = c.get_si();
}

int BlockColoring::color(const Interval& iv) {
  Rational len = iv.length();
  if (len < 1 || len > sigma_)
    throw std::invalid_argument("interval length " + len.str() + " outside [1, " + sigma_.str() +
                                "]");
  BigInt i = small_block_index(iv.left, b_);
  BigInt& s = small_counters_[i];
  BigInt j = select_large_block(i, s, b_);
  s += 1;
  long& level = large_counters_[j];
  BigInt jm;
  mpz_mod_ui(jm.get_mpz_t(), j.get_mpz_t(), static_cast<unsigned long>(phi_));
  std::pair<long, long> key{jm.get_si(), level};
  level += 1;

  auto [it, inserted] = color_ids_.try_emplace(key, static_cast<int>(structured_.size()));
  if (inserted) structured_.push_back(key);
  return it->second;
}

std::string BlockColoring::name() const {
  return "block(sigma=" + sigma_.str() + ",b=" + std::to_string(b_) + ")";
}

std::pair<long, long> BlockColoring::structured_color(int id) const {
  return structured_.at(static_cast<std::size_t>(id));
}

long BlockColoring::default_b(const Rational& sigma) {
  BigInt d = sigma.den();
  if (!d.fits_slong_p()) throw std::invalid_argument("sigma denominator out of range");
  return d.get_si();
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, const Rational& sigma,
                                                long b) {
  if (name == "firstfit") return std::make_unique<FirstFit>();
  if (name == "block")
    return std::make_unique<BlockColoring>(sigma, b == 0 ? BlockColoring::default_b(sigma) : b);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

}  // namespace sic
