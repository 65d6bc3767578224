#pragma once

#include <memory>
#include <string>

#include "sic/presenter.hpp"
#include "sic/recipe.hpp"

namespace sic {

/* omega identical unit intervals [left, left+1]: forces omega colors. */
class CliquePresenter final : public Presenter {
 public:
  explicit CliquePresenter(long long omega, Rational left = 0);

  std::optional<Interval> next() override;
  void observe(int color) override;

 private:
  long long omega_;
  Rational left_;
  long long emitted_ = 0, observed_ = 0;
};

/* Which branch a lower74 ("case1"/"case2") or lower52 ("case1"/"case2.1"/
 * "case2.2") run took; filled by the outermost wrapper when attached. */
struct BranchLog {
  std::string branch;
};

/* Builds the presenter for a recipe at clique bound omega. omega <= 0 yields
 * an empty game. */
std::unique_ptr<Presenter> make_presenter(const RecipePtr& recipe, long long omega,
                                          BranchLog* log = nullptr);

}  // namespace sic
