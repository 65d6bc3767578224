#include "sic/presenter.hpp"

#include <stdexcept>

namespace sic {

void ScriptPresenter::resume() {
  auto h = script_.handle();
  h.resume();
  if (h.promise().failure) std::rethrow_exception(h.promise().failure);
}

std::optional<Interval> ScriptPresenter::next() {
  if (awaiting_observe_) throw std::logic_error("next() called with a color still owed");
  auto h = script_.handle();
  if (!started_) {
    started_ = true;
    resume();
  }
  if (h.done()) return std::nullopt;
  awaiting_observe_ = true;
  return h.promise().pending;
}

void ScriptPresenter::observe(int color) {
  if (!awaiting_observe_) throw std::logic_error("observe() without a pending interval");
  awaiting_observe_ = false;
  auto h = script_.handle();
  h.promise().pending.reset();
  h.promise().delivered = color;
  resume();
}

}  // namespace sic
