#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

#include "sic/interval.hpp"

namespace sic {

/* Adversary side of the game. Strict alternation: each next() that returns an
 * interval must be answered by exactly one observe() before the next next().
 * next() returning nullopt ends the game. */
class Presenter {
 public:
  virtual ~Presenter() = default;
  virtual std::optional<Interval> next() = 0;
  virtual void observe(int color) = 0;
};

struct Emit {
  Interval interval;
};

inline Emit emit(Interval iv) { return Emit{std::move(iv)}; }

/* Coroutine type for presenter strategies: the body writes
 *   int c = co_await emit(interval);
 * and suspends until the algorithm's color arrives. */
class Script {
 public:
  struct promise_type {
    std::optional<Interval> pending;
    int delivered = -1;
    std::exception_ptr failure;

    Script get_return_object() {
      return Script(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    void return_void() noexcept {}
    void unhandled_exception() { failure = std::current_exception(); }

    auto await_transform(Emit e) {
      pending = std::move(e.interval);
      struct Awaiter {
        promise_type* p;
        bool await_ready() const noexcept { return false; }
        void await_suspend(std::coroutine_handle<>) const noexcept {}
        int await_resume() const noexcept { return p->delivered; }
      };
      return Awaiter{this};
    }
  };

  Script(Script&& o) noexcept : handle_(std::exchange(o.handle_, nullptr)) {}
  Script& operator=(Script&& o) noexcept {
    if (this != &o) {
      destroy();
      handle_ = std::exchange(o.handle_, nullptr);
    }
    return *this;
  }
  Script(const Script&) = delete;
  Script& operator=(const Script&) = delete;
  ~Script() { destroy(); }

  std::coroutine_handle<promise_type> handle() const { return handle_; }

 private:
  explicit Script(std::coroutine_handle<promise_type> h) : handle_(h) {}
  void destroy() {
    if (handle_) handle_.destroy();
  }
  std::coroutine_handle<promise_type> handle_ = nullptr;
};

/* Drives a Script through the Presenter interface. */
class ScriptPresenter final : public Presenter {
 public:
  explicit ScriptPresenter(Script s) : script_(std::move(s)) {}

  std::optional<Interval> next() override;
  void observe(int color) override;  // throws std::logic_error on protocol misuse

 private:
  void resume();

  Script script_;
  bool started_ = false;
  bool awaiting_observe_ = false;
};

}  // namespace sic
