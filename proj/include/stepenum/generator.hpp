#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

#include "stepenum/enumerator.hpp"

namespace stepenum {

/// Minimal pull-style generator. The body runs lazily, one co_yield per
/// next() call; exceptions thrown in the body surface from next().
///
/// Yield named objects, not braced temporaries: GCC 11 double-destroys
/// temporaries holding strings inside a co_yield expression.
template <typename T>
class Generator {
public:
    struct promise_type {
        std::optional<T> current;
        std::exception_ptr error;

        Generator get_return_object() {
            return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
        }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }
        std::suspend_always yield_value(const T& value) {
            current = value;
            return {};
        }
        std::suspend_always yield_value(T&& value) {
            current = std::move(value);
            return {};
        }
        void return_void() noexcept {}
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    Generator() = default;
    Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
    Generator& operator=(Generator&& other) noexcept {
        if (this != &other) {
            reset();
            handle_ = std::exchange(other.handle_, {});
        }
        return *this;
    }
    Generator(const Generator&) = delete;
    Generator& operator=(const Generator&) = delete;
    ~Generator() { reset(); }

    /// Resumes the body; nullopt once it has returned.
    std::optional<T> next() {
        if (!handle_ || handle_.done()) return std::nullopt;
        handle_.promise().current.reset();
        handle_.resume();
        if (handle_.promise().error) std::rethrow_exception(std::exchange(handle_.promise().error, {}));
        if (handle_.done()) return std::nullopt;
        return std::move(handle_.promise().current);
    }

private:
    explicit Generator(std::coroutine_handle<promise_type> h) : handle_(h) {}

    void reset() noexcept {
        if (handle_) handle_.destroy();
        handle_ = {};
    }

    std::coroutine_handle<promise_type> handle_;
};

/// Adapts a step generator to the Process interface; the generator returning
/// is reported as a free finishing step.
class GeneratorProcess final : public Process {
public:
    explicit GeneratorProcess(Generator<Step> gen) : gen_(std::move(gen)) {}

    Step step() override {
        if (auto s = gen_.next()) return std::move(*s);
        return Step{0, std::nullopt, true};
    }

private:
    Generator<Step> gen_;
};

inline SteppedEnumerator from_generator(Generator<Step> gen) {
    return make_enumerator<GeneratorProcess>(std::move(gen));
}

}  // namespace stepenum
