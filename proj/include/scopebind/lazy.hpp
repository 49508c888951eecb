#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace scopebind {

namespace stats {
/// Number of deferred computations actually run on this thread.
std::uint64_t& suspension_forces();
}  // namespace stats

/// A shared, memoized deferred computation.
///
/// The thunk runs at most once. Concurrent forcers block until the first one
/// publishes its result. If the thunk throws, the cell returns to the unforced
/// state and the exception propagates to the forcer.
template <class T>
class Lazy {
public:
    Lazy() = default;

    static Lazy deferred(std::function<T()> thunk) {
        Lazy l;
        l.cell_ = std::make_shared<Cell>();
        l.cell_->thunk = std::move(thunk);
        return l;
    }

    static Lazy ready(T value) {
        Lazy l;
        l.cell_ = std::make_shared<Cell>();
        l.cell_->value.emplace(std::move(value));
        l.cell_->state.store(kDone, std::memory_order_relaxed);
        return l;
    }

    [[nodiscard]] bool valid() const { return cell_ != nullptr; }

    [[nodiscard]] bool is_forced() const {
        return cell_->state.load(std::memory_order_acquire) == kDone;
    }

    const T& force() const {
        Cell& c = *cell_;
        for (;;) {
            std::uint8_t s = c.state.load(std::memory_order_acquire);
            if (s == kDone) return *c.value;
            if (s == kEmpty) {
                if (!c.state.compare_exchange_strong(s, kRunning, std::memory_order_acq_rel)) continue;
                try {
                    ++stats::suspension_forces();
                    c.value.emplace(c.thunk());
                } catch (...) {
                    c.state.store(kEmpty, std::memory_order_release);
                    c.state.notify_all();
                    throw;
                }
                c.thunk = nullptr;
                c.state.store(kDone, std::memory_order_release);
                c.state.notify_all();
                return *c.value;
            }
            c.state.wait(kRunning, std::memory_order_acquire);
        }
    }

    [[nodiscard]] bool same_cell(const Lazy& other) const { return cell_ == other.cell_; }

private:
    static constexpr std::uint8_t kEmpty = 0;
    static constexpr std::uint8_t kRunning = 1;
    static constexpr std::uint8_t kDone = 2;

    struct Cell {
        std::atomic<std::uint8_t> state{kEmpty};
        std::function<T()> thunk;
        std::optional<T> value;
    };

    std::shared_ptr<Cell> cell_;
};

}  // namespace scopebind
