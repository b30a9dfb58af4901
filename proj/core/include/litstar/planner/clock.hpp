// SPDX-License-Identifier: Apache-2.0
// Planner time source: wall clock, or work-unit counting for bit-exact runs.
#pragma once

#include <chrono>
#include <cstdint>

namespace litstar {

enum class ClockMode { Wall, Virtual };

/// In Wall mode elapsed() reads the steady clock. In Virtual mode the
/// planner charges one unit per unit of search work (validity check,
/// distance evaluation, queue pop) and elapsed() is units/rate, making
/// time budgets, anytime traces, and training rewards identical across
/// machines and runs.
class PlannerClock {
public:
    explicit PlannerClock(ClockMode mode, double units_per_second = 1e6)
        : mode_(mode), rate_(units_per_second), start_(std::chrono::steady_clock::now()) {}

    void addWork(std::uint64_t units) { units_ += units; }
    [[nodiscard]] std::uint64_t workUnits() const { return units_; }
    [[nodiscard]] ClockMode mode() const { return mode_; }

    [[nodiscard]] double elapsed() const {
        if (mode_ == ClockMode::Virtual) return static_cast<double>(units_) / rate_;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    ClockMode mode_;
    double rate_;
    std::uint64_t units_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace litstar
