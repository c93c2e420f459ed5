#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace powersplit {

using Series = std::vector<double>;

/// Classification of a journey step by drivetrain speed and demand sign.
enum class StepClass : std::uint8_t {
    power_split,    // positive demand, drivetrain fast enough for the engine
    braking,        // negative demand, engine may idle but cannot assist
    clutch_open,    // drivetrain below minimum engine speed, engine forced off
};

/// Raised when an input file, config value, or argument is malformed.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a problem instance admits no feasible control at some step.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(std::string what, long step)
        : std::runtime_error(std::move(what)), step_(step) {}
    explicit InfeasibleError(std::string what)
        : std::runtime_error(std::move(what)), step_(-1) {}

    /// Offending step index, or -1 when the infeasibility is global.
    [[nodiscard]] long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace powersplit
