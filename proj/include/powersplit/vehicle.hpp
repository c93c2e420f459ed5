#pragma once

#include <vector>

#include "powersplit/types.hpp"

namespace powersplit {

/// Quadratic polynomial in drivetrain speed, used for loss-map coefficients.
struct SpeedPoly {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    [[nodiscard]] double operator()(double omega_radps) const noexcept {
        return c0 + omega_radps * (c1 + omega_radps * c2);
    }
};

/// Quadratic in power, p2*x^2 + p1*x + p0.
struct QuadCoeffs {
    double p2 = 0.0;
    double p1 = 0.0;
    double p0 = 0.0;

    [[nodiscard]] double eval(double x) const noexcept { return p0 + x * (p1 + x * p2); }
    [[nodiscard]] double slope(double x) const noexcept { return p1 + 2.0 * p2 * x; }
};

/// Loss map: each quadratic coefficient is itself a polynomial in speed.
struct LossMap {
    SpeedPoly quad;    // coefficient of power^2
    SpeedPoly lin;     // coefficient of power
    SpeedPoly constant;

    [[nodiscard]] QuadCoeffs at(double omega_radps) const noexcept {
        return {quad(omega_radps), lin(omega_radps), constant(omega_radps)};
    }
};

/// One gear: active for velocities >= v_min_mps until the next entry takes over.
/// ratio_radpm converts vehicle speed (m/s) to drivetrain input speed (rad/s).
struct GearEntry {
    double v_min_mps = 0.0;
    double ratio_radpm = 0.0;
};

/// Physical and electrical constants of the plant.
struct VehicleParams {
    double mass_kg = 1800.0;
    double air_density = 1.225;       // kg/m^3
    double drag_coeff = 0.30;
    double frontal_area_m2 = 2.3;
    double rolling_resist = 0.012;
    double gravity = 9.81;            // m/s^2

    double battery_voltage_V = 350.0;        // open circuit
    double battery_resistance_ohm = 0.1;
    double battery_capacity_J = 21.5 * 3600.0 * 350.0;  // 21.5 Ah at 350 V

    double engine_min_speed_radps = 85.0;
    double engine_power_max_W = 100e3;
    double motor_power_max_W = 50e3;
    double motor_power_min_W = -50e3;

    // Engine fuel power:  f(P_eng) = a2*P^2 + a1*P + a0, coefficients vs speed.
    // Idle burn a0 > 0 so an idling engine consumes fuel.
    LossMap engine_loss_map{
        {5.0e-6, 0.0, 0.0},
        {2.0, 1.0e-3, 0.0},
        {12e3, 12.0, 0.0},
    };
    // Motor electrical power:  h(P_em) = b2*P^2 + b1*P + b0, coefficients vs speed.
    LossMap motor_loss_map{
        {8.0e-7, 4.0e-10, 0.0},
        {1.0, 0.0, 0.0},
        {80.0, 0.15, 0.0},
    };

    std::vector<GearEntry> gear_table{
        {0.0, 43.0}, {4.0, 26.0}, {8.0, 18.0}, {13.0, 14.0}, {19.0, 11.5},
    };

    /// Throws InputError naming the offending field.
    void validate() const;
};

/// Gear-table lookup: omega_d = v * ratio(v). Piecewise linear in v, zero at v = 0.
[[nodiscard]] double drivetrain_speed(double v_mps, const VehicleParams& params);

}  // namespace powersplit
