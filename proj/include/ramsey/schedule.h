#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ramsey {

// Periodic Ramsey sequence: M measurements of accumulation time t_r repeated
// with period t_cyc, control phase phi_r, contrast e^{-t_R/T2} carried as
// decoherence_factor. Internally t_r == 1 (all quantities are the paper's
// dimensionless products with t_R); t_r stays a field so the invariant
// t_r <= t_cyc is explicit.
struct MeasurementSchedule {
    double t_r = 1.0;
    double t_cyc = 3.0;
    uint64_t m_count = 1;
    double phi_r = 0.7853981633974483;  // pi/4
    double decoherence_factor = 1.0;

    void validate() const {
        if (!(t_r > 0.0) || !(t_r <= t_cyc)) {
            throw std::invalid_argument("MeasurementSchedule: need 0 < t_r <= t_cyc");
        }
        if (m_count < 1) {
            throw std::invalid_argument("MeasurementSchedule: m_count must be >= 1");
        }
        if (!(decoherence_factor >= 0.0 && decoherence_factor <= 1.0)) {
            throw std::invalid_argument("MeasurementSchedule: decoherence_factor must be in [0,1]");
        }
        if (!std::isfinite(phi_r)) {
            throw std::invalid_argument("MeasurementSchedule: phi_r must be finite");
        }
    }

    double window_start(uint64_t k) const { return static_cast<double>(k) * t_cyc; }
    double total_duration() const { return static_cast<double>(m_count - 1) * t_cyc + t_r; }
};

// P(x_k = 1 | theta) = [1 + f cos(phi_R + theta)] / 2.
inline double outcome_probability(double theta, const MeasurementSchedule& schedule) {
    return 0.5 * (1.0 + schedule.decoherence_factor * std::cos(schedule.phi_r + theta));
}

}  // namespace ramsey
