#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/rng.h"

namespace ramsey {

// One two-level fluctuator, dispersively coupled to the qubit with strength
// v_coupling. w01 is the 0->1 switching rate, w10 the 1->0 rate; both must be
// strictly positive (the frozen limit is handled analytically elsewhere, not
// by zero rates). All times are in units of t_R.
struct TlsParams {
    double v_coupling = 0.0;
    double w01 = 0.0;
    double w10 = 0.0;

    TlsParams() = default;
    TlsParams(double v, double rate01, double rate10);

    double relaxation_rate() const { return w01 + w10; }
    // 2*sqrt(w01*w10)/W, in (0,1]; 1 iff symmetric.
    double weight() const;
    double rate_delta() const { return w10 - w01; }
};

struct TlsEnsemble {
    std::vector<TlsParams> tls_list;

    TlsEnsemble() = default;
    explicit TlsEnsemble(std::vector<TlsParams> list) : tls_list(std::move(list)) {}

    size_t size() const { return tls_list.size(); }

    static TlsEnsemble symmetric(size_t n_tls, double v_coupling, const std::vector<double>& relaxation_rates);
};

// Piecewise-constant realization of the two-state Markov process on
// [0, duration]; switch_times are strictly increasing.
struct TelegraphTrajectory {
    int initial_state = 0;
    std::vector<double> switch_times;
    double duration = 0.0;

    int state_at(double t) const;
};

// (w0, w1): stationary occupations W10/W, W01/W.
std::pair<double, double> stationary_occupations(const TlsParams& tls);

// 0 with probability w0, 1 with probability w1.
int sample_initial_state(const TlsParams& tls, RngStream& rng);

// Event-driven continuous-time simulation: the waiting time in state i is
// exponential with rate W_{i,1-i}.
TelegraphTrajectory simulate_telegraph(const TlsParams& tls, double duration, int initial_state, RngStream& rng);

// Exact integral of v * (-1)^{state(t)} over [window_start, window_start+t_r].
// State 0 contributes +v (tau_z|i> = (-1)^i |i>).
double window_phase(const TelegraphTrajectory& traj, double v_coupling, double window_start, double t_r);

// Streaming telegraph process: identical dynamics to simulate_telegraph but
// generates switches lazily, so a series of windows can be integrated without
// materializing the trajectory. Used by the protocol hot path.
class TelegraphWalker {
  public:
    TelegraphWalker(const TlsParams& tls, RngStream rng);

    // Consume all switches at or before t (no integration).
    void advance_to(double t);

    // Integrate sign(state) over [a, b]; requires advance_to(a) semantics,
    // i.e. a must not precede already-consumed switches.
    double integrate(double a, double b);

    int state() const { return state_; }

  private:
    double rate_out() const { return state_ == 0 ? tls_.w01 : tls_.w10; }

    TlsParams tls_;
    RngStream rng_;
    int state_;
    double next_switch_;
};

struct SpectrumSample {
    double omega = 0.0;
    double s_value = 0.0;
};

// Eq.-of-motion power spectrum of the TLS ensemble's frequency noise:
// S(omega) = 2 sum_n (w_n V_n)^2 W_n / (W_n^2 + omega^2). Even in omega.
SpectrumSample tls_power_spectrum(const TlsEnsemble& ensemble, double omega);

}  // namespace ramsey
