#include "ramsey/tls.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

namespace {

void check_rate(double r, const char* name) {
    if (!std::isfinite(r) || r <= 0.0) {
        throw std::invalid_argument(std::string("TlsParams: ") + name + " must be finite and > 0");
    }
}

}  // namespace

TlsParams::TlsParams(double v, double rate01, double rate10) : v_coupling(v), w01(rate01), w10(rate10) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("TlsParams: v_coupling must be finite");
    }
    check_rate(rate01, "w01");
    check_rate(rate10, "w10");
}

double TlsParams::weight() const {
    return 2.0 * std::sqrt(w01 * w10) / relaxation_rate();
}

TlsEnsemble TlsEnsemble::symmetric(size_t n_tls, double v_coupling, const std::vector<double>& relaxation_rates) {
    if (relaxation_rates.size() != n_tls) {
        throw std::invalid_argument("TlsEnsemble::symmetric: rate list size mismatch");
    }
    std::vector<TlsParams> list;
    list.reserve(n_tls);
    for (double w : relaxation_rates) {
        list.emplace_back(v_coupling, w / 2.0, w / 2.0);
    }
    return TlsEnsemble(std::move(list));
}

int TelegraphTrajectory::state_at(double t) const {
    auto it = std::upper_bound(switch_times.begin(), switch_times.end(), t);
    size_t flips = static_cast<size_t>(it - switch_times.begin());
    return (initial_state + static_cast<int>(flips & 1)) & 1;
}

std::pair<double, double> stationary_occupations(const TlsParams& tls) {
    check_rate(tls.w01, "w01");
    check_rate(tls.w10, "w10");
    const double w = tls.relaxation_rate();
    return {tls.w10 / w, tls.w01 / w};
}

int sample_initial_state(const TlsParams& tls, RngStream& rng) {
    const auto [w0, w1] = stationary_occupations(tls);
    (void)w1;
    return rng.uniform() < w0 ? 0 : 1;
}

TelegraphTrajectory simulate_telegraph(const TlsParams& tls, double duration, int initial_state, RngStream& rng) {
    if (!(duration > 0.0)) {
        throw std::invalid_argument("simulate_telegraph: duration must be > 0");
    }
    TelegraphTrajectory traj;
    traj.initial_state = initial_state;
    traj.duration = duration;
    int state = initial_state;
    double t = rng.exponential(state == 0 ? tls.w01 : tls.w10);
    while (t <= duration) {
        traj.switch_times.push_back(t);
        state ^= 1;
        t += rng.exponential(state == 0 ? tls.w01 : tls.w10);
    }
    return traj;
}

double window_phase(const TelegraphTrajectory& traj, double v_coupling, double window_start, double t_r) {
    const double window_end = window_start + t_r;
    if (window_start < 0.0 || window_end > traj.duration) {
        throw std::out_of_range("window_phase: window outside trajectory");
    }
    auto it = std::upper_bound(traj.switch_times.begin(), traj.switch_times.end(), window_start);
    size_t flips = static_cast<size_t>(it - traj.switch_times.begin());
    int state = (traj.initial_state + static_cast<int>(flips & 1)) & 1;
    double acc = 0.0;
    double cur = window_start;
    while (it != traj.switch_times.end() && *it <= window_end) {
        acc += (state == 0 ? 1.0 : -1.0) * (*it - cur);
        cur = *it;
        state ^= 1;
        ++it;
    }
    acc += (state == 0 ? 1.0 : -1.0) * (window_end - cur);
    return v_coupling * acc;
}

TelegraphWalker::TelegraphWalker(const TlsParams& tls, RngStream rng) : tls_(tls), rng_(rng) {
    state_ = sample_initial_state(tls_, rng_);
    next_switch_ = rng_.exponential(rate_out());
}

void TelegraphWalker::advance_to(double t) {
    while (next_switch_ <= t) {
        state_ ^= 1;
        next_switch_ += rng_.exponential(rate_out());
    }
}

double TelegraphWalker::integrate(double a, double b) {
    double acc = 0.0;
    double cur = a;
    while (next_switch_ <= b) {
        acc += (state_ == 0 ? 1.0 : -1.0) * (next_switch_ - cur);
        cur = next_switch_;
        state_ ^= 1;
        next_switch_ += rng_.exponential(rate_out());
    }
    acc += (state_ == 0 ? 1.0 : -1.0) * (b - cur);
    return acc;
}

SpectrumSample tls_power_spectrum(const TlsEnsemble& ensemble, double omega) {
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("tls_power_spectrum: omega must be finite");
    }
    const double om2 = omega * omega;
    double s = 0.0;
    for (const TlsParams& tls : ensemble.tls_list) {
        const double w = tls.relaxation_rate();
        const double wv = tls.weight() * tls.v_coupling;
        s += wv * wv * w / (w * w + om2);
    }
    return {omega, 2.0 * s};
}

}  // namespace ramsey
