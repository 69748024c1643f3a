#include "catweak/stern_gerlach.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catweak/errors.hpp"

namespace catweak {

namespace {

constexpr const char* kModule = "stern-gerlach";

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(kModule, what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

Complex packet(double x, double center, double kick, const EvolvedPacketPair& p) {
    const double c = std::pow(2.0 * std::numbers::pi * p.eta * p.eta, -0.25);
    const double d = x - center;
    return c * std::exp(Complex(-d * d / (4.0 * p.eta * p.eta), kick * x / p.hbar - p.phase_delta));
}

}  // namespace

void SGConfig::validate() const {
    require(positive(mu) && positive(tau) && positive(m) && positive(eta) && positive(hbar),
            "mu, tau, m, eta and hbar must be positive");
    require(std::isfinite(B) && B >= 0.0, "B must be finite and non-negative");
    if (p_y) require(positive(*p_y), "p_y must be positive");
    if (d) require(positive(*d), "d must be positive");
    if (p_y && d) {
        const double transit = *p_y * tau / m;
        require(std::abs(*d - transit) <= 1e-9 * std::max(1.0, *d),
                "field length d must equal p_y tau / m");
    }
}

Complex EvolvedPacketPair::plus(double x) const { return packet(x, center_offset, drift_momentum, *this); }

Complex EvolvedPacketPair::minus(double x) const { return packet(x, -center_offset, -drift_momentum, *this); }

EvolvedPacketPair evolve_packets(const SGConfig& cfg) {
    cfg.validate();
    const double kick = cfg.mu * cfg.B * cfg.tau;
    return {kick, kick * cfg.tau / (2.0 * cfg.m), kick * kick * cfg.tau / (6.0 * cfg.m * cfg.hbar), cfg.eta,
            cfg.hbar};
}

double sg_inner_product(const SGConfig& cfg) {
    cfg.validate();
    const double mb2 = cfg.mu * cfg.mu * cfg.B * cfg.B;
    const double tau2 = cfg.tau * cfg.tau;
    const double eta2 = cfg.eta * cfg.eta;
    return std::exp(-mb2 * tau2 * tau2 / (8.0 * cfg.m * cfg.m * eta2) -
                    2.0 * mb2 * tau2 * eta2 / (cfg.hbar * cfg.hbar));
}

double entangled_state_density(const SGConfig& cfg, const SpinSelection& sel, double x) {
    const auto packets = evolve_packets(cfg);
    const auto [a, b] = branch_amplitudes(sel);
    return std::norm(a) * std::norm(packets.plus(x)) + std::norm(b) * std::norm(packets.minus(x));
}

double ReducedSpinDensity::purity() const {
    // tr(rho^2)
    return (rho[0] * rho[0] + rho[1] * rho[2] + rho[2] * rho[1] + rho[3] * rho[3]).real();
}

double ReducedSpinDensity::hermiticity_error() const {
    return std::max({std::abs(rho[0] - std::conj(rho[0])), std::abs(rho[3] - std::conj(rho[3])),
                     std::abs(rho[1] - std::conj(rho[2]))});
}

std::array<double, 2> ReducedSpinDensity::eigenvalues() const {
    const double d0 = rho[0].real();
    const double d1 = rho[3].real();
    const Complex off = 0.5 * (rho[1] + std::conj(rho[2]));
    const double mean = 0.5 * (d0 + d1);
    const double half_gap = std::hypot(0.5 * (d0 - d1), std::abs(off));
    return {mean - half_gap, mean + half_gap};
}

ReducedSpinDensity reduced_density_matrix(const SGConfig& cfg, const SpinSelection& sel) {
    const Complex overlap = sg_inner_product(cfg);
    const Complex a1 = sel.a1();
    const Complex a2 = sel.a2();
    return {{std::norm(a1), a1 * std::conj(a2) * overlap, std::conj(a1) * a2 * std::conj(overlap),
             std::norm(a2)}};
}

CatGeometry to_cat_state(const SGConfig& cfg) {
    const auto packets = evolve_packets(cfg);
    return {packets.center_offset, packets.drift_momentum};
}

SGConfig from_cat_state(CatGeometry geometry, double mu, double m, double eta, double hbar) {
    require(std::isfinite(geometry.x0) && std::isfinite(geometry.p0) && geometry.x0 >= 0.0 &&
                geometry.p0 >= 0.0,
            "x0 and p0 must be finite and non-negative");
    SGConfig cfg;
    cfg.mu = mu;
    cfg.m = m;
    cfg.eta = eta;
    cfg.hbar = hbar;
    if (geometry.x0 == 0.0 && geometry.p0 == 0.0) {
        cfg.B = 0.0;
        cfg.tau = 1.0;
    } else {
        require(geometry.p0 > 0.0, "x0 > 0 with p0 = 0 has no Stern-Gerlach realization");
        require(geometry.x0 > 0.0, "p0 > 0 with x0 = 0 would need zero transit time");
        cfg.tau = 2.0 * m * geometry.x0 / geometry.p0;
        cfg.B = geometry.p0 / (mu * cfg.tau);
    }
    cfg.validate();
    return cfg;
}

CatState post_select(const SGConfig& cfg, const SpinSelection& sel) {
    const auto geometry = to_cat_state(cfg);
    const auto [a, b] = branch_amplitudes(sel);
    try {
        return CatState(a, b, geometry.x0, geometry.p0, cfg.eta, cfg.hbar);
    } catch (const DegenerateState& e) {
        throw DegenerateState(kModule, std::string("post-selected meter vanishes (") + e.what() + ")");
    }
}

}  // namespace catweak
