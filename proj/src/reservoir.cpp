#include "tq/reservoir.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tq {

double mean_photon_number(double beta_omega) {
    if (std::isnan(beta_omega) || beta_omega < kMinBetaOmega) {
        std::ostringstream msg;
        msg << "beta*omega = " << beta_omega << " below accepted minimum "
            << kMinBetaOmega << " (occupation diverges as beta -> 0)";
        throw std::domain_error(msg.str());
    }
    if (std::isinf(beta_omega)) return 0.0;
    const double y = std::exp(-beta_omega);
    return y / (1.0 - y);
}

void ReservoirParams::validate() const {
    if (!(omega > 0.0)) throw std::domain_error("omega must be > 0");
    if (!(gamma0 > 0.0)) throw std::domain_error("gamma0 must be > 0");
    if (!(G >= 0.0 && G <= 1.0)) throw std::domain_error("G must be in [0,1]");
    if (std::isnan(Omega)) throw std::domain_error("Omega must be a number");
    if (!(beta > 0.0)) throw std::domain_error("beta must be > 0 (beta = inf for T = 0)");
    mean_photon_number(beta_omega());  // enforces the beta*omega floor
}

}  // namespace tq
