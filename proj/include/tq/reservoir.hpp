#pragma once

namespace tq {

// Mean thermal photon number at the transition frequency,
// e^{-x}/(1 - e^{-x}) for x = beta*omega. x = inf gives 0 (vacuum).
// Throws std::domain_error for x below the accepted minimum (1e-6): the
// dissipator diverges as beta -> 0.
double mean_photon_number(double beta_omega);

inline constexpr double kMinBetaOmega = 1e-6;

// Physical configuration of the pair + reservoir. Units: hbar = k_B = 1,
// omega is the energy unit, time in 1/gamma0.
struct ReservoirParams {
    double omega = 1.0;    // transition frequency, > 0
    double gamma0 = 1.0;   // single-atom emission rate, > 0
    double G = 1.0;        // collective factor, gamma = G*gamma0, in [0,1]
    double Omega = 0.0;    // dipole-dipole coupling, any real
    double beta = 1.0;     // inverse temperature, (0, inf]; inf means T = 0

    double beta_omega() const { return beta * omega; }
    double nbar() const { return mean_photon_number(beta_omega()); }
    bool strongly_correlated() const { return G == 1.0; }

    // Throws std::domain_error on out-of-range parameters.
    void validate() const;
};

}  // namespace tq
