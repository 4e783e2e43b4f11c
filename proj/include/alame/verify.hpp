#pragma once

// Independent verification: Schrodinger residuals of assembled states, the
// Hill/Floquet discriminant via monodromy over one period 2K, and the
// band-edge / in-band classification of the algebraic energies.

#include <functional>
#include <vector>

#include "alame/algebraize.hpp"
#include "alame/spectra.hpp"

namespace alame {

using WaveFn = std::function<long double(long double)>;

// max over an interior grid of |-psi'' + (V - E) psi| / max|psi|.
// psi'' via a 5-point stencil with h = 2K/(50*grid_n) plus one Richardson
// level, all in long double (the stencil's roundoff in double would swamp
// the 1e-7 bound the fixtures are held to).
double schrodinger_residual(const WaveFn& psi, double energy,
                            const LameParameters& params,
                            const EllipticModulus& modulus, int grid_n);

struct DiscriminantSample {
  double energy = 0;
  double delta = 0;          // trace of the monodromy matrix over [0, 2K]
  double monodromy_det = 1;  // Wronskian; must stay 1 (Liouville)
};

// Integrates u'' = (V - E) u over one period with canonical initial
// conditions using an adaptive Dormand-Prince 5(4) pair, local error <= tol.
DiscriminantSample hill_discriminant(double energy, const LameParameters& params,
                                     const EllipticModulus& modulus, double tol);

// Same integration against an arbitrary potential; the free-particle oracle
// in the tests runs through this.
DiscriminantSample hill_discriminant_for(const std::function<double(double)>& potential,
                                         double period, double energy, double tol);

enum class Classification {
  BandEdgePeriodic,      // |delta| = 2 within tol, delta > 0
  BandEdgeAntiperiodic,  // |delta| = 2 within tol, delta < 0
  InBandDegenerate,      // |delta| < 2 - tol with a degenerate pair
  Inconsistent
};

const char* to_string(Classification c);

std::vector<Classification> classify_spectrum(const SpectrumResult& spec, double tol);

}  // namespace alame
