#pragma once

#include "modspace/grid.hpp"
#include "modspace/lattice.hpp"

namespace modspace {

/// C_{a,phi}(x) = sum_k a_k phi(x - k); Fourier support equals the atom's.
/// Throws PeriodOverflowError when the coefficient support leaves the safe
/// quarter-period window and GridMisalignedError when integer translates do
/// not land on grid samples.
GridFunction comb(const Sequence& a, const GridFunction& atom);

/// f(x) = sum_k a_k h(x) e^{2 pi i k.x}: a modulated-atom train whose
/// frequency blocks isolate the coefficients.
GridFunction gabor_comb(const Sequence& a, const GridFunction& atom);

/// |f(k)| on the integer lattice inside the period window, thresholded at
/// 1e-12 of the peak.
Sequence sample_values(const GridFunction& f);

/// f(x) = sum_k f(k) psi(x - k) from nonnegative samples.
GridFunction shannon_reconstruct(const Sequence& samples, const GridFunction& cutoff);

/// Signed/complex variant of the sampling round trip, for functions whose
/// lattice samples are not nonnegative.
GridFunction shannon_roundtrip(const GridFunction& f, const GridFunction& cutoff);

}  // namespace modspace
