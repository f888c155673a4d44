#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/partition.hpp"

namespace modspace {

/// (integral |f(x)|^p <x>^{tp} dx)^{1/p} by Riemann sum; weighted sup at
/// p = inf.
double weighted_Lp_norm(const GridFunction& f, const Exponent& p, const Rational& t);

/// Inner weighted L_p norms of every frequency block, one forward transform.
/// Result is indexed [pt][center].
std::vector<std::vector<double>> box_inner_norms(
    const GridFunction& f, const SigmaPartition& P,
    const std::vector<std::pair<Exponent, Rational>>& inner_pt);

/// (sum_k x_k^q <k>^{sq})^{1/q} over the partition centers.
double outer_weighted_lq(const std::vector<double>& by_center,
                         const std::vector<LatticePoint>& centers, const Exponent& q,
                         const Rational& s);

/// Block-decomposition form of the modulation norm:
/// (sum_k ||box_k f||_{L_{p,<.>^t}}^q <k>^{sq})^{1/q}.
double modulation_norm_discrete(const GridFunction& f, const Exponent& p, const Exponent& q,
                                const Rational& t, const Rational& s, const SigmaPartition& P);

/// STFT mixed norm, inner over x with (p, <x>^t), outer over xi with
/// (q, <xi>^s).
double modulation_norm_continuous(const GridFunction& f, const GridFunction& window,
                                  const Exponent& p, const Exponent& q, const Rational& t,
                                  const Rational& s, int x_stride = 0);

/// Same data, integration order reversed (inner over xi, outer over x).
double wiener_norm(const GridFunction& f, const GridFunction& window, const Exponent& p,
                   const Exponent& q, const Rational& t, const Rational& s, int x_stride = 0);

/// One STFT pass, a table of modulation norms: result[inner_pt][outer_qs].
std::vector<std::vector<double>> modulation_norms_batch(
    const GridFunction& f, const GridFunction& window,
    const std::vector<std::pair<Exponent, Rational>>& inner_pt,
    const std::vector<std::pair<Exponent, Rational>>& outer_qs, int x_stride = 0);

}  // namespace modspace
