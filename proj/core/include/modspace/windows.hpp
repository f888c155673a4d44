#pragma once

#include "modspace/grid.hpp"

namespace modspace {

enum class WindowKind { PartitionBump, AnalysisWindow, CombAtom, ReconstructionCutoff };

/// Shape parameters are radii in the |.|_inf sense. For PartitionBump and
/// ReconstructionCutoff they bound the plateau/support of the frequency-side
/// profile; for CombAtom `outer` is the Fourier support radius of the atom
/// (1/8 for the (1/4)Q atom, 1/4 for the (1/2)Q one); for AnalysisWindow
/// `inner` is the Gaussian width.
struct WindowSpec {
    WindowKind kind = WindowKind::AnalysisWindow;
    double inner = 1.0;
    double outer = 0.0;
};

WindowSpec default_window(WindowKind kind);

/// 1-D cut profile: 1 on |t| <= inner, 0 on |t| >= outer, transition built
/// from the integral of the bump exp(1 - 1/(1-t^2)).
double bump_step_profile(double t, double inner, double outer);

/// Product of 1-D profiles; equals 1 iff |xi|_inf <= inner, 0 if any axis
/// passes outer.
double tensor_profile(const std::vector<double>& xi, double inner, double outer);

/// Samples the requested window on the grid. PartitionBump is returned as a
/// plain sampled profile; CombAtom is a nonnegative function with compact
/// Fourier support and positive value at 0; ReconstructionCutoff has
/// Fourier transform identically 1 on the inner cube and supported in the
/// outer cube; AnalysisWindow is an L^2-normalized Gaussian.
GridFunction make_window(const WindowSpec& spec, const GridSpec& grid);

}  // namespace modspace
