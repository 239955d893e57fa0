#pragma once

#include "lie_contact/lie_core.hpp"

#include <vector>

namespace lie_contact {

using Polyline = std::vector<Vec>;

double polyline_length(const Polyline& c);

/// `count` points at equal arc-length spacing, linear interpolation.
Polyline resample_by_arc_length(const Polyline& c, int count);

/// Discrete Frechet distance (Eiter-Mannila dynamic program).
double discrete_frechet(const Polyline& a, const Polyline& b);

/// Frechet distance of the two traces after resampling both to `count`
/// equally spaced arc-length samples.
double trace_distance(const Polyline& a, const Polyline& b, int count = 1000);

/// Largest distance from the chord through the first and last points.
double max_chord_deviation(const Polyline& c);

/// Flattened group matrices along a sequence, as a curve in matrix space.
Polyline flatten(const std::vector<Mat>& matrices);

}  // namespace lie_contact
