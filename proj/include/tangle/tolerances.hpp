#pragma once

namespace tangle {

// Numeric slack used across the library. Every operation that compares
// against a threshold takes one of these, defaulting to the values below.
struct Tolerances {
  double equality = 1e-10;        // matrix / state / measure comparisons
  double norm = 1e-12;            // normalization, trace, weight sums
  double psd = 1e-10;             // admissible negative eigenvalue of a state
  double spectrum_clamp = 1e-9;   // negative spin-flip eigenvalues clamped to 0
  double degenerate = 1e-12;      // eigenvalue treated as zero (rank decisions)
  double rank_cutoff = 1e-14;     // eigenvalue zeroed before a matrix square root

  // Defaults, with `equality` replaced by $TANGLE_LAB_TOL when set and parseable.
  static Tolerances from_environment();
};

}  // namespace tangle
