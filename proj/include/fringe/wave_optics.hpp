#pragma once

// Scalar Fraunhofer diffraction from a row of rectangular slits, plus the
// peak detector the arbiter uses to read fringe spacing off the screen.
//
// The screen coordinate is u = sin(theta). For slits of width w_j centred at
// c_j the far-field amplitude is
//
//     A(u) = sum_j w_j sinc(pi w_j u / lambda) exp(2 pi i c_j u / lambda)
//
// so two equal slits a distance d apart give maxima exactly at u = m lambda/d.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fringe/game.hpp"

namespace fringe {

enum class Player { Alice, Bob, None };

struct Slit {
  double center = 0.0;
  double width = 0.0;
  Player owner = Player::None;
  std::optional<Strategy> label;
};

/// Ordered slits; rejects empty lists, non-positive widths and overlaps.
class ApertureWindow {
 public:
  explicit ApertureWindow(std::vector<Slit> slits);

  std::span<const Slit> slits() const { return slits_; }
  std::size_t size() const { return slits_.size(); }

  /// Index of the slit owned by `owner` with `label`, if any.
  std::optional<std::size_t> find(Player owner, Strategy label) const;

 private:
  std::vector<Slit> slits_;
};

struct SlitState {
  std::vector<bool> open;

  static SlitState all_open(std::size_t n) { return {std::vector<bool>(n, true)}; }
  std::size_t open_count() const;
};

class ScreenGrid {
 public:
  static constexpr std::size_t kMinSamples = 16;

  ScreenGrid(double u_min, double u_max, std::size_t sample_count);

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  std::size_t sample_count() const { return sample_count_; }
  double step() const {
    return (u_max_ - u_min_) / static_cast<double>(sample_count_ - 1);
  }
  double at(std::size_t i) const {
    return u_min_ + step() * static_cast<double>(i);
  }

 private:
  double u_min_;
  double u_max_;
  std::size_t sample_count_;
};

struct DiffractionPattern {
  ScreenGrid grid;
  /// Normalised so the sampled maximum is 1; all zero when nothing is open.
  std::vector<double> intensity;
  bool all_closed = false;
};

struct Detector {
  double bin_width = 1e-4;
  double peak_threshold = 0.05;
  int min_resolvable_spacing_bins = 2;

  void validate() const;
};

struct Peak {
  double position;
  double height;
};

struct FringeMeasurement {
  std::optional<double> delta_u;
  std::optional<double> d_inferred;
  bool resolved = false;
  int peaks_used = 0;
};

inline constexpr std::size_t kDefaultSampleCount = 4096;
inline constexpr double kDefaultOrdersInView = 6.0;
inline constexpr double kDefaultWidthFraction = 1.0 / 20.0;

/// 4096 samples over |u| <= min(1, 6 lambda / d_min).
ScreenGrid default_grid(double lambda, double min_separation);

DiffractionPattern intensity_pattern(const ApertureWindow& window,
                                     const SlitState& state, double lambda,
                                     const ScreenGrid& grid);

/// Strict local maxima above threshold * max, refined by a three-point
/// parabola. Flat-topped maxima report the plateau midpoint.
std::vector<Peak> detect_peaks(const DiffractionPattern& pattern,
                               const Detector& detector);

/// Median adjacent spacing over the peaks lying between the outermost peaks
/// that reach half the tallest peak.
FringeMeasurement measure_fringe_spacing(std::span<const Peak> peaks,
                                         double lambda,
                                         const Detector& detector);

}  // namespace fringe
