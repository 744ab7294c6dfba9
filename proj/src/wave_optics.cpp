#include "fringe/wave_optics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace fringe {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

double median(std::vector<double> values) {
  const std::size_t n = values.size();
  std::sort(values.begin(), values.end());
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

ApertureWindow::ApertureWindow(std::vector<Slit> slits)
    : slits_(std::move(slits)) {
  if (slits_.empty()) {
    throw ValidationError("aperture window needs at least one slit");
  }
  for (const Slit& s : slits_) {
    if (!std::isfinite(s.center) || !std::isfinite(s.width) ||
        !(s.width > 0.0)) {
      throw ValidationError("slit widths must be positive and finite");
    }
  }
  for (std::size_t i = 0; i < slits_.size(); ++i) {
    for (std::size_t j = i + 1; j < slits_.size(); ++j) {
      const double gap = std::abs(slits_[i].center - slits_[j].center);
      if (!(gap > 0.5 * (slits_[i].width + slits_[j].width))) {
        throw ValidationError("slits overlap");
      }
    }
  }
}

std::optional<std::size_t> ApertureWindow::find(Player owner,
                                                Strategy label) const {
  for (std::size_t i = 0; i < slits_.size(); ++i) {
    if (slits_[i].owner == owner && slits_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t SlitState::open_count() const {
  return static_cast<std::size_t>(std::count(open.begin(), open.end(), true));
}

ScreenGrid::ScreenGrid(double u_min, double u_max, std::size_t sample_count)
    : u_min_(u_min), u_max_(u_max), sample_count_(sample_count) {
  if (!std::isfinite(u_min) || !std::isfinite(u_max) || !(u_min < u_max)) {
    throw ValidationError("screen grid needs u_min < u_max");
  }
  if (std::abs(u_min) > 1.0 || std::abs(u_max) > 1.0) {
    throw ValidationError("screen grid must stay within |u| <= 1");
  }
  if (sample_count < kMinSamples) {
    throw ValidationError("screen grid needs at least 16 samples");
  }
}

void Detector::validate() const {
  if (!std::isfinite(bin_width) || !(bin_width > 0.0)) {
    throw ValidationError("detector bin width must be > 0");
  }
  if (!(peak_threshold > 0.0 && peak_threshold < 1.0)) {
    throw ValidationError("detector peak threshold must lie in (0, 1)");
  }
  if (min_resolvable_spacing_bins < 2) {
    throw ValidationError("detector needs at least 2 bins per fringe");
  }
}

ScreenGrid default_grid(double lambda, double min_separation) {
  if (!(lambda > 0.0) || !(min_separation > 0.0)) {
    throw ValidationError("default grid needs lambda > 0 and d > 0");
  }
  const double half = std::min(1.0, kDefaultOrdersInView * lambda / min_separation);
  return {-half, half, kDefaultSampleCount};
}

DiffractionPattern intensity_pattern(const ApertureWindow& window,
                                     const SlitState& state, double lambda,
                                     const ScreenGrid& grid) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    throw ValidationError("wavelength must be > 0 to form a pattern");
  }
  if (state.open.size() != window.size()) {
    throw ValidationError("slit state length does not match the window");
  }

  const std::size_t n = grid.sample_count();
  DiffractionPattern pattern{grid, std::vector<double>(n, 0.0), false};
  if (state.open_count() == 0) {
    pattern.all_closed = true;
    return pattern;
  }

  constexpr double pi = std::numbers::pi;
  const auto slits = window.slits();
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = grid.at(i);
    std::complex<double> amp{0.0, 0.0};
    for (std::size_t j = 0; j < slits.size(); ++j) {
      if (!state.open[j]) continue;
      const double w = slits[j].width / lambda;
      const double c = slits[j].center / lambda;
      amp += slits[j].width * sinc(pi * w * u) * std::polar(1.0, 2.0 * pi * c * u);
    }
    pattern.intensity[i] = std::norm(amp);
    peak = std::max(peak, pattern.intensity[i]);
  }
  if (peak > 0.0) {
    for (double& v : pattern.intensity) v /= peak;
  }
  return pattern;
}

std::vector<Peak> detect_peaks(const DiffractionPattern& pattern,
                               const Detector& detector) {
  const auto& y = pattern.intensity;
  const std::size_t n = y.size();
  std::vector<Peak> peaks;
  if (n < 3) return peaks;

  const double top = *std::max_element(y.begin(), y.end());
  if (!(top > 0.0)) return peaks;
  const double floor = detector.peak_threshold * top;
  const double step = pattern.grid.step();

  std::size_t i = 1;
  while (i + 1 < n) {
    if (!(y[i] > y[i - 1])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && y[j + 1] == y[i]) ++j;
    if (j + 1 >= n) break;
    if (y[j + 1] < y[i] && y[i] > floor) {
      if (j == i) {
        const double left = y[i - 1];
        const double right = y[i + 1];
        const double curv = left - 2.0 * y[i] + right;
        double offset = 0.0;
        if (curv < 0.0) offset = 0.5 * (left - right) / curv;
        const double height = y[i] - 0.25 * (left - right) * offset;
        peaks.push_back({pattern.grid.at(i) + offset * step, height});
      } else {
        const double mid = 0.5 * (pattern.grid.at(i) + pattern.grid.at(j));
        peaks.push_back({mid, y[i]});
      }
    }
    i = j + 1;
  }
  return peaks;
}

FringeMeasurement measure_fringe_spacing(std::span<const Peak> peaks,
                                         double lambda,
                                         const Detector& detector) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    throw ValidationError("wavelength must be > 0 to measure fringes");
  }
  FringeMeasurement out;
  if (peaks.size() < 3) {
    out.peaks_used = static_cast<int>(peaks.size());
    return out;
  }

  std::vector<Peak> sorted(peaks.begin(), peaks.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Peak& a, const Peak& b) { return a.position < b.position; });

  double tallest = 0.0;
  for (const Peak& p : sorted) tallest = std::max(tallest, p.height);
  const double half = 0.5 * tallest;
  std::size_t first = sorted.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].height >= half) {
      first = std::min(first, i);
      last = i;
    }
  }

  const std::size_t used = first <= last ? last - first + 1 : 0;
  out.peaks_used = static_cast<int>(used);
  if (used < 3) return out;

  std::vector<double> gaps;
  gaps.reserve(used - 1);
  for (std::size_t i = first; i < last; ++i) {
    gaps.push_back(sorted[i + 1].position - sorted[i].position);
  }
  const double delta = median(std::move(gaps));
  out.delta_u = delta;
  out.resolved =
      delta >= detector.min_resolvable_spacing_bins * detector.bin_width;
  if (out.resolved) out.d_inferred = lambda / delta;
  return out;
}

}  // namespace fringe
