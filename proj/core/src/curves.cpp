#include "lie_contact/curves.hpp"

#include "lie_contact/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lie_contact {

double polyline_length(const Polyline& c) {
  double len = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) len += (c[i] - c[i - 1]).norm();
  return len;
}

Polyline resample_by_arc_length(const Polyline& c, int count) {
  if (c.empty() || count < 2) throw ValidationError("resample needs a nonempty curve and count >= 2");
  std::vector<double> s(c.size(), 0.0);
  for (std::size_t i = 1; i < c.size(); ++i) s[i] = s[i - 1] + (c[i] - c[i - 1]).norm();
  const double total = s.back();
  Polyline out;
  out.reserve(static_cast<std::size_t>(count));
  std::size_t seg = 1;
  for (int k = 0; k < count; ++k) {
    const double target = total * k / (count - 1);
    while (seg + 1 < c.size() && s[seg] < target) ++seg;
    if (c.size() == 1 || total == 0.0) {
      out.push_back(c.front());
      continue;
    }
    const double span = s[seg] - s[seg - 1];
    const double t = span > 0.0 ? std::clamp((target - s[seg - 1]) / span, 0.0, 1.0) : 0.0;
    out.push_back((1.0 - t) * c[seg - 1] + t * c[seg]);
  }
  return out;
}

double discrete_frechet(const Polyline& a, const Polyline& b) {
  if (a.empty() || b.empty()) throw ValidationError("Frechet distance of an empty curve");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m);
  std::vector<double> cur(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = (a[i] - b[j]).norm();
      double best;
      if (i == 0 && j == 0) {
        best = d;
      } else if (i == 0) {
        best = std::max(cur[j - 1], d);
      } else if (j == 0) {
        best = std::max(prev[j], d);
      } else {
        best = std::max(std::min({prev[j], prev[j - 1], cur[j - 1]}), d);
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

double trace_distance(const Polyline& a, const Polyline& b, int count) {
  return discrete_frechet(resample_by_arc_length(a, count), resample_by_arc_length(b, count));
}

double max_chord_deviation(const Polyline& c) {
  if (c.size() < 3) return 0.0;
  const Vec a = c.front();
  const Vec d = c.back() - a;
  const double len = d.norm();
  if (len == 0.0) throw ValidationError("chord deviation of a closed curve");
  const Vec u = d / len;
  double worst = 0.0;
  for (const Vec& p : c) {
    const Vec r = p - a;
    worst = std::max(worst, (r - r.dot(u) * u).norm());
  }
  return worst;
}

Polyline flatten(const std::vector<Mat>& matrices) {
  Polyline out;
  out.reserve(matrices.size());
  for (const Mat& m : matrices) out.emplace_back(m.reshaped());
  return out;
}

}  // namespace lie_contact
