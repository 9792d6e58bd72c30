#pragma once

/// Scatter plot of a supercharacter's image {sigma_X(xi) : xi in G} in the
/// complex plane, rendered as deterministic SVG bytes. One point per
/// distinct value, multiplicity ignored; axes are symmetric with radius
/// |X|, the a-priori bound on |sigma_X|.

#include <cstdio>
#include <set>
#include <string>
#include <utility>

#include "superfourier/table.hpp"
#include "superfourier/theory.hpp"

namespace superfourier {

struct PlotStats {
  std::size_t distinct_points = 0;
  double max_magnitude = 0;
  double radius_bound = 0;
};

namespace detail {
inline std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}
}  // namespace detail

inline std::string render_supercharacter_svg(const Theory& t, std::size_t class_index,
                                             PlotStats* stats = nullptr,
                                             u64 point_cap = 10'000'000) {
  const auto& xs = t.x_classes();
  if (class_index >= xs.class_count())
    throw bad_parameter_error("plot: class index out of range");
  if (t.domain_size() > point_cap)
    throw cap_exceeded_error("plot: n^d exceeds the point cap");

  const Modulus mod = xs.modulus();
  const std::size_t d = t.d();
  const u64 n = t.n();
  const PhaseTable phases(n);

  // Decode the class members once.
  std::vector<Residue> coords;
  const auto& members = xs.superclass(class_index).members;
  coords.reserve(members.size() * d);
  for (u64 code : members) {
    const ModVec v = ModVec::from_code(mod, d, code);
    coords.insert(coords.end(), v.coords().begin(), v.coords().end());
  }

  // Distinct values on a 1e-9 grid, ordered, so the byte output is fixed.
  std::set<std::pair<std::int64_t, std::int64_t>> points;
  double max_mag = 0;
  std::vector<Residue> xi(d, 0);
  bool done = false;
  while (!done) {
    Complex acc{0.0, 0.0};
    const Residue* x = coords.data();
    for (std::size_t m = 0; m < members.size(); ++m, x += d) {
      u64 r = 0;
      for (std::size_t k = 0; k < d; ++k) r = (r + mul_mod(x[k], xi[k], n)) % n;
      acc += phases(r);
    }
    max_mag = std::max(max_mag, std::abs(acc));
    points.emplace(std::llround(acc.real() * 1e9), std::llround(acc.imag() * 1e9));
    done = true;
    for (std::size_t pos = d; pos-- > 0;) {
      if (++xi[pos] < n) {
        done = false;
        break;
      }
      xi[pos] = 0;
    }
  }

  const double bound = static_cast<double>(xs.superclass(class_index).size());
  if (stats) {
    stats->distinct_points = points.size();
    stats->max_magnitude = max_mag;
    stats->radius_bound = bound;
  }

  constexpr int kCanvas = 800;
  constexpr double kHalf = kCanvas / 2.0;
  const double usable = kHalf - 20.0;
  const double px_per_unit = usable / std::max(bound, 1.0);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#cccccc\" "
         "stroke-width=\"1\"/>\n";
  svg += "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#cccccc\" "
         "stroke-width=\"1\"/>\n";
  svg += "<!-- " + t.name() + ", X = class " + std::to_string(class_index + 1) + " of " +
         std::to_string(xs.class_count()) + ", |X| = " +
         std::to_string(xs.superclass(class_index).size()) + " -->\n";
  for (const auto& [re_fixed, im_fixed] : points) {
    const double re = static_cast<double>(re_fixed) * 1e-9;
    const double im = static_cast<double>(im_fixed) * 1e-9;
    svg += "<circle cx=\"" + detail::format_coord(kHalf + re * px_per_unit) + "\" cy=\"" +
           detail::format_coord(kHalf - im * px_per_unit) + "\" r=\"1.5\" fill=\"black\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace superfourier
