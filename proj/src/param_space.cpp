#include "tempdual/param_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempdual {

namespace {

struct Run {
  std::size_t begin;
  std::size_t length;
};

void append_runs(const std::vector<int>& sorted, std::size_t offset, std::vector<Run>& out) {
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i])
      ++j;
    out.push_back({offset + i, j - i});
    i = j;
  }
}

// Equal labels only collide inside the same block: a GL(2) label and a GL(1)
// label never share an isotropy factor.
std::vector<Run> runs_of(const Component& c) {
  std::vector<Run> runs;
  append_runs(c.orbit().gl2_labels(), 0, runs);
  append_runs(c.orbit().gl1_labels(), c.orbit().gl2_labels().size(), runs);
  return runs;
}

std::vector<Run> runs_of(const ComplexComponent& c) {
  std::vector<Run> runs;
  append_runs(c.labels(), 0, runs);
  return runs;
}

void check_length(std::size_t got, int dimension) {
  if (got != static_cast<std::size_t>(dimension))
    throw std::invalid_argument("point has " + std::to_string(got) + " parameters, component dimension is " +
                                std::to_string(dimension));
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void sort_runs(const std::vector<Run>& runs, std::vector<double>& params) {
  for (const auto& run : runs) {
    auto first = params.begin() + static_cast<std::ptrdiff_t>(run.begin);
    std::sort(first, first + static_cast<std::ptrdiff_t>(run.length));
  }
}

ChartCoordinates to_chart(const std::vector<Run>& runs, std::vector<double> params) {
  sort_runs(runs, params);
  ChartCoordinates x;
  for (const auto& run : runs) {
    double sum = 0;
    for (std::size_t k = 0; k < run.length; ++k)
      sum += params[run.begin + k];
    x.lines.push_back(sum / static_cast<double>(run.length));
    for (std::size_t k = 1; k < run.length; ++k)
      x.rays.push_back(params[run.begin + k] - params[run.begin + k - 1]);
  }
  return x;
}

std::vector<double> from_chart(const std::vector<Run>& runs, const ChartCoordinates& x, int dimension) {
  std::size_t rays_needed = 0;
  for (const auto& run : runs)
    rays_needed += run.length - 1;
  if (x.lines.size() != runs.size() || x.rays.size() != rays_needed)
    throw std::invalid_argument("chart coordinates do not match the component");

  std::vector<double> params(static_cast<std::size_t>(dimension));
  std::size_t ray = 0;
  for (std::size_t b = 0; b < runs.size(); ++b) {
    const auto& run = runs[b];
    // Offsets from the smallest coordinate; the mean then fixes the base.
    std::vector<double> offsets(run.length, 0.0);
    for (std::size_t k = 1; k < run.length; ++k) {
      double gap = x.rays[ray++];
      if (gap < 0)
        throw std::domain_error("chart gap coordinates must be non-negative");
      offsets[k] = offsets[k - 1] + gap;
    }
    double offset_mean = 0;
    for (double o : offsets)
      offset_mean += o;
    offset_mean /= static_cast<double>(run.length);
    double base = x.lines[b] - offset_mean;
    for (std::size_t k = 0; k < run.length; ++k)
      params[run.begin + k] = base + offsets[k];
  }
  return params;
}

ConeChart chart_of(const IsotropyDescriptor& iso, int dimension) {
  int rays = iso.collision_rank();
  return {dimension - rays, rays};
}

}  // namespace

const char* to_string(ComponentKind kind) {
  return kind == ComponentKind::Free ? "free" : "cone";
}

Component::Component(SigmaOrbit orbit) : orbit_(std::move(orbit)), isotropy_(tempdual::isotropy(orbit_)) {}

std::string Component::key() const {
  auto s = shape();
  return "shape:" + std::to_string(s.q) + "," + std::to_string(s.r) + "|gl2:" + join(orbit_.gl2_labels()) +
         "|gl1:" + join(orbit_.gl1_labels());
}

ComplexComponent::ComplexComponent(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  isotropy_.multiplicities = repeated_multiplicities(labels_);
}

std::string ComplexComponent::key() const {
  return "labels:" + join(labels_);
}

std::vector<Component> real_components(int n, int cutoff) {
  std::vector<Component> out;
  for (const auto& shape : enumerate_levi_shapes(n))
    for (auto& orbit : enumerate_orbits(shape, cutoff))
      out.emplace_back(std::move(orbit));
  return out;
}

std::vector<ComplexComponent> complex_components(int n, int cutoff) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  if (cutoff < 0)
    throw std::domain_error("cutoff must be >= 0, got " + std::to_string(cutoff));
  std::vector<ComplexComponent> out;
  for (auto& labels : sorted_multisets(-cutoff, cutoff, n))
    out.emplace_back(std::move(labels));
  return out;
}

ConeChart cone_chart(const Component& c) {
  return chart_of(c.isotropy(), c.dimension());
}

ConeChart cone_chart(const ComplexComponent& c) {
  return chart_of(c.isotropy(), c.dimension());
}

RealTemperedPoint canonicalize_point(RealTemperedPoint p) {
  check_length(p.params.size(), p.component.dimension());
  sort_runs(runs_of(p.component), p.params);
  return p;
}

ComplexTemperedPoint canonicalize_point(ComplexTemperedPoint p) {
  check_length(p.params.size(), p.component.dimension());
  sort_runs(runs_of(p.component), p.params);
  return p;
}

ChartCoordinates chart_coordinates(const RealTemperedPoint& p) {
  check_length(p.params.size(), p.component.dimension());
  return to_chart(runs_of(p.component), p.params);
}

ChartCoordinates chart_coordinates(const ComplexTemperedPoint& p) {
  check_length(p.params.size(), p.component.dimension());
  return to_chart(runs_of(p.component), p.params);
}

RealTemperedPoint point_from_chart(const Component& c, const ChartCoordinates& x) {
  return {c, from_chart(runs_of(c), x, c.dimension())};
}

ComplexTemperedPoint point_from_chart(const ComplexComponent& c, const ChartCoordinates& x) {
  return {c, from_chart(runs_of(c), x, c.dimension())};
}

}  // namespace tempdual
