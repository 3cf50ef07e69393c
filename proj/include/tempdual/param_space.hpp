#ifndef TEMPDUAL_PARAM_SPACE_HPP
#define TEMPDUAL_PARAM_SPACE_HPP

#include <string>
#include <vector>

#include "tempdual/levi.hpp"

namespace tempdual {

enum class ComponentKind { Free, Cone };

const char* to_string(ComponentKind kind);

/// One connected piece X(M)/W_sigma(M) of the tempered dual of GL(n, R):
/// a copy of R^(q+r) modulo the isotropy of the orbit.
class Component {
 public:
  Component() = default;
  explicit Component(SigmaOrbit orbit);

  const SigmaOrbit& orbit() const { return orbit_; }
  LeviShape shape() const { return orbit_.shape(); }
  int n() const { return shape().n(); }
  int dimension() const { return shape().q + shape().r; }
  const IsotropyDescriptor& isotropy() const { return isotropy_; }
  ComponentKind kind() const { return isotropy_.is_generic() ? ComponentKind::Free : ComponentKind::Cone; }
  bool is_free() const { return kind() == ComponentKind::Free; }

  /// "shape:q,r|gl2:l1,l2|gl1:e1" with empty lists left blank.
  std::string key() const;

  friend bool operator==(const Component& a, const Component& b) { return a.orbit_ == b.orbit_; }

 private:
  SigmaOrbit orbit_;
  IsotropyDescriptor isotropy_;
};

/// A component of the tempered dual of GL(n, C): the multiset of n circle
/// labels of a unitary character of the compact torus.
class ComplexComponent {
 public:
  ComplexComponent() = default;
  explicit ComplexComponent(std::vector<int> labels);  // sorts

  const std::vector<int>& labels() const { return labels_; }
  int n() const { return static_cast<int>(labels_.size()); }
  int dimension() const { return n(); }
  const IsotropyDescriptor& isotropy() const { return isotropy_; }
  ComponentKind kind() const { return isotropy_.is_generic() ? ComponentKind::Free : ComponentKind::Cone; }
  bool is_free() const { return kind() == ComponentKind::Free; }

  /// "labels:l1,l2,..."
  std::string key() const;

  friend bool operator==(const ComplexComponent& a, const ComplexComponent& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<int> labels_;
  IsotropyDescriptor isotropy_;
};

/// Point of a real component. params holds the q GL(2) parameters followed
/// by the r GL(1) parameters, aligned with the sorted labels.
struct RealTemperedPoint {
  Component component;
  std::vector<double> params;

  friend bool operator==(const RealTemperedPoint&, const RealTemperedPoint&) = default;
};

struct ComplexTemperedPoint {
  ComplexComponent component;
  std::vector<double> params;

  friend bool operator==(const ComplexTemperedPoint&, const ComplexTemperedPoint&) = default;
};

/// Shape of the canonical chart R^d / prod S_m  ~=  R^lines x [0, inf)^rays.
struct ConeChart {
  int num_lines = 0;
  int num_rays = 0;

  friend bool operator==(const ConeChart&, const ConeChart&) = default;
};

/// Coordinates of a point in its cone chart. Each block of m equal labels
/// contributes its mean to `lines` and its m - 1 ascending gaps to `rays`;
/// singleton blocks contribute their parameter to `lines`.
struct ChartCoordinates {
  std::vector<double> lines;
  std::vector<double> rays;
};

std::vector<Component> real_components(int n, int cutoff);
std::vector<ComplexComponent> complex_components(int n, int cutoff);

ConeChart cone_chart(const Component& c);
ConeChart cone_chart(const ComplexComponent& c);

/// Sorts params within every block of equal labels. Throws
/// std::invalid_argument if the parameter count differs from the dimension.
RealTemperedPoint canonicalize_point(RealTemperedPoint p);
ComplexTemperedPoint canonicalize_point(ComplexTemperedPoint p);

ChartCoordinates chart_coordinates(const RealTemperedPoint& p);
ChartCoordinates chart_coordinates(const ComplexTemperedPoint& p);

/// Inverse of chart_coordinates; yields the canonical point.
RealTemperedPoint point_from_chart(const Component& c, const ChartCoordinates& x);
ComplexTemperedPoint point_from_chart(const ComplexComponent& c, const ChartCoordinates& x);

}  // namespace tempdual

#endif  // TEMPDUAL_PARAM_SPACE_HPP
