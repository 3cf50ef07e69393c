#ifndef TEMPDUAL_BASE_CHANGE_HPP
#define TEMPDUAL_BASE_CHANGE_HPP

#include <map>
#include <string>
#include <vector>

#include "tempdual/ktheory.hpp"
#include "tempdual/param_space.hpp"

namespace tempdual {

using IntMatrix = std::vector<std::vector<long long>>;

/// Base change on one real component: the linear map on continuous
/// parameters X(M) = R^(q+r) -> R^(2q+r) into the complex component hit.
/// Rows follow the blocks of the source: (ell_i, -ell_i) for each GL(2)
/// block, then one row per GL(1) block; row_labels names the complex label
/// of each row.
struct ParameterMap {
  Component source;
  ComplexComponent target;
  std::vector<int> row_labels;
  IntMatrix matrix;  // (2q + r) x (q + r)
};

/// Base change of a tempered point. Each GL(2) block (ell, t) becomes labels
/// {ell, -ell} with parameters (t, t); each GL(1) block (epsilon, t) becomes
/// label 0 with parameter 2t.
ComplexTemperedPoint bc_point_real(const RealTemperedPoint& p);

ParameterMap bc_component(const Component& c);

/// Rank of an integer matrix, by exact fraction-free elimination.
int matrix_rank(const IntMatrix& m);

/// An injective linear map of parameter spaces is proper, and quotients by
/// finite groups preserve properness: decided by full column rank.
bool is_proper(const ParameterMap& m);

/// The map K_j(GL(n, C)) -> K_j(GL(n, R)) induced by base change, in the
/// one degree j = n mod 2 where the complex side is nonzero.
struct InducedKMap {
  PresentationId source;  // complex side
  PresentationId target;  // real side
  std::vector<std::string> source_generators;
  std::map<std::string, KClass> assignments;  // only nonzero images

  /// Image of a complex generator; zero when not assigned.
  KClass image(const std::string& generator) const;
  bool is_zero() const { return assignments.empty(); }
};

/// A free real component X contributes coefficient 1 to the image of the
/// free complex component Y it lands in exactly when X has no GL(2) blocks
/// and dim X = dim Y (then the parameter map is 2 * identity, homotopic to
/// the identity). With GL(2) blocks, dim X < dim Y and the induced map on
/// one-point compactifications is a map of spheres of different dimension,
/// hence nullhomotopic.
InducedKMap induced_k_map(int n, int cutoff);

/// Linear extension of the assignments. Throws std::invalid_argument if `c`
/// is not a class of m.source.
KClass pullback(const InducedKMap& m, const KClass& c);

}  // namespace tempdual

#endif  // TEMPDUAL_BASE_CHANGE_HPP
