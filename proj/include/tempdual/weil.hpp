#ifndef TEMPDUAL_WEIL_HPP
#define TEMPDUAL_WEIL_HPP

#include <compare>
#include <variant>
#include <vector>

#include "tempdual/param_space.hpp"

namespace tempdual {

/// x -> sgn(x)^epsilon |x|^(i t), a unitary character of R^x.
struct RealCharacter {
  int epsilon = 0;
  double t = 0;

  friend auto operator<=>(const RealCharacter&, const RealCharacter&) = default;
};

/// z -> (z/|z|)^ell |z|^(i t), a unitary character of C^x.
struct ComplexCharacter {
  int ell = 0;
  double t = 0;

  /// Character of z -> conj(z): inverts the circle part, keeps the modulus.
  ComplexCharacter conjugate() const { return {-ell, t}; }

  friend auto operator<=>(const ComplexCharacter&, const ComplexCharacter&) = default;
};

/// One-dimensional summand of a parameter of W_R, factoring through R^x.
struct OneDim {
  RealCharacter chi;
  friend auto operator<=>(const OneDim&, const OneDim&) = default;
};

/// Two-dimensional summand Ind_{W_C}^{W_R}(chi). Since the induction from chi
/// and from its conjugate agree, chi is normalized to ell >= 1; ell = 0 would
/// give a reducible parameter and is rejected.
struct TwoDimInduced {
  ComplexCharacter chi;
  friend auto operator<=>(const TwoDimInduced&, const TwoDimInduced&) = default;
};

using RealSummand = std::variant<TwoDimInduced, OneDim>;

/// Tempered L-parameter of W_R: a multiset of irreducible summands.
class LParameterR {
 public:
  LParameterR() = default;
  /// Normalizes TwoDimInduced labels to ell >= 1 and sorts the summands.
  /// Throws std::domain_error on ell = 0 or epsilon outside {0, 1}.
  explicit LParameterR(std::vector<RealSummand> summands);

  const std::vector<RealSummand>& summands() const { return summands_; }
  int dimension() const;

  friend bool operator==(const LParameterR&, const LParameterR&) = default;

 private:
  std::vector<RealSummand> summands_;
};

/// Tempered L-parameter of W_C = C^x: a multiset of characters.
class LParameterC {
 public:
  LParameterC() = default;
  explicit LParameterC(std::vector<ComplexCharacter> summands);  // sorts

  const std::vector<ComplexCharacter>& summands() const { return summands_; }
  int dimension() const { return static_cast<int>(summands_.size()); }

  friend bool operator==(const LParameterC&, const LParameterC&) = default;

 private:
  std::vector<ComplexCharacter> summands_;
};

/// Restriction from W_R to W_C.
LParameterC restrict(const LParameterR& p);

/// Tempered point of GL(n, R) attached to a parameter.
RealTemperedPoint langlands_real(const LParameterR& p);

/// Inverse of langlands_real.
LParameterR parameter_of(const RealTemperedPoint& p);

/// Tempered point of GL(n, C) attached to a parameter.
ComplexTemperedPoint langlands_complex(const LParameterC& p);

LParameterC parameter_of(const ComplexTemperedPoint& p);

}  // namespace tempdual

#endif  // TEMPDUAL_WEIL_HPP
