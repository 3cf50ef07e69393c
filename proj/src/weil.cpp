#include "tempdual/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempdual {

LParameterR::LParameterR(std::vector<RealSummand> summands) : summands_(std::move(summands)) {
  for (auto& s : summands_) {
    if (auto* two = std::get_if<TwoDimInduced>(&s)) {
      if (two->chi.ell == 0)
        throw std::domain_error("induced summand with ell = 0 is reducible");
      if (two->chi.ell < 0)
        two->chi = two->chi.conjugate();
    } else {
      int e = std::get<OneDim>(s).chi.epsilon;
      if (e != 0 && e != 1)
        throw std::domain_error("epsilon must be 0 or 1, got " + std::to_string(e));
    }
  }
  std::sort(summands_.begin(), summands_.end());
}

int LParameterR::dimension() const {
  int d = 0;
  for (const auto& s : summands_)
    d += std::holds_alternative<TwoDimInduced>(s) ? 2 : 1;
  return d;
}

LParameterC::LParameterC(std::vector<ComplexCharacter> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

LParameterC restrict(const LParameterR& p) {
  std::vector<ComplexCharacter> out;
  out.reserve(static_cast<std::size_t>(p.dimension()));
  for (const auto& s : p.summands()) {
    if (const auto* two = std::get_if<TwoDimInduced>(&s)) {
      out.push_back(two->chi);
      out.push_back(two->chi.conjugate());
    } else {
      // chi o N with N(z) = |z|^2: the sign is lost and t doubles.
      out.push_back({0, 2 * std::get<OneDim>(s).chi.t});
    }
  }
  return LParameterC(std::move(out));
}

RealTemperedPoint langlands_real(const LParameterR& p) {
  std::vector<int> gl2, gl1;
  std::vector<double> t2, t1;
  // Summands are sorted, so labels come out sorted and params are sorted
  // within every block of equal labels.
  for (const auto& s : p.summands()) {
    if (const auto* two = std::get_if<TwoDimInduced>(&s)) {
      gl2.push_back(two->chi.ell);
      t2.push_back(two->chi.t);
    } else {
      const auto& chi = std::get<OneDim>(s).chi;
      gl1.push_back(chi.epsilon);
      t1.push_back(chi.t);
    }
  }
  t2.insert(t2.end(), t1.begin(), t1.end());
  return canonicalize_point(RealTemperedPoint{Component(SigmaOrbit(std::move(gl2), std::move(gl1))), std::move(t2)});
}

LParameterR parameter_of(const RealTemperedPoint& p) {
  if (static_cast<int>(p.params.size()) != p.component.dimension())
    throw std::invalid_argument("point parameters do not match the component dimension");
  const auto& orbit = p.component.orbit();
  std::vector<RealSummand> out;
  std::size_t i = 0;
  for (int ell : orbit.gl2_labels())
    out.emplace_back(TwoDimInduced{{ell, p.params[i++]}});
  for (int eps : orbit.gl1_labels())
    out.emplace_back(OneDim{{eps, p.params[i++]}});
  return LParameterR(std::move(out));
}

ComplexTemperedPoint langlands_complex(const LParameterC& p) {
  std::vector<int> labels;
  std::vector<double> params;
  for (const auto& chi : p.summands()) {
    labels.push_back(chi.ell);
    params.push_back(chi.t);
  }
  return canonicalize_point(ComplexTemperedPoint{ComplexComponent(std::move(labels)), std::move(params)});
}

LParameterC parameter_of(const ComplexTemperedPoint& p) {
  if (static_cast<int>(p.params.size()) != p.component.dimension())
    throw std::invalid_argument("point parameters do not match the component dimension");
  std::vector<ComplexCharacter> out;
  for (std::size_t i = 0; i < p.params.size(); ++i)
    out.push_back({p.component.labels()[i], p.params[i]});
  return LParameterC(std::move(out));
}

}  // namespace tempdual
