#include "tempdual/base_change.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tempdual {

namespace {

// One row of the parameter map: target label, source column, coefficient.
struct TargetRow {
  int label;
  std::size_t column;
  long long coeff;
};

std::vector<TargetRow> target_rows(const Component& c) {
  std::vector<TargetRow> rows;
  const auto& orbit = c.orbit();
  std::size_t col = 0;
  for (int ell : orbit.gl2_labels()) {
    rows.push_back({ell, col, 1});
    rows.push_back({-ell, col, 1});
    ++col;
  }
  for (std::size_t j = 0; j < orbit.gl1_labels().size(); ++j)
    rows.push_back({0, col++, 2});
  return rows;
}

}  // namespace

ComplexTemperedPoint bc_point_real(const RealTemperedPoint& p) {
  if (static_cast<int>(p.params.size()) != p.component.dimension())
    throw std::invalid_argument("point parameters do not match the component dimension");
  std::vector<std::pair<int, double>> pairs;
  for (const auto& row : target_rows(p.component))
    pairs.emplace_back(row.label, static_cast<double>(row.coeff) * p.params[row.column]);
  std::sort(pairs.begin(), pairs.end());

  ComplexTemperedPoint out;
  std::vector<int> labels;
  for (const auto& [label, t] : pairs) {
    labels.push_back(label);
    out.params.push_back(t);
  }
  out.component = ComplexComponent(std::move(labels));
  return out;
}

ParameterMap bc_component(const Component& c) {
  ParameterMap m;
  m.source = c;
  auto cols = static_cast<std::size_t>(c.dimension());
  for (const auto& row : target_rows(c)) {
    m.row_labels.push_back(row.label);
    std::vector<long long> r(cols, 0);
    r[row.column] = row.coeff;
    m.matrix.push_back(std::move(r));
  }
  m.target = ComplexComponent(m.row_labels);
  return m;
}

int matrix_rank(const IntMatrix& input) {
  IntMatrix a = input;
  if (a.empty())
    return 0;
  std::size_t rows = a.size(), cols = a.front().size();
  for (const auto& r : a)
    if (r.size() != cols)
      throw std::invalid_argument("ragged matrix");

  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == 0)
      ++sel;
    if (sel == rows)
      continue;
    std::swap(a[sel], a[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (a[i][col] == 0)
        continue;
      long long p = a[pivot_row][col], f = a[i][col];
      long long g = std::gcd(p, f);
      p /= g;
      f /= g;
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = a[i][j] * p - a[pivot_row][j] * f;
      long long row_gcd = 0;
      for (std::size_t j = col; j < cols; ++j)
        row_gcd = std::gcd(row_gcd, a[i][j]);
      if (row_gcd > 1)
        for (std::size_t j = col; j < cols; ++j)
          a[i][j] /= row_gcd;
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

bool is_proper(const ParameterMap& m) {
  if (m.matrix.empty())
    return m.source.dimension() == 0;
  return matrix_rank(m.matrix) == static_cast<int>(m.matrix.front().size());
}

KClass InducedKMap::image(const std::string& generator) const {
  auto it = assignments.find(generator);
  return it == assignments.end() ? KClass(target) : it->second;
}

InducedKMap induced_k_map(int n, int cutoff) {
  int degree = n % 2;
  KGroups complex_k = k_complex_truncated(n, cutoff);
  KGroups real_k = k_real_truncated(n, cutoff);
  const auto& source_group = complex_k[degree];
  const auto& target_group = real_k[degree];

  InducedKMap m;
  m.source = source_group.id;
  m.target = target_group.id;
  m.source_generators = source_group.generators;

  for (const auto& x : real_components(n, cutoff)) {
    if (!x.is_free() || !target_group.has_generator(x.key()))
      continue;
    auto pm = bc_component(x);
    const auto& y = pm.target;
    if (!y.is_free() || !source_group.has_generator(y.key()))
      continue;
    if (x.shape().q != 0 || x.dimension() != y.dimension())
      continue;
    auto [it, inserted] = m.assignments.try_emplace(y.key(), m.target);
    it->second.add_term(x.key(), 1);
  }
  std::erase_if(m.assignments, [](const auto& kv) { return kv.second.is_zero(); });
  return m;
}

KClass pullback(const InducedKMap& m, const KClass& c) {
  if (!(c.presentation() == m.source))
    throw std::invalid_argument("class of " + c.presentation().to_string() + " cannot be pulled back along a map from " +
                                m.source.to_string());
  KClass out(m.target);
  for (const auto& [key, coeff] : c.coefficients()) {
    auto it = m.assignments.find(key);
    if (it == m.assignments.end())
      continue;
    out = out + kclass_scale(it->second, coeff);
  }
  return out;
}

}  // namespace tempdual
