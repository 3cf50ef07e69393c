#include "tempdual/levi.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempdual {

std::string LeviShape::to_string() const {
  std::string s;
  for (int i = 0; i < q + r; ++i) {
    if (i)
      s += '+';
    s += i < q ? '2' : '1';
  }
  return s;
}

namespace {

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::uint64_t WeylDescriptor::order() const {
  std::uint64_t o = 1;
  for (int d : factor_degrees)
    o *= factorial(d);
  return o;
}

std::string WeylDescriptor::to_string() const {
  if (factor_degrees.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < factor_degrees.size(); ++i) {
    if (i)
      s += " x ";
    s += "S" + std::to_string(factor_degrees[i]);
  }
  return s;
}

SigmaOrbit::SigmaOrbit(std::vector<int> gl2_labels, std::vector<int> gl1_labels)
    : gl2_(std::move(gl2_labels)), gl1_(std::move(gl1_labels)) {
  for (int l : gl2_)
    if (l < 1)
      throw std::domain_error("discrete-series label must be >= 1, got " + std::to_string(l));
  for (int e : gl1_)
    if (e != 0 && e != 1)
      throw std::domain_error("GL(1) label must be 0 or 1, got " + std::to_string(e));
  std::sort(gl2_.begin(), gl2_.end());
  std::sort(gl1_.begin(), gl1_.end());
}

int IsotropyDescriptor::collision_rank() const {
  int s = 0;
  for (int m : multiplicities)
    s += m - 1;
  return s;
}

std::uint64_t IsotropyDescriptor::order() const {
  std::uint64_t o = 1;
  for (int m : multiplicities)
    o *= factorial(m);
  return o;
}

std::vector<LeviShape> enumerate_levi_shapes(int n) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  std::vector<LeviShape> shapes;
  shapes.reserve(static_cast<std::size_t>(n / 2 + 1));
  for (int q = n / 2; q >= 0; --q)
    shapes.push_back({q, n - 2 * q});
  return shapes;
}

WeylDescriptor weyl_group(LeviShape shape) {
  WeylDescriptor w;
  for (int d : {shape.q, shape.r})
    if (d >= 2)
      w.factor_degrees.push_back(d);
  return w;
}

std::vector<int> repeated_multiplicities(const std::vector<int>& sorted_labels) {
  std::vector<int> out;
  for (auto it = sorted_labels.begin(); it != sorted_labels.end();) {
    auto run_end = std::find_if(it, sorted_labels.end(), [&](int v) { return v != *it; });
    auto m = static_cast<int>(run_end - it);
    if (m >= 2)
      out.push_back(m);
    it = run_end;
  }
  return out;
}

IsotropyDescriptor isotropy(const SigmaOrbit& orbit) {
  IsotropyDescriptor iso;
  iso.multiplicities = repeated_multiplicities(orbit.gl2_labels());
  auto gl1 = repeated_multiplicities(orbit.gl1_labels());
  iso.multiplicities.insert(iso.multiplicities.end(), gl1.begin(), gl1.end());
  return iso;
}

std::vector<std::vector<int>> sorted_multisets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0)
    return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (hi < lo)
    return out;

  std::vector<int> cur(static_cast<std::size_t>(k), lo);
  while (true) {
    out.push_back(cur);
    // Rightmost position that can still grow; everything after it resets to
    // the new value so the tuple stays non-decreasing.
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi)
      --i;
    if (i < 0)
      break;
    int v = cur[static_cast<std::size_t>(i)] + 1;
    std::fill(cur.begin() + i, cur.end(), v);
  }
  return out;
}

std::vector<SigmaOrbit> enumerate_orbits(LeviShape shape, int cutoff) {
  if (cutoff < 1)
    throw std::domain_error("cutoff must be >= 1, got " + std::to_string(cutoff));
  if (shape.q < 0 || shape.r < 0)
    throw std::domain_error("invalid Levi shape");
  auto gl2 = sorted_multisets(1, cutoff, shape.q);
  auto gl1 = sorted_multisets(0, 1, shape.r);
  std::vector<SigmaOrbit> out;
  out.reserve(gl2.size() * gl1.size());
  for (const auto& a : gl2)
    for (const auto& b : gl1)
      out.emplace_back(a, b);
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::uint64_t multiset_count(std::int64_t m, std::int64_t k) {
  if (k == 0)
    return 1;
  if (m <= 0)
    return 0;
  return binomial(m + k - 1, k);
}

}  // namespace tempdual
