#include "tempdual/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempdual {

const char* to_string(Field f) {
  return f == Field::Real ? "real" : "complex";
}

KRanks k_of_euclidean(int d) {
  if (d < 0)
    throw std::domain_error("dimension must be >= 0, got " + std::to_string(d));
  return d % 2 == 0 ? KRanks{1, 0} : KRanks{0, 1};
}

KRanks k_of_component(const Component& c) {
  return c.is_free() ? k_of_euclidean(c.dimension()) : KRanks{};
}

KRanks k_of_component(const ComplexComponent& c) {
  return c.is_free() ? k_of_euclidean(c.dimension()) : KRanks{};
}

std::string PresentationId::to_string() const {
  return std::string("K") + std::to_string(degree) + "(GL(" + std::to_string(n) + "," +
         (field == Field::Real ? "R" : "C") + "))@cutoff=" + std::to_string(cutoff);
}

std::uint64_t IndexFamily::count_at(int cutoff) const {
  switch (kind) {
    case Kind::Subsets:
      return binomial(cutoff, size);
    case Kind::SubsetsTimesZ2:
      return 2 * binomial(cutoff, size);
    case Kind::IntegerSubsets:
      return binomial(2 * static_cast<std::int64_t>(cutoff) + 1, size);
    case Kind::FixedRank:
      return static_cast<std::uint64_t>(size);
  }
  return 0;
}

std::string IndexFamily::describe() const {
  auto k = std::to_string(size);
  switch (kind) {
    case Kind::Subsets:
      return k + "-subsets of N";
    case Kind::SubsetsTimesZ2:
      return k + "-subsets of N x Z/2";
    case Kind::IntegerSubsets:
      return k + "-subsets of Z";
    case Kind::FixedRank:
      return "rank " + k;
  }
  return {};
}

ClosedForm closed_form_real(int n) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  using K = IndexFamily::Kind;
  ClosedForm cf;
  int q = n / 2;
  if (n % 2 == 0) {
    // Partition 2q with distinct labels in degree q, and partition
    // 2(q-1) + 2 with labels (id, sgn) in degree q + 1.
    IndexFamily top{K::Subsets, q};
    IndexFamily other = q == 1 ? IndexFamily{K::FixedRank, 1} : IndexFamily{K::Subsets, q - 1};
    (q % 2 == 0 ? cf.deg0 : cf.deg1) = top;
    (q % 2 == 0 ? cf.deg1 : cf.deg0) = other;
  } else {
    // Only the partition 2q + 1 contributes, in degree q + 1.
    IndexFamily top = q == 0 ? IndexFamily{K::FixedRank, 2} : IndexFamily{K::SubsetsTimesZ2, q};
    IndexFamily zero{K::FixedRank, 0};
    ((q + 1) % 2 == 0 ? cf.deg0 : cf.deg1) = top;
    ((q + 1) % 2 == 0 ? cf.deg1 : cf.deg0) = zero;
  }
  return cf;
}

ClosedForm closed_form_complex(int n) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  ClosedForm cf;
  IndexFamily top{IndexFamily::Kind::IntegerSubsets, n};
  IndexFamily zero{IndexFamily::Kind::FixedRank, 0};
  (n % 2 == 0 ? cf.deg0 : cf.deg1) = top;
  (n % 2 == 0 ? cf.deg1 : cf.deg0) = zero;
  return cf;
}

bool KGroupPresentation::has_generator(const std::string& key) const {
  return std::find(generators.begin(), generators.end(), key) != generators.end();
}

namespace {

template <class Catalog>
KGroups bucket(Field field, int n, int cutoff, const Catalog& catalog, const ClosedForm& cf) {
  KGroups g;
  g.k0.id = {field, n, cutoff, 0};
  g.k1.id = {field, n, cutoff, 1};
  g.k0.closed_form = cf.deg0;
  g.k1.closed_form = cf.deg1;
  for (const auto& c : catalog) {
    if (!c.is_free())
      continue;
    (c.dimension() % 2 == 0 ? g.k0 : g.k1).generators.push_back(c.key());
  }
  return g;
}

}  // namespace

KGroups k_real(int n, int cutoff) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  int q = n / 2;
  if (cutoff < std::max(1, q))
    throw std::domain_error("cutoff " + std::to_string(cutoff) + " is below max(1, q) = " +
                            std::to_string(std::max(1, q)) + ": too small to host q distinct labels");
  return k_real_truncated(n, cutoff);
}

KGroups k_complex(int n, int cutoff) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  if (cutoff < 0 || 2 * cutoff + 1 < n)
    throw std::domain_error("cutoff " + std::to_string(cutoff) + " violates 2*cutoff+1 >= n = " +
                            std::to_string(n) + ": too small to host n distinct labels");
  return k_complex_truncated(n, cutoff);
}

KGroups k_real_truncated(int n, int cutoff) {
  return bucket(Field::Real, n, cutoff, real_components(n, cutoff), closed_form_real(n));
}

KGroups k_complex_truncated(int n, int cutoff) {
  if (cutoff < 1)
    throw std::domain_error("cutoff must be >= 1, got " + std::to_string(cutoff));
  return bucket(Field::Complex, n, cutoff, complex_components(n, cutoff), closed_form_complex(n));
}

KClass KClass::generator(const KGroupPresentation& group, const std::string& key) {
  if (!group.has_generator(key))
    throw std::invalid_argument("'" + key + "' is not a generator of " + group.id.to_string());
  KClass c(group.id);
  c.add_term(key, 1);
  return c;
}

std::int64_t KClass::coefficient(const std::string& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? 0 : it->second;
}

void KClass::add_term(const std::string& key, std::int64_t c) {
  if (c == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      coeffs_.erase(it);
  }
}

KClass kclass_add(const KClass& a, const KClass& b) {
  if (!(a.presentation() == b.presentation()))
    throw std::invalid_argument("cannot add classes of " + a.presentation().to_string() + " and " +
                                b.presentation().to_string());
  KClass out = a;
  for (const auto& [key, c] : b.coefficients())
    out.add_term(key, c);
  return out;
}

KClass kclass_scale(const KClass& a, std::int64_t k) {
  KClass out(a.presentation());
  for (const auto& [key, c] : a.coefficients())
    out.add_term(key, k * c);
  return out;
}

KClass operator+(const KClass& a, const KClass& b) {
  return kclass_add(a, b);
}

KClass operator*(std::int64_t k, const KClass& a) {
  return kclass_scale(a, k);
}

}  // namespace tempdual
