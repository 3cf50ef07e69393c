#ifndef TEMPDUAL_KTHEORY_HPP
#define TEMPDUAL_KTHEORY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempdual/param_space.hpp"

namespace tempdual {

enum class Field { Real, Complex };

const char* to_string(Field f);

/// Ranks of K^0 and K^1 of a space whose K-groups are free abelian.
struct KRanks {
  std::uint64_t deg0 = 0;
  std::uint64_t deg1 = 0;

  std::uint64_t operator[](int degree) const { return degree % 2 == 0 ? deg0 : deg1; }
  friend bool operator==(const KRanks&, const KRanks&) = default;
};

/// Bott periodicity: K^j(R^d) = Z exactly when d = j mod 2.
KRanks k_of_euclidean(int d);

/// Cones have vanishing K-theory; free components are copies of R^dim.
KRanks k_of_component(const Component& c);
KRanks k_of_component(const ComplexComponent& c);

/// Identifies one truncated K-group: K_degree of GL(n, field) with labels
/// bounded by `cutoff`.
struct PresentationId {
  Field field = Field::Real;
  int n = 1;
  int cutoff = 1;
  int degree = 0;

  std::string to_string() const;
  friend bool operator==(const PresentationId&, const PresentationId&) = default;
};

/// Closed-form description of the index set of a K-group's generators.
struct IndexFamily {
  enum class Kind {
    Subsets,             // k-subsets of N = {1, 2, ...}
    SubsetsTimesZ2,      // k-subsets of N, times Z/2
    IntegerSubsets,      // k-subsets of Z
    FixedRank,           // Z^k, independent of the cutoff
  };

  Kind kind = Kind::FixedRank;
  int size = 0;  // subset size, or the rank for FixedRank

  /// Number of generators visible when labels are truncated at `cutoff`
  /// (N truncated to {1..cutoff}, Z to {-cutoff..cutoff}).
  std::uint64_t count_at(int cutoff) const;
  std::string describe() const;

  friend bool operator==(const IndexFamily&, const IndexFamily&) = default;
};

struct ClosedForm {
  IndexFamily deg0;
  IndexFamily deg1;

  const IndexFamily& operator[](int degree) const { return degree % 2 == 0 ? deg0 : deg1; }
};

/// K-groups of GL(n, R) as index families, following the even/odd split
/// n = 2q and n = 2q + 1.
ClosedForm closed_form_real(int n);

/// K-groups of GL(n, C): n-subsets of Z in degree n mod 2, zero otherwise.
ClosedForm closed_form_complex(int n);

/// A truncated K-group: one generator per free component of matching parity,
/// referenced by the component key.
struct KGroupPresentation {
  PresentationId id;
  std::vector<std::string> generators;
  IndexFamily closed_form;

  std::uint64_t rank() const { return generators.size(); }
  bool has_generator(const std::string& key) const;
};

struct KGroups {
  KGroupPresentation k0;
  KGroupPresentation k1;

  const KGroupPresentation& operator[](int degree) const { return degree % 2 == 0 ? k0 : k1; }
};

/// Throws std::domain_error when n < 1 or cutoff < max(1, floor(n/2)).
KGroups k_real(int n, int cutoff);

/// Throws std::domain_error when n < 1 or 2 * cutoff + 1 < n.
KGroups k_complex(int n, int cutoff);

/// Same catalogs without the minimum-cutoff checks: below the threshold some
/// index families are simply empty. Only n >= 1 and cutoff >= 1 are required.
KGroups k_real_truncated(int n, int cutoff);
KGroups k_complex_truncated(int n, int cutoff);

/// Element of a presented K-group. Zero coefficients are never stored.
class KClass {
 public:
  KClass() = default;
  explicit KClass(PresentationId id) : id_(id) {}

  /// The basis element for `key`, which must be a generator of `group`.
  static KClass generator(const KGroupPresentation& group, const std::string& key);

  const PresentationId& presentation() const { return id_; }
  const std::map<std::string, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(const std::string& key) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds `c` times the basis element `key`.
  void add_term(const std::string& key, std::int64_t c);

  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  PresentationId id_;
  std::map<std::string, std::int64_t> coeffs_;
};

/// Throws std::invalid_argument when the presentations differ.
KClass kclass_add(const KClass& a, const KClass& b);
KClass kclass_scale(const KClass& a, std::int64_t k);
KClass operator+(const KClass& a, const KClass& b);
KClass operator*(std::int64_t k, const KClass& a);

}  // namespace tempdual

#endif  // TEMPDUAL_KTHEORY_HPP
