#ifndef TEMPDUAL_LEVI_HPP
#define TEMPDUAL_LEVI_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tempdual {

/// A partition n = 2q + r into q blocks of size 2 and r blocks of size 1.
/// Indexes the equivalence classes of Levi subgroups of GL(n, R).
struct LeviShape {
  int q = 0;
  int r = 0;

  int n() const { return 2 * q + r; }

  // Descending q first, so sorting a list of shapes of fixed n gives the
  // canonical enumeration order.
  friend auto operator<=>(const LeviShape& a, const LeviShape& b) {
    if (auto c = b.q <=> a.q; c != 0)
      return c;
    return b.r <=> a.r;
  }
  friend bool operator==(const LeviShape&, const LeviShape&) = default;

  std::string to_string() const;  // block sizes, e.g. "2+2+1" or "1+1+1"
};

/// Product of symmetric groups S_{d1} x S_{d2} x ...; degrees 0 and 1 are
/// dropped, so the trivial group is the empty list.
struct WeylDescriptor {
  std::vector<int> factor_degrees;

  bool is_trivial() const { return factor_degrees.empty(); }
  std::uint64_t order() const;
  std::string to_string() const;  // "S3 x S2", or "1"

  friend bool operator==(const WeylDescriptor&, const WeylDescriptor&) = default;
};

/// One W(M)-orbit of discrete-series data: q labels l >= 1 for the GL(2)
/// blocks and r labels in {0 = trivial, 1 = sign} for the GL(1) blocks.
/// Each block is kept sorted ascending.
class SigmaOrbit {
 public:
  SigmaOrbit() = default;

  /// Sorts both blocks. Throws std::domain_error on a GL(2) label < 1 or a
  /// GL(1) label outside {0, 1}.
  SigmaOrbit(std::vector<int> gl2_labels, std::vector<int> gl1_labels);

  const std::vector<int>& gl2_labels() const { return gl2_; }
  const std::vector<int>& gl1_labels() const { return gl1_; }
  LeviShape shape() const { return {static_cast<int>(gl2_.size()), static_cast<int>(gl1_.size())}; }

  friend auto operator<=>(const SigmaOrbit&, const SigmaOrbit&) = default;
  friend bool operator==(const SigmaOrbit&, const SigmaOrbit&) = default;

 private:
  std::vector<int> gl2_;
  std::vector<int> gl1_;
};

/// Stabilizer W_sigma(M) as a product of symmetric groups S_m, one per
/// repeated label (multiplicity m >= 2), GL(2) block first.
struct IsotropyDescriptor {
  std::vector<int> multiplicities;

  bool is_generic() const { return multiplicities.empty(); }
  /// Sum of (m - 1): the number of independent coordinate collisions.
  int collision_rank() const;
  std::uint64_t order() const;

  friend bool operator==(const IsotropyDescriptor&, const IsotropyDescriptor&) = default;
};

/// Shapes of n in descending q. Throws std::domain_error when n < 1.
std::vector<LeviShape> enumerate_levi_shapes(int n);

WeylDescriptor weyl_group(LeviShape shape);

IsotropyDescriptor isotropy(const SigmaOrbit& orbit);

/// Multiplicities >= 2 of equal values in a sorted run.
std::vector<int> repeated_multiplicities(const std::vector<int>& sorted_labels);

/// All canonical orbits of `shape` with GL(2) labels in {1..cutoff}.
/// Order: GL(2) multiset lexicographic, then GL(1) multiset lexicographic.
std::vector<SigmaOrbit> enumerate_orbits(LeviShape shape, int cutoff);

/// Sorted multisets of size k over the values lo..hi, in lexicographic order.
std::vector<std::vector<int>> sorted_multisets(int lo, int hi, int k);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Number of size-k multisets over an alphabet of size m: C(m + k - 1, k).
std::uint64_t multiset_count(std::int64_t m, std::int64_t k);

}  // namespace tempdual

#endif  // TEMPDUAL_LEVI_HPP
