// Independent brute-force routes used to freeze expected values. Nothing in
// here calls into the engine's enumeration, isotropy, rank or restriction
// code.
#ifndef TEMPDUAL_TESTS_ORACLES_HPP
#define TEMPDUAL_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

/// Every tuple in prod_i {lo_i..hi_i}, odometer order.
inline std::vector<Tuple> all_tuples(const std::vector<std::pair<int, int>>& ranges) {
  std::vector<Tuple> out{{}};
  for (auto [lo, hi] : ranges) {
    std::vector<Tuple> next;
    for (const auto& prefix : out)
      for (int v = lo; v <= hi; ++v) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

/// All permutations of {0..k-1}.
inline std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Permutations of q + r coordinates preserving the two blocks
/// (the Weyl group S_q x S_r acting on the parameter space).
inline std::vector<std::vector<int>> block_permutations(int q, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& a : permutations(q))
    for (const auto& b : permutations(r)) {
      std::vector<int> p(a);
      for (int x : b)
        p.push_back(q + x);
      out.push_back(std::move(p));
    }
  return out;
}

inline Tuple act(const std::vector<int>& perm, const Tuple& labels) {
  Tuple out(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out[static_cast<std::size_t>(perm[i])] = labels[i];
  return out;
}

/// A discrete datum of GL(n, R) for shape (q, r): q labels in {1..cutoff}
/// followed by r labels in {0, 1}.
struct RealDatum {
  Tuple labels;
  std::vector<std::vector<int>> stabilizer;  // permutations fixing labels
  int dimension = 0;
};

/// One representative per Weyl orbit: the lexicographically smallest element
/// of the orbit, found by applying every block permutation.
inline std::vector<RealDatum> real_orbits(int q, int r, int cutoff) {
  std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(q), {1, cutoff});
  ranges.insert(ranges.end(), static_cast<std::size_t>(r), {0, 1});
  auto group = block_permutations(q, r);
  std::set<Tuple> reps;
  for (const auto& t : all_tuples(ranges)) {
    Tuple best = t;
    for (const auto& g : group)
      best = std::min(best, act(g, t));
    reps.insert(best);
  }
  std::vector<RealDatum> out;
  for (const auto& rep : reps) {
    RealDatum d{rep, {}, q + r};
    for (const auto& g : group)
      if (act(g, rep) == rep)
        d.stabilizer.push_back(g);
    out.push_back(std::move(d));
  }
  return out;
}

/// Orbits of S_n on {-cutoff..cutoff}^n, with stabilizers.
inline std::vector<RealDatum> complex_orbits(int n, int cutoff) {
  std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(n), {-cutoff, cutoff});
  auto group = permutations(n);
  std::set<Tuple> reps;
  for (const auto& t : all_tuples(ranges)) {
    Tuple s = t;
    std::sort(s.begin(), s.end());
    reps.insert(s);
  }
  std::vector<RealDatum> out;
  for (const auto& rep : reps) {
    RealDatum d{rep, {}, n};
    for (const auto& g : group)
      if (act(g, rep) == rep)
        d.stabilizer.push_back(g);
    out.push_back(std::move(d));
  }
  return out;
}

/// Dimension of the subspace of R^d fixed by a permutation group: the number
/// of coordinate orbits (union-find over the generators' cycles).
inline int fixed_subspace_dimension(const std::vector<std::vector<int>>& group, int d) {
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (const auto& g : group)
    for (int i = 0; i < d; ++i)
      parent[static_cast<std::size_t>(find(i))] = find(g[static_cast<std::size_t>(i)]);
  int roots = 0;
  for (int i = 0; i < d; ++i)
    roots += find(i) == i ? 1 : 0;
  return roots;
}

/// Free-component counts per parity: a component is free when its stabilizer
/// is trivial; it then contributes Z to K^(dim mod 2).
struct ParityCounts {
  std::uint64_t deg0 = 0;
  std::uint64_t deg1 = 0;
};

inline ParityCounts free_counts_real(int n, int cutoff) {
  ParityCounts c;
  for (int q = n / 2; q >= 0; --q)
    for (const auto& d : real_orbits(q, n - 2 * q, cutoff))
      if (d.stabilizer.size() == 1)
        (d.dimension % 2 == 0 ? c.deg0 : c.deg1) += 1;
  return c;
}

inline ParityCounts free_counts_complex(int n, int cutoff) {
  ParityCounts c;
  for (const auto& d : complex_orbits(n, cutoff))
    if (d.stabilizer.size() == 1)
      (n % 2 == 0 ? c.deg0 : c.deg1) += 1;
  return c;
}

/// Leibniz determinant.
inline long long determinant(const std::vector<std::vector<long long>>& m) {
  int k = static_cast<int>(m.size());
  long long total = 0;
  for (const auto& p : permutations(k)) {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] ? 1 : 0;
    long long term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < k; ++i)
      term *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    total += term;
  }
  return total;
}

/// Rank as the size of the largest nonvanishing minor.
inline int rank_by_minors(const std::vector<std::vector<long long>>& m) {
  if (m.empty())
    return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m.front().size());
  for (int k = std::min(rows, cols); k >= 1; --k) {
    std::vector<bool> rsel(static_cast<std::size_t>(rows), false), csel(static_cast<std::size_t>(cols), false);
    std::fill(rsel.end() - k, rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - k, csel.end(), true);
      do {
        std::vector<std::vector<long long>> minor;
        for (int i = 0; i < rows; ++i) {
          if (!rsel[static_cast<std::size_t>(i)])
            continue;
          std::vector<long long> row;
          for (int j = 0; j < cols; ++j)
            if (csel[static_cast<std::size_t>(j)])
              row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          minor.push_back(std::move(row));
        }
        if (determinant(minor) != 0)
          return k;
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// The Weil group W_R = C^x  u  C^x j, with j^2 = -1 and j z j^-1 = conj(z),
// and the two-dimensional representation induced from a character of C^x.

using cplx = std::complex<double>;

/// Element a * j^b of W_R.
struct WeilElement {
  cplx a;
  int b;  // 0 or 1
};

inline WeilElement multiply(WeilElement x, WeilElement y) {
  // (a j^b)(c j^d) = a (j^b c j^-b) j^(b+d); j^2 = -1.
  cplx c = x.b ? std::conj(y.a) : y.a;
  cplx a = x.a * c;
  int b = x.b + y.b;
  if (b == 2) {
    a = -a;
    b = 0;
  }
  return {a, b};
}

/// z -> (z/|z|)^ell |z|^(i t).
inline cplx character(int ell, double t, cplx z) {
  double r = std::abs(z);
  return std::pow(z / r, ell) * std::exp(cplx(0, t * std::log(r)));
}

/// Matrix of w in Ind(chi) on the basis f_0, f_1 where f_b is the function
/// supported on C^x j^b with f_b(j^b) = 1. Induced functions satisfy
/// f(h x) = chi(h) f(x) for h in C^x, and (w.f)(x) = f(x w).
inline std::array<std::array<cplx, 2>, 2> induced_matrix(int ell, double t, WeilElement w) {
  auto eval = [&](int basis, WeilElement x) -> cplx {
    // x = a j^b = a * (j^b); f_basis(a j^b) = chi(a) [b == basis].
    return x.b == basis ? character(ell, t, x.a) : cplx(0);
  };
  std::array<std::array<cplx, 2>, 2> m{};
  for (int col = 0; col < 2; ++col)
    for (int row = 0; row < 2; ++row)
      // Coefficient of f_row in w.f_col = (w.f_col)(j^row).
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = eval(col, multiply({1.0, row}, w));
  return m;
}

/// Restricts Ind(chi) to C^x, checks the restriction is diagonal on the test
/// points, and identifies each diagonal character among the candidates
/// (ell', t') by evaluation. Returns the matched pairs, sorted.
inline std::vector<std::pair<int, double>> restrict_induced(int ell, double t, int max_label,
                                                            const std::vector<double>& t_candidates) {
  const std::vector<cplx> samples = {cplx(1.3, 0.4), cplx(-0.7, 2.1), std::polar(1.0, 0.9), std::polar(2.5, -2.2),
                                     cplx(0.2, -0.05)};
  std::vector<std::pair<int, double>> found;
  for (int k = 0; k < 2; ++k) {
    std::vector<cplx> values;
    for (const auto& z : samples) {
      auto m = induced_matrix(ell, t, {z, 0});
      if (std::abs(m[0][1]) > 1e-12 || std::abs(m[1][0]) > 1e-12)
        return {};  // not diagonal: caller fails
      values.push_back(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
    }
    int matches = 0;
    for (int l = -max_label; l <= max_label; ++l)
      for (double tc : t_candidates) {
        bool ok = true;
        for (std::size_t s = 0; s < samples.size() && ok; ++s)
          ok = std::abs(character(l, tc, samples[s]) - values[s]) < 1e-9;
        if (ok) {
          found.emplace_back(l, tc);
          ++matches;
        }
      }
    if (matches != 1)
      return {};
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace oracle

#endif  // TEMPDUAL_TESTS_ORACLES_HPP
