// Shared helpers for the test suites: deterministic random generators for
// permutations, rational lengths and probe points.
#pragma once

#include <random>
#include <vector>

#include "core/iet.hpp"
#include "core/perm.hpp"
#include "core/scalar.hpp"

namespace test_support {

using ietlab::Iet;
using ietlab::Permutation;
using ietlab::PiecewiseTranslation;
using ietlab::Scalar;

inline Permutation random_permutation(std::mt19937_64& rng, int d) {
  std::vector<int> images(d);
  for (int i = 0; i < d; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline Permutation random_irreducible_permutation(std::mt19937_64& rng, int d) {
  while (true) {
    Permutation p = random_permutation(rng, d);
    if (p.is_irreducible()) return p;
  }
}

/// Positive rational lengths with small numerators; the Iet constructor
/// normalizes the sum to 1 exactly.
inline std::vector<Scalar> random_rational_lengths(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> num(1, 40);
  std::vector<Scalar> lengths;
  lengths.reserve(d);
  for (int i = 0; i < d; ++i) lengths.emplace_back(num(rng), 1);
  return lengths;
}

inline Iet random_rational_iet(std::mt19937_64& rng, int min_d, int max_d,
                               bool irreducible_only = false) {
  std::uniform_int_distribution<int> dd(min_d, max_d);
  int d = dd(rng);
  Permutation p = irreducible_only ? random_irreducible_permutation(rng, d)
                                   : random_permutation(rng, d);
  return Iet(random_rational_lengths(rng, d), std::move(p));
}

/// Midpoints of every canonical piece: the natural probe set for pointwise
/// identities between piecewise translations.
inline std::vector<Scalar> piece_midpoints(const PiecewiseTranslation& p) {
  std::vector<Scalar> mids;
  mids.reserve(p.piece_count());
  for (int k = 0; k < p.piece_count(); ++k) {
    auto piece = p.piece(k);
    mids.push_back((piece.left + piece.right) / Scalar(2));
  }
  return mids;
}

inline Scalar random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(0, 9999);
  return Scalar(num(rng), 10000);
}

}  // namespace test_support
