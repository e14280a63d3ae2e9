// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace ietlab {

/// A permutation of {1,...,d}, stored as the image sequence pi(1..d).
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  /// Parses one-line text "a1 a2 ... ad" (1-indexed images).
  static Permutation parse(std::string_view text);

  static Permutation identity(int d);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi(i) for 1 <= i <= d.
  int image(int i) const { return images_[i - 1]; }
  /// pi^{-1}(v) for 1 <= v <= d.
  int preimage(int v) const { return inverse_[v - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// True when no proper prefix {1..k}, k < d, is invariant.
  bool is_irreducible() const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

private:
  std::vector<int> images_;
  std::vector<int> inverse_;
};

/// The auxiliary permutation sigma of {0,...,d} together with its orbit
/// partition. The functional graph of a bijection is a disjoint union of
/// cycles, so the orbits are exactly the components of the endpoint
/// identification graph: vertex j stands for the endpoint w_j, with
/// w_0 = 0 and w_d = 1.
struct EndpointGraph {
  int d = 0;
  std::vector<int> sigma;               // size d+1, bijection of {0..d}
  std::vector<std::vector<int>> orbits; // cycle decomposition, each cycle in sigma order
  std::vector<int> orbit_of;            // vertex -> index into orbits

  bool same_orbit(int u, int v) const { return orbit_of[u] == orbit_of[v]; }
};

/// sigma(0) = pi^{-1}(1) - 1; sigma(j) = d when pi(j) = d;
/// sigma(j) = pi^{-1}(pi(j)+1) - 1 otherwise.
EndpointGraph build_sigma(const Permutation& p);

/// 0 and 1 (vertex d) lie in distinct components of the endpoint graph.
bool is_type_w(const Permutation& p);
bool is_type_w(const EndpointGraph& g);

/// The sigma-orbit of vertex 0 in edge order: [0, sigma(0), sigma^2(0), ...],
/// stopping before the return to 0.
std::vector<int> loop_through_zero(const EndpointGraph& g);

/// Catalog line format "name: a1 a2 ... ad", one permutation per line.
/// '#' starts a comment; blank lines are skipped. Duplicate names error.
std::vector<std::pair<std::string, Permutation>> parse_permutation_catalog(std::string_view text);

}  // namespace ietlab
