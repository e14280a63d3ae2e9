// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/perm.hpp"

#include <algorithm>
#include <sstream>

namespace ietlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int d = static_cast<int>(images_.size());
  if (d == 0) throw Error(Errc::empty_input, "empty permutation");
  inverse_.assign(d, 0);
  for (int i = 1; i <= d; ++i) {
    int v = images_[i - 1];
    if (v < 1 || v > d || inverse_[v - 1] != 0)
      throw Error(Errc::not_a_bijection,
                  "images are not a bijection of {1.." + std::to_string(d) + "}");
    inverse_[v - 1] = i;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      images.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "not an integer: '" + tok + "'");
    }
  }
  if (images.empty()) throw Error(Errc::empty_input, "empty permutation text");
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_irreducible() const {
  int d = size();
  int running_max = 0;
  for (int k = 1; k < d; ++k) {
    running_max = std::max(running_max, images_[k - 1]);
    if (running_max <= k) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

EndpointGraph build_sigma(const Permutation& p) {
  int d = p.size();
  EndpointGraph g;
  g.d = d;
  g.sigma.assign(d + 1, -1);
  g.sigma[0] = p.preimage(1) - 1;
  for (int j = 1; j <= d; ++j) {
    if (p.image(j) == d)
      g.sigma[j] = d;
    else
      g.sigma[j] = p.preimage(p.image(j) + 1) - 1;
  }

  g.orbit_of.assign(d + 1, -1);
  for (int v = 0; v <= d; ++v) {
    if (g.orbit_of[v] >= 0) continue;
    std::vector<int> cycle;
    int u = v;
    do {
      g.orbit_of[u] = static_cast<int>(g.orbits.size());
      cycle.push_back(u);
      u = g.sigma[u];
    } while (u != v);
    g.orbits.push_back(std::move(cycle));
  }
  return g;
}

bool is_type_w(const EndpointGraph& g) { return !g.same_orbit(0, g.d); }

bool is_type_w(const Permutation& p) { return is_type_w(build_sigma(p)); }

std::vector<int> loop_through_zero(const EndpointGraph& g) {
  std::vector<int> loop;
  int u = 0;
  do {
    loop.push_back(u);
    u = g.sigma[u];
  } while (u != 0);
  return loop;
}

std::vector<std::pair<std::string, Permutation>> parse_permutation_catalog(
    std::string_view text) {
  std::vector<std::pair<std::string, Permutation>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::malformed_catalog, "line " + std::to_string(lineno) + ": missing ':'");
    std::string name = line.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty())
      throw Error(Errc::malformed_catalog, "line " + std::to_string(lineno) + ": empty name");
    for (const auto& [existing, _] : out)
      if (existing == name)
        throw Error(Errc::duplicate_name,
                    "line " + std::to_string(lineno) + ": duplicate name '" + name + "'");
    try {
      out.emplace_back(name, Permutation::parse(line.substr(colon + 1)));
    } catch (const Error& e) {
      throw Error(Errc::malformed_catalog,
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ietlab
