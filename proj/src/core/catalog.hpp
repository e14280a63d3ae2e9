// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/iet.hpp"

namespace ietlab {

struct CatalogEntry {
  std::string name;
  Permutation perm;
  std::vector<Scalar> lengths;

  Iet build() const { return Iet(lengths, perm); }
};

/// Named (permutation, lengths) systems. Line format:
///   name: a1 a2 ... ad | l1, l2, ..., ld
/// with '#' comments and blank lines ignored.
class Catalog {
public:
  /// The systems bundled with the toolkit (third, golden, fhz, ...).
  static const Catalog& builtin();

  static Catalog parse(std::string_view text);
  static Catalog load_file(const std::string& path);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;

private:
  std::vector<CatalogEntry> entries_;
};

/// Contents of the bundled catalog, identical to what builtin() parses.
const char* builtin_catalog_text();

}  // namespace ietlab
