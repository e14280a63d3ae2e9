// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/catalog.hpp"

#include <fstream>
#include <sstream>

namespace ietlab {

const char* builtin_catalog_text() {
  // third:  periodic rotation, the standard orbit-collision specimen.
  // golden: rotation by the golden complement; bounded partial quotients.
  // fhz:    type W 3-interval exchange with badly approximable quadratic
  //         lengths (screened via bad_approx_stat before being frozen here).
  return
      "third: 2 1 | 2/3, 1/3\n"
      "golden: 2 1 | -1/2+1/2*sqrt(5), 3/2-1/2*sqrt(5)\n"
      "fhz: 3 2 1 | 3/2-1/2*sqrt(5), -1/4+1/4*sqrt(5), -1/4+1/4*sqrt(5)\n";
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = Catalog::parse(builtin_catalog_text());
  return cat;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& what, Errc code = Errc::malformed_catalog) {
      throw Error(code, "catalog line " + std::to_string(lineno) + ": " + what);
    };
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    std::string name = line.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) fail("empty name");
    if (cat.find(name)) fail("duplicate name '" + name + "'", Errc::duplicate_name);

    auto bar = line.find('|', colon);
    if (bar == std::string::npos) fail("missing '|' between permutation and lengths");

    try {
      Permutation perm = Permutation::parse(line.substr(colon + 1, bar - colon - 1));
      std::vector<Scalar> lengths = parse_scalar_list(line.substr(bar + 1));
      cat.entries_.push_back({name, std::move(perm), std::move(lengths)});
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ietlab
