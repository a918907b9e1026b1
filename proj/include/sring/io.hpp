#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sring/constructions.hpp"
#include "sring/enumerate.hpp"
#include "sring/error.hpp"
#include "sring/permgroup.hpp"
#include "sring/repro.hpp"
#include "sring/schurity.hpp"

namespace sring {

using Json = nlohmann::ordered_json;

// Partition file: {"group": "8x2x3", "classes": [["0,0,0"], ...]}.
struct PartitionFile {
  AbelianGroup group;
  std::vector<ElementSet> classes;
};

Json partition_json(const AbelianGroup& group, const std::vector<ElementSet>& classes);
Json partition_json(const SRing& a);
// Throws kParseError on malformed JSON or element literals.
PartitionFile parse_partition(const Json& j);
PartitionFile read_partition_file(const std::string& path);

// One catalog line.
Json catalog_entry_json(const AbelianGroup& group, const CatalogEntry& entry);
void write_catalog(std::ostream& out, const Catalog& catalog);
// Re-validates every line.
Catalog read_catalog(std::istream& in);

Json schur_report_json(const SchurReport& report);
Json repro_json(const ReproResult& result);
Json permutation_json(const Permutation& p);
Json error_json(const Error& e);

// Generalized wreath spec file:
// {"group", "upper": [gens], "lower": [gens], "bottom": [[...]], "top": [[...]]}.
struct WreathFile {
  AbelianGroup group;
  WreathSpec spec;
};
WreathFile parse_wreath_spec(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace sring
