#include "sring/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sring {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kBoundExceeded: return "BoundExceeded";
    case ErrorKind::kMismatchedGroups: return "MismatchedGroups";
    case ErrorKind::kNotPartition: return "NotPartition";
    case ErrorKind::kIdentityNotSingleton: return "IdentityNotSingleton";
    case ErrorKind::kNotInverseClosed: return "NotInverseClosed";
    case ErrorKind::kProductNotClosed: return "ProductNotClosed";
    case ErrorKind::kSectionNotASection: return "SectionNotASection";
    case ErrorKind::kIncompatibleSection: return "IncompatibleSection";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kNotDivisor: return "NotDivisor";
    case ErrorKind::kHNotASubgroup: return "HNotASubgroup";
    case ErrorKind::kNotSubgroup: return "NotSubgroup";
    case ErrorKind::kNonBijective: return "NonBijective";
    case ErrorKind::kDoesNotContainRegular: return "DoesNotContainRegular";
    case ErrorKind::kAutGroupTooLarge: return "AutGroupTooLarge";
    case ErrorKind::kWrongGroupShape: return "WrongGroupShape";
    case ErrorKind::kPrecondition: return "Precondition";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

Json set_json(const AbelianGroup& group, const ElementSet& set) {
  Json out = Json::array();
  set.for_each([&](Elem x) { out.push_back(group.format(x)); });
  return out;
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kParseError, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParseError, std::string("field '") + key + "': " + e.what());
  }
}

ElementSet parse_set(const AbelianGroup& group, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::kParseError, "a class must be an array of elements");
  ElementSet s = group.empty_set();
  for (const auto& e : j) {
    if (!e.is_string()) fail(ErrorKind::kParseError, "elements must be residue strings");
    const Elem x = group.parse_element(e.get<std::string>());
    if (s.test(x)) fail(ErrorKind::kNotPartition, "element listed twice in a class");
    s.set(x);
  }
  return s;
}

std::vector<ElementSet> parse_sets(const AbelianGroup& group, const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    fail(ErrorKind::kParseError, std::string("missing array '") + key + "'");
  }
  std::vector<ElementSet> out;
  for (const auto& c : j.at(key)) out.push_back(parse_set(group, c));
  return out;
}

Subgroup parse_subgroup(const AbelianGroup& group, const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    fail(ErrorKind::kParseError, std::string("missing generator list '") + key + "'");
  }
  std::vector<Elem> gens;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) fail(ErrorKind::kParseError, "generators must be residue strings");
    gens.push_back(group.parse_element(e.get<std::string>()));
  }
  return generated_subgroup(group, gens);
}

std::string big(const BigInt& v) { return v.str(); }

}  // namespace

Json partition_json(const AbelianGroup& group, const std::vector<ElementSet>& classes) {
  Json out;
  out["group"] = group.literal();
  Json cls = Json::array();
  for (const auto& c : classes) cls.push_back(set_json(group, c));
  out["classes"] = std::move(cls);
  return out;
}

Json partition_json(const SRing& a) { return partition_json(a.group(), a.partition()); }

PartitionFile parse_partition(const Json& j) {
  const AbelianGroup group = AbelianGroup::parse(get_field<std::string>(j, "group"));
  return PartitionFile{group, parse_sets(group, j, "classes")};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kParseError, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParseError, "'" + path + "': " + e.what());
  }
}

PartitionFile read_partition_file(const std::string& path) {
  return parse_partition(read_json_file(path));
}

Json catalog_entry_json(const AbelianGroup& group, const CatalogEntry& entry) {
  Json out = partition_json(group, entry.sring.partition());
  out["rank"] = entry.rank;
  out["schurian"] = entry.schurian;
  out["cyclotomic"] = entry.cyclotomic;
  out["normal"] = entry.normal;
  out["aut_order"] = big(entry.aut_order);
  out["primitive"] = entry.primitive;
  out["orbit_rep"] = entry.orbit_rep;
  return out;
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
  for (const auto& e : catalog.entries) out << catalog_entry_json(catalog.group, e).dump() << '\n';
}

Catalog read_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::kParseError, std::string("catalog line: ") + e.what());
    }
    const PartitionFile pf = parse_partition(j);
    if (first) {
      catalog.group = pf.group;
      first = false;
    } else if (!(pf.group == catalog.group)) {
      fail(ErrorKind::kMismatchedGroups, "catalog mixes groups");
    }
    CatalogEntry e;
    e.sring = SRing::validate(pf.group, pf.classes);
    e.rank = get_field<int>(j, "rank");
    e.schurian = get_field<bool>(j, "schurian");
    e.cyclotomic = get_field<bool>(j, "cyclotomic");
    e.normal = get_field<bool>(j, "normal");
    e.primitive = get_field<bool>(j, "primitive");
    e.orbit_rep = j.value("orbit_rep", false);
    try {
      e.aut_order = BigInt(get_field<std::string>(j, "aut_order"));
    } catch (const std::runtime_error&) {
      fail(ErrorKind::kParseError, "aut_order is not a decimal integer");
    }
    catalog.entries.push_back(std::move(e));
  }
  return catalog;
}

Json schur_report_json(const SchurReport& report) {
  Json out;
  out["schurian"] = report.schurian;
  out["aut_order"] = big(report.aut_order);
  if (report.witness) {
    Json w;
    w["class"] = report.witness->class_id;
    w["orbit"] = report.witness->orbit;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json repro_json(const ReproResult& result) {
  Json out;
  out["instance"] = result.instance;
  out["p"] = result.p;
  out["group"] = result.sring.group().literal();
  out["rank"] = result.sring.rank();
  out["matches"] = result.matches;
  if (result.schur) {
    out["schurian"] = result.schur->schurian;
    out["schur"] = schur_report_json(*result.schur);
  }
  Json parts = Json::array();
  for (const auto& part : result.parts) {
    Json pj;
    pj["name"] = part.name;
    pj["group"] = part.sring.group().literal();
    pj["rank"] = part.sring.rank();
    pj["matches"] = part.matches;
    Json expected = Json::array();
    for (const auto& e : part.expected) {
      Json ej;
      ej["label"] = e.label;
      ej["present"] = e.present;
      ej["members"] = set_json(part.sring.group(), e.members);
      expected.push_back(std::move(ej));
    }
    pj["expected"] = std::move(expected);
    pj["classes"] = partition_json(part.sring)["classes"];
    parts.push_back(std::move(pj));
  }
  out["parts"] = std::move(parts);
  return out;
}

Json permutation_json(const Permutation& p) { return Json(p.images()); }

Json error_json(const Error& e) {
  Json out;
  out["error"] = std::string(error_kind_name(e.kind()));
  out["message"] = e.what();
  return out;
}

WreathFile parse_wreath_spec(const Json& j) {
  const AbelianGroup group = AbelianGroup::parse(get_field<std::string>(j, "group"));
  WreathFile out{group, WreathSpec{parse_subgroup(group, j, "upper"),
                                   parse_subgroup(group, j, "lower"),
                                   parse_sets(group, j, "bottom"), parse_sets(group, j, "top")}};
  return out;
}

}  // namespace sring
