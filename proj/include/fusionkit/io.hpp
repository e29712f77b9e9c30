#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "fusionkit/arith_filter.hpp"
#include "fusionkit/based_ring.hpp"
#include "fusionkit/char_table.hpp"
#include "fusionkit/group_algebra.hpp"
#include "fusionkit/identities.hpp"

namespace fusionkit::io {

using json = nlohmann::json;

struct RingFile {
  std::string name;
  BasedRing ring = BasedRing::trivial();
  Profile profile = Profile::fusion;
  bool modular = false;
};

struct GroupFile {
  std::string name;
  CayleyTable table;
};

struct TypeFile {
  std::string name;
  CategoryType type = CategoryType({{1, 1}});
  bool integral_modular = false;
};

struct InputFile {
  std::string path;
  std::string sha256;
  // check name -> "fail" for checks this file is expected to fail
  std::map<std::string, std::string> expect;
  std::variant<RingFile, GroupFile, TypeFile> content;
};

std::string sha256_hex(std::string_view bytes);

/// Reads and parses a ring, group-generators, cayley or type document.
/// Throws ParseError (unreadable file, bad JSON, unknown kind, wrong field
/// types) or StructuralError (shapes that do not fit together).
InputFile load_file(const std::filesystem::path& path);
InputFile parse_document(const json& doc, std::string path = "<memory>", std::string digest = {});

RingFile parse_ring(const json& doc);
GroupFile parse_group(const json& doc, const GroupOptions& options = {});
TypeFile parse_type(const json& doc);

/// Sparse ring document (the format read by parse_ring).
json ring_to_json(const BasedRing& ring, const std::string& name, Profile profile, bool modular);

json complex_to_json(Complex z);
json table_to_json(const BasedRing& ring, const CharacterTable& table, const TableResiduals& res);
json hypergroup_to_json(const DualHypergroup& h);
json central_to_json(const CentralElement& e);
json type_to_json(const CategoryType& t);

}  // namespace fusionkit::io
