#include "fusionkit/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "fusionkit/error.hpp"

namespace fusionkit::io {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

namespace {

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& doc, const char* key, T fallback) {
  return doc.contains(key) ? field<T>(doc, key) : fallback;
}

std::vector<std::int64_t> ring_constants(const json& n, std::size_t rank) {
  std::vector<std::int64_t> out(rank * rank * rank, 0);
  if (!n.is_array()) throw ParseError("field 'N' must be an array");
  const bool sparse = n.empty() || (n.front().is_array() && !n.front().empty() &&
                                     n.front().front().is_number());
  if (sparse) {
    std::set<std::size_t> seen;
    for (const auto& e : n) {
      if (!e.is_array() || e.size() != 4)
        throw StructuralError("sparse N entries must be [i, j, k, value]");
      const auto i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>(),
                 k = e[2].get<std::size_t>();
      if (i >= rank || j >= rank || k >= rank) throw StructuralError("sparse N index out of range");
      const std::size_t at = (i * rank + j) * rank + k;
      if (!seen.insert(at).second) throw StructuralError("duplicate sparse N entry");
      out[at] = e[3].get<std::int64_t>();
    }
    return out;
  }
  if (n.size() != rank) throw StructuralError("dense N must have rank outer entries");
  for (std::size_t i = 0; i < rank; ++i) {
    if (!n[i].is_array() || n[i].size() != rank) throw StructuralError("dense N has a malformed row");
    for (std::size_t j = 0; j < rank; ++j) {
      if (!n[i][j].is_array() || n[i][j].size() != rank)
        throw StructuralError("dense N has a malformed entry");
      for (std::size_t k = 0; k < rank; ++k) out[(i * rank + j) * rank + k] = n[i][j][k].get<std::int64_t>();
    }
  }
  return out;
}

}  // namespace

RingFile parse_ring(const json& doc) {
  try {
    RingFile f;
    f.name = field_or<std::string>(doc, "name", "");
    auto labels = field<std::vector<std::string>>(doc, "labels");
    const std::size_t rank = field_or<std::size_t>(doc, "rank", labels.size());
    if (rank != labels.size()) throw StructuralError("rank differs from the number of labels");
    auto dual = field<std::vector<Index>>(doc, "dual");
    const auto unit = field_or<Index>(doc, "unit", 0);
    if (!doc.contains("N")) throw ParseError("missing field 'N'");
    auto constants = ring_constants(doc.at("N"), rank);
    f.ring = BasedRing(std::move(labels), std::move(constants), std::move(dual), unit);
    f.profile = profile_from_string(field_or<std::string>(doc, "profile", "fusion"));
    f.modular = field_or<bool>(doc, "modular", false);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ring document: ") + e.what());
  }
}

GroupFile parse_group(const json& doc, const GroupOptions& options) {
  try {
    GroupFile f;
    f.name = field_or<std::string>(doc, "name", "");
    const auto kind = field<std::string>(doc, "kind");
    if (kind == "cayley") {
      const auto order = field<std::size_t>(doc, "order");
      std::vector<std::uint32_t> flat;
      for (const auto& row : doc.at("table")) {
        if (row.is_array()) {
          if (row.size() != order) throw StructuralError("Cayley table row has wrong length");
          for (const auto& v : row) flat.push_back(v.get<std::uint32_t>());
        } else {
          flat.push_back(row.get<std::uint32_t>());
        }
      }
      f.table = CayleyTable::from_table(order, std::move(flat));
      return f;
    }
    const auto degree = field<std::size_t>(doc, "degree");
    std::vector<Permutation> gens;
    for (const auto& g : doc.at("generators")) {
      if (g.is_string()) gens.push_back(parse_cycles(g.get<std::string>(), degree));
      else {
        auto p = checked_permutation(g.get<std::vector<std::uint32_t>>());
        if (p.size() != degree) throw StructuralError("generator length differs from degree");
        gens.push_back(std::move(p));
      }
    }
    if (gens.empty()) gens.push_back(parse_cycles("", degree == 0 ? 1 : degree));
    f.table = cayley_from_generators(gens, options);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("group document: ") + e.what());
  }
}

TypeFile parse_type(const json& doc) {
  try {
    TypeFile f;
    f.name = field_or<std::string>(doc, "name", "");
    f.integral_modular = field_or<bool>(doc, "integral_modular", false);
    std::vector<TypeEntry> entries;
    for (const auto& e : doc.at("entries")) {
      if (e.is_array()) {
        if (e.size() != 2) throw StructuralError("type entries are [d, n] pairs");
        const auto d = e[0].get<std::uint64_t>();
        entries.push_back({d * d, e[1].get<std::uint64_t>()});
      } else {
        entries.push_back({field<std::uint64_t>(e, "d2"), field<std::uint64_t>(e, "n")});
      }
    }
    f.type = CategoryType(std::move(entries));
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("type document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("type document: ") + e.what());
  }
}

InputFile parse_document(const json& doc, std::string path, std::string digest) {
  InputFile f;
  f.path = std::move(path);
  f.sha256 = std::move(digest);
  if (!doc.is_object()) throw ParseError("document must be an object");
  if (doc.contains("expect")) {
    for (const auto& [k, v] : doc.at("expect").items()) f.expect[k] = v.get<std::string>();
  }
  const auto kind = field<std::string>(doc, "kind");
  if (kind == "ring") f.content = parse_ring(doc);
  else if (kind == "group-generators" || kind == "cayley") f.content = parse_group(doc);
  else if (kind == "type") f.content = parse_type(doc);
  else throw ParseError("unknown kind '" + kind + "'");
  return f;
}

InputFile load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_document(doc, path.string(), sha256_hex(bytes));
}

json ring_to_json(const BasedRing& ring, const std::string& name, Profile profile, bool modular) {
  json n = json::array();
  const std::size_t r = ring.rank();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if (ring(i, j, k) != 0) n.push_back({i, j, k, ring(i, j, k)});
  json doc = {{"kind", "ring"},           {"name", name},
              {"rank", r},                {"labels", ring.labels()},
              {"dual", ring.duals()},     {"unit", ring.unit()},
              {"profile", to_string(profile)}, {"modular", modular},
              {"N", n}};
  return doc;
}

json complex_to_json(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
  return json::array({clean(z.real()), clean(z.imag())});
}

json table_to_json(const BasedRing& ring, const CharacterTable& table, const TableResiduals& res) {
  json rows = json::array();
  for (std::size_t j = 0; j < table.size(); ++j) {
    json row = json::array();
    for (Index i = 0; i < ring.rank(); ++i) row.push_back(complex_to_json(table(j, i)));
    rows.push_back(row);
  }
  return {{"labels", ring.labels()},
          {"rows", rows},
          {"fp_index", table.fp_index},
          {"codegrees", table.codegrees},
          {"class_dims", table.class_dims},
          {"total", table.total},
          {"residuals",
           {{"homomorphism", res.homomorphism},
            {"orthogonality", res.orthogonality},
            {"class_dim_sum", res.class_dim_sum},
            {"fp_row", res.fp_row}}}};
}

json hypergroup_to_json(const DualHypergroup& h) {
  json p = json::array();
  for (std::size_t a = 0; a < h.size; ++a) {
    json pa = json::array();
    for (std::size_t b = 0; b < h.size; ++b) {
      json pb = json::array();
      for (std::size_t c = 0; c < h.size; ++c) pb.push_back(h(a, b, c));
      pa.push_back(pb);
    }
    p.push_back(pa);
  }
  return {{"p", p},
          {"nonnegative", h.nonnegative},
          {"expansion_residual", h.expansion_residual},
          {"imaginary_residual", h.imaginary_residual}};
}

json central_to_json(const CentralElement& e) {
  json a = json::array();
  for (const auto& z : e.action) a.push_back(complex_to_json(z));
  return a;
}

json type_to_json(const CategoryType& t) {
  json entries = json::array();
  for (const auto& e : t.entries()) {
    if (is_square(e.dim_squared)) entries.push_back({CategoryType::dim(e), e.multiplicity});
    else entries.push_back({{"d2", e.dim_squared}, {"n", e.multiplicity}});
  }
  const auto s = t.split();
  return {{"entries", entries},
          {"total", t.total()},
          {"squarefree", s.squarefree},
          {"square_part", s.square_part},
          {"text", t.to_string()}};
}

}  // namespace fusionkit::io
