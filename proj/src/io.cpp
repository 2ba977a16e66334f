#include "rshds/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rshds/errors.hpp"

namespace rshds {

namespace {

int parseInt(std::string_view s, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument(context + ": expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::vector<Element> parseIndexList(std::string_view s, const std::string& context) {
  std::vector<Element> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const std::string_view piece = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    const int v = parseInt(piece, context);
    if (v < 0) throw InvalidArgument(context + ": negative index");
    out.push_back(static_cast<Element>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json parseJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

bool isIndex(const Json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0); }

void checkElementIndices(const FiniteGroup& group, const std::vector<Element>& xs, const char* what) {
  for (Element x : xs)
    if (x >= group.order())
      throw InvalidArgument(std::string(what) + ": element index " + std::to_string(x) + " out of range for order " +
                            std::to_string(group.order()));
}

}  // namespace

GroupSpec parseGroupSpec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("group spec '" + text + "': expected gnk:n,k | c4n:n | file:<path>");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  GroupSpec spec;
  if (kind == "gnk") {
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos) throw InvalidArgument("group spec '" + text + "': expected gnk:n,k");
    spec.kind = GroupSpec::Kind::Gnk;
    spec.n = parseInt(std::string_view(rest).substr(0, comma), "group spec");
    spec.k = parseInt(std::string_view(rest).substr(comma + 1), "group spec");
  } else if (kind == "c4n") {
    spec.kind = GroupSpec::Kind::C4n;
    spec.n = parseInt(rest, "group spec");
  } else if (kind == "file") {
    if (rest.empty()) throw InvalidArgument("group spec '" + text + "': empty path");
    spec.kind = GroupSpec::Kind::File;
    spec.path = rest;
  } else {
    throw InvalidArgument("group spec '" + text + "': unknown kind '" + kind + "'");
  }
  return spec;
}

std::string formatGroupSpec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Gnk:
      return "gnk:" + std::to_string(spec.n) + "," + std::to_string(spec.k);
    case GroupSpec::Kind::C4n:
      return "c4n:" + std::to_string(spec.n);
    case GroupSpec::Kind::File:
      return "file:" + spec.path;
  }
  return {};
}

FiniteGroup loadGroup(const GroupSpec& spec, const std::filesystem::path& baseDir) {
  switch (spec.kind) {
    case GroupSpec::Kind::Gnk:
      return gnkGroup(spec.n, spec.k);
    case GroupSpec::Kind::C4n:
      return c4PowerGroup(spec.n);
    case GroupSpec::Kind::File: {
      std::filesystem::path p = spec.path;
      if (p.is_relative() && !std::filesystem::exists(p) && !baseDir.empty() && std::filesystem::exists(baseDir / p))
        p = baseDir / p;
      return cayleyFromFile(p);
    }
  }
  throw InvalidArgument("group spec: unknown kind");
}

Json cayleyJson(const FiniteGroup& group) {
  const std::size_t n = group.order();
  Json table = Json::array();
  for (Element x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Element y = 0; y < n; ++y) row.push_back(group.multiply(x, y));
    table.push_back(std::move(row));
  }
  Json doc;
  doc["format"] = "cayley-v1";
  doc["order"] = n;
  doc["table"] = std::move(table);
  if (!group.names().empty()) doc["names"] = group.names();
  return doc;
}

FiniteGroup cayleyFromJson(const Json& doc) {
  if (!doc.is_object()) throw FormatError("cayley-v1: document is not an object");
  if (!doc.contains("format") || doc["format"] != "cayley-v1") throw FormatError("cayley-v1: missing or wrong format tag");
  if (!doc.contains("order") || !isIndex(doc["order"])) throw FormatError("cayley-v1: missing order");
  const auto n = doc["order"].get<std::size_t>();
  if (n == 0 || n > 4096) throw FormatError("cayley-v1: order out of range");
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n)
    throw FormatError("cayley-v1: table must have `order` rows");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = doc["table"][r];
    if (!row.is_array() || row.size() != n)
      throw FormatError("cayley-v1: row " + std::to_string(r) + " must have `order` entries");
    for (const Json& e : row) {
      if (!isIndex(e)) throw FormatError("cayley-v1: row " + std::to_string(r) + " has a non-index entry");
      flat.push_back(e.get<Element>());
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw FormatError("cayley-v1: names must be an array");
    for (const Json& s : doc["names"]) {
      if (!s.is_string()) throw FormatError("cayley-v1: names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return FiniteGroup::fromCayleyTable(std::move(flat), std::move(names));
}

FiniteGroup cayleyFromFile(const std::filesystem::path& path) { return cayleyFromJson(parseJsonFile(path)); }

void writeCayley(const std::filesystem::path& path, const FiniteGroup& group) {
  writeTextFile(path, cayleyJson(group).dump() + "\n");
}

Json dsetJson(const DsetFile& d) {
  Json doc;
  doc["group"] = d.group;
  if (const auto* s = std::get_if<std::string>(&d.subgroup)) doc["subgroup"] = *s;
  else doc["subgroup"] = std::get<std::vector<Element>>(d.subgroup);
  doc["elements"] = d.elements;
  return doc;
}

DsetFile dsetFromJson(const Json& doc) {
  if (!doc.is_object()) throw FormatError("dset-v1: document is not an object");
  for (const char* key : {"group", "subgroup", "elements"})
    if (!doc.contains(key)) throw FormatError(std::string("dset-v1: missing field '") + key + "'");
  DsetFile d;
  if (!doc["group"].is_string()) throw FormatError("dset-v1: group must be a spec string");
  d.group = doc["group"].get<std::string>();
  const Json& sub = doc["subgroup"];
  if (sub.is_string()) {
    if (sub != "distinguished") throw FormatError("dset-v1: subgroup string must be \"distinguished\"");
    d.subgroup = std::string("distinguished");
  } else if (sub.is_array()) {
    std::vector<Element> gens;
    for (const Json& g : sub) {
      if (!isIndex(g)) throw FormatError("dset-v1: subgroup generators must be indices");
      gens.push_back(g.get<Element>());
    }
    d.subgroup = std::move(gens);
  } else {
    throw FormatError("dset-v1: subgroup must be \"distinguished\" or an index list");
  }
  if (!doc["elements"].is_array()) throw FormatError("dset-v1: elements must be an index list");
  for (const Json& e : doc["elements"]) {
    if (!isIndex(e)) throw FormatError("dset-v1: elements must be indices");
    d.elements.push_back(e.get<Element>());
  }
  return d;
}

DsetFile readDset(const std::filesystem::path& path) { return dsetFromJson(parseJsonFile(path)); }

void writeDset(const std::filesystem::path& path, const DsetFile& d) { writeTextFile(path, dsetJson(d).dump() + "\n"); }

Subgroup resolveDsetSubgroup(const FiniteGroup& group, const DsetFile& d) {
  if (std::holds_alternative<std::string>(d.subgroup)) {
    auto h = distinguishedSubgroup(group);
    if (!h) throw InvalidArgument("dset-v1: group has no distinguished subgroup");
    return *h;
  }
  const auto& gens = std::get<std::vector<Element>>(d.subgroup);
  checkElementIndices(group, gens, "dset-v1 subgroup");
  return closure(group, gens);
}

Subgroup resolveSubgroupArgument(const FiniteGroup& group, const std::string& arg, bool elementaryAbelian) {
  if (arg == "distinguished") {
    auto h = distinguishedSubgroup(group);
    if (!h) throw InvalidArgument("subgroup: group has no distinguished subgroup");
    return *h;
  }
  if (arg == "auto" || arg.rfind("auto-", 0) == 0) {
    std::size_t h = 1;
    while (h * h < group.order()) ++h;
    if (h * h != group.order()) throw InvalidArgument("subgroup auto: group order is not a square");
    if (auto d = distinguishedSubgroup(group); d && d->order() == h) return *d;
    for (Subgroup& s : subgroupsOfOrder(group, h)) {
      if (!isNormal(group, s)) continue;
      if (elementaryAbelian && !isElementaryAbelian2(s)) continue;
      return std::move(s);
    }
    throw InvalidArgument("subgroup auto: no normal subgroup of order " + std::to_string(h));
  }
  const std::string list = arg.rfind("gens=", 0) == 0 ? arg.substr(5) : arg;
  const auto gens = parseIndexList(list, "subgroup generators");
  checkElementIndices(group, gens, "subgroup generators");
  return closure(group, gens);
}

void writeHadamard(std::ostream& out, const std::vector<std::vector<int>>& rows) {
  out << "hadamard-v1 " << rows.size() << "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

std::vector<std::vector<int>> readHadamard(std::istream& in) {
  std::string tag;
  std::size_t n = 0;
  if (!(in >> tag >> n) || tag != "hadamard-v1") throw FormatError("hadamard-v1: bad header");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v = 0;
      if (!(in >> v)) throw FormatError("hadamard-v1: truncated at row " + std::to_string(i));
      if (v != 1 && v != -1) throw FormatError("hadamard-v1: entry is not 1 or -1 at row " + std::to_string(i));
      rows[i][j] = v;
    }
  std::string extra;
  if (in >> extra) throw FormatError("hadamard-v1: trailing data");
  return rows;
}

void writeTextFile(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace rshds
