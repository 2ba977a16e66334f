#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rshds/certify.hpp"
#include "rshds/group.hpp"
#include "rshds/json.hpp"

namespace rshds {

/// Group spec string: `gnk:n,k`, `c4n:n`, or `file:<path>`.
struct GroupSpec {
  enum class Kind { Gnk, C4n, File };
  Kind kind = Kind::Gnk;
  int n = 0;
  int k = 0;
  std::string path;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws InvalidArgument on a malformed spec.
GroupSpec parseGroupSpec(const std::string& text);
std::string formatGroupSpec(const GroupSpec& spec);
/// Relative file paths are tried against `baseDir` when they do not exist as given.
FiniteGroup loadGroup(const GroupSpec& spec, const std::filesystem::path& baseDir = {});

/// cayley-v1 document for a group.
Json cayleyJson(const FiniteGroup& group);
/// Parses and validates a cayley-v1 document. FormatError / ValidationError.
FiniteGroup cayleyFromJson(const Json& doc);
FiniteGroup cayleyFromFile(const std::filesystem::path& path);
void writeCayley(const std::filesystem::path& path, const FiniteGroup& group);

/// dset-v1: group spec string, subgroup ("distinguished" or generator indices), elements.
struct DsetFile {
  std::string group;
  std::variant<std::string, std::vector<Element>> subgroup = std::string("distinguished");
  std::vector<Element> elements;

  friend bool operator==(const DsetFile&, const DsetFile&) = default;
};

Json dsetJson(const DsetFile& d);
DsetFile dsetFromJson(const Json& doc);
DsetFile readDset(const std::filesystem::path& path);
void writeDset(const std::filesystem::path& path, const DsetFile& d);

/// Subgroup named in a dset file.
Subgroup resolveDsetSubgroup(const FiniteGroup& group, const DsetFile& d);

/// Subgroup argument on the command line:
///   distinguished | auto | auto-<anything> | gens=i,j,... | i,j,...
/// `auto` picks the first normal subgroup of order sqrt(|G|) (the elementary
/// abelian one when `elementaryAbelian` is set). Throws InvalidArgument.
Subgroup resolveSubgroupArgument(const FiniteGroup& group, const std::string& arg, bool elementaryAbelian = false);

/// hadamard-v1: header `hadamard-v1 N`, then N rows of space-separated 1 / -1.
void writeHadamard(std::ostream& out, const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> readHadamard(std::istream& in);

/// Writes `text` to `path` (creating parent directories). FormatError on failure.
void writeTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace rshds
