#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frontier {

inline constexpr const char* kToolVersion = "0.1.0";

/// Flat key=value audit record written next to every output file, so a
/// run can be reproduced from its recorded parameters.
class Manifest {
public:
  void add(std::string key, std::string value);
  void add(std::string key, double value);
  void add(std::string key, std::uint64_t value);
  void add_file_digest(const std::string& key, const std::string& path);
  void save(const std::string& path) const;

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// FNV-1a 64-bit digest of a file's bytes, rendered as fnv1a64:<hex>.
std::string file_digest(const std::string& path);

} // namespace frontier
