#include "frontier/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "frontier/data_io.hpp"
#include "frontier/errors.hpp"

namespace frontier {

void Manifest::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void Manifest::add(std::string key, double value) { add(std::move(key), format_double(value)); }

void Manifest::add(std::string key, std::uint64_t value) {
  add(std::move(key), std::to_string(value));
}

void Manifest::add_file_digest(const std::string& key, const std::string& path) {
  add(key, file_digest(path));
}

void Manifest::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  for (const auto& [key, value] : entries_) out << key << '=' << value << '\n';
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for digest");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[4096];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[32];
  std::snprintf(hex, sizeof(hex), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

} // namespace frontier
