#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frontier/asset_universe.hpp"
#include "frontier/frontier_record.hpp"

namespace frontier {

/// Parses the OR-Library portfolio benchmark format:
///   line 1: asset count N
///   next N lines: "mean_return standard_deviation"
///   remaining lines: "i j correlation" triples, 1-based indices.
/// Covariances are assembled as corr(i,j) * sd(i) * sd(j). Every
/// diagonal pair must be present; absent off-diagonal pairs default to
/// correlation 0. Blank lines are skipped, runs of spaces/tabs separate
/// tokens.
AssetUniverse parse_orlib(std::istream& in);
AssetUniverse parse_orlib(const std::string& text);
AssetUniverse load_orlib(const std::string& path);

/// Writes frontier records as CSV with header
/// `lambda,return,variance,objective,source,weights`; weights are
/// rendered as `i:w` pairs joined by `;`. Row order is preserved and
/// numbers keep full round-trip precision.
void serialize_frontier(std::span<const FrontierRecord> points, std::ostream& out);
std::string serialize_frontier(std::span<const FrontierRecord> points);
void save_frontier(std::span<const FrontierRecord> points, const std::string& path);

/// Inverse of serialize_frontier.
std::vector<FrontierRecord> parse_frontier(std::istream& in);
std::vector<FrontierRecord> parse_frontier(const std::string& text);
std::vector<FrontierRecord> load_frontier(const std::string& path);

/// Shortest-width decimal rendering that still round-trips a double
/// exactly (17 significant digits).
std::string format_double(double value);

} // namespace frontier
