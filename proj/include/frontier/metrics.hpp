#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frontier/frontier_record.hpp"
#include "frontier/heuristic.hpp"

namespace frontier {

enum class Axis { Return, Variance };

/// Piecewise-linear interpolation along a Pareto-sorted frontier
/// (ascending variance, ascending return). axis names the query
/// coordinate; the paired coordinate is returned. Queries outside the
/// frontier's range clamp to the nearest endpoint.
double interpolate(std::span<const FrontierRecord> standard, Axis axis, double query);

struct DistanceReport {
  double mean_return_distance = 0.0; // average of r_hat - r over heuristic points
  double variance_distance = 0.0;    // average of v - v_hat over heuristic points
  std::size_t point_count = 0;
};

/// Average interpolated distances from heuristic points to the
/// standard frontier. Small negative per-point values (interpolation
/// noise on a convex curve) clamp to zero.
DistanceReport average_distances(std::span<const FrontierRecord> standard,
                                 std::span<const FrontierRecord> heuristic);

struct Occupancy {
  double return_pct = 0.0;
  double variance_pct = 0.0;
};

/// The standard frontier's return and variance ranges are each split
/// into 100 equal bins (half-open, last closed); reports the percentage
/// of bins containing at least one heuristic value. Values outside the
/// range count in no bin.
Occupancy occupancy(std::span<const FrontierRecord> standard,
                    std::span<const FrontierRecord> heuristic);

struct Persistence {
  std::size_t cardinal = 0;
  double percentage = 0.0;
};

/// How many evaluated portfolios survived to the final frontier.
Persistence persistence(std::size_t frontier_points, std::uint64_t evaluations);

inline Persistence persistence(const ParetoArchive& archive) {
  return persistence(archive.points().size(), archive.evaluations());
}

struct SourceSurvival {
  std::size_t initial = 0;
  std::size_t surviving = 0;
  double survival_pct = 0.0;     // surviving / initial
  double contribution_pct = 0.0; // surviving / merged total
};

struct MergedFrontier {
  std::vector<FrontierRecord> points; // nondominated union, source tags kept
  std::map<std::string, SourceSurvival> per_source;
};

/// Pareto-filters the tagged union of several frontiers. Identical
/// (variance, return) points from different sources collapse to the
/// lexicographically smallest tag.
MergedFrontier merge_frontiers(const std::map<std::string, std::vector<FrontierRecord>>& named);

struct SourceStats {
  std::optional<DistanceReport> distances; // absent when no surviving points
  Occupancy occupancy;
  std::size_t point_count = 0;
};

struct PerSourceStats {
  SourceStats all;
  std::map<std::string, SourceStats> by_source;
};

/// Post-merge distance and occupancy per surviving source, plus the
/// whole merged set as "All".
PerSourceStats per_source_stats(const MergedFrontier& merged,
                                std::span<const FrontierRecord> standard);

/// Plain-text report of persistence / distance / occupancy for one
/// heuristic frontier against the standard one.
std::string render_comparison_report(std::span<const FrontierRecord> standard,
                                     std::span<const FrontierRecord> heuristic,
                                     std::optional<std::uint64_t> evaluations);

/// Plain-text report of the merge: survival, contribution, and
/// post-merge distance/occupancy sections.
std::string render_merge_report(const MergedFrontier& merged,
                                std::span<const FrontierRecord> standard);

/// Machine-readable form of the same numbers: one
/// `table,source,metric,value` row per cell.
std::string render_comparison_csv(std::span<const FrontierRecord> standard,
                                  std::span<const FrontierRecord> heuristic,
                                  std::optional<std::uint64_t> evaluations);
std::string render_merge_csv(const MergedFrontier& merged,
                             std::span<const FrontierRecord> standard);

} // namespace frontier
