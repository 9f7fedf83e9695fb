#include "frontier/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "frontier/data_io.hpp"
#include "frontier/errors.hpp"
#include "frontier/model.hpp"

namespace frontier {

namespace {

double axis_key(const FrontierRecord& p, Axis axis) {
  return axis == Axis::Return ? p.mean_return : p.variance;
}

double axis_value(const FrontierRecord& p, Axis axis) {
  return axis == Axis::Return ? p.variance : p.mean_return;
}

} // namespace

double interpolate(std::span<const FrontierRecord> standard, Axis axis, double query) {
  if (standard.size() < 2)
    throw DomainError("interpolation needs a frontier with at least 2 points");

  if (query <= axis_key(standard.front(), axis)) return axis_value(standard.front(), axis);
  if (query >= axis_key(standard.back(), axis)) return axis_value(standard.back(), axis);

  auto right = std::lower_bound(standard.begin() + 1, standard.end(), query,
                                [axis](const FrontierRecord& p, double q) {
                                  return axis_key(p, axis) < q;
                                });
  auto left = std::prev(right);
  const double k0 = axis_key(*left, axis);
  const double k1 = axis_key(*right, axis);
  const double v0 = axis_value(*left, axis);
  const double v1 = axis_value(*right, axis);
  if (k1 == k0) return v0;
  return v0 + (query - k0) / (k1 - k0) * (v1 - v0);
}

DistanceReport average_distances(std::span<const FrontierRecord> standard,
                                 std::span<const FrontierRecord> heuristic) {
  if (heuristic.empty()) throw DomainError("cannot average distances of an empty frontier");

  DistanceReport report;
  report.point_count = heuristic.size();
  for (const FrontierRecord& p : heuristic) {
    const double v_hat = interpolate(standard, Axis::Return, p.mean_return);
    const double r_hat = interpolate(standard, Axis::Variance, p.variance);
    report.variance_distance += std::max(0.0, p.variance - v_hat);
    report.mean_return_distance += std::max(0.0, r_hat - p.mean_return);
  }
  report.variance_distance /= static_cast<double>(heuristic.size());
  report.mean_return_distance /= static_cast<double>(heuristic.size());
  return report;
}

namespace {

double bin_coverage_pct(double lo, double hi, std::span<const FrontierRecord> heuristic,
                        Axis axis) {
  constexpr int kBins = 100;
  if (!(hi > lo)) throw DomainError("degenerate frontier range");
  bool hit[kBins] = {};
  for (const FrontierRecord& p : heuristic) {
    const double value = axis_key(p, axis);
    if (value < lo || value > hi) continue;
    int bin = static_cast<int>(std::floor((value - lo) / (hi - lo) * kBins));
    if (bin >= kBins) bin = kBins - 1; // the last bin is closed
    hit[bin] = true;
  }
  int count = 0;
  for (bool b : hit) count += b ? 1 : 0;
  return 100.0 * count / kBins;
}

} // namespace

Occupancy occupancy(std::span<const FrontierRecord> standard,
                    std::span<const FrontierRecord> heuristic) {
  if (standard.size() < 2) throw DomainError("occupancy needs a standard frontier with >= 2 points");
  const auto [v_lo, v_hi] = std::minmax_element(
      standard.begin(), standard.end(),
      [](const FrontierRecord& a, const FrontierRecord& b) { return a.variance < b.variance; });
  const auto [r_lo, r_hi] = std::minmax_element(standard.begin(), standard.end(),
                                                [](const FrontierRecord& a,
                                                   const FrontierRecord& b) {
                                                  return a.mean_return < b.mean_return;
                                                });
  Occupancy result;
  result.variance_pct =
      bin_coverage_pct(v_lo->variance, v_hi->variance, heuristic, Axis::Variance);
  result.return_pct =
      bin_coverage_pct(r_lo->mean_return, r_hi->mean_return, heuristic, Axis::Return);
  return result;
}

Persistence persistence(std::size_t frontier_points, std::uint64_t evaluations) {
  if (evaluations == 0) throw DomainError("persistence needs a positive evaluation count");
  Persistence p;
  p.cardinal = frontier_points;
  p.percentage = 100.0 * static_cast<double>(frontier_points) / static_cast<double>(evaluations);
  return p;
}

MergedFrontier merge_frontiers(const std::map<std::string, std::vector<FrontierRecord>>& named) {
  std::vector<FrontierRecord> pool;
  for (const auto& [tag, records] : named) {
    for (FrontierRecord record : records) {
      record.source = tag;
      pool.push_back(std::move(record));
    }
  }
  if (pool.empty()) throw DomainError("all merge inputs are empty");

  MergedFrontier merged;
  // Inputs are concatenated in ascending tag order, and pareto_filter
  // keeps the first of an exact duplicate, so cross-source ties resolve
  // to the lexicographically smallest tag.
  merged.points = pareto_filter(pool);

  for (const auto& [tag, records] : named) {
    SourceSurvival s;
    s.initial = records.size();
    merged.per_source[tag] = s;
  }
  for (const FrontierRecord& p : merged.points) ++merged.per_source[p.source].surviving;
  for (auto& [tag, s] : merged.per_source) {
    s.survival_pct = s.initial > 0 ? 100.0 * static_cast<double>(s.surviving) /
                                         static_cast<double>(s.initial)
                                   : 0.0;
    s.contribution_pct =
        100.0 * static_cast<double>(s.surviving) / static_cast<double>(merged.points.size());
  }
  return merged;
}

PerSourceStats per_source_stats(const MergedFrontier& merged,
                                std::span<const FrontierRecord> standard) {
  if (merged.points.empty()) throw DomainError("merged frontier is empty");

  auto stats_for = [&](std::span<const FrontierRecord> part) {
    SourceStats s;
    s.point_count = part.size();
    s.occupancy = occupancy(standard, part);
    if (!part.empty()) s.distances = average_distances(standard, part);
    return s;
  };

  PerSourceStats out;
  out.all = stats_for(merged.points);
  for (const auto& [tag, survival] : merged.per_source) {
    std::vector<FrontierRecord> part;
    part.reserve(survival.surviving);
    for (const FrontierRecord& p : merged.points)
      if (p.source == tag) part.push_back(p);
    out.by_source[tag] = stats_for(part);
  }
  return out;
}

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

void row(std::ostringstream& out, const std::string& a, const std::string& b,
         const std::string& c, const std::string& d = "") {
  char buf[160];
  if (d.empty())
    std::snprintf(buf, sizeof(buf), "  %-10s %14s %14s\n", a.c_str(), b.c_str(), c.c_str());
  else
    std::snprintf(buf, sizeof(buf), "  %-10s %12s %12s %12s\n", a.c_str(), b.c_str(), c.c_str(),
                  d.c_str());
  out << buf;
}

std::string tag_of(std::span<const FrontierRecord> records) {
  return records.empty() || records.front().source.empty() ? std::string("heuristic")
                                                           : records.front().source;
}

} // namespace

std::string render_comparison_report(std::span<const FrontierRecord> standard,
                                     std::span<const FrontierRecord> heuristic,
                                     std::optional<std::uint64_t> evaluations) {
  const std::string tag = tag_of(heuristic);
  const DistanceReport d = average_distances(standard, heuristic);
  const Occupancy occ = occupancy(standard, heuristic);

  std::ostringstream out;
  out << "Frontier comparison: " << tag << " vs standard\n";
  out << "Heuristic points: " << heuristic.size() << ", standard points: " << standard.size()
      << "\n\n";
  if (evaluations) {
    const Persistence p = persistence(heuristic.size(), *evaluations);
    out << "Persistence\n";
    row(out, "source", "cardinal", "percentage");
    row(out, tag, std::to_string(p.cardinal), fixed(p.percentage, 2) + "%");
    out << '\n';
  }
  out << "Average distance\n";
  row(out, "source", "mean return", "variance");
  row(out, tag, fixed(d.mean_return_distance, 6), fixed(d.variance_distance, 6));
  out << '\n';
  out << "Occupancy\n";
  row(out, "source", "mean return", "variance");
  row(out, tag, fixed(occ.return_pct, 2) + "%", fixed(occ.variance_pct, 2) + "%");
  return std::move(out).str();
}

std::string render_merge_report(const MergedFrontier& merged,
                                std::span<const FrontierRecord> standard) {
  const PerSourceStats stats = per_source_stats(merged, standard);

  std::ostringstream out;
  out << "Merged frontier: " << merged.points.size() << " points\n\n";

  out << "Points surviving the merge\n";
  row(out, "source", "initial", "final", "percentage");
  for (const auto& [tag, s] : merged.per_source)
    row(out, tag, std::to_string(s.initial), std::to_string(s.surviving),
        fixed(s.survival_pct, 2) + "%");
  out << '\n';

  out << "Contribution to the merged frontier\n";
  row(out, "source", "cardinal", "percentage");
  for (const auto& [tag, s] : merged.per_source)
    row(out, tag, std::to_string(s.surviving), fixed(s.contribution_pct, 2) + "%");
  out << '\n';

  out << "Average distance after the merge\n";
  row(out, "source", "mean return", "variance");
  auto distance_row = [&](const std::string& tag, const SourceStats& s) {
    if (s.distances)
      row(out, tag, fixed(s.distances->mean_return_distance, 6),
          fixed(s.distances->variance_distance, 6));
    else
      row(out, tag, "-", "-");
  };
  distance_row("All", stats.all);
  for (const auto& [tag, s] : stats.by_source) distance_row(tag, s);
  out << '\n';

  out << "Occupancy after the merge\n";
  row(out, "source", "mean return", "variance");
  row(out, "All", fixed(stats.all.occupancy.return_pct, 2) + "%",
      fixed(stats.all.occupancy.variance_pct, 2) + "%");
  for (const auto& [tag, s] : stats.by_source)
    row(out, tag, fixed(s.occupancy.return_pct, 2) + "%", fixed(s.occupancy.variance_pct, 2) + "%");
  return std::move(out).str();
}

std::string render_comparison_csv(std::span<const FrontierRecord> standard,
                                  std::span<const FrontierRecord> heuristic,
                                  std::optional<std::uint64_t> evaluations) {
  const std::string tag = tag_of(heuristic);
  const DistanceReport d = average_distances(standard, heuristic);
  const Occupancy occ = occupancy(standard, heuristic);

  std::ostringstream out;
  out << "table,source,metric,value\n";
  if (evaluations) {
    const Persistence p = persistence(heuristic.size(), *evaluations);
    out << "persistence," << tag << ",cardinal," << p.cardinal << '\n';
    out << "persistence," << tag << ",percentage," << format_double(p.percentage) << '\n';
  }
  out << "average_distance," << tag << ",mean_return," << format_double(d.mean_return_distance)
      << '\n';
  out << "average_distance," << tag << ",variance," << format_double(d.variance_distance) << '\n';
  out << "occupancy," << tag << ",mean_return," << format_double(occ.return_pct) << '\n';
  out << "occupancy," << tag << ",variance," << format_double(occ.variance_pct) << '\n';
  return std::move(out).str();
}

std::string render_merge_csv(const MergedFrontier& merged,
                             std::span<const FrontierRecord> standard) {
  const PerSourceStats stats = per_source_stats(merged, standard);

  std::ostringstream out;
  out << "table,source,metric,value\n";
  for (const auto& [tag, s] : merged.per_source) {
    out << "survival," << tag << ",initial," << s.initial << '\n';
    out << "survival," << tag << ",surviving," << s.surviving << '\n';
    out << "survival," << tag << ",percentage," << format_double(s.survival_pct) << '\n';
    out << "contribution," << tag << ",cardinal," << s.surviving << '\n';
    out << "contribution," << tag << ",percentage," << format_double(s.contribution_pct) << '\n';
  }
  auto emit_stats = [&](const std::string& tag, const SourceStats& s) {
    if (s.distances) {
      out << "merged_distance," << tag << ",mean_return,"
          << format_double(s.distances->mean_return_distance) << '\n';
      out << "merged_distance," << tag << ",variance,"
          << format_double(s.distances->variance_distance) << '\n';
    }
    out << "merged_occupancy," << tag << ",mean_return," << format_double(s.occupancy.return_pct)
        << '\n';
    out << "merged_occupancy," << tag << ",variance," << format_double(s.occupancy.variance_pct)
        << '\n';
  };
  emit_stats("All", stats.all);
  for (const auto& [tag, s] : stats.by_source) emit_stats(tag, s);
  return std::move(out).str();
}

} // namespace frontier
