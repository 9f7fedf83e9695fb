#include "frontier/data_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace frontier {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

double parse_number(const std::string& token, int line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_no, "expected a number, got '" + token + "'");
  return value;
}

long parse_integer(const std::string& token, int line_no) {
  long value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_no, "expected an integer, got '" + token + "'");
  return value;
}

} // namespace

std::string format_double(double value) {
  char buf[40];
  int len = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

AssetUniverse parse_orlib(std::istream& in) {
  std::string line;
  int line_no = 0;

  auto next_tokens = [&](std::vector<std::string>& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (is_blank(line)) continue;
      out = split_ws(line);
      return true;
    }
    return false;
  };

  std::vector<std::string> tok;
  if (!next_tokens(tok)) throw ParseError(1, "empty input, expected asset count");
  if (tok.size() != 1) throw ParseError(line_no, "expected a single asset count");
  const long n = parse_integer(tok[0], line_no);
  if (n < 1) throw DomainError("asset count must be >= 1, got " + std::to_string(n));

  VectorXd means(n), sds(n);
  for (long i = 0; i < n; ++i) {
    if (!next_tokens(tok))
      throw ParseError(line_no + 1, "unexpected end of input, expected asset " +
                                        std::to_string(i + 1) + " of " + std::to_string(n));
    if (tok.size() != 2)
      throw ParseError(line_no, "expected 'mean_return standard_deviation'");
    means[i] = parse_number(tok[0], line_no);
    sds[i] = parse_number(tok[1], line_no);
    if (sds[i] < 0.0)
      throw DomainError("negative standard deviation at line " + std::to_string(line_no));
  }

  MatrixXd covariance = MatrixXd::Zero(n, n);
  std::vector<bool> diagonal_seen(static_cast<std::size_t>(n), false);
  while (next_tokens(tok)) {
    if (tok.size() != 3) throw ParseError(line_no, "expected 'i j correlation'");
    const long i = parse_integer(tok[0], line_no);
    const long j = parse_integer(tok[1], line_no);
    const double rho = parse_number(tok[2], line_no);
    if (i < 1 || i > n || j < 1 || j > n)
      throw ParseError(line_no, "asset index out of range [1," + std::to_string(n) + "]");
    if (std::abs(rho) > 1.0)
      throw DomainError("correlation magnitude exceeds 1 at line " + std::to_string(line_no));
    const double cov = rho * sds[i - 1] * sds[j - 1];
    covariance(i - 1, j - 1) = cov;
    covariance(j - 1, i - 1) = cov;
    if (i == j) diagonal_seen[static_cast<std::size_t>(i - 1)] = true;
  }

  for (long i = 0; i < n; ++i)
    if (!diagonal_seen[static_cast<std::size_t>(i)])
      throw IncompleteDataError("missing diagonal correlation for asset " + std::to_string(i + 1));

  return AssetUniverse(std::move(means), std::move(covariance));
}

AssetUniverse parse_orlib(const std::string& text) {
  std::istringstream in(text);
  return parse_orlib(in);
}

AssetUniverse load_orlib(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_orlib(in);
}

namespace {

constexpr const char* kFrontierHeader = "lambda,return,variance,objective,source,weights";

} // namespace

void serialize_frontier(std::span<const FrontierRecord> points, std::ostream& out) {
  out << kFrontierHeader << '\n';
  for (const FrontierRecord& rec : points) {
    out << format_double(rec.lambda) << ',' << format_double(rec.mean_return) << ','
        << format_double(rec.variance) << ',' << format_double(rec.objective) << ','
        << rec.source << ',';
    bool first = true;
    for (const auto& [index, weight] : rec.weights) {
      if (!first) out << ';';
      out << index << ':' << format_double(weight);
      first = false;
    }
    out << '\n';
  }
}

std::string serialize_frontier(std::span<const FrontierRecord> points) {
  std::ostringstream out;
  serialize_frontier(points, out);
  return out.str();
}

void save_frontier(std::span<const FrontierRecord> points, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  serialize_frontier(points, out);
}

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(text.substr(start));
      break;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

} // namespace

std::vector<FrontierRecord> parse_frontier(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kFrontierHeader)
    throw ParseError(1, std::string("expected header '") + kFrontierHeader + "'");

  std::vector<FrontierRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    const std::vector<std::string> fields = split_on(line, ',');
    if (fields.size() != 6) throw ParseError(line_no, "expected 6 comma-separated fields");

    FrontierRecord rec;
    rec.lambda = parse_number(fields[0], line_no);
    rec.mean_return = parse_number(fields[1], line_no);
    rec.variance = parse_number(fields[2], line_no);
    rec.objective = parse_number(fields[3], line_no);
    rec.source = fields[4];
    if (rec.variance < 0.0)
      throw DomainError("negative variance at line " + std::to_string(line_no));

    if (!fields[5].empty()) {
      std::unordered_set<int> seen;
      for (const std::string& pair : split_on(fields[5], ';')) {
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
          throw ParseError(line_no, "weight entry '" + pair + "' is not 'index:weight'");
        const long index = parse_integer(pair.substr(0, colon), line_no);
        const double weight = parse_number(pair.substr(colon + 1), line_no);
        if (weight <= 0.0)
          throw DomainError("nonpositive weight at line " + std::to_string(line_no));
        if (!seen.insert(static_cast<int>(index)).second)
          throw DomainError("duplicate weight index at line " + std::to_string(line_no));
        rec.weights.emplace_back(static_cast<int>(index), weight);
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<FrontierRecord> parse_frontier(const std::string& text) {
  std::istringstream in(text);
  return parse_frontier(in);
}

std::vector<FrontierRecord> load_frontier(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_frontier(in);
}

} // namespace frontier
