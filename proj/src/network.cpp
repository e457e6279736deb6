#include "glassnet/network.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace glassnet {

OrthantCode::OrthantCode(int dimension, std::uint32_t index) : dimension_(dimension), index_(index) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw PreconditionError(fmt::format("orthant dimension {} out of range", dimension));
  if (index >> dimension)
    throw PreconditionError(fmt::format("orthant index {} too large for dimension {}", index, dimension));
}

OrthantCode OrthantCode::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxDimension))
    throw ParseError(fmt::format("invalid orthant code '{}'", bits));
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(fmt::format("invalid orthant code '{}'", bits));
    index = (index << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return OrthantCode(static_cast<int>(bits.size()), index);
}

OrthantCode OrthantCode::of_point(const Vector& y) {
  const int n = static_cast<int>(y.size());
  std::uint32_t index = 0;
  for (int i = 0; i < n; ++i) {
    if (y[i] == 0.0) throw PreconditionError(fmt::format("point lies on wall y{} = 0", i + 1));
    index = (index << 1) | static_cast<std::uint32_t>(y[i] > 0.0);
  }
  return OrthantCode(n, index);
}

bool OrthantCode::bit(int variable) const {
  return (index_ >> (dimension_ - 1 - variable)) & 1u;
}

OrthantCode OrthantCode::flipped(int variable) const {
  return OrthantCode(dimension_, index_ ^ (1u << (dimension_ - 1 - variable)));
}

bool OrthantCode::strictly_contains(const Vector& y) const {
  if (y.size() != dimension_) return false;
  for (int i = 0; i < dimension_; ++i)
    if (y[i] * sign(i) <= 0.0) return false;
  return true;
}

std::string OrthantCode::str() const {
  std::string s(static_cast<std::size_t>(dimension_), '0');
  for (int i = 0; i < dimension_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int differing_variable(const OrthantCode& a, const OrthantCode& b) {
  if (a.dimension() != b.dimension())
    throw PreconditionError("orthant codes of different dimension");
  const std::uint32_t diff = a.index() ^ b.index();
  if (diff == 0 || (diff & (diff - 1)) != 0)
    throw PreconditionError(fmt::format("{} and {} are not adjacent orthants", a.str(), b.str()));
  int position = 0;
  while (!((diff >> position) & 1u)) ++position;
  return a.dimension() - 1 - position;
}

ValidationReport validate_conditions(int n, const std::vector<Vector>& table) {
  ValidationReport report;
  const auto count = static_cast<std::uint32_t>(table.size());
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    const OrthantCode code(n, idx);
    for (int i = 0; i < n; ++i) {
      if (table[idx][i] == 0.0) {
        report.condition1 = false;
        report.condition1_failures.push_back({code, code, i});
      }
      // visit each toggle pair once, from its 0 side
      if (!code.bit(i)) {
        const OrthantCode partner = code.flipped(i);
        if (table[idx][i] != table[partner.index()][i]) {
          report.condition2 = false;
          report.condition2_failures.push_back({code, partner, i});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_conditions(const GlassNetwork& net) {
  return validate_conditions(net.dimension(), net.focal_table());
}

std::string describe(const ValidationReport& report) {
  std::string out = fmt::format("Condition 1: {}, Condition 2: {}\n", report.condition1 ? "pass" : "fail",
                                report.condition2 ? "pass" : "fail");
  for (const auto& w : report.condition1_failures)
    out += fmt::format("  Condition 1 violated: orthant {} component {} is zero\n", w.code.str(), w.variable + 1);
  for (const auto& w : report.condition2_failures)
    out += fmt::format("  Condition 2 violated: component {} differs between {} and {}\n", w.variable + 1,
                       w.code.str(), w.partner.str());
  return out;
}

GlassNetwork::GlassNetwork(int dimension, std::vector<Vector> focal_table, NetworkOptions options)
    : dimension_(dimension), focal_(std::move(focal_table)) {
  if (dimension < 1 || dimension > OrthantCode::kMaxDimension)
    throw PreconditionError(fmt::format("network dimension {} out of range", dimension));
  if (focal_.size() != (std::size_t{1} << dimension))
    throw PreconditionError(
        fmt::format("row count mismatch: expected {} focal rows, got {}", std::size_t{1} << dimension, focal_.size()));
  for (const auto& f : focal_)
    if (f.size() != dimension) throw PreconditionError("focal vector has wrong length");

  const ValidationReport report = validate_conditions(dimension_, focal_);
  if (!report.condition1) {
    const auto& w = report.condition1_failures.front();
    throw PreconditionError(
        fmt::format("Condition 1 violated: orthant {} component {} is zero", w.code.str(), w.variable + 1));
  }
  if (options.require_condition2 && !report.condition2) {
    const auto& w = report.condition2_failures.front();
    throw PreconditionError(fmt::format("Condition 2 violated: component {} differs between {} and {}",
                                        w.variable + 1, w.code.str(), w.partner.str()));
  }

  boolean_ = true;
  for (const auto& f : focal_)
    for (int i = 0; i < dimension_; ++i)
      if (std::abs(f[i]) != 1.0) boolean_ = false;
}

const Vector& GlassNetwork::focal_point(const OrthantCode& code) const {
  if (code.dimension() != dimension_) throw PreconditionError("orthant code has wrong dimension");
  return focal_[code.index()];
}

double GlassNetwork::focal_bound() const {
  double bound = 0.0;
  for (const auto& f : focal_) bound = std::max(bound, f.cwiseAbs().maxCoeff());
  return bound;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

double parse_double(std::string_view word, int line_no) {
  double value = 0.0;
  const auto* first = word.data();
  const auto* last = word.data() + word.size();
  if (!word.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw ParseError(fmt::format("line {}: non-numeric focal entry '{}'", line_no, word));
  return value;
}

}  // namespace

GlassNetwork parse_network(std::string_view text, NetworkOptions options) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (!words.empty()) lines.emplace_back(line_no, std::move(words));
    pos = end + 1;
  }

  if (lines.empty() || lines[0].second.size() != 2 || lines[0].second[0] != "glassnet")
    throw ParseError("missing 'glassnet 1' header");
  if (lines[0].second[1] != "1")
    throw ParseError(fmt::format("unsupported format version '{}'", lines[0].second[1]));
  if (lines.size() < 2 || lines[1].second.size() != 2 || lines[1].second[0] != "n")
    throw ParseError("missing 'n <dimension>' line");

  int n = 0;
  {
    const auto word = lines[1].second[1];
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), n);
    if (ec != std::errc() || ptr != word.data() + word.size() || n < 1 || n > OrthantCode::kMaxDimension)
      throw ParseError(fmt::format("line {}: invalid dimension '{}'", lines[1].first, word));
  }

  const std::size_t expected = std::size_t{1} << n;
  const std::size_t rows = lines.size() - 2;
  if (rows != expected)
    throw ParseError(fmt::format("row count mismatch: expected {} focal rows, got {}", expected, rows));

  std::vector<Vector> table(expected);
  std::vector<bool> seen(expected, false);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const auto& [no, words] = lines[r];
    if (words.size() != static_cast<std::size_t>(n) + 1)
      throw ParseError(fmt::format("line {}: expected bitstring and {} focal entries", no, n));
    if (words[0].size() != static_cast<std::size_t>(n))
      throw ParseError(fmt::format("line {}: orthant code '{}' has wrong length", no, words[0]));
    OrthantCode code;
    try {
      code = OrthantCode::parse(words[0]);
    } catch (const ParseError&) {
      throw ParseError(fmt::format("line {}: invalid orthant code '{}'", no, words[0]));
    }
    if (seen[code.index()]) throw ParseError(fmt::format("line {}: duplicate orthant row {}", no, code.str()));
    seen[code.index()] = true;
    Vector f(n);
    for (int i = 0; i < n; ++i) {
      f[i] = parse_double(words[static_cast<std::size_t>(i) + 1], no);
      if (f[i] == 0.0)
        throw ParseError(fmt::format("line {}: Condition 1 violated: orthant {} component {} is zero", no,
                                     code.str(), i + 1));
    }
    table[code.index()] = std::move(f);
  }
  // Row count matched and no duplicates, so every orthant is present.

  try {
    return GlassNetwork(n, std::move(table), options);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_network(const GlassNetwork& net) {
  std::string out = fmt::format("glassnet 1\nn {}\n", net.dimension());
  for (std::uint32_t idx = 0; idx < net.orthant_count(); ++idx) {
    const OrthantCode code(net.dimension(), idx);
    out += code.str();
    const Vector& f = net.focal_point(code);
    for (int i = 0; i < net.dimension(); ++i) out += " " + format_number(f[i]);
    out += '\n';
  }
  return out;
}

std::string paper_network_text() {
  return R"(glassnet 1
# 4-variable Boolean Glass network with a horseshoe-like invariant set
n 4
# y1..y4  focal point F
0000 -1  1  1  1
0001 -1  1 -1  1
0010  1 -1  1 -1
0011  1 -1 -1 -1
0100 -1  1  1  1
0101 -1  1  1  1
0110  1 -1  1 -1
0111  1 -1  1 -1
1000 -1  1 -1 -1
1001 -1  1 -1 -1
1010  1  1 -1 -1
1011  1 -1 -1 -1
1100 -1  1 -1  1
1101 -1  1  1  1
1110  1  1 -1  1
1111  1 -1  1  1
)";
}

GlassNetwork paper_network() { return parse_network(paper_network_text()); }

}  // namespace glassnet
