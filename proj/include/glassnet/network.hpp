#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glassnet/common.hpp"

namespace glassnet {

/// Sign pattern of an orthant of R^n.
///
/// Variable i (0-based) is stored so that the integer index orders codes the
/// same way as their bitstrings, with variable 0 written first.
class OrthantCode {
public:
  static constexpr int kMaxDimension = 24;

  OrthantCode() = default;
  OrthantCode(int dimension, std::uint32_t index);

  /// Parses a bitstring such as "0101"; throws ParseError.
  static OrthantCode parse(std::string_view bits);
  /// Orthant containing y; throws PreconditionError if some component is 0.
  static OrthantCode of_point(const Vector& y);

  int dimension() const { return dimension_; }
  std::uint32_t index() const { return index_; }

  bool bit(int variable) const;
  /// +1 when y_variable > 0 in this orthant, -1 otherwise.
  int sign(int variable) const { return bit(variable) ? 1 : -1; }
  OrthantCode flipped(int variable) const;

  /// True when every component of y is nonzero with this orthant's sign.
  bool strictly_contains(const Vector& y) const;

  std::string str() const;

  friend bool operator==(const OrthantCode&, const OrthantCode&) = default;
  friend std::strong_ordering operator<=>(const OrthantCode&, const OrthantCode&) = default;

private:
  int dimension_ = 0;
  std::uint32_t index_ = 0;
};

/// Variable in which two adjacent codes differ; throws if they are not adjacent.
int differing_variable(const OrthantCode& a, const OrthantCode& b);

struct NetworkOptions {
  /// Reject networks with self-input. The wall-crossing analysis relies on it.
  bool require_condition2 = true;
};

/// A Glass network y' = -y + F(sign pattern of y), given by its focal table.
/// Immutable after construction.
class GlassNetwork {
public:
  /// Validates the table (2^n rows, Condition 1, optionally Condition 2).
  GlassNetwork(int dimension, std::vector<Vector> focal_table, NetworkOptions options = {});

  int dimension() const { return dimension_; }
  std::size_t orthant_count() const { return focal_.size(); }
  bool is_boolean() const { return boolean_; }

  const Vector& focal_point(const OrthantCode& code) const;
  const std::vector<Vector>& focal_table() const { return focal_; }

  /// Largest |f_i| over all orthants.
  double focal_bound() const;

private:
  int dimension_;
  std::vector<Vector> focal_;
  bool boolean_ = false;
};

GlassNetwork parse_network(std::string_view text, NetworkOptions options = {});
std::string serialize_network(const GlassNetwork& net);

struct ConditionWitness {
  OrthantCode code;
  OrthantCode partner;  // toggled code; unused for Condition 1
  int variable = 0;
};

struct ValidationReport {
  bool condition1 = true;
  bool condition2 = true;
  std::vector<ConditionWitness> condition1_failures;
  std::vector<ConditionWitness> condition2_failures;

  bool ok() const { return condition1 && condition2; }
};

/// Checks both conditions exhaustively. Failures are recorded, never thrown.
ValidationReport validate_conditions(int dimension, const std::vector<Vector>& focal_table);
ValidationReport validate_conditions(const GlassNetwork& net);

std::string describe(const ValidationReport& report);

/// The four-variable Boolean network analysed in the examples and repro run.
GlassNetwork paper_network();
std::string paper_network_text();

}  // namespace glassnet
