#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monocst/verify.hpp"

namespace monocst {

inline constexpr const char* kSchemaTag = "monocst-v1";

using Cell = std::variant<std::string, double, std::int64_t>;

/// Column-named table written as CSV (with a "# monocst-v1" first line) or as
/// JSON mirroring the same columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Doubles are printed with %.17g so values round-trip.
std::string to_csv(const Table& table);
std::string to_json(const Table& table, const std::string& kind);

// suite, check, claimed, computed, abs_err, rel_err, tol, pass, seconds,
// then metric, expect_mismatch, claimed_im, computed_im.
Table report_table(const std::vector<VerificationReport>& reports);

}  // namespace monocst
