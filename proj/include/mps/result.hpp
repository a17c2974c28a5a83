#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mps {

using Verdict = std::variant<bool, std::int64_t>;

/// Machine-readable outcome of one computation.
struct ResultDocument {
  std::vector<std::string> vars;
  std::string order;
  std::vector<std::string> generators;
  std::vector<std::string> reduced_groebner;
  std::optional<std::int64_t> dimension;
  std::map<std::string, Verdict> verdicts;

  bool operator==(const ResultDocument&) const = default;
};

enum class OutputFormat { Json, Text };

/// JSON: one object, keys in alphabetical order, `dimension` and `verdicts`
/// omitted when absent/empty, two-space indentation, trailing newline.
/// Text: a human-readable listing with one generator per line.
std::string emit_result(const ResultDocument& doc, OutputFormat format);

/// Inverse of the JSON emitter; ParseError on malformed input.
ResultDocument parse_result_json(std::string_view text);

}  // namespace mps
