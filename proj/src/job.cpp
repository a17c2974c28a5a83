#include "mps/job.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "mps/error.hpp"
#include "mps/parser.hpp"

namespace mps {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string strip_comment(std::string_view line) {
  return trim(line.substr(0, line.find('#')));
}

struct Entry {
  std::string value;
  std::size_t line;
};

std::optional<std::size_t> component_index(const std::string& key) {
  if (key.size() < 2 || key[0] != 'f') return std::nullopt;
  if (!std::all_of(key.begin() + 1, key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  if (key[1] == '0' || key.size() > 7) return std::nullopt;
  return std::stoul(key.substr(1));
}

std::vector<std::string> plain_names(const Entry& e, const std::string& key) {
  std::vector<std::string> names;
  std::vector<Variable> vars;
  try {
    vars = parse_variable_list(e.value);
  } catch (const Error& err) {
    throw Error::at_line(ErrorKind::ParseError, "bad '" + key + "' list: " + err.what(), e.line);
  }
  for (const auto& v : vars) {
    if (v.copy != 0) {
      throw Error::at_line(ErrorKind::ParseError,
                           "'" + key + "' must list plain variable names without copy suffixes", e.line);
    }
    names.push_back(v.base);
  }
  return names;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

JobSpec parse_job(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::map<std::size_t, Entry> components;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    last_line = line_no;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error::at_line(ErrorKind::ParseError, "expected 'key = value'", line_no);
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw Error::at_line(ErrorKind::ParseError, "empty key", line_no);
    if (auto j = component_index(key)) {
      if (!components.emplace(*j, Entry{value, line_no}).second) {
        throw Error::at_line(ErrorKind::DuplicateKey, "duplicate key '" + key + "'", line_no);
      }
      continue;
    }
    static const std::vector<std::string> known = {"vars", "params", "order", "k", "style"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error::at_line(ErrorKind::ParseError, "unknown key '" + key + "'", line_no);
    }
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      throw Error::at_line(ErrorKind::DuplicateKey, "duplicate key '" + key + "'", line_no);
    }
  }
  const std::size_t end_line = last_line + 1;

  JobSpec job;
  auto vars = entries.find("vars");
  if (vars == entries.end()) throw Error::at_line(ErrorKind::MissingKey, "missing key 'vars'", end_line);
  job.source_vars = plain_names(vars->second, "vars");
  if (job.source_vars.empty()) {
    throw Error::at_line(ErrorKind::ParseError, "'vars' must name at least one variable", vars->second.line);
  }
  if (auto params = entries.find("params"); params != entries.end()) {
    job.params = plain_names(params->second, "params");
    for (const auto& p : job.params) {
      if (std::find(job.source_vars.begin(), job.source_vars.end(), p) != job.source_vars.end()) {
        throw Error::at_line(ErrorKind::ParseError, "'" + p + "' is both a variable and a parameter",
                             params->second.line);
      }
    }
  }
  if (components.empty()) throw Error::at_line(ErrorKind::MissingKey, "missing key 'f1'", end_line);
  std::size_t expected = 1;
  for (const auto& [j, entry] : components) {
    if (j != expected) {
      throw Error::at_line(ErrorKind::MissingKey, "missing key 'f" + std::to_string(expected) + "'",
                           entry.line);
    }
    ++expected;
  }
  if (auto order = entries.find("order"); order != entries.end()) {
    try {
      MonomialOrder::from_name(order->second.value);
    } catch (const Error& e) {
      throw Error::at_line(ErrorKind::ParseError, e.what(), order->second.line);
    }
    job.options.order = order->second.value;
  }
  if (auto k = entries.find("k"); k != entries.end()) {
    const auto& v = k->second.value;
    if (v.empty() || v.size() > 6 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        std::stoul(v) == 0) {
      throw Error::at_line(ErrorKind::ParseError, "'k' must be a positive integer", k->second.line);
    }
    job.options.k = static_cast<unsigned>(std::stoul(v));
  }
  if (auto style = entries.find("style"); style != entries.end()) {
    if (style->second.value == "at") {
      job.options.style = NameStyle::At;
    } else if (style->second.value == "primes") {
      job.options.style = NameStyle::Primes;
    } else {
      throw Error::at_line(ErrorKind::ParseError, "'style' must be 'at' or 'primes'", style->second.line);
    }
  }

  // Every component must parse over params + source variables.
  std::vector<Variable> table_vars;
  for (const auto& p : job.params) table_vars.push_back({p, 0, true});
  for (const auto& x : job.source_vars) table_vars.push_back({x, 0, false});
  RingPtr ring;
  try {
    ring = make_ring(VariableTable(std::move(table_vars)));
  } catch (const Error& e) {
    throw Error::at_line(ErrorKind::ParseError, e.what(), vars->second.line);
  }
  for (const auto& [j, entry] : components) {
    try {
      parse_poly(entry.value, ring);
    } catch (const Error& e) {
      throw e.with_line(entry.line);
    }
    job.components.push_back(entry.value);
  }
  return job;
}

JobSpec load_job(const std::filesystem::path& path) { return parse_job(read_text_file(path)); }

IdealText parse_ideal_text(std::string_view text, const MonomialOrder& order) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  RingPtr ring;
  std::vector<std::pair<std::string, std::size_t>> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (!ring) {
      const auto eq = line.find('=');
      if (eq == std::string::npos || trim(std::string_view(line).substr(0, eq)) != "vars") {
        throw Error::at_line(ErrorKind::MissingKey, "ideal file must start with 'vars = ...'", line_no);
      }
      try {
        ring = make_ring(VariableTable(parse_variable_list(std::string_view(line).substr(eq + 1))), order);
      } catch (const Error& e) {
        throw Error::at_line(ErrorKind::ParseError, e.what(), line_no);
      }
      continue;
    }
    pending.emplace_back(line, line_no);
  }
  if (!ring) throw Error::at_line(ErrorKind::MissingKey, "missing 'vars' line", line_no + 1);
  IdealText out{ring, {}};
  for (const auto& [expr, ln] : pending) {
    try {
      out.generators.push_back(parse_poly(expr, ring));
    } catch (const Error& e) {
      throw e.with_line(ln);
    }
  }
  return out;
}

IdealText load_ideal_file(const std::filesystem::path& path, const MonomialOrder& order) {
  return parse_ideal_text(read_text_file(path), order);
}

}  // namespace mps
