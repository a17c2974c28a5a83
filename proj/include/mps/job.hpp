#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mps/polynomial.hpp"

namespace mps {

struct JobOptions {
  std::string order = "degrevlex";
  unsigned k = 2;
  NameStyle style = NameStyle::Primes;
};

/// A map germ f: (C^n,0) -> (C^p,0) as written in a job file. When `params`
/// is nonempty the job describes the unfolding (s,x) -> (s, f_s(x)); the
/// identity components for the parameters are implicit.
struct JobSpec {
  std::vector<std::string> source_vars;
  std::vector<std::string> params;
  std::vector<std::string> components;
  JobOptions options;
};

/// Line-oriented `key = value` format with `#` comments. Keys: `vars`,
/// `params` (optional), `f1` .. `fp`, `order` (default degrevlex), `k`, `style`.
/// Errors: MissingKey, DuplicateKey, ParseError (all with a line number).
JobSpec parse_job(std::string_view text);
JobSpec load_job(const std::filesystem::path& path);

/// Contents of an ideal file: a `vars = ...` line followed by one generator
/// per nonempty, non-comment line.
struct IdealText {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

IdealText parse_ideal_text(std::string_view text, const MonomialOrder& order);
IdealText load_ideal_file(const std::filesystem::path& path, const MonomialOrder& order);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace mps
