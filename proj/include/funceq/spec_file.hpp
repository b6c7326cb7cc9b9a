#pragma once

#include <filesystem>
#include <string_view>

#include "funceq/polynomial.hpp"
#include "funceq/problem.hpp"

namespace funceq {

/// Contents of a `key = value` spec file:
///
///   # 2,3-trees
///   P = 0,1
///   Q = 0,0,1,1
///   bracket = 0.1,0.9
///
/// Coefficients are listed lowest degree first; `bracket` is optional.
struct SpecFile {
  Polynomial P;
  Polynomial Q;
  Bracket bracket;
};

SpecFile parse_spec(std::string_view text);
SpecFile read_spec_file(const std::filesystem::path& path);

}  // namespace funceq
