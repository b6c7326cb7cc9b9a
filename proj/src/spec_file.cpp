#include "funceq/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "funceq/error.hpp"

namespace funceq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  while (true) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(item) + "' in " + std::string(key));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  std::optional<std::vector<double>> p, q;
  Bracket bracket;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "P") {
      p = parse_list(key, value);
    } else if (key == "Q") {
      q = parse_list(key, value);
    } else if (key == "bracket") {
      const auto b = parse_list(key, value);
      if (b.size() != 2) throw Error(ErrorCode::ParseError, "bracket needs two numbers");
      bracket = {b[0], b[1]};
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!p || !q) throw Error(ErrorCode::ParseError, "spec needs both P and Q");
  return {Polynomial(*p), Polynomial(*q), bracket};
}

SpecFile read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace funceq
