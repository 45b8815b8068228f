#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgpc::text {

std::string_view trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Non-empty lines with '#' comments stripped, paired with 1-based line numbers.
struct Line {
  std::size_t number;
  std::string text;
};
std::vector<Line> content_lines(std::string_view text);

/// Value of `key=value` among tokens, if present.
std::optional<std::string> keyed(const std::vector<std::string>& tokens, std::string_view key);

long long parse_int(std::string_view s, std::size_t line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Error(Parse) with a "line N: " prefix.
[[noreturn]] void fail(std::size_t line, const std::string& message);

}  // namespace bgpc::text
