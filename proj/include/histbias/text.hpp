#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace histbias::text {

/// Length in bytes of the UTF-8 sequence starting with `lead` (1 for invalid lead bytes).
std::size_t utf8_length(unsigned char lead) noexcept;

/// Splits a string into UTF-8 code point substrings.
std::vector<std::string> utf8_chars(std::string_view s);

std::size_t utf8_count(std::string_view s) noexcept;

/// ASCII and Latin-1 supplement lowercasing; other bytes pass through.
std::string to_lower(std::string_view s);

bool is_space(char c) noexcept;

std::string_view trim(std::string_view s) noexcept;

std::vector<std::string> split_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with_upper(std::string_view word) noexcept;

/// True for ASCII punctuation and the typographic quotes, dashes and
/// ellipsis found in OCR output. `cp` is one UTF-8 code point.
bool is_punct(std::string_view cp) noexcept;

std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

/// Lines without trailing '\r'. Keeps empty lines so callers can report line numbers.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

/// RFC 4180 records; quoted fields may hold separators, doubled quotes and newlines.
/// Throws ParseError on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::string_view data);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// FNV-1a, 64-bit.
std::uint64_t fnv1a(std::string_view data) noexcept;

}  // namespace histbias::text
