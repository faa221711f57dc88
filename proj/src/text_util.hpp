#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace gmine {

// Transparent hashing so unordered containers accept string_view lookups.
struct StringHash {
  using is_transparent = void;
  size_t operator()(std::string_view sv) const noexcept {
    return std::hash<std::string_view>{}(sv);
  }
};
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_alpha(char c) { return is_ascii_upper(c) || is_ascii_lower(c); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline char ascii_lower(char c) { return is_ascii_upper(c) ? char(c - 'A' + 'a') : c; }
inline char ascii_upper(char c) { return is_ascii_lower(c) ? char(c - 'a' + 'A') : c; }

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string_view> split_views(std::string_view s, char sep);

// Whitespace-delimited tokens (the tokenizer the cleaning limits refer to).
std::vector<std::string_view> whitespace_tokens(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
bool contains_ci(std::string_view haystack, std::string_view lowercase_needle);

// Shared normalization key for score-table joins and KB dedup:
// ASCII lowercase, trailing periods stripped, whitespace runs collapsed.
std::string normalize_sentence_key(std::string_view s);

bool valid_utf8(std::string_view s);

// FNV-1a, used wherever hashing must be stable across platforms and runs.
uint64_t fnv1a64(std::string_view s);

// JSON string literal including quotes, UTF-8 passthrough.
std::string json_quote(std::string_view s);

// Fixed 6-decimal rendering for scores ("0.350000").
std::string format_score(double score);
// Round to the same 6-decimal grid the serializer prints.
double quantize_score(double score);

}  // namespace gmine
