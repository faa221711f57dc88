#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmine {

enum class RejectReason { Noise, TooLong, TooShort, NonEnglish, Malformed };

std::string_view reject_reason_name(RejectReason r);

struct CleaningVerdict {
  bool keep = true;
  std::optional<RejectReason> reason;

  static CleaningVerdict ok() { return {}; }
  static CleaningVerdict reject(RejectReason r) { return {false, r}; }
};

struct CleaningLimits {
  size_t min_chars = 10;
  size_t max_chars = 500;
  size_t min_toks = 3;
  size_t max_toks = 100;
  double max_nonalpha_ratio = 0.30;  // over non-whitespace characters
  size_t code_run = 3;               // consecutive code-like tokens
};

// Encoding repair + entity decoding + control stripping + whitespace
// collapsing, in that order, iterated to a fixed point so the whole
// transform is idempotent. Total function over valid UTF-8.
std::string fix_text(std::string_view s);

CleaningVerdict clean_sentence(std::string_view s, const CleaningLimits &limits);

// Rank-order character-trigram profile (top `max_trigrams` trigrams of
// space-padded words, ranked by frequency).
struct LanguageProfile {
  std::string lang;
  std::vector<std::string> trigrams;        // rank order
  std::map<std::string, int> ranks;         // trigram -> rank

  size_t size() const { return trigrams.size(); }
};

LanguageProfile build_profile(const std::string &lang, std::string_view text,
                              size_t max_trigrams = 300);
LanguageProfile load_profile(const std::string &path, const std::string &lang);
void save_profile(const LanguageProfile &profile, const std::string &path);
// Loads every "<lang>.txt" in dir, sorted by language code.
std::vector<LanguageProfile> load_profiles(const std::string &dir);

struct LanguageGuess {
  std::string lang;
  double confidence = 0.0;  // 1 - normalized out-of-place distance
};

LanguageGuess detect_language(std::string_view s,
                              const std::vector<LanguageProfile> &profiles);

}  // namespace gmine
