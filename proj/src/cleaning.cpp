#include "cleaning.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include "errors.hpp"
#include "text_util.hpp"

namespace gmine {

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::Noise: return "Noise";
    case RejectReason::TooLong: return "TooLong";
    case RejectReason::TooShort: return "TooShort";
    case RejectReason::NonEnglish: return "NonEnglish";
    case RejectReason::Malformed: return "Malformed";
  }
  return "?";
}

namespace {

std::optional<std::vector<uint32_t>> decode_utf8(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      cps.push_back(c);
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return std::nullopt;
    }
    if (i + len > s.size()) return std::nullopt;
    for (size_t k = 1; k < len; ++k) {
      unsigned char cc = s[i + k];
      if ((cc & 0xC0) != 0x80) return std::nullopt;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF))
      return std::nullopt;
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

void encode_utf8(uint32_t cp, std::string &out) {
  if (cp < 0x80) {
    out.push_back((char)cp);
  } else if (cp < 0x800) {
    out.push_back((char)(0xC0 | (cp >> 6)));
    out.push_back((char)(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back((char)(0xE0 | (cp >> 12)));
    out.push_back((char)(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back((char)(0x80 | (cp & 0x3F)));
  } else {
    out.push_back((char)(0xF0 | (cp >> 18)));
    out.push_back((char)(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back((char)(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back((char)(0x80 | (cp & 0x3F)));
  }
}

// UTF-8 bytes that were once decoded as Latin-1 leave a text whose code
// points all fit in one byte and whose byte sequence is again valid UTF-8.
// Undoing the confusion is re-reading those bytes as UTF-8.
std::string repair_mojibake(const std::string &s) {
  auto cps = decode_utf8(s);
  if (!cps) return s;
  bool any_high = false;
  for (uint32_t cp : *cps) {
    if (cp > 0xFF) return s;
    if (cp >= 0x80) any_high = true;
  }
  if (!any_high) return s;
  std::string bytes;
  bytes.reserve(cps->size());
  for (uint32_t cp : *cps) bytes.push_back((char)cp);
  if (!valid_utf8(bytes)) return s;
  return bytes;
}

const std::unordered_map<std::string, uint32_t> &named_entities() {
  static const std::unordered_map<std::string, uint32_t> table = {
      {"amp", '&'},      {"lt", '<'},       {"gt", '>'},
      {"quot", '"'},     {"apos", '\''},    {"nbsp", 0xA0},
      {"copy", 0xA9},    {"reg", 0xAE},     {"deg", 0xB0},
      {"middot", 0xB7},  {"laquo", 0xAB},   {"raquo", 0xBB},
      {"pound", 0xA3},   {"cent", 0xA2},    {"sect", 0xA7},
      {"para", 0xB6},    {"times", 0xD7},   {"divide", 0xF7},
      {"szlig", 0xDF},   {"agrave", 0xE0},  {"aacute", 0xE1},
      {"acirc", 0xE2},   {"atilde", 0xE3},  {"auml", 0xE4},
      {"ccedil", 0xE7},  {"egrave", 0xE8},  {"eacute", 0xE9},
      {"ecirc", 0xEA},   {"euml", 0xEB},    {"igrave", 0xEC},
      {"iacute", 0xED},  {"iuml", 0xEF},    {"ntilde", 0xF1},
      {"ograve", 0xF2},  {"oacute", 0xF3},  {"ocirc", 0xF4},
      {"otilde", 0xF5},  {"ouml", 0xF6},    {"ugrave", 0xF9},
      {"uacute", 0xFA},  {"ucirc", 0xFB},   {"uuml", 0xFC},
      {"Agrave", 0xC0},  {"Aacute", 0xC1},  {"Atilde", 0xC3},
      {"Auml", 0xC4},    {"Ccedil", 0xC7},  {"Egrave", 0xC8},
      {"Eacute", 0xC9},  {"Ntilde", 0xD1},  {"Ouml", 0xD6},
      {"Uuml", 0xDC},    {"euro", 0x20AC},  {"trade", 0x2122},
      {"hellip", 0x2026},{"mdash", 0x2014}, {"ndash", 0x2013},
      {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C},
      {"rdquo", 0x201D}, {"bull", 0x2022},  {"dagger", 0x2020},
  };
  return table;
}

std::string decode_entities(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    size_t semi = s.find(';', i + 1);
    if (semi == std::string::npos || semi == i + 1 || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string name = s.substr(i + 1, semi - i - 1);
    uint32_t cp = 0;
    bool ok = false;
    if (name.size() > 1 && name[0] == '#') {
      size_t pos = 1;
      int base = 10;
      if (name[1] == 'x' || name[1] == 'X') {
        base = 16;
        pos = 2;
      }
      if (pos < name.size()) {
        ok = true;
        for (size_t k = pos; k < name.size() && ok; ++k) {
          char c = name[k];
          int digit;
          if (is_ascii_digit(c)) digit = c - '0';
          else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
          else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
          else { ok = false; break; }
          if (digit >= base) { ok = false; break; }
          cp = cp * base + digit;
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
      }
    } else {
      auto it = named_entities().find(name);
      if (it != named_entities().end()) {
        cp = it->second;
        ok = true;
      }
    }
    if (!ok) {
      out.push_back(s[i++]);
      continue;
    }
    encode_utf8(cp, out);
    i = semi + 1;
  }
  return out;
}

std::string strip_controls(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if ((c < 0x20 && c != '\t') || c == 0x7F) continue;
    out.push_back((char)c);
  }
  return out;
}

std::string collapse_whitespace(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (unsigned char c : s) {
    if (c == ' ' || c == '\t') {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back((char)c);
  }
  return out;
}

}  // namespace

std::string fix_text(std::string_view input) {
  std::string cur(input);
  // Each stage can expose work for an earlier one (entity decoding can emit
  // mojibake bytes), so iterate the whole pipeline to a fixed point.
  for (int round = 0; round < 8; ++round) {
    std::string next = repair_mojibake(cur);
    next = decode_entities(next);
    next = strip_controls(next);
    next = collapse_whitespace(next);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

namespace {

bool has_url(std::string_view s) {
  std::string lower = to_lower(s);
  for (std::string_view scheme : {"http://", "https://", "ftp://"})
    if (lower.find(scheme) != std::string::npos) return true;
  size_t pos = lower.find("www.");
  if (pos != std::string::npos && pos + 4 < lower.size() &&
      is_ascii_alpha(lower[pos + 4]))
    return true;
  return false;
}

bool has_email(std::string_view s) {
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] != '@') continue;
    if (!is_ascii_alpha(s[i - 1]) && !is_ascii_digit(s[i - 1])) continue;
    // Need "name@host.tld": a dot after the @ with letters around it.
    size_t j = i + 1;
    bool host = false;
    while (j < s.size() && (is_ascii_alpha(s[j]) || is_ascii_digit(s[j]) ||
                            s[j] == '-' || s[j] == '.')) {
      if (s[j] == '.' && j > i + 1 && j + 1 < s.size() &&
          is_ascii_alpha(s[j + 1]))
        host = true;
      ++j;
    }
    if (host) return true;
  }
  return false;
}

bool code_like(std::string_view tok) {
  for (char c : tok)
    if (c == '{' || c == '}' || c == ';' || c == '=') return true;
  return false;
}

}  // namespace

CleaningVerdict clean_sentence(std::string_view s, const CleaningLimits &limits) {
  if (!valid_utf8(s)) return CleaningVerdict::reject(RejectReason::Malformed);
  std::string text = trim(s);
  if (text.size() < limits.min_chars)
    return CleaningVerdict::reject(RejectReason::TooShort);
  if (text.size() > limits.max_chars)
    return CleaningVerdict::reject(RejectReason::TooLong);

  std::vector<std::string_view> toks = whitespace_tokens(text);
  if (toks.size() < limits.min_toks)
    return CleaningVerdict::reject(RejectReason::TooShort);
  if (toks.size() > limits.max_toks)
    return CleaningVerdict::reject(RejectReason::TooLong);

  if (has_url(text) || has_email(text))
    return CleaningVerdict::reject(RejectReason::Noise);

  size_t nonspace = 0, nonalpha = 0;
  for (unsigned char c : text) {
    if (c == ' ' || c == '\t') continue;
    ++nonspace;
    if (!is_ascii_alpha((char)c)) ++nonalpha;
  }
  if (nonspace > 0 &&
      (double)nonalpha / (double)nonspace >= limits.max_nonalpha_ratio)
    return CleaningVerdict::reject(RejectReason::Noise);

  size_t run = 0;
  for (std::string_view tok : toks) {
    run = code_like(tok) ? run + 1 : 0;
    if (run >= limits.code_run)
      return CleaningVerdict::reject(RejectReason::Noise);
  }
  return CleaningVerdict::ok();
}

namespace {

// Space-padded word trigrams over ASCII-lowercased text; non-letter bytes
// split words, bytes above 0x7F are kept so accented text still profiles.
void word_trigrams(std::string_view text,
                   const std::function<void(std::string_view)> &emit,
                   std::string &scratch) {
  scratch.clear();
  scratch.push_back(' ');
  auto flush_word = [&]() {
    if (scratch.size() < 2) return;
    scratch.push_back(' ');
    if (scratch.size() >= 3)
      for (size_t i = 0; i + 3 <= scratch.size(); ++i)
        emit(std::string_view(scratch).substr(i, 3));
    scratch.clear();
    scratch.push_back(' ');
  };
  for (unsigned char c : text) {
    if (is_ascii_alpha((char)c) || c >= 0x80) {
      scratch.push_back(ascii_lower((char)c));
    } else {
      flush_word();
    }
  }
  flush_word();
}

std::vector<std::string> ranked_trigrams(std::string_view text,
                                         size_t max_trigrams) {
  std::unordered_map<std::string, size_t> counts;
  std::string scratch;
  word_trigrams(text, [&](std::string_view tg) { ++counts[std::string(tg)]; },
                scratch);
  std::vector<std::pair<std::string, size_t>> items(counts.begin(),
                                                    counts.end());
  std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > max_trigrams) items.resize(max_trigrams);
  std::vector<std::string> out;
  out.reserve(items.size());
  for (auto &it : items) out.push_back(std::move(it.first));
  return out;
}

}  // namespace

LanguageProfile build_profile(const std::string &lang, std::string_view text,
                              size_t max_trigrams) {
  LanguageProfile p;
  p.lang = lang;
  p.trigrams = ranked_trigrams(text, max_trigrams);
  for (size_t i = 0; i < p.trigrams.size(); ++i)
    p.ranks[p.trigrams[i]] = (int)i;
  return p;
}

LanguageProfile load_profile(const std::string &path, const std::string &lang) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open profile " + path);
  LanguageProfile p;
  p.lang = lang;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(path, line_no, "expected <trigram>\\t<rank>");
    std::string tg = line.substr(0, tab);
    int rank = std::stoi(line.substr(tab + 1));
    if (rank != (int)p.trigrams.size())
      throw ParseError(path, line_no, "ranks must be 0..n-1 in order");
    p.trigrams.push_back(tg);
    p.ranks[tg] = rank;
  }
  return p;
}

void save_profile(const LanguageProfile &profile, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write profile " + path);
  for (size_t i = 0; i < profile.trigrams.size(); ++i)
    out << profile.trigrams[i] << '\t' << i << '\n';
}

std::vector<LanguageProfile> load_profiles(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("profile dir missing: " + dir);
  std::vector<std::string> langs;
  for (const auto &e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".txt") langs.push_back(e.path().stem());
  }
  std::sort(langs.begin(), langs.end());
  std::vector<LanguageProfile> out;
  for (const std::string &lang : langs)
    out.push_back(load_profile(dir + "/" + lang + ".txt", lang));
  return out;
}

LanguageGuess detect_language(std::string_view s,
                              const std::vector<LanguageProfile> &profiles) {
  if (trim(s).empty()) throw EmptyInput("detect_language");
  if (profiles.empty()) throw ConfigError("no language profiles loaded");

  std::vector<std::string> doc = ranked_trigrams(s, 300);

  // Trigrams unknown to every profile carry no language signal (they come
  // from rare content words); the out-of-place distance runs over the rest.
  std::vector<size_t> informative;
  for (size_t i = 0; i < doc.size(); ++i)
    for (const LanguageProfile &p : profiles)
      if (p.ranks.count(doc[i])) {
        informative.push_back(i);
        break;
      }

  LanguageGuess best;
  best.confidence = -1.0;
  for (const LanguageProfile &p : profiles) {
    double dist = 0.0;
    double max_penalty = (double)p.size();
    for (size_t i : informative) {
      auto it = p.ranks.find(doc[i]);
      if (it == p.ranks.end())
        dist += max_penalty;
      else
        dist += std::abs((double)i - (double)it->second);
    }
    double conf;
    if (informative.empty())
      conf = 0.0;  // nothing recognizable: reject downstream
    else
      conf = 1.0 - dist / ((double)informative.size() * max_penalty);
    if (conf > best.confidence ||
        (conf == best.confidence && p.lang < best.lang)) {
      best.lang = p.lang;
      best.confidence = conf;
    }
  }
  return best;
}

}  // namespace gmine
