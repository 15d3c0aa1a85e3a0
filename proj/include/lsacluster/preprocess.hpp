/*
 * Copyright 2026 The lsacluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lsacluster/default_lists.hpp"
#include "lsacluster/error.hpp"
#include "lsacluster/utf8.hpp"

namespace lsacluster {

struct RawDocument {
  std::string id;
  std::string category;
  std::string text;
};

struct Token {
  std::string surface;
  std::string stem;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;

  /// Token surfaces joined by single spaces.
  std::string text() const {
    std::string out;
    for (const auto& t : tokens) {
      if (!out.empty()) out.push_back(' ');
      out += t.surface;
    }
    return out;
  }
};

enum class StemmerMode { None, Light, Root };

inline std::string_view to_string(StemmerMode mode) {
  switch (mode) {
    case StemmerMode::None: return "none";
    case StemmerMode::Light: return "light";
    case StemmerMode::Root: return "root";
  }
  return "none";
}

inline StemmerMode parse_stemmer_mode(std::string_view name) {
  if (name == "none") return StemmerMode::None;
  if (name == "light") return StemmerMode::Light;
  if (name == "root") return StemmerMode::Root;
  throw Error(ErrorKind::ConfigError, "unknown stemmer '" + std::string(name) + "' (expected none|light|root)");
}

struct MarkerSet {
  std::set<char32_t> punctuation;
  std::set<std::string> functional_words;
  std::size_t min_sentence_tokens = 4;
};

using StopList = std::unordered_set<std::string>;

namespace detail {

inline bool is_arabic_letter(char32_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A) ||
         (c >= 0x066E && c <= 0x066F) || (c >= 0x0671 && c <= 0x06D3) || c == 0x06D5 ||
         (c >= 0x06EE && c <= 0x06EF) || (c >= 0x06FA && c <= 0x06FC) || c == 0x06FF;
}

// Combining marks and tatweel; they continue a word but never start one.
inline bool is_arabic_mark(char32_t c) {
  return c == 0x0640 || (c >= 0x0610 && c <= 0x061A) || (c >= 0x064B && c <= 0x065F) ||
         c == 0x0670 || (c >= 0x06D6 && c <= 0x06DC) || (c >= 0x06DF && c <= 0x06E8) ||
         (c >= 0x06EA && c <= 0x06ED);
}

inline bool is_word_char(char32_t c) { return is_arabic_letter(c) || is_arabic_mark(c); }

// Scans text into letter-run tokens. on_token(surface) is called per token and
// on_punct(cp) for every non-word character, in text order.
template <typename OnToken, typename OnOther>
void scan(std::u32string_view text, OnToken&& on_token, OnOther&& on_other) {
  std::u32string current;
  bool has_letter = false;
  const auto flush = [&] {
    if (has_letter) on_token(utf8::encode(current));
    current.clear();
    has_letter = false;
  };
  for (char32_t c : text) {
    if (is_word_char(c)) {
      current.push_back(c);
      has_letter = has_letter || is_arabic_letter(c);
    } else {
      flush();
      on_other(c);
    }
  }
  flush();
}

inline bool starts_with(std::u32string_view w, std::u32string_view p) {
  return w.size() >= p.size() && w.substr(0, p.size()) == p;
}

inline bool ends_with(std::u32string_view w, std::u32string_view s) {
  return w.size() >= s.size() && w.substr(w.size() - s.size()) == s;
}

inline std::string trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t b = 0, e = s.size();
  while (b < e && ws(s[b])) ++b;
  while (e > b && ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Strips tashkeel (U+064B..U+0652) and tatweel, folds alef variants to bare
/// alef, final alef maksura to ya, and ta marbuta to ha.
inline std::string normalize(std::string_view text) {
  std::u32string out;
  for (char32_t c : utf8::decode(text)) {
    if (c == 0x0640 || (c >= 0x064B && c <= 0x0652)) continue;
    switch (c) {
      case U'أ':
      case U'إ':
      case U'آ': out.push_back(U'ا'); break;
      case U'ى': out.push_back(U'ي'); break;
      case U'ة': out.push_back(U'ه'); break;
      default: out.push_back(c);
    }
  }
  return utf8::encode(out);
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  detail::scan(
      utf8::decode(text), [&](std::string surface) { tokens.push_back({surface, surface}); },
      [](char32_t) {});
  return tokens;
}

inline std::vector<Token> remove_stopwords(std::vector<Token> tokens, const StopList& stoplist) {
  std::erase_if(tokens, [&](const Token& t) { return stoplist.contains(t.surface); });
  return tokens;
}

namespace affixes {

inline constexpr std::array<std::u32string_view, 7> kLightPrefixes = {
    U"وال", U"بال", U"كال", U"فال", U"ال", U"لل", U"و"};

inline constexpr std::array<std::u32string_view, 10> kLightSuffixes = {
    U"ها", U"ان", U"ات", U"ون", U"ين", U"يه", U"ية", U"ه", U"ة", U"ي"};

// Root extraction: article/antefix prefixes come off first, conjugation
// prefixes only after a pattern match on the residue has failed.
inline constexpr std::array<std::u32string_view, 6> kRootArticlePrefixes = {
    U"وال", U"بال", U"كال", U"فال", U"لل", U"ال"};

inline constexpr std::array<std::u32string_view, 7> kRootConjugationPrefixes = {
    U"است", U"سي", U"لي", U"و", U"ي", U"ت", U"ن"};

// Light suffixes plus conjugation/pronoun suffixes, longest first.
inline constexpr std::array<std::u32string_view, 16> kRootSuffixes = {
    U"ها", U"ان", U"ات", U"ون", U"ين", U"يه", U"ية", U"هم", U"كم", U"هن", U"تم", U"نا", U"وا",
    U"ه", U"ة", U"ي"};

// ف ع ل mark the three root positions; every other letter must match exactly.
// Within one length the first matching pattern wins.
inline constexpr std::array<std::u32string_view, 28> kRootPatterns = {
    U"فعل",
    U"فاعل", U"فعال", U"فعيل", U"فعول", U"مفعل", U"افعل", U"تفعل", U"يفعل", U"نفعل",
    U"مفعول", U"افتعل", U"انفعل", U"تفعيل", U"مفعله", U"مفاعل", U"تفاعل", U"مفتعل", U"متفعل",
    U"فواعل", U"افعال",
    U"استفعل", U"مستفعل", U"افتعال", U"انفعال", U"متفاعل", U"مفاعله",
    U"استفعال"};

}  // namespace affixes

/// Light (stem-level) stemming: at most one prefix, then suffixes repeatedly.
inline std::string light_stem(std::string_view token) {
  const std::u32string input = utf8::decode(token);
  std::u32string_view w = input;
  for (auto p : affixes::kLightPrefixes) {
    if (detail::starts_with(w, p) && w.size() - p.size() >= 2) {
      w.remove_prefix(p.size());
      break;
    }
  }
  bool stripped = true;
  while (stripped && w.size() >= 3) {
    stripped = false;
    for (auto s : affixes::kLightSuffixes) {
      if (detail::ends_with(w, s) && w.size() - s.size() >= 2) {
        w.remove_suffix(s.size());
        stripped = true;
        break;
      }
    }
  }
  if (w.size() < 2) return std::string(token);
  return utf8::encode(w);
}

namespace detail {

inline std::optional<std::u32string> match_root_pattern(std::u32string_view w) {
  for (auto pattern : affixes::kRootPatterns) {
    if (pattern.size() != w.size()) continue;
    std::u32string root;
    bool ok = true;
    for (std::size_t i = 0; i < pattern.size() && ok; ++i) {
      const char32_t pc = pattern[i];
      if (pc == U'ف' || pc == U'ع' || pc == U'ل') {
        root.push_back(w[i]);
      } else {
        ok = pc == w[i];
      }
    }
    if (ok && root.size() == 3) return root;
  }
  return std::nullopt;
}

}  // namespace detail

/// Root-level stemming with a fixed affix set and tri-literal pattern table.
inline std::string root_stem(std::string_view token) {
  const std::u32string input = utf8::decode(token);
  if (input.size() <= 3) return std::string(token);
  std::u32string_view w = input;

  for (auto p : affixes::kRootArticlePrefixes) {
    if (detail::starts_with(w, p) && w.size() - p.size() >= 3) {
      w.remove_prefix(p.size());
      break;
    }
  }
  bool stripped = true;
  while (stripped && w.size() > 3) {
    stripped = false;
    for (auto s : affixes::kRootSuffixes) {
      if (detail::ends_with(w, s) && w.size() - s.size() >= 3) {
        w.remove_suffix(s.size());
        stripped = true;
        break;
      }
    }
  }
  if (auto root = detail::match_root_pattern(w)) return utf8::encode(*root);

  stripped = true;
  while (stripped && w.size() > 3) {
    stripped = false;
    for (auto p : affixes::kRootConjugationPrefixes) {
      if (detail::starts_with(w, p) && w.size() - p.size() >= 3) {
        w.remove_prefix(p.size());
        stripped = true;
        break;
      }
    }
    if (stripped) {
      if (auto root = detail::match_root_pattern(w)) return utf8::encode(*root);
    }
  }
  return utf8::encode(w);
}

inline std::string stem(std::string_view token, StemmerMode mode) {
  switch (mode) {
    case StemmerMode::Light: return light_stem(token);
    case StemmerMode::Root: return root_stem(token);
    case StemmerMode::None: break;
  }
  return std::string(token);
}

inline void apply_stemmer(std::vector<Token>& tokens, StemmerMode mode) {
  for (auto& t : tokens) t.stem = stem(t.surface, mode);
}

/// Stop-word removal followed by stemming; returns the stems.
inline std::vector<std::string> index_terms(const std::vector<Token>& tokens, const StopList& stoplist,
                                            StemmerMode mode) {
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stoplist.contains(t.surface)) continue;
    terms.push_back(stem(t.surface, mode));
  }
  return terms;
}

/// Splits at punctuation marks and before standalone functional words, then
/// merges short segments backwards. A short first segment absorbs its
/// successors instead.
inline std::vector<Sentence> split_sentences(const RawDocument& document, const MarkerSet& markers) {
  std::vector<std::vector<Token>> segments(1);
  const auto close = [&] {
    if (!segments.back().empty()) segments.emplace_back();
  };
  detail::scan(
      utf8::decode(document.text),
      [&](std::string surface) {
        if (markers.functional_words.contains(surface)) close();
        segments.back().push_back({surface, surface});
      },
      [&](char32_t c) {
        if (markers.punctuation.contains(c)) close();
      });
  if (segments.back().empty()) segments.pop_back();
  if (segments.empty()) {
    throw Error(ErrorKind::EmptyDocument, "document '" + document.id + "' has no tokens");
  }

  const std::size_t min_tokens = std::max<std::size_t>(1, markers.min_sentence_tokens);
  std::vector<Sentence> sentences;
  for (auto& seg : segments) {
    if (!sentences.empty() &&
        (seg.size() < min_tokens || sentences.back().tokens.size() < min_tokens)) {
      auto& dst = sentences.back().tokens;
      dst.insert(dst.end(), std::make_move_iterator(seg.begin()), std::make_move_iterator(seg.end()));
    } else {
      sentences.push_back({sentences.size(), std::move(seg)});
    }
  }
  return sentences;
}

/// Parses the one-entry-per-line list format; '#' lines and blanks skipped.
inline std::vector<std::string> parse_list(std::string_view content) {
  std::vector<std::string> entries;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = detail::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::vector<std::string> load_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open list file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string content = ss.str();
  if (!utf8::is_valid(content)) {
    throw Error(ErrorKind::ConfigError, "list file is not valid UTF-8: " + path.string());
  }
  return parse_list(content);
}

inline StopList make_stoplist(const std::vector<std::string>& entries) {
  StopList stoplist;
  for (const auto& e : entries) stoplist.insert(normalize(e));
  return stoplist;
}

inline StopList default_stoplist() { return make_stoplist(parse_list(defaults::kStopwords)); }

inline MarkerSet make_marker_set(const std::vector<std::string>& entries, std::size_t min_sentence_tokens = 4) {
  if (min_sentence_tokens < 1) throw Error(ErrorKind::ConfigError, "min_sentence_tokens must be >= 1");
  MarkerSet markers;
  markers.min_sentence_tokens = min_sentence_tokens;
  for (const auto& e : entries) {
    const std::u32string cps = utf8::decode(normalize(e));
    const bool word = !cps.empty() && std::all_of(cps.begin(), cps.end(), detail::is_word_char);
    if (word) {
      markers.functional_words.insert(utf8::encode(cps));
    } else if (cps.size() == 1) {
      markers.punctuation.insert(cps.front());
    } else {
      throw Error(ErrorKind::ConfigError, "marker entry '" + e + "' is neither a word nor a single character");
    }
  }
  if (markers.punctuation.empty() || markers.functional_words.empty()) {
    throw Error(ErrorKind::ConfigError, "marker set needs at least one punctuation mark and one functional word");
  }
  return markers;
}

inline MarkerSet default_marker_set(std::size_t min_sentence_tokens = 4) {
  return make_marker_set(parse_list(defaults::kMarkers), min_sentence_tokens);
}

}  // namespace lsacluster
