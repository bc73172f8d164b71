#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "refsum/stoplist_data.hpp"
#include "refsum/util.hpp"

namespace refsum {

/// Slot marker used by template records; never produced by tokenize().
inline constexpr std::string_view kSlotMarker = "<KW>";

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Lowercased tokens plus their character spans into the original text.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::vector<Span> spans;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

namespace detail {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_word_char(char c) {
  // Bytes >= 0x80 (UTF-8 continuation/multibyte) count as word characters.
  return std::isalnum(static_cast<unsigned char>(c)) != 0 ||
         static_cast<unsigned char>(c) >= 0x80;
}

}  // namespace detail

/// True for tokens carrying no lexical content (pure punctuation).
inline bool is_punct_token(std::string_view token) {
  for (char c : token) {
    if (detail::is_word_char(c)) return false;
  }
  return !token.empty();
}

/// Lowercase, whitespace-split, punctuation split into single-char tokens.
/// Hyphens and apostrophes stay inside a word when flanked by word chars
/// ("quick-sort", "don't").
inline TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::size_t word_start = std::string::npos;
  auto flush_word = [&](std::size_t end) {
    if (word_start == std::string::npos) return;
    out.tokens.push_back(lower_ascii(text.substr(word_start, end - word_start)));
    out.spans.push_back({word_start, end});
    word_start = std::string::npos;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (detail::is_space(c)) {
      flush_word(i);
      continue;
    }
    if (detail::is_word_char(c)) {
      if (word_start == std::string::npos) word_start = i;
      continue;
    }
    bool intra_word =
        (c == '-' || c == '\'') && word_start != std::string::npos &&
        i > 0 && detail::is_word_char(text[i - 1]) &&
        i + 1 < text.size() && detail::is_word_char(text[i + 1]);
    if (intra_word) continue;
    flush_word(i);
    out.tokens.emplace_back(1, c);
    out.spans.push_back({i, i + 1});
  }
  flush_word(text.size());
  return out;
}

/// Split after '.', '!' or '?' runs followed by whitespace or end of text.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i;
    while (j + 1 < text.size() &&
           (text[j + 1] == '.' || text[j + 1] == '!' || text[j + 1] == '?'))
      ++j;
    if (j + 1 == text.size() || detail::is_space(text[j + 1])) {
      emit(j + 1);
      i = j;
    } else {
      i = j;
    }
  }
  emit(text.size());
  return out;
}

/// Case-insensitive stopword set. Entries are stored lowercase.
class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::vector<std::string> words) {
    for (auto& w : words) add(w);
  }

  void add(std::string_view word) {
    auto entry = lower_ascii(trim(word));
    if (!entry.empty()) words_.insert(std::move(entry));
  }

  bool contains(std::string_view word) const {
    if (word.empty()) return false;
    for (char c : word) {
      if (c >= 'A' && c <= 'Z') return words_.count(lower_ascii(word)) > 0;
    }
    return words_.count(std::string(word)) > 0;
  }

  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Bundled ~570-word English stoplist.
inline const Stoplist& default_stoplist() {
  static const Stoplist list = [] {
    Stoplist l;
    for (std::string_view w : detail::kDefaultStopwords) l.add(w);
    return l;
  }();
  return list;
}

/// One word per line; '#' starts a comment line.
inline Stoplist load_stoplist(const std::string& path) {
  Stoplist list;
  for (const auto& line : read_lines(path)) {
    auto entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    list.add(entry);
  }
  return list;
}

}  // namespace refsum
