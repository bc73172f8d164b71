#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "refsum/textkit.hpp"
#include "refsum/util.hpp"

namespace refsum {

struct RakeParams {
  int max_phrase_len = 3;
  // Keep phrases scoring at or above the (1 - top_fraction) quantile.
  double top_fraction = 1.0 / 3.0;
};

struct KeywordPhrase {
  std::vector<std::string> words;
  double score = 0.0;
  Span span;  // character range of this occurrence in the source text

  std::string text() const { return join(words, " "); }
};

/// A summary with its keyword phrases cut out. Each removed occurrence is
/// one kSlotMarker token; `keywords` lists the occurrences in order, so
/// re-inserting them left to right reconstructs the tokenized summary.
struct TemplateRecord {
  std::vector<std::string> template_tokens;
  std::vector<KeywordPhrase> keywords;
  std::string source_summary;
};

namespace detail {

struct PhraseOccurrence {
  std::size_t token_begin = 0;  // index into the token sequence
  std::size_t length = 0;
  std::string text;
};

// Maximal runs of non-stopword, non-punctuation tokens, truncated at
// max_phrase_len. Tokens beyond the truncation point stay non-keyword text.
inline std::vector<PhraseOccurrence> candidate_occurrences(
    const TokenSequence& toks, const Stoplist& stoplist,
    const RakeParams& params) {
  std::vector<PhraseOccurrence> out;
  std::size_t i = 0;
  const std::size_t n = toks.size();
  const auto limit = static_cast<std::size_t>(std::max(params.max_phrase_len, 1));
  while (i < n) {
    const std::string& t = toks.tokens[i];
    if (is_punct_token(t) || stoplist.contains(t)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_punct_token(toks.tokens[j]) &&
           !stoplist.contains(toks.tokens[j]))
      ++j;
    PhraseOccurrence occ;
    occ.token_begin = i;
    occ.length = std::min(j - i, limit);
    std::vector<std::string> words(toks.tokens.begin() + i,
                                   toks.tokens.begin() + i + occ.length);
    occ.text = join(words, " ");
    out.push_back(std::move(occ));
    i = j;
  }
  return out;
}

struct ScoredPhrases {
  std::vector<PhraseOccurrence> occurrences;
  std::unordered_map<std::string, double> scores;     // by phrase text
  std::unordered_map<std::string, bool> selected;     // passed the threshold
  std::vector<std::string> order;                     // unique, first-seen
};

inline ScoredPhrases score_phrases(const TokenSequence& toks,
                                   const Stoplist& stoplist,
                                   const RakeParams& params) {
  ScoredPhrases result;
  result.occurrences = candidate_occurrences(toks, stoplist, params);

  // deg(w) accumulates the lengths of the phrases containing w, so the
  // per-word score deg(w)/freq(w) is always >= 1.
  std::unordered_map<std::string, double> freq, deg;
  for (const auto& occ : result.occurrences) {
    for (std::size_t k = 0; k < occ.length; ++k) {
      const std::string& w = toks.tokens[occ.token_begin + k];
      freq[w] += 1.0;
      deg[w] += static_cast<double>(occ.length);
    }
  }
  for (const auto& occ : result.occurrences) {
    if (result.scores.count(occ.text)) continue;
    double s = 0.0;
    for (std::size_t k = 0; k < occ.length; ++k) {
      const std::string& w = toks.tokens[occ.token_begin + k];
      s += deg[w] / freq[w];
    }
    result.scores[occ.text] = s;
    result.order.push_back(occ.text);
  }

  if (result.order.empty()) return result;
  std::vector<double> ascending;
  ascending.reserve(result.order.size());
  for (const auto& text : result.order) ascending.push_back(result.scores[text]);
  std::sort(ascending.begin(), ascending.end());
  double fraction = std::clamp(params.top_fraction, 0.0, 1.0);
  auto idx = static_cast<std::size_t>(
      (1.0 - fraction) * static_cast<double>(ascending.size()));
  idx = std::min(idx, ascending.size() - 1);
  const double threshold = ascending[idx];
  for (const auto& text : result.order)
    result.selected[text] = result.scores[text] >= threshold;
  return result;
}

}  // namespace detail

/// RAKE keyword extraction. Returns one entry per distinct phrase text
/// (span of its first occurrence), sorted by score descending, then by
/// first appearance.
inline std::vector<KeywordPhrase> extract_keywords(std::string_view text,
                                                   const Stoplist& stoplist,
                                                   const RakeParams& params = {}) {
  if (params.max_phrase_len < 1) throw Error("max_phrase_len must be >= 1");
  TokenSequence toks = tokenize(text);
  auto scored = detail::score_phrases(toks, stoplist, params);

  std::vector<KeywordPhrase> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& occ : scored.occurrences) {
    if (!scored.selected[occ.text] || seen[occ.text]) continue;
    seen[occ.text] = true;
    KeywordPhrase p;
    p.words.assign(toks.tokens.begin() + occ.token_begin,
                   toks.tokens.begin() + occ.token_begin + occ.length);
    p.score = scored.scores.at(occ.text);
    p.span = {toks.spans[occ.token_begin].begin,
              toks.spans[occ.token_begin + occ.length - 1].end};
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const KeywordPhrase& a, const KeywordPhrase& b) {
                     return a.score > b.score;
                   });
  return out;
}

/// Convert a summary into a template: every occurrence of every selected
/// keyword phrase becomes one slot marker; keywords are listed in order of
/// appearance, one entry per occurrence.
inline TemplateRecord extract_template(std::string_view summary,
                                       const Stoplist& stoplist,
                                       const RakeParams& params = {}) {
  if (params.max_phrase_len < 1) throw Error("max_phrase_len must be >= 1");
  TemplateRecord record;
  record.source_summary = std::string(summary);
  TokenSequence toks = tokenize(summary);
  auto scored = detail::score_phrases(toks, stoplist, params);

  std::size_t next = 0;  // next token index to copy
  for (const auto& occ : scored.occurrences) {
    if (!scored.selected[occ.text]) continue;
    for (; next < occ.token_begin; ++next)
      record.template_tokens.push_back(toks.tokens[next]);
    record.template_tokens.emplace_back(kSlotMarker);
    KeywordPhrase p;
    p.words.assign(toks.tokens.begin() + occ.token_begin,
                   toks.tokens.begin() + occ.token_begin + occ.length);
    p.score = scored.scores.at(occ.text);
    p.span = {toks.spans[occ.token_begin].begin,
              toks.spans[occ.token_begin + occ.length - 1].end};
    record.keywords.push_back(std::move(p));
    next = occ.token_begin + occ.length;
  }
  for (; next < toks.size(); ++next)
    record.template_tokens.push_back(toks.tokens[next]);
  return record;
}

/// Re-insert a record's keywords into its markers (test/debug helper).
inline std::vector<std::string> reconstruct_tokens(const TemplateRecord& record) {
  std::vector<std::string> out;
  std::size_t next_kw = 0;
  for (const auto& tok : record.template_tokens) {
    if (tok == kSlotMarker && next_kw < record.keywords.size()) {
      const auto& words = record.keywords[next_kw++].words;
      out.insert(out.end(), words.begin(), words.end());
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace refsum
