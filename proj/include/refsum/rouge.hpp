#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "refsum/textkit.hpp"

namespace refsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

namespace detail {

inline RougeScore make_rouge(double overlap, double n_cand, double n_ref) {
  RougeScore s;
  if (n_cand > 0) s.precision = overlap / n_cand;
  if (n_ref > 0) s.recall = overlap / n_ref;
  if (s.precision + s.recall > 0)
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

inline std::unordered_map<std::string, int> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace detail

/// Clipped n-gram overlap ROUGE-N.
inline RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                          int n) {
  if (n < 1) throw Error("rouge_n: n must be >= 1");
  auto cand = detail::ngram_counts(tokenize(candidate).tokens, n);
  auto ref = detail::ngram_counts(tokenize(reference).tokens, n);
  double overlap = 0, n_cand = 0, n_ref = 0;
  for (const auto& [k, c] : cand) {
    n_cand += c;
    auto it = ref.find(k);
    if (it != ref.end()) overlap += std::min(c, it->second);
  }
  for (const auto& [k, c] : ref) n_ref += c;
  return detail::make_rouge(overlap, n_cand, n_ref);
}

/// Longest common subsequence length (dynamic programming, rolling row).
inline std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b) {
  const auto& x = a.tokens;
  const auto& y = b.tokens;
  if (x.empty() || y.empty()) return 0;
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = (x[i - 1] == y[j - 1]) ? prev[j - 1] + 1
                                      : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

/// ROUGE-L over the full token sequences.
inline RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  TokenSequence cand = tokenize(candidate);
  TokenSequence ref = tokenize(reference);
  double lcs = static_cast<double>(lcs_length(cand, ref));
  return detail::make_rouge(lcs, static_cast<double>(cand.size()),
                            static_cast<double>(ref.size()));
}

/// Mean of ROUGE-1, ROUGE-2 and ROUGE-L F1 (the candidate-vs-summary
/// closeness score used for candidate selection).
inline double r_score(std::string_view candidate, std::string_view reference) {
  return (rouge_n(candidate, reference, 1).f1 +
          rouge_n(candidate, reference, 2).f1 +
          rouge_l(candidate, reference).f1) /
         3.0;
}

struct RougeTriple {
  double r1 = 0.0;
  double r2 = 0.0;
  double rl = 0.0;
};

/// Multi-reference scoring: per-metric max of F1 over the references.
inline RougeTriple rouge_max_f1(std::string_view candidate,
                                const std::vector<std::string>& references) {
  RougeTriple best;
  for (const auto& ref : references) {
    best.r1 = std::max(best.r1, rouge_n(candidate, ref, 1).f1);
    best.r2 = std::max(best.r2, rouge_n(candidate, ref, 2).f1);
    best.rl = std::max(best.rl, rouge_l(candidate, ref).f1);
  }
  return best;
}

}  // namespace refsum
