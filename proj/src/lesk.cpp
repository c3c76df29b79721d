#include <algorithm>
#include <stdexcept>

#include "wsd/relatedness.hpp"

namespace wsd {

namespace {

constexpr std::uint32_t kFirstMarker = 0x80000000u;

struct Match {
  std::size_t length = 0;
  std::size_t end_a = 0;  // exclusive
  std::size_t end_b = 0;
};

Match longest_common_run(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  Match best;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      // Markers are unique, so they never compare equal to anything.
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      if (cur[j] > best.length) best = {cur[j], i, j};
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace

std::uint64_t lesk_overlap(std::span<const std::uint32_t> a_in, std::span<const std::uint32_t> b_in) {
  std::vector<std::uint32_t> a(a_in.begin(), a_in.end());
  std::vector<std::uint32_t> b(b_in.begin(), b_in.end());
  std::uint32_t next_marker = kFirstMarker;
  std::uint64_t total = 0;
  while (true) {
    const Match m = longest_common_run(a, b);
    if (m.length == 0) return total;
    total += static_cast<std::uint64_t>(m.length) * m.length;
    const auto replace = [&](std::vector<std::uint32_t>& seq, std::size_t end) {
      const auto first = seq.begin() + static_cast<std::ptrdiff_t>(end - m.length);
      *first = next_marker++;
      seq.erase(first + 1, seq.begin() + static_cast<std::ptrdiff_t>(end));
    };
    replace(a, m.end_a);
    replace(b, m.end_b);
  }
}

std::uint64_t lesk_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::unordered_map<std::string, std::uint32_t> ids;
  const auto encode = [&](const std::vector<std::string>& seq) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    for (const auto& s : seq) {
      out.push_back(ids.emplace(s, static_cast<std::uint32_t>(ids.size())).first->second);
    }
    return out;
  };
  const auto ea = encode(a);
  const auto eb = encode(b);
  return lesk_overlap(std::span<const std::uint32_t>(ea), std::span<const std::uint32_t>(eb));
}

LeskMeasure::LeskMeasure(const Lexicon& lex, StopwordSet stopwords)
    : lex_(lex), stopwords_(std::move(stopwords)) {}

const LeskMeasure::Profile& LeskMeasure::profile(SynsetId id) const {
  std::lock_guard lock(mutex_);
  if (auto it = profiles_.find(id); it != profiles_.end()) return it->second;

  const DisambVocabulary vocab = build_disamb_vocabulary(lex_, lex_.synset(id), stopwords_);
  Profile p;
  p.own_count = vocab.own_count;
  for (const auto& seq : vocab.sequences) {
    std::vector<std::uint32_t> encoded;
    encoded.reserve(seq.size());
    for (const auto& stem : seq) {
      const auto next = static_cast<std::uint32_t>(stem_ids_.size());
      if (next >= kFirstMarker) throw std::length_error("stem vocabulary exhausted");
      encoded.push_back(stem_ids_.emplace(stem, next).first->second);
    }
    p.texts.push_back(std::move(encoded));
  }
  // unordered_map never moves its nodes, so the reference stays valid.
  return profiles_.emplace(id, std::move(p)).first->second;
}

std::uint64_t LeskMeasure::lesk_relatedness(SynsetId a, SynsetId b) const {
  // Fixed argument order makes the tie-breaking, and so the sum, symmetric.
  if (b < a) std::swap(a, b);
  const Profile& pa = profile(a);
  const Profile& pb = profile(b);
  const bool same_pos = a.pos == b.pos;
  const std::size_t na = same_pos ? pa.texts.size() : pa.own_count;
  const std::size_t nb = same_pos ? pb.texts.size() : pb.own_count;

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      total += lesk_overlap(std::span<const std::uint32_t>(pa.texts[i]),
                            std::span<const std::uint32_t>(pb.texts[j]));
    }
  }
  return total;
}

}  // namespace wsd
