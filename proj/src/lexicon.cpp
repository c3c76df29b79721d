#include "wsd/lexicon.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "wsd/error.hpp"

namespace wsd {

namespace {

const std::vector<SenseEntry> kNoSenses;

std::size_t pos_slot(Pos p) { return static_cast<std::size_t>(p); }

struct KindName {
  PointerKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {PointerKind::hypernym, "hypernym"},
    {PointerKind::hyponym, "hyponym"},
    {PointerKind::meronym, "meronym"},
    {PointerKind::holonym, "holonym"},
    {PointerKind::similar_to, "similar_to"},
    {PointerKind::antonym, "antonym"},
    {PointerKind::attribute, "attribute"},
    {PointerKind::pertainym, "pertainym"},
    {PointerKind::see_also, "see_also"},
    {PointerKind::entailment, "entailment"},
    {PointerKind::cause, "cause"},
    {PointerKind::domain_topic, "domain_topic"},
    {PointerKind::derivationally_related, "derivationally_related"},
    {PointerKind::other, "other"},
};

}  // namespace

std::uint32_t pack(SynsetId id) {
  return (static_cast<std::uint32_t>(id.pos) << 30) | (id.offset & 0x3fffffffu);
}

std::string to_string(SynsetId id) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%c:%08u", pos_letter(id.pos), id.offset);
  return buf;
}

PointerKind pointer_kind_from_symbol(std::string_view symbol) {
  if (symbol == "@") return PointerKind::hypernym;
  if (symbol == "~") return PointerKind::hyponym;
  if (symbol == "%m" || symbol == "%s" || symbol == "%p") return PointerKind::meronym;
  if (symbol == "#m" || symbol == "#s" || symbol == "#p") return PointerKind::holonym;
  if (symbol == "&") return PointerKind::similar_to;
  if (symbol == "!") return PointerKind::antonym;
  if (symbol == "=") return PointerKind::attribute;
  if (symbol == "\\") return PointerKind::pertainym;
  if (symbol == "^") return PointerKind::see_also;
  if (symbol == "*") return PointerKind::entailment;
  if (symbol == ">") return PointerKind::cause;
  if (symbol == ";c") return PointerKind::domain_topic;
  if (symbol == "+") return PointerKind::derivationally_related;
  return PointerKind::other;
}

std::optional<PointerKind> pointer_kind_from_name(std::string_view name) {
  for (const auto& entry : kKindNames) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

std::string_view pointer_kind_name(PointerKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "other";
}

bool is_admitted(Pos pos, PointerKind kind) {
  using K = PointerKind;
  switch (pos) {
    case Pos::noun:
      return kind == K::hyponym || kind == K::meronym;
    case Pos::adjective:
      return kind == K::similar_to || kind == K::antonym || kind == K::attribute ||
             kind == K::pertainym || kind == K::see_also;
    case Pos::verb:
      return kind == K::hyponym || kind == K::hypernym || kind == K::entailment ||
             kind == K::cause;
    case Pos::adverb:
      return kind == K::antonym || kind == K::pertainym || kind == K::domain_topic;
    case Pos::other:
      break;
  }
  return false;
}

const std::vector<SenseEntry>& Lexicon::senses_of(std::string_view lemma, Pos pos) const {
  if (pos == Pos::other) return kNoSenses;
  auto it = senses_.find(lemma);
  if (it == senses_.end()) return kNoSenses;
  return it->second[pos_slot(pos)];
}

const Synset* Lexicon::find(SynsetId id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& Lexicon::synset(SynsetId id) const {
  if (const Synset* s = find(id)) return *s;
  throw std::out_of_range("unknown synset " + to_string(id));
}

std::vector<std::pair<PointerKind, const Synset*>> Lexicon::related_synsets(
    const Synset& s) const {
  std::vector<std::pair<PointerKind, const Synset*>> out;
  for (const Pointer& p : s.pointers) {
    if (!is_admitted(s.id.pos, p.kind)) continue;
    if (const Synset* target = find(p.target)) out.emplace_back(p.kind, target);
  }
  return out;
}

std::string Lexicon::sense_key(const SenseEntry& entry) const {
  if (key_style_ == SenseKeyStyle::toy) {
    return entry.lemma + '%' + pos_letter(entry.pos) + '#' + std::to_string(entry.sense_number);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d:%08u", pos_number(entry.pos), entry.synset.offset);
  return entry.lemma + '%' + buf;
}

std::size_t Lexicon::lemma_count() const {
  std::size_t n = 0;
  for (const auto& [lemma, lists] : senses_) {
    for (const auto& list : lists) n += list.empty() ? 0 : 1;
  }
  return n;
}

std::vector<SynsetId> Lexicon::synset_ids() const {
  std::vector<SynsetId> ids;
  ids.reserve(synsets_.size());
  for (const auto& [id, s] : synsets_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::pair<std::string, Pos>> Lexicon::lemmas() const {
  std::vector<std::pair<std::string, Pos>> out;
  for (const auto& [lemma, lists] : senses_) {
    for (std::size_t slot = 0; slot < lists.size(); ++slot) {
      if (!lists[slot].empty()) out.emplace_back(lemma, static_cast<Pos>(slot));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LexiconBuilder::add_synset(Synset s) {
  const SynsetId id = s.id;
  return synsets_.emplace(id, std::move(s)).second;
}

bool LexiconBuilder::add_pointer(SynsetId source, PointerKind kind, SynsetId target) {
  auto it = synsets_.find(source);
  if (it == synsets_.end()) return false;
  it->second.pointers.push_back({kind, target});
  return true;
}

void LexiconBuilder::append_sense(std::string lemma, Pos pos, SynsetId synset) {
  auto& list = senses_[lemma][pos_slot(pos)];
  const int number = static_cast<int>(list.size()) + 1;
  list.push_back({std::move(lemma), pos, number, synset});
}

bool LexiconBuilder::add_sense(std::string lemma, Pos pos, int sense_number, SynsetId synset) {
  auto& list = senses_[lemma][pos_slot(pos)];
  for (const SenseEntry& e : list) {
    if (e.sense_number == sense_number) return false;
  }
  list.push_back({std::move(lemma), pos, sense_number, synset});
  return true;
}

Lexicon LexiconBuilder::build(Dangling policy) && {
  Lexicon lex;
  lex.key_style_ = style_;

  std::size_t dangling = 0;
  for (auto& [id, s] : synsets_) {
    auto keep = std::remove_if(s.pointers.begin(), s.pointers.end(), [&](const Pointer& p) {
      if (synsets_.contains(p.target)) return false;
      if (policy == Dangling::reject) {
        throw ParseError("pointer from " + to_string(id) + " to undeclared synset " +
                         to_string(p.target));
      }
      ++dangling;
      return true;
    });
    s.pointers.erase(keep, s.pointers.end());
  }

  for (auto& [lemma, lists] : senses_) {
    for (auto& list : lists) {
      std::sort(list.begin(), list.end(),
                [](const SenseEntry& a, const SenseEntry& b) { return a.sense_number < b.sense_number; });
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].sense_number != static_cast<int>(i) + 1) {
          throw ParseError("sense numbers for '" + lemma + "' (" +
                           std::string(pos_name(list[i].pos)) + ") are not contiguous from 1");
        }
        if (!synsets_.contains(list[i].synset)) {
          throw ParseError("sense '" + lemma + "' #" + std::to_string(i + 1) +
                           " references unknown synset " + to_string(list[i].synset));
        }
      }
    }
  }

  lex.synsets_ = std::move(synsets_);
  for (auto& [lemma, lists] : senses_) lex.senses_.emplace(lemma, std::move(lists));
  lex.dangling_pointers_ = dangling;
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) return parse_wordnet(path);
  return load_toy_lexicon(path);
}

}  // namespace wsd
