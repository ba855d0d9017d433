// Copyright 2026 The Romlex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "romlex/skeleton.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

using EntryKey =
    std::tuple<std::string, std::string, std::optional<std::string>,
               std::optional<std::string>>;

EntryKey KeyOf(const RawEntry &entry) {
  return {entry.romansh_field, entry.german_field, entry.pos_hint,
          entry.gender_hint};
}

struct Bucket {
  PatternSignature signature;
  int count = 0;
  std::map<EntryKey, int> entry_counts;
  std::vector<const RawEntry *> first_seen;
};

[[noreturn]] void SyntaxError(int line, const std::string &what) {
  throw Error(ErrorCode::kCorruptFile,
              "skeleton line " + std::to_string(line) + ": " + what);
}

std::string FormatEntryLine(const RawEntry &entry) {
  std::vector<std::string> fields = {"'" + entry.romansh_field + "'",
                                     entry.pos_hint.value_or(""),
                                     entry.gender_hint.value_or("")};
  if (!entry.german_field.empty()) {
    fields.push_back("'" + entry.german_field + "'");
  }
  while (fields.size() > 1 && fields.back().empty()) fields.pop_back();
  std::string line = fields[0];
  for (size_t i = 1; i < fields.size(); ++i) line += "; " + fields[i];
  return line;
}

std::string Unquote(std::string_view text) {
  text = Trim(text);
  if (text.size() >= 2 && text.front() == '\'' && text.back() == '\'') {
    text = text.substr(1, text.size() - 2);
  }
  return std::string(text);
}

RawEntry ParseEntryLine(std::string_view line, int line_no, Variety variety) {
  // The Romansh field ends at the first quote followed by ';' or the end.
  size_t close = std::string_view::npos;
  for (size_t i = 1; i < line.size(); ++i) {
    if (line[i] != '\'') continue;
    std::string_view rest = Trim(line.substr(i + 1));
    if (rest.empty() || rest.front() == ';') {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos)
    SyntaxError(line_no, "unterminated entry");

  RawEntry entry;
  entry.romansh_field = std::string(line.substr(1, close - 1));
  entry.variety = variety;
  entry.source_line = line_no;

  std::string_view rest = Trim(line.substr(close + 1));
  std::vector<std::string> fields;
  if (!rest.empty()) {
    rest.remove_prefix(1);  // ';'
    // PoS and gender never contain ';'; the German field takes the rest.
    for (int i = 0; i < 2; ++i) {
      size_t semi = rest.find(';');
      fields.emplace_back(Trim(rest.substr(0, semi)));
      if (semi == std::string_view::npos) {
        rest = {};
        break;
      }
      rest = rest.substr(semi + 1);
    }
    if (!Trim(rest).empty()) fields.push_back(Unquote(rest));
  }
  if (fields.size() > 0 && !fields[0].empty()) entry.pos_hint = fields[0];
  if (fields.size() > 1 && !fields[1].empty()) entry.gender_hint = fields[1];
  if (fields.size() > 2) entry.german_field = fields[2];
  return entry;
}

std::string Describe(const FormRecord &r) {
  std::string out =
      r.lemma + " -> " + r.surface + " [" + r.features.Serialize() + "]";
  if (!r.gloss.empty()) out += " | " + r.gloss;
  return out;
}

char SlugChar(char c) {
  switch (c) {
    case ' ':
      return '_';
    case ',':
      return 'c';
    case ';':
      return 's';
    case '(':
      return 'L';
    case ')':
      return 'R';
    case '+':
      return 'p';
    case '.':
      return 'd';
    case ':':
      return 'k';
    default:
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
          (c >= '0' && c <= '9')) {
        return c;
      }
      return 'x';
  }
}

}  // namespace

std::vector<SkeletonCase> GenerateSkeletons(
    const std::vector<RawEntry> &entries, int min_count,
    const EntryParser &parser) {
  std::map<std::pair<PosCategory, std::string>, Bucket> buckets;
  for (const RawEntry &entry : entries) {
    PatternSignature signature;
    try {
      signature = parser.Signature(entry);
    } catch (const Error &) {
      continue;
    }
    Bucket &bucket = buckets[{parser.ResolvePos(entry), signature.rendered}];
    if (bucket.count == 0) bucket.signature = std::move(signature);
    ++bucket.count;
    if (bucket.entry_counts[KeyOf(entry)]++ == 0) {
      bucket.first_seen.push_back(&entry);
    }
  }

  std::vector<SkeletonCase> out;
  for (const auto &[key, bucket] : buckets) {
    if (bucket.count <= min_count) continue;
    const RawEntry *best = nullptr;
    int best_count = 0;
    for (const RawEntry *entry : bucket.first_seen) {
      int count = bucket.entry_counts.at(KeyOf(*entry));
      if (count > best_count) {
        best = entry;
        best_count = count;
      }
    }
    SkeletonCase skeleton;
    skeleton.signature = bucket.signature;
    skeleton.pos_category = key.first;
    skeleton.example_entry = *best;
    skeleton.occurrence_count = bucket.count;
    out.push_back(std::move(skeleton));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SkeletonCase &a, const SkeletonCase &b) {
                     return a.occurrence_count > b.occurrence_count;
                   });
  return out;
}

std::string FormatSkeleton(const SkeletonCase &skeleton) {
  std::ostringstream out;
  out << "# pattern: " << skeleton.signature.rendered << "\n";
  out << "# pos: " << PosLabel(skeleton.pos_category) << "\n";
  out << "# occurrences: " << skeleton.occurrence_count << "\n";
  out << "# variety: " << VarietyTag(skeleton.example_entry.variety) << "\n";
  out << FormatEntryLine(skeleton.example_entry) << "\n";
  if (skeleton.gold_records.empty()) {
    out << ">>>\n";
    return out.str();
  }
  // Forms grouped under their lemma, lemmas in order of first appearance.
  std::vector<std::string> lemmas;
  for (const FormRecord &r : skeleton.gold_records) {
    if (std::find(lemmas.begin(), lemmas.end(), r.lemma) == lemmas.end()) {
      lemmas.push_back(r.lemma);
    }
  }
  for (size_t i = 0; i < lemmas.size(); ++i) {
    out << (i == 0 ? ">>> " : "    ") << lemmas[i] << ":\n";
    for (const FormRecord &r : skeleton.gold_records) {
      if (r.lemma != lemmas[i]) continue;
      out << "        " << r.surface << "; " << r.features.SerializeCompact();
      if (!r.gloss.empty()) out << " | " << r.gloss;
      out << "\n";
    }
  }
  return out.str();
}

std::vector<SkeletonCase> ParseSkeletons(std::string_view text,
                                         const EntryParser &parser) {
  std::vector<SkeletonCase> cases;
  SkeletonCase pending;
  bool have_pos = false;
  Variety variety = Variety::kRumantschGrischun;
  SkeletonCase *current = nullptr;
  std::string lemma;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = Trim(raw);
    if (line.empty()) {
      current = nullptr;
      continue;
    }
    if (line.front() == '#') {
      current = nullptr;
      line.remove_prefix(1);
      size_t colon = line.find(':');
      if (colon == std::string_view::npos) continue;
      std::string key(Trim(line.substr(0, colon)));
      std::string_view value = Trim(line.substr(colon + 1));
      try {
        if (key == "pos") {
          pending.pos_category = ParsePosLabel(value);
          have_pos = true;
        } else if (key == "occurrences") {
          pending.occurrence_count = std::stoi(std::string(value));
        } else if (key == "variety") {
          variety = ParseVariety(value);
        }
      } catch (const std::exception &e) {
        SyntaxError(line_no, e.what());
      }
      continue;
    }
    if (line.front() == '\'') {
      SkeletonCase skeleton = pending;
      skeleton.example_entry = ParseEntryLine(line, line_no, variety);
      try {
        skeleton.signature = parser.Signature(skeleton.example_entry);
        if (!have_pos) {
          skeleton.pos_category = parser.ResolvePos(skeleton.example_entry);
        }
      } catch (const Error &) {
        // Kept so rejection cases can be written as skeletons too.
        skeleton.signature.rendered = "";
      }
      cases.push_back(std::move(skeleton));
      current = &cases.back();
      pending = SkeletonCase{};
      have_pos = false;
      lemma.clear();
      continue;
    }
    if (current == nullptr) SyntaxError(line_no, "annotation outside a case");
    if (line.substr(0, 3) == ">>>") {
      line = Trim(line.substr(3));
      if (line.empty()) continue;
    }
    // "lemma:" opens a lemma block; "form; FEATS [| gloss]" is a form.
    size_t sep = line.find_first_of(";:");
    if (sep == std::string_view::npos)
      SyntaxError(line_no, "expected ':' or ';'");
    std::string_view head = Trim(line.substr(0, sep));
    std::string_view tail = Trim(line.substr(sep + 1));
    if (tail.empty()) {
      if (line[sep] != ':') SyntaxError(line_no, "lemma line must end in ':'");
      lemma = NormalizeText(head);
      continue;
    }
    if (lemma.empty()) SyntaxError(line_no, "form before any lemma");
    std::string gloss;
    size_t bar = tail.find('|');
    if (bar != std::string_view::npos) {
      gloss = std::string(Trim(tail.substr(bar + 1)));
      tail = Trim(tail.substr(0, bar));
    }
    FormRecord record;
    record.surface = NormalizeText(head);
    record.lemma = lemma;
    try {
      record.features = FeatureBundle::Parse(tail);
    } catch (const Error &e) {
      SyntaxError(line_no, e.what());
    }
    record.gloss = NormalizeText(gloss);
    record.variety = current->example_entry.variety;
    current->gold_records.push_back(std::move(record));
  }
  return cases;
}

std::string SkeletonFileName(const SkeletonCase &skeleton) {
  std::string slug;
  for (char c : skeleton.signature.rendered) slug += SlugChar(c);
  return std::string(PosLabel(skeleton.pos_category)) + "__" + slug + ".txt";
}

std::string CheckSkeleton(const SkeletonCase &skeleton,
                          const EntryParser &parser) {
  std::vector<FormRecord> actual;
  try {
    actual = parser.Parse(skeleton.example_entry);
  } catch (const Error &e) {
    if (skeleton.gold_records.empty()) return "";
    return std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  std::vector<FormRecord> expected = skeleton.gold_records;
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  if (actual == expected) return "";

  std::string diff;
  for (const FormRecord &r : expected) {
    if (!std::binary_search(actual.begin(), actual.end(), r)) {
      diff += "  missing:    " + Describe(r) + "\n";
    }
  }
  for (const FormRecord &r : actual) {
    if (!std::binary_search(expected.begin(), expected.end(), r)) {
      diff += "  unexpected: " + Describe(r) + "\n";
    }
  }
  return diff;
}

}  // namespace romlex
