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

#include "romlex/lexicon.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

constexpr std::string_view kMagic = "romlex-lexicon";

std::string Escape(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Unescape(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out += field[i];
      continue;
    }
    if (++i == field.size()) {
      throw Error(ErrorCode::kCorruptFile, "dangling escape");
    }
    switch (field[i]) {
      case '\\':
        out += '\\';
        break;
      case 't':
        out += '\t';
        break;
      case 'n':
        out += '\n';
        break;
      case 'r':
        out += '\r';
        break;
      default:
        throw Error(ErrorCode::kCorruptFile, "bad escape");
    }
  }
  return out;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Reads the serialized form line by line.
class LineReader {
 public:
  explicit LineReader(std::string_view data) : data_(data) {}

  std::string_view Next() {
    if (pos_ >= data_.size()) Corrupt("unexpected end of file");
    size_t nl = data_.find('\n', pos_);
    if (nl == std::string_view::npos) Corrupt("unterminated line");
    std::string_view line = data_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_;
    return line;
  }

  // "<name>\t<count>"
  size_t Section(std::string_view name) {
    std::vector<std::string_view> fields = SplitTabs(Next());
    if (fields.size() != 2 || fields[0] != name) {
      Corrupt("expected section '" + std::string(name) + "'");
    }
    return ParseCount(fields[1]);
  }

  size_t ParseCount(std::string_view text) {
    if (text.empty() || text.size() > 18) Corrupt("bad count");
    size_t value = 0;
    for (char c : text) {
      if (c < '0' || c > '9') Corrupt("bad count");
      value = value * 10 + static_cast<size_t>(c - '0');
    }
    return value;
  }

  bool AtEnd() const { return pos_ >= data_.size(); }

  [[noreturn]] void Corrupt(const std::string &what) const {
    throw Error(ErrorCode::kCorruptFile,
                "lexicon line " + std::to_string(line_ + 1) + ": " + what);
  }

 private:
  std::string_view data_;
  size_t pos_ = 0;
  int line_ = 0;
};

}  // namespace

std::string_view KnowledgeName(Knowledge knowledge) {
  switch (knowledge) {
    case Knowledge::kLemmatizable:
      return "lemmatizable";
    case Knowledge::kFallbackOnly:
      return "fallback";
    case Knowledge::kUnknown:
      return "unknown";
  }
  return "unknown";
}

Lexicon Lexicon::Build(std::vector<FormRecord> records,
                       const std::vector<std::string> &fallback_words,
                       Variety variety) {
  Lexicon lexicon;
  lexicon.variety_ = variety;
  for (FormRecord &record : records) {
    if (record.variety != variety) {
      throw Error(ErrorCode::kVarietyMismatch,
                  "record '" + record.surface + "' belongs to " +
                      std::string(VarietyName(record.variety)) + ", not " +
                      std::string(VarietyName(variety)));
    }
    record.surface = NormalizeText(record.surface);
    record.lemma = NormalizeText(record.lemma);
    record.gloss = NormalizeText(record.gloss);
    if (record.surface.empty() || ContainsSpace(record.surface) ||
        record.lemma.empty() || ContainsSpace(record.lemma)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "surface and lemma must be single words: '" + record.surface +
                      "' -> '" + record.lemma + "'");
    }
  }
  std::sort(records.begin(), records.end());
  records.erase(std::unique(records.begin(), records.end()), records.end());
  lexicon.records_ = std::move(records);

  for (const std::string &word : fallback_words) {
    std::string key = LookupKey(Trim(word));
    if (!key.empty()) lexicon.fallback_.insert(std::move(key));
  }
  lexicon.Index();
  return lexicon;
}

void Lexicon::Index() {
  index_.clear();
  for (const FormRecord &record : records_) {
    index_[LookupKey(record.surface)].push_back(ToAnalysis(record));
  }
  for (auto &[key, analyses] : index_) {
    std::sort(analyses.begin(), analyses.end(), AnalysisLess);
    analyses.erase(std::unique(analyses.begin(), analyses.end()),
                   analyses.end());
  }

  stats_ = LexiconStats{};
  stats_.mapped_forms = index_.size();
  stats_.vocab_size = index_.size();
  for (const std::string &word : fallback_) {
    if (index_.count(word) == 0) ++stats_.vocab_size;
  }
  std::set<std::pair<std::string, PosCategory>> lemmas;
  for (const FormRecord &record : records_) {
    lemmas.emplace(record.lemma, record.features.pos);
  }
  stats_.lemma_count = lemmas.size();
  for (const auto &[lemma, pos] : lemmas) {
    ++stats_.lemmas_by_pos[static_cast<size_t>(pos)];
  }
}

const std::vector<Analysis> &Lexicon::Lookup(std::string_view surface) const {
  static const std::vector<Analysis> kNone;
  auto it = index_.find(LookupKey(surface));
  return it == index_.end() ? kNone : it->second;
}

Knowledge Lexicon::IsKnown(std::string_view surface) const {
  std::string key = LookupKey(surface);
  if (index_.count(key) != 0) return Knowledge::kLemmatizable;
  if (fallback_.count(key) != 0) return Knowledge::kFallbackOnly;
  return Knowledge::kUnknown;
}

std::vector<std::string> Lexicon::FallbackWords() const {
  std::vector<std::string> words(fallback_.begin(), fallback_.end());
  std::sort(words.begin(), words.end());
  return words;
}

std::string Lexicon::Serialize() const {
  std::ostringstream out;
  out << kMagic << '\t' << kLexiconFormatVersion << '\n';
  out << "variety\t" << VarietyTag(variety_) << '\n';
  out << "records\t" << records_.size() << '\n';
  for (const FormRecord &r : records_) {
    out << Escape(r.surface) << '\t' << Escape(r.lemma) << '\t'
        << r.features.Serialize() << '\t' << Escape(r.gloss) << '\n';
  }
  std::vector<std::string> fallback = FallbackWords();
  out << "fallback\t" << fallback.size() << '\n';
  for (const std::string &word : fallback) out << Escape(word) << '\n';
  out << "end\n";
  return out.str();
}

Lexicon Lexicon::Deserialize(std::string_view data) {
  LineReader reader(data);
  std::vector<std::string_view> header = SplitTabs(reader.Next());
  if (header.size() != 2 || header[0] != kMagic) {
    reader.Corrupt("not a lexicon file");
  }
  if (reader.ParseCount(header[1]) != kLexiconFormatVersion) {
    throw Error(ErrorCode::kIncompatibleVersion,
                "lexicon format version " + std::string(header[1]) +
                    " is not supported (expected " +
                    std::to_string(kLexiconFormatVersion) + ")");
  }

  Lexicon lexicon;
  std::vector<std::string_view> variety = SplitTabs(reader.Next());
  if (variety.size() != 2 || variety[0] != "variety") {
    reader.Corrupt("expected variety");
  }
  try {
    lexicon.variety_ = ParseVariety(variety[1]);
  } catch (const Error &) {
    reader.Corrupt("unknown variety");
  }

  size_t record_count = reader.Section("records");
  lexicon.records_.reserve(record_count);
  for (size_t i = 0; i < record_count; ++i) {
    std::vector<std::string_view> fields = SplitTabs(reader.Next());
    if (fields.size() != 4) reader.Corrupt("expected 4 fields");
    FormRecord record;
    record.surface = Unescape(fields[0]);
    record.lemma = Unescape(fields[1]);
    try {
      record.features = FeatureBundle::Parse(fields[2]);
    } catch (const Error &) {
      reader.Corrupt("bad features");
    }
    record.gloss = Unescape(fields[3]);
    record.variety = lexicon.variety_;
    lexicon.records_.push_back(std::move(record));
  }
  if (!std::is_sorted(lexicon.records_.begin(), lexicon.records_.end())) {
    reader.Corrupt("records out of order");
  }

  size_t fallback_count = reader.Section("fallback");
  for (size_t i = 0; i < fallback_count; ++i) {
    lexicon.fallback_.insert(Unescape(reader.Next()));
  }
  if (reader.Next() != "end" || !reader.AtEnd()) {
    reader.Corrupt("missing end marker");
  }
  lexicon.Index();
  return lexicon;
}

void Lexicon::Save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  }
  out << Serialize();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Deserialize(buffer.str());
}

bool Lexicon::operator==(const Lexicon &other) const {
  return variety_ == other.variety_ && records_ == other.records_ &&
         fallback_ == other.fallback_;
}

LexiconSet LoadLexiconSet(const std::filesystem::path &dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo,
                "lexicon directory '" + dir.string() + "' does not exist");
  }
  LexiconSet set;
  for (const auto &file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() != ".lexc") continue;
    Lexicon lexicon = Lexicon::Load(file.path());
    Variety variety = lexicon.variety();
    if (set.count(variety) != 0) {
      throw Error(ErrorCode::kIo, "two lexicons for " +
                                      std::string(VarietyName(variety)) +
                                      " in '" + dir.string() + "'");
    }
    set.emplace(variety, std::move(lexicon));
  }
  if (set.empty()) {
    throw Error(ErrorCode::kIo, "no .lexc files in '" + dir.string() + "'");
  }
  return set;
}

}  // namespace romlex
