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

// Test skeletons for dictionary patterns.
//
// Every frequent (PoS, signature) pair gets a skeleton file with a
// representative entry, to be completed with the expected records by hand:
//
//   # pattern: w, w
//   # pos: ADJ
//   # occurrences: 14
//   'antalg(iant)evel, antalg(iant)evla'; adj
//   >>> antalgevel:
//           antalgevel; ADJ;MASC;SG
//           antalgevla; ADJ;FEM;SG
//       antalgiantevel:
//           antalgiantevel; ADJ;MASC;SG
//           antalgiantevla; ADJ;FEM;SG
//
// The entry line holds the quoted Romansh field followed by the optional
// PoS, gender and quoted German columns. Form lines may use ':' instead of
// ';' after the form and may end in "| gloss".

#ifndef ROMLEX_SKELETON_H_
#define ROMLEX_SKELETON_H_

#include <string>
#include <string_view>
#include <vector>

#include "romlex/entry_parser.h"
#include "romlex/types.h"

namespace romlex {

struct SkeletonCase {
  PatternSignature signature;
  PosCategory pos_category = PosCategory::kOther;
  RawEntry example_entry;
  std::vector<FormRecord> gold_records;
  int occurrence_count = 1;
};

// One case per (PoS, signature) seen strictly more than `min_count` times,
// most frequent first. Entries whose field cannot be lexed are skipped.
std::vector<SkeletonCase> GenerateSkeletons(
    const std::vector<RawEntry> &entries, int min_count = 10,
    const EntryParser &parser = {});

std::string FormatSkeleton(const SkeletonCase &skeleton);

// Parses every case in a skeleton file. Throws Error(kCorruptFile) with the
// line number on syntax errors.
std::vector<SkeletonCase> ParseSkeletons(std::string_view text,
                                         const EntryParser &parser = {});

// e.g. "ADJ__wc_w.txt" for the signature "w, w".
std::string SkeletonFileName(const SkeletonCase &skeleton);

// Compares parser output against the annotated records. Returns an empty
// string on success, else a readable diff.
std::string CheckSkeleton(const SkeletonCase &skeleton,
                          const EntryParser &parser = {});

}  // namespace romlex

#endif  // ROMLEX_SKELETON_H_
