// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCONV_IO_HPP_
#define DCONV_IO_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dconv/classes.hpp"
#include "dconv/lab.hpp"
#include "dconv/lattice.hpp"
#include "dconv/network.hpp"
#include "dconv/ops.hpp"
#include "dconv/point.hpp"

namespace dconv {

inline constexpr int kDocumentVersion = 1;

enum class DocumentKind { Set, Fn, Network, SplitSpec, PartitionSpec, Window, Report, Verdict };

std::string_view document_kind_name(DocumentKind kind);

struct VerdictDocument {
  ClassLabel label = ClassLabel::IntegerBox;
  Verdict verdict;
  friend bool operator==(const VerdictDocument& a, const VerdictDocument& b) {
    return a.label == b.label && a.verdict.member == b.verdict.member && a.verdict.witness == b.verdict.witness;
  }
};

/// Report payloads are kept as canonical JSON text (the output of
/// report_document).
struct ReportDocument {
  std::string json;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

using Document = std::variant<LatticeSet, LatticeFn, Network, SplitSpec, PartitionSpec, Window, ReportDocument,
                              VerdictDocument>;

DocumentKind kind_of(const Document& doc);

/// JSON text with "kind" and "version" fields. Rationals are "p/q" strings;
/// indices in partitions and witnesses are 1-based.
std::string print_document(const Document& doc);
/// Inverse of print_document. Throws InputError on malformed or
/// inconsistent documents, and on infinite arc capacities.
Document parse_document(std::string_view text);

/// Convenience wrappers that also check the kind.
LatticeSet parse_set(std::string_view text);
LatticeFn parse_fn(std::string_view text);

std::string report_document(const ClosureReport& report);
std::string report_document(const std::vector<RecordReport>& records);

}  // namespace dconv

#endif  // DCONV_IO_HPP_
