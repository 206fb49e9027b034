/*
   Copyright 2026 The menzerath authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "menzerath/dist_core.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace menzerath {

enum class SubconstituentMode {
    /// Every extended grapheme cluster is one subconstituent.
    Chars,
    /// Subconstituents are separated by `subconstituent_delimiter`.
    Delimited,
};

/// Layout of a segmented corpus: one construct per line, constituents
/// split by `constituent_delimiter`. Delimiters are single Unicode
/// characters given as UTF-8.
struct CorpusFormat {
    std::string constituent_delimiter = "-";
    SubconstituentMode mode = SubconstituentMode::Chars;
    std::string subconstituent_delimiter = ".";
    std::string comment_prefix = "#";

    /// Throws InvalidArgument for multi-character or clashing delimiters.
    void validate() const;
};

/// Rows of "x,z,count" (comma or tab separated), an optional header row,
/// '#' comment lines and an optional "#domain=boundaries" directive before
/// the first data row. Throws ParseError / InvalidPair with the 1-based
/// line number, EmptyInput when no data rows are present.
JointFrequencyTable parse_frequency_table(std::istream& in);
JointFrequencyTable parse_frequency_table(std::string_view text);

/// Canonical form: directive line for boundary tables, "x,z,count" header,
/// ascending (x, z), "\n" line endings.
std::string write_frequency_table(const JointFrequencyTable& table);

/// Throws EmptyConstituent (with line number) for empty constituents or
/// subconstituents, ParseError for invalid UTF-8, EmptyInput for a corpus
/// without constructs.
JointFrequencyTable parse_segmented_corpus(std::istream& in, const CorpusFormat& format);
JointFrequencyTable parse_segmented_corpus(std::string_view text, const CorpusFormat& format);

/// Extended grapheme clusters in UTF-8 text.
std::size_t count_graphemes(std::string_view utf8);

} // namespace menzerath
