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

#include "menzerath/ingest.hpp"

#include "menzerath/error.hpp"

#include <charconv>
#include <memory>
#include <sstream>
#include <vector>

#include <unicode/brkiter.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace menzerath {

namespace {

constexpr std::string_view kWhitespace = " \t\r\n";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(kWhitespace);
    return s.substr(first, last - first + 1);
}

std::string_view strip_cr(std::string_view s)
{
    if (!s.empty() && s.back() == '\r') {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view delimiter)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(delimiter, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + delimiter.size();
    }
}

bool parse_int(std::string_view text, std::int64_t& out)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return !text.empty() && ec == std::errc() && ptr == end;
}

bool is_header(const std::vector<std::string_view>& fields)
{
    return fields.size() == 3 && trim(fields[0]) == "x" && trim(fields[1]) == "z" &&
           trim(fields[2]) == "count";
}

std::size_t code_points(std::string_view utf8)
{
    std::size_t n = 0;
    std::int32_t i = 0;
    const auto len = static_cast<std::int32_t>(utf8.size());
    while (i < len) {
        UChar32 c = 0;
        U8_NEXT(utf8.data(), i, len, c);
        if (c < 0) {
            return 0;
        }
        ++n;
    }
    return n;
}

void require_utf8(std::string_view text, std::size_t line)
{
    std::int32_t i = 0;
    const auto len = static_cast<std::int32_t>(text.size());
    while (i < len) {
        UChar32 c = 0;
        U8_NEXT(text.data(), i, len, c);
        if (c < 0) {
            throw Error(ErrorKind::ParseError, "invalid UTF-8", line);
        }
    }
}

class GraphemeCounter {
public:
    GraphemeCounter()
    {
        UErrorCode status = U_ZERO_ERROR;
        iter_.reset(icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
        if (U_FAILURE(status)) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string("ICU character break iterator unavailable: ") +
                            u_errorName(status));
        }
    }

    std::size_t operator()(std::string_view utf8)
    {
        const auto text = icu::UnicodeString::fromUTF8(
            icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
        iter_->setText(text);
        std::size_t n = 0;
        for (auto pos = iter_->next(); pos != icu::BreakIterator::DONE; pos = iter_->next()) {
            ++n;
        }
        return n;
    }

private:
    std::unique_ptr<icu::BreakIterator> iter_;
};

} // namespace

void CorpusFormat::validate() const
{
    for (const auto* d : {&constituent_delimiter, &subconstituent_delimiter, &comment_prefix}) {
        if (code_points(*d) != 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "delimiter '" + *d + "' must be a single character");
        }
    }
    if (constituent_delimiter == comment_prefix ||
        (mode == SubconstituentMode::Delimited &&
         (subconstituent_delimiter == constituent_delimiter ||
          subconstituent_delimiter == comment_prefix))) {
        throw Error(ErrorKind::InvalidArgument,
                    "delimiters and comment prefix must be distinct");
    }
}

JointFrequencyTable parse_frequency_table(std::istream& in)
{
    Domain domain = Domain::Segments;
    bool seen_data = false;
    bool header_allowed = true;
    std::vector<CountedPair> rows;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(strip_cr(raw));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto directive = trim(line.substr(1));
            if (directive.starts_with("domain=")) {
                if (seen_data) {
                    throw Error(ErrorKind::ParseError,
                                "domain directive after data rows: '" + std::string(line) + "'",
                                line_no);
                }
                const auto value = trim(directive.substr(7));
                if (value == "boundaries") {
                    domain = Domain::Boundaries;
                } else if (value == "segments") {
                    domain = Domain::Segments;
                } else {
                    throw Error(ErrorKind::ParseError,
                                "unknown domain '" + std::string(value) + "'", line_no);
                }
            }
            continue;
        }
        const auto fields = split(line, line.find('\t') != std::string_view::npos ? "\t" : ",");
        if (header_allowed && is_header(fields)) {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        CountedPair row;
        if (fields.size() != 3 || !parse_int(fields[0], row.x) || !parse_int(fields[1], row.z) ||
            !parse_int(fields[2], row.count)) {
            throw Error(ErrorKind::ParseError,
                        "expected three integers x,z,count: '" + std::string(line) + "'", line_no);
        }
        if (!satisfies_domain({row.x, row.z}, domain)) {
            throw Error(ErrorKind::InvalidPair,
                        "(" + std::to_string(row.x) + ", " + std::to_string(row.z) + ") violates " +
                            (domain == Domain::Segments ? "x >= 1, z >= x" : "x >= 0, z >= 0"),
                        line_no);
        }
        if (row.count < 1) {
            throw Error(ErrorKind::InvalidPair,
                        "count " + std::to_string(row.count) + " must be >= 1", line_no);
        }
        seen_data = true;
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw Error(ErrorKind::EmptyInput, "frequency table has no data rows");
    }
    return build_table(rows, domain);
}

JointFrequencyTable parse_frequency_table(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_frequency_table(in);
}

std::string write_frequency_table(const JointFrequencyTable& table)
{
    std::string out;
    if (table.domain() == Domain::Boundaries) {
        out += "#domain=boundaries\n";
    }
    out += "x,z,count\n";
    for (const auto& [key, n] : table.cells()) {
        out += std::to_string(key.x) + "," + std::to_string(key.z) + "," + std::to_string(n) + "\n";
    }
    return out;
}

JointFrequencyTable parse_segmented_corpus(std::istream& in, const CorpusFormat& format)
{
    format.validate();
    GraphemeCounter graphemes;
    std::map<LengthPair, std::int64_t> counts;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(strip_cr(raw));
        if (line.empty() || line.starts_with(format.comment_prefix)) {
            continue;
        }
        require_utf8(line, line_no);
        const auto constituents = split(line, format.constituent_delimiter);
        std::int64_t z = 0;
        for (const auto constituent : constituents) {
            if (constituent.empty()) {
                throw Error(ErrorKind::EmptyConstituent,
                            "empty constituent in '" + std::string(line) + "'", line_no);
            }
            if (format.mode == SubconstituentMode::Chars) {
                z += static_cast<std::int64_t>(graphemes(constituent));
                continue;
            }
            for (const auto part : split(constituent, format.subconstituent_delimiter)) {
                if (part.empty()) {
                    throw Error(ErrorKind::EmptyConstituent,
                                "empty subconstituent in '" + std::string(line) + "'", line_no);
                }
                ++z;
            }
        }
        ++counts[{static_cast<std::int64_t>(constituents.size()), z}];
    }
    std::vector<CountedPair> rows;
    rows.reserve(counts.size());
    for (const auto& [key, n] : counts) {
        rows.push_back({key.x, key.z, n});
    }
    if (rows.empty()) {
        throw Error(ErrorKind::EmptyInput, "corpus has no constructs");
    }
    return build_table(rows, Domain::Segments);
}

JointFrequencyTable parse_segmented_corpus(std::string_view text, const CorpusFormat& format)
{
    std::istringstream in{std::string(text)};
    return parse_segmented_corpus(in, format);
}

std::size_t count_graphemes(std::string_view utf8)
{
    GraphemeCounter graphemes;
    return graphemes(utf8);
}

} // namespace menzerath
