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

#include "menzerath/error.hpp"

namespace menzerath {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::WrongDomain: return "WrongDomain";
    case ErrorKind::WrongSpace: return "WrongSpace";
    case ErrorKind::LogOfNonpositive: return "LogOfNonpositive";
    case ErrorKind::DegenerateVariance: return "DegenerateVariance";
    case ErrorKind::NonpositiveY: return "NonpositiveY";
    case ErrorKind::MismatchedSupport: return "MismatchedSupport";
    case ErrorKind::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorKind::UOutOfRange: return "UOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyConstituent: return "EmptyConstituent";
    case ErrorKind::CountOverflow: return "CountOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> line)
{
    std::string out(to_string(kind));
    if (line) {
        out += " at line " + std::to_string(*line);
    }
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line)
{
}

} // namespace menzerath
