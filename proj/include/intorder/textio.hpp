// Copyright 2026 The intorder Authors
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

#ifndef INTORDER_TEXTIO_HPP_
#define INTORDER_TEXTIO_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace intorder {

// Shortest decimal form that parses back to the same double. "nan"/"inf"
// spelled out.
std::string FormatDouble(double v);

// Strict parsers: the whole token must be consumed. Throw FormatError.
double ParseDouble(std::string_view s);
long long ParseInt(std::string_view s);
unsigned long long ParseUint(std::string_view s);

std::vector<std::string> Split(std::string_view s, char sep);
std::string_view Trim(std::string_view s);

}  // namespace intorder

#endif  // INTORDER_TEXTIO_HPP_
