// Copyright 2026 The graphent Authors
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
#include "graphent/angle.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "graphent/error.h"

namespace graphent {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ParseError("invalid angle '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view whole = text;
    if (text.empty()) throw ParseError("empty angle");

    double sign = 1.0;
    if (text.front() == '-' || text.front() == '+') {
        sign = text.front() == '-' ? -1.0 : 1.0;
        text.remove_prefix(1);
    }

    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) {
        if (text.empty() || text.front() == '-' || text.front() == '+') {
            throw ParseError("invalid angle '" + std::string(whole) + "'");
        }
        return sign * parse_number(text, whole);
    }

    std::string_view coeff = text.substr(0, pi_pos);
    std::string_view rest = text.substr(pi_pos + 2);
    if (coeff.ends_with('*')) coeff.remove_suffix(1);
    double value = std::numbers::pi;
    if (!coeff.empty()) value *= parse_number(coeff, whole);
    if (!rest.empty()) {
        if (rest.front() != '/') throw ParseError("invalid angle '" + std::string(whole) + "'");
        const double denom = parse_number(rest.substr(1), whole);
        if (denom == 0.0) throw ParseError("zero denominator in angle '" + std::string(whole) + "'");
        value /= denom;
    }
    return sign * value;
}

}  // namespace graphent
