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
#pragma once

#include <string_view>

namespace graphent {

/// Parses an angle in radians: a decimal literal, or a multiple/fraction of pi
/// such as "pi", "-pi", "2pi", "pi/2", "3pi/4", "0.5pi". Throws ParseError.
double parse_angle(std::string_view text);

}  // namespace graphent
