// Copyright 2026 The Authors.
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

#ifndef DETGB_PARSER_HPP_
#define DETGB_PARSER_HPP_

#include <string_view>

#include "detgb/polynomial.hpp"

namespace detgb {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | name | '(' expr ')'
// The right operand of '/' must be a nonzero constant. Errors are kParse and
// carry the byte offset in the message.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace detgb

#endif  // DETGB_PARSER_HPP_
