// Copyright 2026 The gtc Authors
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

#pragma once

#include "json.hpp"

#include "gtc/census.hpp"

namespace gtc::detail {

inline nlohmann::json row_json(const CensusRow& r) {
  return {{"l", r.l},     {"count", r.count}, {"OV", r.OV},
          {"MV", r.MV},   {"IV", r.IV},       {"OE", r.OE},
          {"S1E", r.S1E}, {"ME", r.ME},       {"S2E", r.S2E},
          {"IE", r.IE}};
}

}  // namespace gtc::detail
