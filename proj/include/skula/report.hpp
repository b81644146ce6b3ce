//  Copyright 2026 The Skula Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Uniform JSON envelope for check results: {check, pass, witness, ...}.

#ifndef SKULA_REPORT_HPP_
#define SKULA_REPORT_HPP_

#include <string>

#include "json.hpp"

namespace skula {

inline nlohmann::json make_report(const std::string& check, bool pass, nlohmann::json witness = nullptr) {
  return nlohmann::json{{"check", check}, {"pass", pass}, {"witness", std::move(witness)}};
}

// Extra fields go next to the envelope; keys are sorted on output.
inline nlohmann::json make_report(const std::string& check, bool pass, nlohmann::json witness,
                                  const nlohmann::json& extra) {
  nlohmann::json r = make_report(check, pass, std::move(witness));
  for (auto it = extra.begin(); it != extra.end(); ++it) r[it.key()] = it.value();
  return r;
}

}  // namespace skula

#endif  // SKULA_REPORT_HPP_
