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

#include <cstdlib>
#include <iostream>
#include <string>

#include "skula/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = skula::kAcceptanceSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& r : skula::run_acceptance(seed)) {
    std::cout << skula::format_criterion(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
