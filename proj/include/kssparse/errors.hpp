/*
Copyright 2026 The kssparse Authors

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

#include <stdexcept>
#include <string>
#include <utility>

namespace kss {

/// A strict-mode premise failed. `inequality()` names the violated condition
/// in plain text (for example "delta_i >= 3n/mhat_i").
class InfeasibleError : public std::domain_error {
public:
    InfeasibleError(std::string inequality, const std::string& detail)
        : std::domain_error(inequality + " violated: " + detail), inequality_(std::move(inequality)) {}
    const std::string& inequality() const { return inequality_; }

private:
    std::string inequality_;
};

}  // namespace kss
