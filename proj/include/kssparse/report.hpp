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

#include <optional>

#include "json.hpp"
#include "kssparse/bounded_sparsifier.hpp"
#include "kssparse/certify.hpp"
#include "kssparse/general_sparsifier.hpp"
#include "kssparse/leverage.hpp"
#include "kssparse/partition.hpp"

namespace kss::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kRunSchema = "kssparse.run_report/1";
inline constexpr const char* kPartitionSchema = "kssparse.partition/1";
inline constexpr const char* kLeverageSchema = "kssparse.leverage/1";
inline constexpr const char* kCertificateSchema = "kssparse.certificate/1";

json constants();
json to_json(const LeverageProfile& p);
json to_json(const PartitionResult& p);
json to_json(const ApproxCertificate& c);
json to_json(const Schedule& s);
json to_json(const SplitReport& s);
json to_json(const SparsifyTrace& t);
json to_json(const StepReport& s);

/// Full run report. Wall time is only included when given, so that reports
/// from identical runs compare equal byte for byte.
json to_json(const RunReport& r, std::optional<double> wall_time_ms = std::nullopt);

/// Top-level documents carrying a "schema" field.
json leverage_document(const LeverageProfile& p);
json partition_document(const PartitionResult& p, std::uint64_t seed);
json certificate_document(const ApproxCertificate& c, double epsilon, bool verified);

}  // namespace kss::report
