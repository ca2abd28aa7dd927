// Copyright 2026 The trilat Authors
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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "trilat/ints.hpp"

namespace trilat {

// Machine-readable output records, one JSON object per line. Integers are
// always emitted as JSON integers, never as floats; parsing back is lossless.

struct PlaneRecord {
    i64 d = 0, a = 0, b = 0, c = 0;
    friend bool operator==(const PlaneRecord&, const PlaneRecord&) = default;
};

struct TriangleRecord {
    std::array<std::array<i64, 3>, 3> vertices{};
    i64 sq_side = 0;
    std::optional<std::array<i64, 2>> mn; // family parameters when applicable
    friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

struct TetrahedronRecord {
    std::array<std::array<i64, 3>, 4> vertices{};
    i64 sq_side = 0;
    std::optional<i64> orbit_size;
    friend bool operator==(const TetrahedronRecord&, const TetrahedronRecord&) = default;
};

struct CountRecord {
    std::string shape; // "et" or "rt"
    i64 n = 0;
    i64 count = 0;
    std::string method;
    double elapsed_ms = 0.0;
    i64 threads = 1;
    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct FamilyRecord {
    std::array<i64, 4> plane{}; // a, b, c, d
    std::array<i64, 12> coeffs{}; // m_u m_v m_w n_u n_v n_w m_x m_y m_z n_x n_y n_z
    std::optional<std::array<i64, 2>> rs;
    i64 pivot = 2;
    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

struct OrbitRecord {
    std::array<i64, 3> normal{};
    i64 d = 0;
    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct ProbeCaseRecord {
    std::array<i64, 4> plane{};
    i64 m = 0, n = 0;
    i64 norm = 0;
    i64 side_root = 0;
    bool apex_found = false;
    std::optional<std::array<i64, 3>> apex;
    friend bool operator==(const ProbeCaseRecord&, const ProbeCaseRecord&) = default;
};

/// Side-length classification: witness (m,n) with sq_side = 2(m^2-mn+n^2),
/// or a refusal (realizable == false).
struct ClassifyRecord {
    i64 sq_side = 0;
    bool realizable = false;
    std::optional<std::array<i64, 2>> mn;
    friend bool operator==(const ClassifyRecord&, const ClassifyRecord&) = default;
};

struct OutputRecord {
    std::variant<PlaneRecord, TriangleRecord, TetrahedronRecord, CountRecord, FamilyRecord,
                 OrbitRecord, ProbeCaseRecord, ClassifyRecord>
        payload;
    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

    std::string kind() const;
};

/// One JSON object on a single line (no trailing newline).
std::string to_json_line(const OutputRecord& rec);

/// Parse a line produced by to_json_line. Empty on malformed input or an
/// unknown kind.
std::optional<OutputRecord> parse_record(const std::string& line);

/// CSV form of count records (sequence-table output).
std::string count_csv_header();
std::string to_csv_line(const CountRecord& rec);
std::optional<CountRecord> parse_count_csv_line(const std::string& line);

} // namespace trilat
