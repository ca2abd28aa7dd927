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

#include "trilat/records.hpp"

#include <sstream>

#include <json.hpp>

namespace trilat {

using nlohmann::json;

std::string OutputRecord::kind() const {
    struct Visitor {
        std::string operator()(const PlaneRecord&) const { return "plane"; }
        std::string operator()(const TriangleRecord&) const { return "triangle"; }
        std::string operator()(const TetrahedronRecord&) const { return "tetrahedron"; }
        std::string operator()(const CountRecord&) const { return "count"; }
        std::string operator()(const FamilyRecord&) const { return "family"; }
        std::string operator()(const OrbitRecord&) const { return "orbit"; }
        std::string operator()(const ProbeCaseRecord&) const { return "probe"; }
        std::string operator()(const ClassifyRecord&) const { return "classify"; }
    };
    return std::visit(Visitor{}, payload);
}

namespace {

json to_json(const PlaneRecord& r) {
    return json{{"kind", "plane"}, {"d", r.d}, {"a", r.a}, {"b", r.b}, {"c", r.c}};
}

json to_json(const TriangleRecord& r) {
    json j{{"kind", "triangle"}, {"vertices", r.vertices}, {"sq_side", r.sq_side}};
    if (r.mn) j["mn"] = *r.mn;
    return j;
}

json to_json(const TetrahedronRecord& r) {
    json j{{"kind", "tetrahedron"}, {"vertices", r.vertices}, {"sq_side", r.sq_side}};
    if (r.orbit_size) j["orbit_size"] = *r.orbit_size;
    return j;
}

json to_json(const CountRecord& r) {
    return json{{"kind", "count"},     {"shape", r.shape},           {"n", r.n},
                {"count", r.count},    {"method", r.method},         {"elapsed_ms", r.elapsed_ms},
                {"threads", r.threads}};
}

json to_json(const FamilyRecord& r) {
    json j{{"kind", "family"}, {"plane", r.plane}, {"coeffs", r.coeffs}, {"pivot", r.pivot}};
    if (r.rs) j["rs"] = *r.rs;
    return j;
}

json to_json(const OrbitRecord& r) {
    return json{{"kind", "orbit"}, {"normal", r.normal}, {"d", r.d}};
}

json to_json(const ProbeCaseRecord& r) {
    json j{{"kind", "probe"},         {"plane", r.plane}, {"m", r.m},
           {"n", r.n},                {"norm", r.norm},   {"side_root", r.side_root},
           {"apex_found", r.apex_found}};
    if (r.apex) j["apex"] = *r.apex;
    return j;
}

json to_json(const ClassifyRecord& r) {
    json j{{"kind", "classify"}, {"sq_side", r.sq_side}, {"realizable", r.realizable}};
    if (r.mn) j["mn"] = *r.mn;
    return j;
}

template <size_t N>
std::array<i64, N> to_array(const json& j) {
    std::array<i64, N> out{};
    if (!j.is_array() || j.size() != N)
        throw std::runtime_error("expected array of " + std::to_string(N));
    for (size_t i = 0; i < N; ++i)
        out[i] = j[i].get<i64>();
    return out;
}

template <size_t Rows>
std::array<std::array<i64, 3>, Rows> to_matrix(const json& j) {
    std::array<std::array<i64, 3>, Rows> out{};
    if (!j.is_array() || j.size() != Rows)
        throw std::runtime_error("expected vertex matrix");
    for (size_t i = 0; i < Rows; ++i)
        out[i] = to_array<3>(j[i]);
    return out;
}

} // namespace

std::string to_json_line(const OutputRecord& rec) {
    return std::visit([](const auto& r) { return to_json(r).dump(); }, rec.payload);
}

std::optional<OutputRecord> parse_record(const std::string& line) {
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("kind")) return std::nullopt;
    try {
        const std::string kind = j["kind"].get<std::string>();
        OutputRecord out;
        if (kind == "plane") {
            out.payload = PlaneRecord{j.at("d").get<i64>(), j.at("a").get<i64>(),
                                      j.at("b").get<i64>(), j.at("c").get<i64>()};
        } else if (kind == "triangle") {
            TriangleRecord r;
            r.vertices = to_matrix<3>(j.at("vertices"));
            r.sq_side = j.at("sq_side").get<i64>();
            if (j.contains("mn")) r.mn = to_array<2>(j["mn"]);
            out.payload = r;
        } else if (kind == "tetrahedron") {
            TetrahedronRecord r;
            r.vertices = to_matrix<4>(j.at("vertices"));
            r.sq_side = j.at("sq_side").get<i64>();
            if (j.contains("orbit_size")) r.orbit_size = j["orbit_size"].get<i64>();
            out.payload = r;
        } else if (kind == "count") {
            CountRecord r;
            r.shape = j.at("shape").get<std::string>();
            r.n = j.at("n").get<i64>();
            r.count = j.at("count").get<i64>();
            r.method = j.at("method").get<std::string>();
            r.elapsed_ms = j.at("elapsed_ms").get<double>();
            r.threads = j.at("threads").get<i64>();
            out.payload = r;
        } else if (kind == "family") {
            FamilyRecord r;
            r.plane = to_array<4>(j.at("plane"));
            r.coeffs = to_array<12>(j.at("coeffs"));
            if (j.contains("rs")) r.rs = to_array<2>(j["rs"]);
            r.pivot = j.at("pivot").get<i64>();
            out.payload = r;
        } else if (kind == "orbit") {
            OrbitRecord r;
            r.normal = to_array<3>(j.at("normal"));
            r.d = j.at("d").get<i64>();
            out.payload = r;
        } else if (kind == "probe") {
            ProbeCaseRecord r;
            r.plane = to_array<4>(j.at("plane"));
            r.m = j.at("m").get<i64>();
            r.n = j.at("n").get<i64>();
            r.norm = j.at("norm").get<i64>();
            r.side_root = j.at("side_root").get<i64>();
            r.apex_found = j.at("apex_found").get<bool>();
            if (j.contains("apex")) r.apex = to_array<3>(j["apex"]);
            out.payload = r;
        } else if (kind == "classify") {
            ClassifyRecord r;
            r.sq_side = j.at("sq_side").get<i64>();
            r.realizable = j.at("realizable").get<bool>();
            if (j.contains("mn")) r.mn = to_array<2>(j["mn"]);
            out.payload = r;
        } else {
            return std::nullopt;
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string count_csv_header() { return "n,count,shape,method,threads,elapsed_ms"; }

std::string to_csv_line(const CountRecord& rec) {
    std::ostringstream os;
    os << rec.n << ',' << rec.count << ',' << rec.shape << ',' << rec.method << ','
       << rec.threads << ',' << rec.elapsed_ms;
    return os.str();
}

std::optional<CountRecord> parse_count_csv_line(const std::string& line) {
    std::istringstream is(line);
    std::string field;
    CountRecord r;
    try {
        if (!std::getline(is, field, ',')) return std::nullopt;
        r.n = std::stoll(field);
        if (!std::getline(is, field, ',')) return std::nullopt;
        r.count = std::stoll(field);
        if (!std::getline(is, r.shape, ',')) return std::nullopt;
        if (!std::getline(is, r.method, ',')) return std::nullopt;
        if (!std::getline(is, field, ',')) return std::nullopt;
        r.threads = std::stoll(field);
        if (!std::getline(is, field)) return std::nullopt;
        r.elapsed_ms = std::stod(field);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return r;
}

} // namespace trilat
