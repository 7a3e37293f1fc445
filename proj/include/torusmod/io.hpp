/*
   Copyright 2026 The torusmod Authors

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

#ifndef TORUSMOD_IO_HPP
#define TORUSMOD_IO_HPP

// JSON readers and writers for representation data, module files, simple
// module specifications and module elements. Scalars travel as text.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"
#include "multi_index.hpp"
#include "rep_data.hpp"
#include "scalar.hpp"
#include "simple_module.hpp"
#include "tensor_module.hpp"

namespace torusmod::io {

using json = nlohmann::ordered_json;

/// Malformed input; the message names the offending JSON path.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

inline const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

inline Scalar scalar(const json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path, "expected a scalar (string like \"-3/2+1/4i\" or an integer)");
}

inline std::vector<Scalar> scalars(const json& j, const std::string& path, std::size_t expected) {
    if (!j.is_array() || j.size() != expected) fail(path, "expected an array of " + std::to_string(expected) + " scalars");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline MultiIndex multi_index(const json& j, const std::string& path, std::size_t n) {
    if (!j.is_array() || j.size() != n) fail(path, "expected an array of " + std::to_string(n) + " integers");
    std::vector<long> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
    return MultiIndex(std::move(v));
}

inline Matrix matrix(const json& j, const std::string& path, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) fail(path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto row = scalars(j[i], path + "[" + std::to_string(i) + "]", dim);
        for (std::size_t c = 0; c < dim; ++c) m(i, c) = row[c];
    }
    return m;
}

inline std::size_t direction(const json& j, const std::string& path, std::size_t n) {
    long d = integer(j, path);
    if (d < 1 || static_cast<std::size_t>(d) > n) fail(path, "direction must lie in 1.." + std::to_string(n));
    return static_cast<std::size_t>(d - 1);
}

inline std::size_t positive(const json& j, const std::string& path) {
    long v = integer(j, path);
    if (v < 1) fail(path, "must be positive");
    return static_cast<std::size_t>(v);
}

}  // namespace detail

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

inline json to_json(const MultiIndex& k) { return json(k.entries()); }

inline json to_json(const RepData& d) {
    json j;
    j["N"] = d.n();
    j["dimU"] = d.dim();
    j["K_max"] = d.k_max();
    json imgs = json::array();
    for (const auto& [key, m] : d.s_images())
        imgs.push_back(json{{"a", key.a + 1}, {"b", key.b + 1}, {"k", to_json(key.k)}, {"matrix", to_json(m)}});
    j["S_images"] = std::move(imgs);
    if (d.heisenberg()) {
        j["heisenberg"] = json{{"X", to_json(d.x())}, {"Y", to_json(d.y())}, {"Z", to_json(d.z())}};
    } else {
        json c = json::array();
        for (const auto& m : d.c()) c.push_back(to_json(m));
        j["abelian"] = json{{"C", std::move(c)}};
    }
    return j;
}

inline RepData rep_data_from_json(const json& j) {
    using namespace detail;
    std::size_t n = positive(field(j, "N", "$"), "$.N");
    std::size_t dim = positive(field(j, "dimU", "$"), "$.dimU");
    long k_max = integer(field(j, "K_max", "$"), "$.K_max");
    if (n < 2) fail("$.N", "must be at least 2");
    if (k_max < 2) fail("$.K_max", "must be at least 2");
    RepData d(n, dim, k_max);
    const json& imgs = field(j, "S_images", "$");
    if (!imgs.is_array()) fail("$.S_images", "expected an array");
    for (std::size_t i = 0; i < imgs.size(); ++i) {
        std::string p = "$.S_images[" + std::to_string(i) + "]";
        std::size_t a = direction(field(imgs[i], "a", p), p + ".a", n);
        std::size_t b = direction(field(imgs[i], "b", p), p + ".b", n);
        if (a == b) fail(p, "a and b must differ");
        MultiIndex k = multi_index(field(imgs[i], "k", p), p + ".k", n);
        if (!k.nonnegative() || weight(k) < 2 || weight(k) > k_max) fail(p + ".k", "need nonnegative k with 2 <= |k| <= K_max");
        d.set_s_image(a, b, k, matrix(field(imgs[i], "matrix", p), p + ".matrix", dim));
    }
    bool has_h = j.contains("heisenberg"), has_a = j.contains("abelian");
    if (n == 2) {
        if (!has_h || has_a) fail("$", "N = 2 data needs a 'heisenberg' part");
        const json& h = j["heisenberg"];
        d.set_heisenberg(matrix(field(h, "X", "$.heisenberg"), "$.heisenberg.X", dim),
                         matrix(field(h, "Y", "$.heisenberg"), "$.heisenberg.Y", dim),
                         matrix(field(h, "Z", "$.heisenberg"), "$.heisenberg.Z", dim));
    } else {
        if (!has_a || has_h) fail("$", "N >= 3 data needs an 'abelian' part");
        const json& c = field(j["abelian"], "C", "$.abelian");
        if (!c.is_array() || c.size() != n) fail("$.abelian.C", "expected " + std::to_string(n) + " matrices");
        for (std::size_t a = 0; a < n; ++a) d.set_c(a, matrix(c[a], "$.abelian.C[" + std::to_string(a) + "]", dim));
    }
    return d;
}

/// Module file: representation data plus "lambda".
inline json module_to_json(const RepData& d, const std::vector<Scalar>& lambda) {
    json j = to_json(d);
    j["lambda"] = to_json(lambda);
    return j;
}

inline std::pair<RepData, std::vector<Scalar>> module_from_json(const json& j) {
    RepData d = rep_data_from_json(j);
    auto lambda = detail::scalars(detail::field(j, "lambda", "$"), "$.lambda", d.n());
    return {std::move(d), std::move(lambda)};
}

inline json to_json(const SimpleSpec& s) {
    json j;
    j["N"] = s.n;
    j["dimU"] = s.dim;
    json phi = json::object();
    for (const auto& [k, m] : s.phi) phi[k] = to_json(m);
    j["phi"] = std::move(phi);
    j["mu"] = to_json(s.mu);
    j["lambda"] = to_json(s.lambda);
    return j;
}

inline SimpleSpec simple_spec_from_json(const json& j) {
    using namespace detail;
    SimpleSpec s;
    s.n = positive(field(j, "N", "$"), "$.N");
    s.dim = positive(field(j, "dimU", "$"), "$.dimU");
    if (s.n < 2) fail("$.N", "must be at least 2");
    const json& phi = field(j, "phi", "$");
    if (!phi.is_object()) fail("$.phi", "expected an object");
    for (auto it = phi.begin(); it != phi.end(); ++it) s.phi[it.key()] = matrix(it.value(), "$.phi." + it.key(), s.dim);
    s.mu = scalars(field(j, "mu", "$"), "$.mu", s.n);
    s.lambda = scalars(field(j, "lambda", "$"), "$.lambda", s.n);
    return s;
}

/// {"components": [{"s": [...], "u": [...]}, ...]}
inline json to_json(const ModuleElement& v) {
    json comps = json::array();
    for (const auto& [s, u] : v.components()) comps.push_back(json{{"s", to_json(s)}, {"u", to_json(u)}});
    return json{{"components", std::move(comps)}};
}

inline ModuleElement module_element_from_json(const json& j, std::size_t n, std::size_t dim) {
    using namespace detail;
    const json& comps = field(j, "components", "$");
    if (!comps.is_array()) fail("$.components", "expected an array");
    ModuleElement v(n, dim);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string p = "$.components[" + std::to_string(i) + "]";
        v.add(multi_index(field(comps[i], "s", p), p + ".s", n), scalars(field(comps[i], "u", p), p + ".u", dim));
    }
    return v;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    out << j.dump(2) << '\n';
}

}  // namespace torusmod::io

#endif  // TORUSMOD_IO_HPP
