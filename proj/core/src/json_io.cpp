// Copyright 2026 The hdfusion Authors
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
#include "hdfusion/json_io.hpp"

#include <stdexcept>

namespace hdfusion::io {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            "complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    require(j.is_array(), "matrix must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, "matrix rows must have equal length");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json to_json(const FockPattern& p) { return Json(p.occupations()); }

FockPattern pattern_from_json(const Json& j) {
    require(j.is_array(), "pattern must be an array of integers");
    std::vector<int> occ;
    for (const auto& x : j) {
        require(x.is_number_integer(), "pattern must be an array of integers");
        occ.push_back(x.get<int>());
    }
    return FockPattern(std::move(occ));
}

Json to_json(const FockVector& v) {
    Json out = Json::array();
    for (const auto& [p, a] : v.terms()) out.push_back({{"pattern", to_json(p)}, {"amp", to_json(a)}});
    return out;
}

FockVector fock_vector_from_json(const Json& j, int n_modes) {
    require(j.is_array(), "Fock vector must be an array of {pattern, amp}");
    if (j.empty()) {
        require(n_modes >= 0, "empty Fock vector needs an explicit mode count");
        return FockVector(n_modes);
    }
    const FockPattern first = pattern_from_json(j[0].at("pattern"));
    FockVector v(first.n_modes());
    for (const auto& rec : j) v.add(pattern_from_json(rec.at("pattern")), complex_from_json(rec.at("amp")));
    return v;
}

Json to_json(const ModeUnitary& u) { return {{"n_modes", u.n_modes()}, {"rows", to_json(u.matrix())}}; }

ModeUnitary unitary_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows"), "unitary must be {n_modes, rows}");
    ComplexMatrix m = matrix_from_json(j.at("rows"));
    if (j.contains("n_modes")) {
        require(j.at("n_modes").get<int>() == m.rows(), "n_modes does not match rows");
    }
    return ModeUnitary(std::move(m));
}

Json to_json(const CorrectionInput& in) {
    Json psi = Json::array();
    for (Eigen::Index k = 0; k < in.psi.cols(); ++k) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < in.psi.rows(); ++i) v.push_back(to_json(in.psi(i, k)));
        psi.push_back(std::move(v));
    }
    return {{"d", in.dim()}, {"psi", std::move(psi)}};
}

CorrectionInput correction_input_from_json(const Json& j) {
    require(j.is_object() && j.contains("psi"), "correction input must be {d, psi}");
    const Json& psi = j.at("psi");
    require(psi.is_array(), "psi must be an array of vectors");
    std::vector<ComplexVector> list;
    for (const auto& v : psi) {
        require(v.is_array(), "psi entries must be arrays of complex numbers");
        ComplexVector x(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = complex_from_json(v[i]);
        list.push_back(std::move(x));
    }
    if (j.contains("d")) {
        require(j.at("d").get<std::size_t>() == list.size(), "d does not match number of psi vectors");
    }
    return CorrectionInput::from_vectors(list);
}

Json to_json(const CorrectionResult& r) {
    return {{"lambda", r.lambda},
            {"s", r.s},
            {"degenerate", r.degenerate},
            {"gram", to_json(r.gram)},
            {"unitary", to_json(r.unitary)}};
}

CorrectionResult correction_result_from_json(const Json& j) {
    CorrectionResult r;
    r.lambda = j.at("lambda").get<double>();
    r.s = j.at("s").get<int>();
    r.degenerate = j.value("degenerate", false);
    r.gram = matrix_from_json(j.at("gram"));
    r.unitary = matrix_from_json(j.at("unitary"));
    return r;
}

Json to_json(const FusionReport& r) {
    Json j = {{"protocol", r.protocol},
              {"d", r.d},
              {"params", r.params},
              {"success_probability", r.success_probability},
              {"avg_extra_dims", r.avg_extra_dims},
              {"pattern_count", r.pattern_count}};
    if (r.boosted_probability != 0.0) {
        j["standard_probability"] = r.standard_probability;
        j["boosted_probability"] = r.boosted_probability;
    }
    if (!r.outcomes.empty()) {
        Json per = Json::array();
        for (const auto& o : r.outcomes) {
            per.push_back({{"pattern", to_json(o.pattern)}, {"w", o.weight}, {"lambda", o.lambda}, {"s", o.s_extra}});
        }
        j["per_pattern"] = std::move(per);
    }
    return j;
}

FusionReport report_from_json(const Json& j) {
    FusionReport r;
    r.protocol = j.at("protocol").get<std::string>();
    r.d = j.at("d").get<int>();
    r.params = j.at("params").get<std::map<std::string, double>>();
    r.success_probability = j.at("success_probability").get<double>();
    r.avg_extra_dims = j.at("avg_extra_dims").get<double>();
    r.pattern_count = j.at("pattern_count").get<std::size_t>();
    r.standard_probability = j.value("standard_probability", r.success_probability);
    r.boosted_probability = j.value("boosted_probability", 0.0);
    r.weighted_sum = r.success_probability * r.d * r.d;
    if (j.contains("per_pattern")) {
        for (const auto& rec : j.at("per_pattern")) {
            PatternOutcome o;
            o.pattern = pattern_from_json(rec.at("pattern"));
            o.weight = rec.at("w").get<double>();
            o.lambda = rec.at("lambda").get<double>();
            o.s_extra = rec.at("s").get<int>();
            o.verdict = Verdict::kEdc;
            r.outcomes.push_back(std::move(o));
        }
    }
    return r;
}

}  // namespace hdfusion::io
