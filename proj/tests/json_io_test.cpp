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

#include <gtest/gtest.h>

#include <random>

#include "edc_golden.hpp"
#include "hdfusion/protocols.hpp"
#include "oracles.hpp"

using namespace hdfusion;
using hdfusion::io::Json;

TEST(JsonIo, ComplexAndMatrix) {
    const Complex z(1.5, -2.0);
    EXPECT_EQ(io::to_json(z), Json::parse("[1.5, -2.0]"));
    EXPECT_EQ(io::complex_from_json(io::to_json(z)), z);
    std::mt19937_64 rng(2);
    const ComplexMatrix m = hdfusion::testing::random_matrix(3, 2, rng);
    EXPECT_EQ(io::matrix_from_json(Json::parse(io::to_json(m).dump())), m);
}

TEST(JsonIo, PatternAndVector) {
    const FockPattern p{1, 0, 2};
    EXPECT_EQ(io::pattern_from_json(io::to_json(p)), p);
    const FockVector v = boost_ancilla(3);
    EXPECT_EQ(io::fock_vector_from_json(Json::parse(io::to_json(v).dump())).distance(v), 0.0);
}

TEST(JsonIo, Unitary) {
    const ModeUnitary f = fourier_matrix(4);
    const Json j = io::to_json(f);
    EXPECT_EQ(j.at("n_modes"), 4);
    EXPECT_TRUE(io::unitary_from_json(Json::parse(j.dump())).approx_equal(f, 0.0));
    Json bad = j;
    bad["rows"][0][0] = Json::array({2.0, 0.0});
    EXPECT_THROW(io::unitary_from_json(bad), std::invalid_argument);
}

TEST(JsonIo, Correction) {
    const CorrectionInput in = hdfusion::testing::golden_input();
    const Json j = io::to_json(in);
    EXPECT_EQ(j.at("d"), 3);
    EXPECT_EQ(io::correction_input_from_json(j).psi, in.psi);
    const CorrectionResult r = correction_unitary(in);
    const CorrectionResult back = io::correction_result_from_json(Json::parse(io::to_json(r).dump()));
    EXPECT_EQ(back.lambda, r.lambda);
    EXPECT_EQ(back.s, r.s);
    EXPECT_EQ(back.unitary, r.unitary);
    EXPECT_EQ(back.gram, r.gram);
}

TEST(JsonIo, CorrectionInputValidates) {
    EXPECT_THROW(io::correction_input_from_json(Json::parse(R"({"d": 2})")), std::invalid_argument);
    EXPECT_THROW(io::correction_input_from_json(Json::parse(R"({"d": 3, "psi": [[[1,0]]]})")), std::invalid_argument);
}

TEST(JsonIo, Report) {
    const FusionReport r = success_probability(protocol_wstate(3, true, false), {1, true});
    const Json j = io::to_json(r);
    for (const char* key : {"protocol", "d", "params", "success_probability", "avg_extra_dims", "pattern_count",
                            "per_pattern"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    const FusionReport back = io::report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.protocol, r.protocol);
    EXPECT_EQ(back.success_probability, r.success_probability);
    EXPECT_EQ(back.pattern_count, r.pattern_count);
    ASSERT_EQ(back.outcomes.size(), r.outcomes.size());
    EXPECT_EQ(io::to_json(back), j);
}
