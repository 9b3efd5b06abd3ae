// Copyright 2026 The lgt-shadows Authors
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

#include <doctest.h>

#include "lgts/pauli.hpp"
#include "oracles.hpp"

using lgts::PauliString;

TEST_CASE("single-qubit products carry the textbook phases") {
    auto X = PauliString::single(1, 0, 'X'), Y = PauliString::single(1, 0, 'Y'), Z = PauliString::single(1, 0, 'Z');
    CHECK(X * Y == Z.with_phase(1));
    CHECK(Y * X == Z.with_phase(3));
    CHECK(Z * X == Y.with_phase(1));
    CHECK(X * X == PauliString::identity(1));
}

TEST_CASE("products and commutation agree with dense matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto a = oracle::random_pauli(n, rng, false), b = oracle::random_pauli(n, rng, false);
        oracle::Mat da = oracle::dense(a), db = oracle::dense(b);
        CHECK((oracle::dense(a * b) - da * db).norm() < 1e-12);
        const bool dense_commute = (da * db - db * da).norm() < 1e-12;
        CHECK(a.commutes(b) == dense_commute);
    }
}

TEST_CASE("weights count each letter") {
    auto p = PauliString::parse("X0 Y1 Z2 Y4", 6);
    auto w = p.weights();
    CHECK(w.x == 1);
    CHECK(w.y == 2);
    CHECK(w.z == 1);
    CHECK(w.i == 2);
    CHECK(w.xy() == 3);
    CHECK(w.k() == 4);
    CHECK(p.weight() == 4);
}

TEST_CASE("text form round-trips") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = oracle::random_pauli(10, rng, false);
        CHECK(PauliString::parse(p.to_string(), 10) == p);
    }
    CHECK(PauliString::identity(3).to_string() == "+1 I");
    CHECK(PauliString::parse("-1 Z2", 3) == PauliString::single(3, 2, 'Z').negated());
    CHECK(PauliString::parse("-i X0", 1) == PauliString::single(1, 0, 'X').with_phase(3));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(PauliString::parse("X5", 3));
    CHECK_THROWS(PauliString::parse("Q1", 3));
    CHECK_THROWS(PauliString(65));
    CHECK_THROWS(PauliString::single(2, 0, 'X') * PauliString::single(3, 0, 'X'));
}

TEST_CASE("64-qubit strings use every bit") {
    auto a = PauliString::single(64, 63, 'X'), b = PauliString::single(64, 63, 'Z');
    CHECK_FALSE(a.commutes(b));
    CHECK((a * b).at(63) == 'Y');
}
