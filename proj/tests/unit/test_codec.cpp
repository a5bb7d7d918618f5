// Copyright 2026 The oqclab developers
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
#include <catch2/catch.hpp>

#include <algorithm>
#include <sstream>

#include "oqclab/codec/codec.hpp"
#include "oqclab/qcore/random.hpp"

using namespace oqc::codec;

TEST_CASE("elias code on pinned words") {
  CHECK(elias_encode(1).to_string() == "1");
  CHECK(elias_encode(2).to_string() == "0100");
  CHECK(elias_encode(17).to_string() == "001010001");
  CHECK(elias_encode(17).size() == 9);
  CHECK(elias_length_bound(17) == Approx(12.0));
  CHECK(elias_length_bound(2) == Approx(4.0));  // boundary convention
  CHECK_THROWS_AS(elias_encode(0), CodecError);
}

TEST_CASE("elias round trip and length bound to 1e4") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto code = elias_encode(n);
    CHECK(code.size() == elias_length(n));
    std::size_t used = 0;
    CHECK(elias_decode(code, &used) == n);
    CHECK(used == code.size());
    if (n >= 2) CHECK(static_cast<double>(code.size()) <= elias_length_bound(n));
  }
}

TEST_CASE("elias prefix freeness via sorted neighbors") {
  std::vector<std::string> words;
  for (std::uint64_t n = 1; n <= 10000; ++n) words.push_back(elias_encode(n).to_string());
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    REQUIRE(words[i + 1].compare(0, words[i].size(), words[i]) != 0);
}

TEST_CASE("truncated stream reports the offset") {
  BitString bad;
  bad.push(0);
  bad.push(0);
  CHECK_THROWS_WITH(elias_decode(bad), Catch::Contains("offset"));
}

TEST_CASE("geometric codec parameters and budgets") {
  const GeometricCodec g(0.5);
  CHECK(g.golomb_m() == 3);
  CHECK(g.expected_length() <= 2.0 * std::log2(4.0 / 0.5));
  CHECK(g.expected_length() <= g.source_entropy() + 1.0);
  const GeometricCodec g9(0.9);
  CHECK(g9.expected_length() <= 2.0 * std::log2(4.0 / 0.9));
  CHECK_THROWS_AS(GeometricCodec(1.5), CodecError);

  SECTION("round trip to 1e5") {
    for (std::uint64_t k = 1; k <= 100000; ++k) {
      const auto code = g.encode(k);
      CHECK(code.size() == g.length(k));
      BitReader r(code);
      REQUIRE(g.decode(r) == k);
      REQUIRE(r.exhausted());
    }
  }
}

TEST_CASE("tuple coding") {
  CHECK(tuple_encode({1, 1, 1}).to_string() == "111");
  CHECK(tuple_encode({2, 3}).size() == 8);
  CHECK_THROWS_AS(tuple_encode({}), CodecError);

  oqc::Rng rng(401);
  for (int i = 0; i < 200; ++i) {
    Tuple t;
    const int r = 1 + static_cast<int>(rng.below(4));
    for (int j = 0; j < r; ++j) t.push_back(1 + static_cast<std::uint32_t>(rng.below(5000)));
    const auto code = tuple_encode(t);
    BitReader reader(code);
    CHECK(tuple_decode(reader, r) == t);
    double log_prod = 0.0;
    for (auto v : t) log_prod += std::log2(static_cast<double>(v));
    if (log_prod >= 1.0)
      CHECK(static_cast<double>(code.size()) <= tuple_length_bound(t));
  }
}

TEST_CASE("transcript container round trip") {
  oqc::Rng rng(402);
  std::vector<BitString> messages;
  const GeometricCodec g(0.25);
  for (int i = 0; i < 50; ++i) {
    BitString m;
    m.push(static_cast<int>(rng.below(2)));
    m.append(g.encode(1 + rng.below(100)));
    m.append(elias_encode(1 + rng.below(1000)));
    messages.push_back(std::move(m));
  }
  std::ostringstream os;
  write_transcript(os, messages);
  const std::string payload = os.str();
  CHECK(payload.substr(0, 4) == "OQC1");
  std::istringstream is(payload);
  const auto back = read_transcript(is);
  REQUIRE(back.size() == messages.size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == messages[i]);

  std::istringstream bad("NOPE");
  CHECK_THROWS_AS(read_transcript(bad), CodecError);
}
