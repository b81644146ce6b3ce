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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skula/cli.hpp"

namespace skula::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kVee = R"({"elements":["a","b","c"],"covers":[["a","c"],["b","c"]]})";
const char* kFamily =
    R"({"sets":[{"period":3,"residues":[0]},{"period":3,"residues":[1],"delta":[0]},{"period":3,"residues":[2]}]})";

TEST(Cli, NaturalSumExampleByValue) {
  const auto r = call({"ord", "natsum", "w^(w+w)*8 + w^7*3", "w^w + w^7 + w^2 + 5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "w^(w*2)*8 + w^w + w^7*4 + w^2 + 5\n");
  EXPECT_EQ(parse_ordinal(r.out.substr(0, r.out.size() - 1)), parse_ordinal("w^(w+w)*8 + w^w + w^7*4 + w^2 + 5"));
}

TEST(Cli, HyperAntichainExample) {
  const auto r = call({"space", "hyper-antichain", "0", "1", "1", "2", "10", "10", "w+7", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "w^(w+7) + w^9*2 + w^2 + w + 2\n");
}

TEST(Cli, MissingFileIsInputError) {
  const auto r = call({"poset", "zaguia", "missing.json"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("missing.json"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"ord"}).code, kUsage);
  EXPECT_EQ(call({"ord", "add", "1", "2", "--frob"}).code, kUsage);
  EXPECT_EQ(call({"ord", "add", "1"}).code, kUsage);
  EXPECT_EQ(call({"ord", "add", "1", "2", "3"}).code, kUsage);
  EXPECT_EQ(call({"ord", "add", "w^", "2"}).code, kUsage);
  EXPECT_EQ(call({"ord", "odot", "w", "-1"}).code, kUsage);
  EXPECT_EQ(call({"selftest"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, MalformedInputNamesTheField) {
  auto r = call({"poset", "info", R"({"elements":"a"})"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("elements"), std::string::npos);
  r = call({"mrowka", "ad", R"({"sets":[{"period":3}]})"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("residues"), std::string::npos);
  r = call({"mrowka", "ad", R"({"sets":[{"period":3,"residues":[0,x]}]})"});
  EXPECT_EQ(r.code, kUsage);
}

TEST(Cli, OrdinalOperations) {
  EXPECT_EQ(call({"ord", "add", "1", "w"}).out, "w\n");
  EXPECT_EQ(call({"ord", "add", "w", "1"}).out, "w + 1\n");
  EXPECT_EQ(call({"ord", "mul", "2", "w"}).out, "w\n");
  EXPECT_EQ(call({"ord", "mul", "w", "2"}).out, "w*2\n");
  EXPECT_EQ(call({"ord", "pow", "2", "w"}).out, "w\n");
  EXPECT_EQ(call({"ord", "natprod", "2", "w"}).out, "w*2\n");
  EXPECT_EQ(call({"ord", "odot", "w", "2"}).out, "w*2\n");
  EXPECT_EQ(call({"ord", "odot", "2", "w"}).out, "w\n");
  EXPECT_EQ(call({"ord", "cmp", "w+1", "w*2"}).out, "<\n");
  EXPECT_EQ(call({"ord", "parse", "w + w"}).out, "w*2\n");
  const auto tip = nlohmann::json::parse(call({"ord", "tip", "w^w*2 + w^7 + w^3*5"}).out);
  EXPECT_EQ(tip["tip"], "w^3");
  const auto split = call({"ord", "split", "w+3", "w", "w"});
  EXPECT_EQ(split.code, kOk);
  const auto sj = nlohmann::json::parse(split.out);
  EXPECT_EQ(natural_sum(parse_ordinal(sj["left"].get<std::string>()), parse_ordinal(sj["right"].get<std::string>())),
            parse_ordinal("w+3"));
  EXPECT_EQ(call({"ord", "split", "w*2", "w", "w"}).code, kCheckFailed);
}

TEST(Cli, PosetAndHyperspace) {
  auto r = call({"poset", "info", kVee});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["width"], 2);
  r = call({"poset", "zaguia", kVee});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["pass"], true);
  r = call({"poset", "downsets", kVee});
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 5);
  EXPECT_EQ(call({"poset", "dot", kVee}).out.rfind("digraph", 0), 0u);
  EXPECT_EQ(call({"poset", "lattice", kVee, "--dot"}).out.rfind("digraph", 0), 0u);
  r = call({"hyper", "build", kVee});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["size"], 4);
  EXPECT_EQ(call({"hyper", "selector", kVee}).code, kOk);
  EXPECT_EQ(call({"hyper", "build", kVee, "--dot"}).out.rfind("digraph", 0), 0u);
}

TEST(Cli, JsonFileFlag) {
  const std::string path = ::testing::TempDir() + "skula_cli_poset.json";
  {
    std::ofstream f(path);
    f << kVee;
  }
  const auto a = call({"poset", "info", "--json", path});
  const auto b = call({"poset", "info", path});
  const auto c = call({"poset", "info", kVee});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  std::remove(path.c_str());
}

TEST(Cli, VietorisAndOnePoint) {
  auto r = call({"hyper", "vietoris", "fin:1,2", "cofin:1"});
  EXPECT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["nonempty"].get<bool>());
  r = call({"hyper", "vietoris", "fin:1,2", "fin:5"});
  EXPECT_FALSE(nlohmann::json::parse(r.out)["nonempty"].get<bool>());
  j = nlohmann::json::parse(call({"hyper", "onepoint"}).out);
  EXPECT_TRUE(j["within_bound"].get<bool>());
}

TEST(Cli, SpaceTerms) {
  auto j = nlohmann::json::parse(call({"space", "report", "prod(ord(w+3),ord(w^2*2))"}).out);
  EXPECT_EQ(j["height"], "3");
  EXPECT_EQ(j["endpoints"], "2");
  auto r = call({"space", "bounds", "ord(w+5)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rank"], "w + 6");
  EXPECT_EQ(call({"space", "hyper-point", "w+7"}).out, "w^(w+7)\n");
  const std::string skel = R"(skel({"elements":["a","b","c"],"covers":[["a","c"],["b","c"]]}, {a: 1, b: 0, c: 3}))";
  EXPECT_EQ(call({"space", "hyper-bound", skel}).code, kOk);
  EXPECT_EQ(call({"space", "monotone", skel}).code, kOk);
  EXPECT_EQ(call({"space", "monotone", "ord(w)"}).code, kUsage);
}

TEST(Cli, ClopenCommands) {
  auto j = nlohmann::json::parse(call({"clopen", "tip", "w+5", "w^2"}).out);
  EXPECT_EQ(j["set"], "(w + 4, w + 5] @ w^2");
  EXPECT_EQ(j["cb"]["lastpt"], "w + 5");
  EXPECT_EQ(call({"clopen", "op", "union", "(0, 3] @ w", "(5, w] @ w"}).out, "(0, 3] (5, w] @ w\n");
  EXPECT_EQ(call({"clopen", "op", "subset", "(0, 3] @ w", "{0} (0, 5] @ w"}).out, "true\n");
  EXPECT_EQ(call({"clopen", "op", "union", "(0, 3] @ w", "(0, 3] @ w^2"}).code, kUsage);
  EXPECT_EQ(call({"clopen", "treelike", "w^2", "w", "w+3", "w*2"}).code, kOk);
  EXPECT_EQ(call({"clopen", "min", "w*2+1", "w^2"}).code, kOk);
  j = nlohmann::json::parse(call({"clopen", "cb", "(0, w^2] @ w^2"}).out);
  EXPECT_EQ(j["height"], "2");
}

TEST(Cli, MrowkaCommands) {
  EXPECT_EQ(call({"mrowka", "ad", kFamily}).code, kOk);
  const char* overlapping = R"({"sets":[{"period":2,"residues":[0]},{"period":3,"residues":[0]}]})";
  const auto r = call({"mrowka", "ad", overlapping});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_EQ(nlohmann::json::parse(r.out)["witness"]["modulus"], 6);
  EXPECT_EQ(call({"mrowka", "star", kFamily, "--bound", "9"}).code, kOk);
  EXPECT_EQ(call({"mrowka", "star", kFamily, "--bound", "30"}).code, kUsage);
  EXPECT_EQ(call({"mrowka", "converge", kFamily, "0", "2", "--horizon", "64"}).code, kOk);
  EXPECT_EQ(call({"mrowka", "converge", kFamily, "0", "0"}).code, kUsage);
  EXPECT_EQ(call({"mrowka", "selector", kFamily}).code, kOk);
  EXPECT_EQ(call({"mrowka", "lusin", kFamily, "3"}).code, kOk);
  EXPECT_EQ(call({"mrowka", "join", kFamily, "{0,3}", "{6}"}).out, "{0,3,6}\n");
  EXPECT_EQ(call({"mrowka", "join", kFamily, "{0}", "{2}"}).out, "{0,2}\n");
  EXPECT_EQ(call({"mrowka", "join", kFamily, "A0", "{1}"}).out, "inf\n");
  EXPECT_EQ(call({"mrowka", "join", kFamily, "A0", "{3}"}).out, "A0\n");
  EXPECT_EQ(call({"mrowka", "join", kFamily, "A7", "{3}"}).code, kUsage);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"poset", "zaguia", kVee},
                                                               {"hyper", "build", kVee},
                                                               {"mrowka", "lusin", kFamily, "4"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
}

}  // namespace
}  // namespace skula::cli
