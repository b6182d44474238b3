//
// Copyright 2026 The sentaug Authors
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
//

// Runs the sda binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sentaug/io.h"
#include "testing.h"

namespace sentaug {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int exit_code;
  std::string out;
  std::string err;
};

class SdaTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) /
           (std::string("sda_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  Outcome Sda(const std::string& args, const std::string& env = "") const {
    const std::string out = Tmp("stdout.txt");
    const std::string err = Tmp("stderr.txt");
    const std::string command = env + " '" + SDA_BINARY + "' " + args + " >'" +
                                out + "' 2>'" + err + "'";
    const int status = std::system(command.c_str());
    return {WEXITSTATUS(status), ReadFile(out), ReadFile(err)};
  }

  static std::string Data(const std::string& name) {
    return "'" + testing::DataPath(name) + "'";
  }

  fs::path dir_;
};

TEST_F(SdaTest, NoArgumentsPrintsUsage) {
  const Outcome r = Sda("");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos) << r.err;
}

TEST_F(SdaTest, UsageErrors) {
  EXPECT_EQ(Sda("augment --in x --out y").exit_code, 1);
  EXPECT_EQ(Sda("augment --method pi --in " + Data("table1.conllu") +
                " --out " + Tmp("o") + " --bogus 1")
                .exit_code,
            1);
  EXPECT_EQ(Sda("frobnicate").exit_code, 1);
  const Outcome unknown = Sda("augment --method shuffle --in " +
                              Data("table1.conllu") + " --out " + Tmp("o"));
  EXPECT_EQ(unknown.exit_code, 1);
  EXPECT_NE(unknown.err.find("shuffle"), std::string::npos);
  EXPECT_EQ(Sda("augment --method syn --in " + Data("table1.conllu") +
                " --out " + Tmp("o"))
                .exit_code,
            1);
  EXPECT_EQ(Sda("augment --method crop --rate 0 --in " + Data("table1.conllu") +
                " --out " + Tmp("o"))
                .exit_code,
            1);
}

TEST_F(SdaTest, AugmentTable1PunctuationInsertion) {
  // Seed 1 draws the comma option of the noun-subject rule.
  const Outcome r = Sda("augment --method pi --seed 1 --in " +
                        Data("table1.conllu") + " --out " + Tmp("pi.jsonl"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.err.find("seed: 1"), std::string::npos);
  EXPECT_EQ(ReadFile(Tmp("pi.jsonl")),
            "{\"anchor\":\"A shareholder may transfer its Shares only with the "
            "prior written consent of the Company.\",\"positive\":\"A "
            "shareholder, may transfer its Shares only with the prior written "
            "consent of the Company.\",\"method\":\"pi\",\"changed\":true}\n");
}

TEST_F(SdaTest, AugmentWithLexicons) {
  const Outcome r = Sda("augment --method aa --in " + Data("table1.conllu") +
                        " --aux-lexicon " + Data("aux_lexicon.tsv") +
                        " --out " + Tmp("aa.jsonl"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string out = ReadFile(Tmp("aa.jsonl"));
  EXPECT_TRUE(out.find("A shareholder has to transfer") != std::string::npos ||
              out.find("A shareholder needs to transfer") != std::string::npos)
      << out;

  const Outcome syn = Sda("augment --method syn --in " + Data("table1.conllu") +
                          " --syn-lexicon " + Data("synonyms.tsv") + " --out " +
                          Tmp("syn.jsonl"));
  ASSERT_EQ(syn.exit_code, 0) << syn.err;
  EXPECT_NE(ReadFile(Tmp("syn.jsonl")).find("\"changed\":true"), std::string::npos);

  const Outcome bad = Sda("augment --method aa --in " + Data("table1.conllu") +
                          " --aux-lexicon " + Data("neg_lexicon.txt") +
                          " --out " + Tmp("bad.jsonl"));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("neg_lexicon.txt:1"), std::string::npos) << bad.err;
}

TEST_F(SdaTest, AugmentIsByteDeterministic) {
  for (const char* method : {"pi", "aa", "dn", "del", "rep", "randpunct"}) {
    const std::string args = std::string("augment --method ") + method +
                             " --strategy random --seed 42 --in " +
                             Data("coverage_corpus.conllu") + " --out ";
    ASSERT_EQ(Sda(args + Tmp("a.jsonl"), "SDA_THREADS=1").exit_code, 0);
    ASSERT_EQ(Sda(args + Tmp("b.jsonl"), "SDA_THREADS=4").exit_code, 0);
    ASSERT_EQ(Sda(args + Tmp("c.jsonl")).exit_code, 0);
    const std::string a = ReadFile(Tmp("a.jsonl"));
    EXPECT_EQ(a, ReadFile(Tmp("b.jsonl"))) << method;
    EXPECT_EQ(a, ReadFile(Tmp("c.jsonl"))) << method;
  }
  EXPECT_EQ(Sda("augment --method pi --in " + Data("table1.conllu") + " --out " +
                    Tmp("x"),
                "SDA_THREADS=zero")
                .exit_code,
            1);
}

TEST_F(SdaTest, StatsOnFixtureCorpora) {
  const Outcome dn = Sda("stats --method dn --in " + Data("single_site.conllu"));
  ASSERT_EQ(dn.exit_code, 0) << dn.err;
  EXPECT_EQ(dn.out, "{\"method\":\"dn\",\"total\":500,\"changed\":0,\"percent\":0.0}\n");
  EXPECT_NE(dn.err.find("seed: 0"), std::string::npos);

  const Outcome pi = Sda("stats --method pi --in " + Data("period_only.conllu"));
  ASSERT_EQ(pi.exit_code, 0) << pi.err;
  EXPECT_EQ(pi.out,
            "{\"method\":\"pi\",\"total\":500,\"changed\":500,\"percent\":100.0}\n");

  const std::string args = "stats --method aa --seed 9 --in " + Data("coverage_corpus.conllu");
  EXPECT_EQ(Sda(args).out, Sda(args).out);
}

TEST_F(SdaTest, DataErrors) {
  const Outcome malformed = Sda("augment --method pi --in " +
                                Data("malformed.conllu") + " --out " + Tmp("o"));
  EXPECT_EQ(malformed.exit_code, 2);
  EXPECT_NE(malformed.err.find("malformed.conllu:2"), std::string::npos)
      << malformed.err;
  EXPECT_FALSE(fs::exists(Tmp("o")));

  EXPECT_EQ(Sda("stats --method pi --in " + Tmp("missing.conllu")).exit_code, 2);

  WriteFileAtomic(Tmp("bad.cfg"), "epochs = 1\nwarmup = 2\n");
  const Outcome cfg = Sda("train --config " + Tmp("bad.cfg") + " --corpus " +
                          Data("table1.conllu") + " --out " + Tmp("m") +
                          " --trace " + Tmp("t"));
  EXPECT_EQ(cfg.exit_code, 2);
  EXPECT_NE(cfg.err.find("bad.cfg:2"), std::string::npos) << cfg.err;
}

TEST_F(SdaTest, TrainIsByteDeterministicAndEvaluates) {
  const std::string base = "train --config " + Data("train_sanity.cfg") +
                           " --corpus " + Data("train_corpus.conllu");
  const Outcome first = Sda(base + " --out " + Tmp("a.ckpt") + " --trace " + Tmp("a.csv"));
  ASSERT_EQ(first.exit_code, 0) << first.err;
  EXPECT_NE(first.err.find("seed: 0"), std::string::npos);
  ASSERT_EQ(Sda(base + " --out " + Tmp("b.ckpt") + " --trace " + Tmp("b.csv"),
                "SDA_THREADS=3")
                .exit_code,
            0);
  EXPECT_EQ(ReadFile(Tmp("a.ckpt")), ReadFile(Tmp("b.ckpt")));
  EXPECT_EQ(ReadFile(Tmp("a.csv")), ReadFile(Tmp("b.csv")));
  EXPECT_EQ(ReadFile(Tmp("a.csv")).rfind("step,loss\n", 0), 0u);

  const Outcome eval =
      Sda("eval --ckpt " + Tmp("a.ckpt") + " --sts " + Data("sts_sample.tsv"));
  ASSERT_EQ(eval.exit_code, 0) << eval.err;
  ASSERT_EQ(eval.out.size(), 7u + (eval.out[0] == '-' ? 1 : 0)) << eval.out;
  const double rs = std::stod(eval.out);
  EXPECT_GE(rs, -1.0);
  EXPECT_LE(rs, 1.0);

  EXPECT_EQ(Sda("eval --ckpt " + Data("sts_sample.tsv") + " --sts " +
                Data("sts_sample.tsv"))
                .exit_code,
            2);
}

TEST_F(SdaTest, GradientCheck) {
  const Outcome ok = Sda("gradcheck --config " + Data("gradcheck.cfg"));
  EXPECT_EQ(ok.exit_code, 0) << ok.out << ok.err;
  EXPECT_EQ(ok.out.rfind("PASS: 30 parameters checked", 0), 0u) << ok.out;

  WriteFileAtomic(Tmp("strict.cfg"),
                  ReadFile(testing::DataPath("gradcheck.cfg")) +
                      "gradcheck_tolerance = 1e-300\n");
  const Outcome strict = Sda("gradcheck --config " + Tmp("strict.cfg"));
  EXPECT_EQ(strict.exit_code, 3) << strict.out << strict.err;
  EXPECT_EQ(strict.out.rfind("FAIL", 0), 0u);
}

}  // namespace
}  // namespace sentaug
