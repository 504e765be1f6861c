// Copyright 2026 The ocrkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ocrkit/corpus.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ocrkit/error.h"
#include "ocrkit/file_util.h"
#include "ocrkit/random.h"

namespace ocrkit {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ocrkit_corpus_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

Sample MakeSample(std::string id, std::string gt) {
  Sample s;
  s.id = std::move(id);
  s.ground_truth = std::move(gt);
  return s;
}

Corpus Generated(uint64_t seed, size_t n) {
  Rng rng(seed);
  const std::vector<std::string> pieces = {"alpha", "β", "中文", "\"quoted\"", "tab\tch", "line\nbreak", "\\", "😀"};
  Corpus c;
  for (size_t i = 0; i < n; ++i) {
    Sample s;
    s.id = "g" + std::to_string(i);
    s.task_kind = static_cast<TaskKind>(rng.UniformInt(0, 9));
    if (rng.UniformInt(0, 1)) s.image_ref = "img/" + std::to_string(i) + ".png";
    s.prompt = rng.UniformInt(0, 1) ? "OCR:" : "";
    for (int k = 0; k < 4; ++k) s.ground_truth += pieces[static_cast<size_t>(rng.UniformInt(0, 7))];
    s.lang = static_cast<Lang>(rng.UniformInt(0, 2));
    for (int k = 0; k < rng.UniformInt(0, 3); ++k) {
      s.meta["k" + std::to_string(k)] = pieces[static_cast<size_t>(rng.UniformInt(0, 7))];
    }
    c.samples.push_back(std::move(s));
  }
  return c;
}

TEST(RecordTest, FieldOrderIsFixed) {
  Sample s = MakeSample("x1", "文本");
  s.task_kind = TaskKind::kSceneText;
  s.image_ref = "a.png";
  s.prompt = "OCR:";
  s.lang = Lang::kZh;
  s.meta = {{"z", "1"}, {"a", "2"}};
  EXPECT_EQ(FormatRecord(s),
            R"({"schema_version":1,"id":"x1","task_kind":"SceneText","image_ref":"a.png","prompt":"OCR:",)"
            R"("ground_truth":"文本","lang":"zh","meta":{"a":"2","z":"1"}})");
}

TEST(RecordTest, ParsesMinimalRecord) {
  int version = 0;
  const Sample s = ParseRecord(R"({"id":"a","task_kind":"Chart","ground_truth":"g"})", 1, &version);
  EXPECT_EQ(s.id, "a");
  EXPECT_EQ(s.task_kind, TaskKind::kChart);
  EXPECT_FALSE(s.image_ref.has_value());
  EXPECT_EQ(s.lang, Lang::kOther);
}

TEST(RecordTest, RejectsSchemaViolations) {
  int version = 0;
  EXPECT_THROW(ParseRecord(R"({"id":"a","task_kind":"Chart"})", 1, &version), ParseError);
  EXPECT_THROW(ParseRecord(R"({"id":"a","task_kind":"Nope","ground_truth":"g"})", 1, &version), ParseError);
  EXPECT_THROW(ParseRecord(R"({"id":"a","task_kind":"Chart","ground_truth":"g","extra":1})", 1, &version),
               ParseError);
  EXPECT_THROW(ParseRecord(R"({"id":"a","task_kind":"Chart","ground_truth":"g","meta":{"k":1}})", 1, &version),
               ParseError);
  EXPECT_THROW(ParseRecord("{not json", 1, &version), ParseError);
  EXPECT_THROW(ParseRecord(R"({"id":"","task_kind":"Chart","ground_truth":"g"})", 1, &version), ParseError);
}

TEST(RecordTest, PredictionsMayBeEmpty) {
  int version = 0;
  const Sample s = ParseRecord(R"({"id":"a","task_kind":"Chart","ground_truth":""})", 1, &version,
                               {.require_ground_truth = false});
  EXPECT_EQ(s.ground_truth, "");
}

TEST(ReadRecordsTest, EmptyInputGivesEmptyCorpus) {
  std::istringstream in("");
  EXPECT_TRUE(ReadRecords(in).samples.empty());
}

TEST(ReadRecordsTest, MissingGroundTruthNamesTheLine) {
  std::istringstream in(R"({"id":"a","task_kind":"PlainDoc","ground_truth":"x"})"
                        "\n"
                        R"({"id":"b","task_kind":"PlainDoc"})"
                        "\n");
  try {
    ReadRecords(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ReadRecordsTest, DuplicateIdIsNamed) {
  std::istringstream in(R"({"id":"dup","task_kind":"PlainDoc","ground_truth":"x"})"
                        "\n"
                        R"({"id":"dup","task_kind":"PlainDoc","ground_truth":"y"})"
                        "\n");
  try {
    ReadRecords(in);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("dup"), std::string::npos);
  }
}

TEST(ReadRecordsTest, KeepsFileOrderAndMeta) {
  std::istringstream in(R"({"id":"c","task_kind":"PlainDoc","ground_truth":"1","meta":{"unknown":"kept"}})"
                        "\n\n"
                        R"({"id":"a","task_kind":"PlainDoc","ground_truth":"2"})"
                        "\n"
                        R"({"id":"b","task_kind":"PlainDoc","ground_truth":"3"})");
  const Corpus c = ReadRecords(in);
  ASSERT_EQ(c.samples.size(), 3u);
  EXPECT_EQ(c.samples[0].id, "c");
  EXPECT_EQ(c.samples[2].id, "b");
  EXPECT_EQ(c.samples[0].meta.at("unknown"), "kept");
}

TEST(SaveLoadTest, EmptyCorpusIsEmptyFile) {
  TempDir dir;
  SaveRecords(Corpus{}, dir / "empty.jsonl");
  EXPECT_EQ(ReadFile(dir / "empty.jsonl"), "");
  EXPECT_EQ(LoadRecords(dir / "empty.jsonl"), Corpus{});
}

TEST(SaveLoadTest, RoundTripIsByteStable) {
  TempDir dir;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Corpus c = Generated(seed, 1000);
    SaveRecords(c, dir / "a.jsonl");
    const Corpus back = LoadRecords(dir / "a.jsonl");
    EXPECT_EQ(back, c);
    SaveRecords(back, dir / "b.jsonl");
    EXPECT_EQ(ReadFile(dir / "a.jsonl"), ReadFile(dir / "b.jsonl"));
  }
}

TEST(SaveLoadTest, InvalidCorpusLeavesNoFile) {
  TempDir dir;
  Corpus c;
  c.samples = {MakeSample("a", "x"), MakeSample("a", "y")};
  EXPECT_THROW(SaveRecords(c, dir / "bad.jsonl"), Error);
  EXPECT_FALSE(fs::exists(dir / "bad.jsonl"));
}

TEST(SaveLoadTest, MissingFileNamesPath) {
  try {
    LoadRecords("/nonexistent/ocrkit.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/ocrkit.jsonl"), std::string::npos);
  }
}

TEST(DedupTest, SpecExamples) {
  Corpus test, train;
  test.samples = {MakeSample("t1", "abcd"), MakeSample("t2", "same text")};
  train.samples = {MakeSample("r1", "abcf"), MakeSample("r2", "same text")};
  EXPECT_DOUBLE_EQ(TextSimilarity("abcd", "abcf"), 0.75);
  const Corpus kept = DedupFilter(test, train, 0.8);
  ASSERT_EQ(kept.samples.size(), 1u);
  EXPECT_EQ(kept.samples[0].id, "t1");
  EXPECT_EQ(DedupFilter(test, Corpus{}, 0.9), test);
  EXPECT_THROW(DedupFilter(test, train, 1.5), Error);
}

TEST(DedupTest, MonotoneInThreshold) {
  Rng rng(8);
  auto random_text = [&] {
    std::string s;
    for (int64_t i = rng.UniformInt(0, 8); i > 0; --i) s += static_cast<char>('a' + rng.UniformInt(0, 2));
    return s;
  };
  Corpus test, train;
  for (int i = 0; i < 60; ++i) test.samples.push_back(MakeSample("t" + std::to_string(i), random_text()));
  for (int i = 0; i < 30; ++i) train.samples.push_back(MakeSample("r" + std::to_string(i), random_text()));
  size_t previous = 0;
  for (double threshold = 0.0; threshold <= 1.0; threshold += 0.05) {
    const Corpus kept = DedupFilter(test, train, threshold);
    EXPECT_GE(kept.samples.size(), previous);
    previous = kept.samples.size();
    const Corpus higher = DedupFilter(test, train, std::min(1.0, threshold + 0.1));
    for (const Sample& s : kept.samples) {
      EXPECT_NE(std::find(higher.samples.begin(), higher.samples.end(), s), higher.samples.end());
    }
  }
}

TEST(MixTest, KeepsFloorOfRatio) {
  Corpus previous, next;
  for (int i = 0; i < 10; ++i) previous.samples.push_back(MakeSample("p" + std::to_string(i), "x"));
  next.samples = {MakeSample("n0", "y"), MakeSample("n1", "z")};
  const Corpus mixed = MixStages(previous, next, 0.8, 1);
  ASSERT_EQ(mixed.samples.size(), 10u);
  EXPECT_EQ(mixed.samples[0].id, "n0");
  EXPECT_EQ(mixed.samples[1].id, "n1");
  EXPECT_EQ(MixStages(previous, next, 0.0, 1), next);
  EXPECT_EQ(MixStages(previous, next, 0.8, 1), mixed);
  EXPECT_EQ(MixCount(0.29, 100), 29u);
  EXPECT_EQ(MixCount(0.999, 10), 9u);
}

TEST(MixTest, SizeInvariantAndOrder) {
  for (size_t n = 0; n < 40; n += 3) {
    Corpus previous, next;
    for (size_t i = 0; i < n; ++i) previous.samples.push_back(MakeSample("p" + std::to_string(100 + i), "x"));
    next.samples = {MakeSample("n", "y")};
    for (double ratio : {0.0, 0.1, 0.5, 0.8, 1.0}) {
      const Corpus mixed = MixStages(previous, next, ratio, n);
      EXPECT_EQ(mixed.samples.size(), 1 + MixCount(ratio, n));
      // Sampled records keep their original relative order.
      EXPECT_TRUE(std::is_sorted(mixed.samples.begin() + 1, mixed.samples.end(),
                                 [](const Sample& a, const Sample& b) { return a.id < b.id; }));
    }
  }
}

}  // namespace
}  // namespace ocrkit
