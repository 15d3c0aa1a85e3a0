/*
 * Copyright 2026 The lsacluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lsacluster/vsm.hpp"

namespace lsacluster {
namespace {

using Corpus = std::vector<std::vector<std::string>>;

Vocabulary vocab_of(const Corpus& docs) { return build_vocabulary(std::span<const std::vector<std::string>>(docs)); }

TEST(Vocabulary, SingleDocument) {
  const auto v = vocab_of({{"a", "b", "a"}});
  EXPECT_EQ(v.terms, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(v.df, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(v.document_count, 1u);
}

TEST(Vocabulary, DocumentFrequency) {
  const auto v = vocab_of({{"a"}, {"a", "b"}});
  EXPECT_EQ(v.df[v.index.at("a")], 2u);
  EXPECT_EQ(v.df[v.index.at("b")], 1u);
}

TEST(Vocabulary, DisjointDocumentsInFirstOccurrenceOrder) {
  const auto v = vocab_of({{"a"}, {"b"}});
  EXPECT_EQ(v.terms, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(v.index.at("b"), 1u);
}

TEST(Vocabulary, EmptyCorpus) {
  try {
    vocab_of({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyCorpus);
  }
}

TEST(Tfidf, TermInEveryDocumentIsOmitted) {
  const Corpus docs{{"a", "b"}, {"a"}};
  const auto v = vocab_of(docs);
  const DocVector x = tfidf_vector(docs[0], v, "d0");
  ASSERT_EQ(x.entries.size(), 1u);
  EXPECT_EQ(x.entries[0].dim, v.index.at("b"));
  EXPECT_EQ(x.weight(v.index.at("a")), 0.0);
  EXPECT_EQ(x.doc_id, "d0");
}

TEST(Tfidf, HandValue) {
  // |D| = 10, the term occurs twice in one document: 2 ln 10.
  Corpus docs(10, std::vector<std::string>{"filler"});
  docs[0] = {"t", "t", "filler"};
  const auto v = vocab_of(docs);
  const DocVector x = tfidf_vector(docs[0], v);
  EXPECT_NEAR(x.weight(v.index.at("t")), 4.6052, 1e-4);
  EXPECT_DOUBLE_EQ(x.weight(v.index.at("t")), 2.0 * std::log(10.0));
}

TEST(Tfidf, EmptyDocumentAndUnknownTerms) {
  const Corpus docs{{"a"}, {"b"}};
  const auto v = vocab_of(docs);
  EXPECT_TRUE(tfidf_vector(std::vector<std::string>{}, v).empty());
  EXPECT_TRUE(tfidf_vector(std::vector<std::string>{"zzz"}, v).empty());
}

TEST(Tfidf, NonNegativeSortedAndLinearInTf) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Corpus docs(2 + rng() % 8);
    for (auto& d : docs)
      for (std::size_t w = rng() % 12; w > 0; --w) d.push_back("t" + std::to_string(rng() % 15));
    const auto v = vocab_of(docs);
    for (const auto& d : docs) {
      const DocVector x = tfidf_vector(d, v);
      for (std::size_t i = 0; i < x.entries.size(); ++i) {
        EXPECT_GT(x.entries[i].weight, 0.0);
        if (i > 0) {
          EXPECT_LT(x.entries[i - 1].dim, x.entries[i].dim);
        }
      }
      std::vector<std::string> doubled = d;
      doubled.insert(doubled.end(), d.begin(), d.end());
      const DocVector y = tfidf_vector(doubled, v);  // df held fixed
      ASSERT_EQ(x.entries.size(), y.entries.size());
      for (std::size_t i = 0; i < x.entries.size(); ++i) EXPECT_DOUBLE_EQ(y.entries[i].weight, 2 * x.entries[i].weight);
    }
  }
}

TEST(Tfidf, SummarySupportIsSubsetOfFullText) {
  // Within one vocabulary, a document made of a subset of another's terms
  // cannot gain support.
  const Corpus docs{{"a", "b", "c"}, {"c", "d"}, {"e"}};
  const auto v = vocab_of(docs);
  const DocVector full = tfidf_vector(docs[0], v);
  const DocVector part = tfidf_vector(std::vector<std::string>{"a", "c"}, v);
  for (const auto& e : part.entries) EXPECT_GT(full.weight(e.dim), 0.0);
}

TEST(DocVector, DenseRoundTrip) {
  const std::vector<double> dense{0.0, 1.5, 0.0, 2.0};
  const DocVector v = DocVector::from_dense("x", dense);
  EXPECT_EQ(v.entries.size(), 2u);
  EXPECT_EQ(v.to_dense(4), dense);
}

TEST(DebugDump, Format) {
  std::vector<DocVector> vs{{"cat/a.txt", {{0, 1.0}, {3, 4.605170186}}}, {"cat/b.txt", {}}};
  std::ostringstream out;
  write_vectors(out, vs);
  EXPECT_EQ(out.str(), "cat/a.txt\t0:1\t3:4.60517\ncat/b.txt\n");
}

}  // namespace
}  // namespace lsacluster
