#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "pscore/counts.hpp"

using namespace pscore;

namespace {

Dataset golden_dataset() {
  std::ifstream in(PSCORE_TEST_DATA "/golden_records.jsonl");
  REQUIRE(in);
  const auto records = parse_records(in, RecordFormat::jsonl);
  const std::vector<std::string> groups = {"Group 1", "Group 2"};
  return build_dataset(records, groups).dataset;
}

PublicationRecord rec(std::string group, std::string venue,
                      std::vector<std::string> authors, std::string id) {
  PublicationRecord r;
  r.group = std::move(group);
  r.venue = std::move(venue);
  r.authors = std::move(authors);
  r.paper_id = std::move(id);
  return r;
}

}  // namespace

TEST_CASE("aggregate the worked example") {
  const CountsTable c = aggregate(golden_dataset());
  CHECK(c.n_group_venue == std::vector<long long>{3, 2, 1, 2, 4, 2});
  CHECK(c.n_venue == std::vector<long long>{5, 6, 3});
  CHECK(c.n_group == std::vector<long long>{6, 8});
  // Two-author papers with authors drawn from three per group.
  for (long long d : c.d_venue) CHECK(d >= 1);
}

TEST_CASE("author-count overrides") {
  const Dataset ds = golden_dataset().with_corpus_author_counts({{"v1", 10}, {"V2", 60}, {"v3", 20}});
  Warnings warnings;
  const CountsTable c = aggregate(ds, &warnings);
  CHECK(c.d_venue == std::vector<long long>{10, 60, 20});
  CHECK(warnings.empty());

  SUBCASE("unknown venue is ignored with a warning") {
    Warnings w;
    const auto c2 = aggregate(golden_dataset().with_corpus_author_counts({{"v1", 10}, {"nowhere", 5}}), &w);
    CHECK(c2.d_venue[0] == 10);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("nowhere") != std::string::npos);
  }
  SUBCASE("count below one is rejected") {
    CHECK_THROWS_AS(aggregate(golden_dataset().with_corpus_author_counts({{"v1", 0}})), ValidationError);
  }
}

TEST_CASE("singleton dataset") {
  const std::vector<PublicationRecord> records = {rec("G1", "v1", {"a1"}, "p")};
  const std::vector<std::string> groups = {"G1"};
  const CountsTable c = aggregate(build_dataset(records, groups).dataset);
  CHECK(c.n_group_venue == std::vector<long long>{1});
  CHECK(c.n_venue == std::vector<long long>{1});
  CHECK(c.n_group == std::vector<long long>{1});
  CHECK(c.d_venue == std::vector<long long>{1});
}

TEST_CASE("distinct authors are counted by folded name across groups") {
  const std::vector<PublicationRecord> records = {
      rec("G1", "v1", {"Ann Lee", "Bo"}, "p1"),
      rec("G2", "v1", {"ann  lee"}, "p2"),
      rec("G2", "v2", {"Cy"}, "p3"),
  };
  const std::vector<std::string> groups = {"G1", "G2"};
  const CountsTable c = aggregate(build_dataset(records, groups).dataset);
  CHECK(c.d_venue == std::vector<long long>{2, 1});
}

TEST_CASE("marginal identities and permutation equivariance") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick_group(0, 3), pick_venue(0, 7), pick_author(0, 25);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<PublicationRecord> records;
    for (int i = 0; i < 120; ++i)
      records.push_back(rec("G" + std::to_string(pick_group(rng)), "V" + std::to_string(pick_venue(rng)),
                            {"a" + std::to_string(pick_author(rng)), "a" + std::to_string(pick_author(rng))},
                            "p" + std::to_string(i % 90)));
    std::vector<std::string> groups = {"G0", "G1", "G2", "G3"};
    const CountsTable c = aggregate(build_dataset(records, groups).dataset);

    long long by_venue = 0, by_group = 0;
    for (auto n : c.n_venue) by_venue += n;
    for (auto n : c.n_group) by_group += n;
    CHECK(by_venue == by_group);
    CHECK(by_venue == static_cast<long long>(build_dataset(records, groups).dataset.records().size()));

    // Record order does not matter.
    // Dedup keeps the first copy, so compare on a duplicate-free input.
    const auto dedup = build_dataset(records, groups).dataset.records();
    auto dedup_shuffled = dedup;
    std::shuffle(dedup_shuffled.begin(), dedup_shuffled.end(), rng);
    CHECK(aggregate(build_dataset(dedup_shuffled, groups).dataset) ==
          aggregate(build_dataset(dedup, groups).dataset));

    // Group order permutes rows.
    std::vector<std::string> reversed(groups.rbegin(), groups.rend());
    const CountsTable r = aggregate(build_dataset(records, reversed).dataset);
    const std::size_t t = groups.size(), v = c.venue_count();
    REQUIRE(r.venue_count() == v);
    for (std::size_t w = 0; w < t; ++w) {
      CHECK(r.n_group[w] == c.n_group[t - 1 - w]);
      for (std::size_t j = 0; j < v; ++j) CHECK(r.at(w, j) == c.at(t - 1 - w, j));
    }
    CHECK(r.n_venue == c.n_venue);
    CHECK(r.d_venue == c.d_venue);
  }
}

TEST_CASE("make_counts and restrict_counts") {
  const CountsTable c = make_counts({"a", "b"}, {"x", "y", "z"}, {3, 2, 1, 2, 4, 2}, {10, 60, 20});
  CHECK(c.n_venue == std::vector<long long>{5, 6, 3});
  CHECK(c.n_group == std::vector<long long>{6, 8});
  const CountsTable sub = restrict_counts(c, {1}, {0, 2});
  CHECK(sub.group_names == std::vector<std::string>{"b"});
  CHECK(sub.n_group_venue == std::vector<long long>{2, 2});
  CHECK(sub.d_venue == std::vector<long long>{10, 20});

  CHECK_THROWS_AS(make_counts({"a"}, {"x", "y"}, {1, 0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(make_counts({"a"}, {"x"}, {1}, {0}), ValidationError);
  CHECK_THROWS_AS(make_counts({"a", "b"}, {"x"}, {1, 0}, {1}), ValidationError);
}
