#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pscore/names.hpp"
#include "pscore/records.hpp"

using namespace pscore;

namespace {

std::vector<PublicationRecord> parse(const std::string& text, RecordFormat f) {
  std::istringstream in(text);
  return parse_records(in, f);
}

std::vector<PublicationRecord> golden_records() {
  std::ifstream in(PSCORE_TEST_DATA "/golden_records.jsonl");
  REQUIRE(in);
  return parse_records(in, RecordFormat::jsonl);
}

PublicationRecord rec(std::string group, std::string venue,
                      std::optional<std::string> id = std::nullopt) {
  PublicationRecord r;
  r.group = std::move(group);
  r.venue = std::move(venue);
  r.authors = {"someone"};
  r.paper_id = std::move(id);
  return r;
}

}  // namespace

TEST_CASE("name normalization") {
  CHECK(normalize_name("  Foo \t  Bar\n") == "Foo Bar");
  CHECK(normalize_name("   ") == "");
  CHECK(fold_key(" ACM  SIGIR ") == "acm sigir");
  CHECK(fold_key("Müller") == "müller");
}

TEST_CASE("parse a single JSONL line") {
  auto records = parse(R"({"group":"G1","authors":["A. Alice"],"venue":"V1"})", RecordFormat::jsonl);
  REQUIRE(records.size() == 1);
  CHECK(records[0].group == "G1");
  CHECK(records[0].venue == "V1");
  CHECK(records[0].authors == std::vector<std::string>{"A. Alice"});
  CHECK_FALSE(records[0].paper_id);
  CHECK_FALSE(records[0].year);
}

TEST_CASE("empty input gives no records") {
  CHECK(parse("", RecordFormat::jsonl).empty());
  CHECK(parse("\n  \n", RecordFormat::jsonl).empty());
  CHECK(parse("", RecordFormat::csv).empty());
}

TEST_CASE("JSONL names are normalized and order is kept") {
  auto records = parse(
      "{\"group\":\"  G1 \",\"authors\":[\" Ann   Lee \"],\"venue\":\"V  1\",\"year\":2001,\"id\":7}\n"
      "{\"group\":\"G2\",\"authors\":[\"B\"],\"venue\":\"V2\",\"title\":\" A  title \"}\n",
      RecordFormat::jsonl);
  REQUIRE(records.size() == 2);
  CHECK(records[0].group == "G1");
  CHECK(records[0].venue == "V 1");
  CHECK(records[0].authors[0] == "Ann Lee");
  CHECK(records[0].year == 2001);
  CHECK(records[0].paper_id == "7");
  CHECK(records[1].title == "A title");
}

TEST_CASE("JSONL errors carry line numbers and field names") {
  SUBCASE("malformed JSON") {
    try {
      parse("{\"group\":\"G\",\"authors\":[\"a\"],\"venue\":\"v\"}\n{oops\n", RecordFormat::jsonl);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("missing venue") {
    try {
      parse("\n{\"group\":\"G\",\"authors\":[\"a\"]}\n", RecordFormat::jsonl);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.line() == 2);
      CHECK(e.field() == "venue");
    }
  }
  SUBCASE("empty authors") {
    try {
      parse("{\"group\":\"G\",\"authors\":[],\"venue\":\"v\"}", RecordFormat::jsonl);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.field() == "authors");
    }
  }
  SUBCASE("blank group") {
    CHECK_THROWS_AS(parse("{\"group\":\"  \",\"authors\":[\"a\"],\"venue\":\"v\"}", RecordFormat::jsonl),
                    ValidationError);
  }
  SUBCASE("non-integer year") {
    CHECK_THROWS_AS(parse("{\"group\":\"G\",\"authors\":[\"a\"],\"venue\":\"v\",\"year\":\"x\"}",
                          RecordFormat::jsonl),
                    ValidationError);
  }
}

TEST_CASE("CSV parsing with RFC-4180 quoting") {
  const std::string text =
      "id,title,group,authors,venue,year\r\n"
      "1,\"Commas, and \"\"quotes\"\"\",G1,Ann;  Bob ,V1,2004\r\n"
      ",\"Multi\nline\",G2,Cy,V2,\r\n";
  auto records = parse(text, RecordFormat::csv);
  REQUIRE(records.size() == 2);
  CHECK(records[0].title == "Commas, and \"quotes\"");
  CHECK(records[0].authors == std::vector<std::string>{"Ann", "Bob"});
  CHECK(records[0].year == 2004);
  CHECK_FALSE(records[1].paper_id);
  CHECK(records[1].title == "Multi line");
  CHECK_FALSE(records[1].year);
}

TEST_CASE("CSV row with empty venue names the field and row") {
  const std::string text =
      "id,title,group,authors,venue,year\n"
      "1,t,G1,Ann,V1,2000\n"
      "2,t,G1,Ann,,2000\n";
  try {
    parse(text, RecordFormat::csv);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "venue");
    CHECK(e.line() == 3);
  }
}

TEST_CASE("CSV structural errors") {
  CHECK_THROWS_AS(parse("group,authors,venue\nG,\"a,v\n", RecordFormat::csv), ParseError);
  CHECK_THROWS_AS(parse("group,authors,venue\nG,a\n", RecordFormat::csv), ParseError);
  CHECK_THROWS_AS(parse("group,authors\nG,a\n", RecordFormat::csv), ValidationError);
}

TEST_CASE("round trip through both formats") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 5);
  const std::vector<std::string> words = {"Alpha", "beta  gamma", "Δelta", "q\"uote", "x,y", " pad "};
  std::vector<PublicationRecord> original;
  for (int i = 0; i < 60; ++i) {
    PublicationRecord r;
    if (pick(rng) > 2) r.paper_id = "id-" + std::to_string(i);
    if (pick(rng) > 1) r.title = normalize_name(words[pick(rng)] + " " + words[pick(rng)]);
    r.group = normalize_name("G " + words[pick(rng)]);
    for (int a = 0; a <= pick(rng) % 3; ++a) r.authors.push_back(normalize_name(words[pick(rng)]));
    r.venue = normalize_name(words[pick(rng)]);
    if (pick(rng) > 2) r.year = 1990 + pick(rng);
    original.push_back(r);
  }
  for (auto format : {RecordFormat::jsonl, RecordFormat::csv}) {
    std::ostringstream out;
    write_records(out, original, format);
    std::istringstream in(out.str());
    CHECK(parse_records(in, format) == original);
  }
}

TEST_CASE("build_dataset on the worked example") {
  const auto records = golden_records();
  REQUIRE(records.size() == 14);
  const std::vector<std::string> both = {"Group 1", "Group 2"};
  auto built = build_dataset(records, both);
  CHECK(built.dataset.groups() == both);
  CHECK(built.dataset.venues() == std::vector<std::string>{"v1", "v2", "v3"});
  CHECK(built.dataset.records().size() == 14);
  CHECK(built.stats.merged_duplicates == 0);

  const std::vector<std::string> only_first = {"Group 1"};
  auto g1 = build_dataset(records, only_first);
  CHECK(g1.dataset.groups().size() == 1);
  CHECK(g1.dataset.records().size() == 6);
  CHECK(g1.stats.dropped_non_reference == 8);
  CHECK(g1.dataset.venues() == built.dataset.venues_of_group(0));
}

TEST_CASE("distinct-papers rule") {
  const std::vector<std::string> groups = {"G1", "G2"};
  std::vector<PublicationRecord> records = {
      rec("G1", "v1", "p1"), rec("G1", "v1", "p1"),  // same paper twice
      rec("G2", "v1", "p1"),                         // coauthored across groups
      rec("G1", "v2"), rec("G1", "v2"),              // no id, no title: distinct
  };
  auto titled = rec("G2", "v2");
  titled.title = "Same Title";
  records.push_back(titled);
  titled.title = "  same   TITLE ";
  records.push_back(titled);

  auto built = build_dataset(records, groups);
  CHECK(built.dataset.records().size() == 5);
  CHECK(built.stats.merged_duplicates == 2);
}

TEST_CASE("build_dataset groups and venues use normalized, case-folded identity") {
  std::vector<PublicationRecord> records = {rec("lab  one", "Conf"), rec("LAB ONE", "conf"),
                                            rec("Lab Two", "Other")};
  const std::vector<std::string> groups = {"Lab One", "Lab Two"};
  auto built = build_dataset(records, groups);
  CHECK(built.dataset.groups() == groups);
  CHECK(built.dataset.venues() == std::vector<std::string>{"Conf", "Other"});
  for (const auto& r : built.dataset.records()) CHECK((r.group == "Lab One" || r.group == "Lab Two"));
}

TEST_CASE("build_dataset errors") {
  std::vector<PublicationRecord> records = {rec("G1", "v1")};
  const std::vector<std::string> none;
  CHECK_THROWS_AS(build_dataset(records, none), ParameterError);
  const std::vector<std::string> dup = {"G1", "g1"};
  CHECK_THROWS_AS(build_dataset(records, dup), ParameterError);
  const std::vector<std::string> other = {"G9"};
  CHECK_THROWS_AS(build_dataset(records, other), EmptyDatasetError);
  const std::vector<std::string> with_empty = {"G1", "G2"};
  try {
    build_dataset(records, with_empty);
    FAIL("expected EmptyGroupError");
  } catch (const EmptyGroupError& e) {
    CHECK(e.group() == "G2");
  }
}

TEST_CASE("build_dataset is idempotent") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 9);
  const std::vector<std::string> groups = {"G0", "G1", "G2"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PublicationRecord> records;
    for (int i = 0; i < 80; ++i) {
      auto r = rec("g" + std::to_string(pick(rng) % 4), "Venue " + std::to_string(pick(rng)));
      if (pick(rng) < 5) r.paper_id = "p" + std::to_string(pick(rng));
      records.push_back(r);
    }
    for (const auto& g : groups) records.push_back(rec(g, "Venue 0"));
    const auto first = build_dataset(records, groups);
    const auto second = build_dataset(first.dataset.records(), groups);
    CHECK(second.dataset == first.dataset);
    CHECK(second.stats.merged_duplicates == 0);
  }
}

TEST_CASE("year filter") {
  auto a = rec("G", "v1");
  a.year = 2000;
  auto b = rec("G", "v2");
  b.year = 2010;
  auto c = rec("G", "v3");
  const std::vector<PublicationRecord> records = {a, b, c};
  const std::vector<std::string> groups = {"G"};
  auto built = build_dataset(records, groups, YearRange{2005, std::nullopt});
  CHECK(built.dataset.venues() == std::vector<std::string>{"v2"});
  CHECK(built.stats.dropped_by_year == 2);
  CHECK(build_dataset(records, groups).dataset.venues().size() == 3);
}

TEST_CASE("group list and author-count override files") {
  std::istringstream groups("Group 1\n\n  Group   2 \n");
  CHECK(parse_group_list(groups) == std::vector<std::string>{"Group 1", "Group 2"});

  std::istringstream csv("venue,count\nv1,10\n\"v 2\",60\n");
  auto o = parse_author_count_overrides(csv);
  CHECK(o.at("v1") == 10);
  CHECK(o.at("v 2") == 60);

  std::istringstream jsonl("{\"venue\":\"v1\",\"count\":3}\n{\"venue\":\"v3\",\"count\":0}\n");
  auto j = parse_author_count_overrides(jsonl);
  CHECK(j.at("v3") == 0);

  std::istringstream dup("venue,count\nv1,1\nV1,2\n");
  CHECK_THROWS_AS(parse_author_count_overrides(dup), ValidationError);
  std::istringstream bad("venue,count\nv1,ten\n");
  CHECK_THROWS_AS(parse_author_count_overrides(bad), ValidationError);
}
