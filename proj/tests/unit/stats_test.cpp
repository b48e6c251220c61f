#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "jsonstats/document.hpp"
#include "jsonstats/stats.hpp"
#include "oracle.hpp"
#include "random_json.hpp"

using namespace jsonstats;

namespace {

Value parsed(std::string_view text) {
    auto result = parse(text);
    EXPECT_TRUE(result.ok()) << text;
    return result ? std::move(result).value() : Value::null();
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::filesystem::path(FIXTURE_DIR) / name, std::ios::binary);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t dups(const DocumentStats& s, ValueClass cls) { return s.per_class[cls].duplicates; }
std::size_t count(const DocumentStats& s, ValueClass cls) { return s.per_class[cls].count; }

constexpr auto T = ValueClass::textual;
constexpr auto N = ValueClass::numeric;
constexpr auto B = ValueClass::booleanish;
constexpr auto S = ValueClass::structural;

} // namespace

TEST(ClassifyValue, KindsMapToClasses) {
    EXPECT_EQ(classify_value(Kind::string), T);
    EXPECT_EQ(classify_value(Kind::number), N);
    EXPECT_EQ(classify_value(Kind::boolean), B);
    EXPECT_EQ(classify_value(Kind::null), B);
    EXPECT_EQ(classify_value(Kind::object), S);
    EXPECT_EQ(classify_value(Kind::array), S);
    EXPECT_EQ(to_string(B), "boolean");
}

TEST(ComputeStats, EmptyObject) {
    const auto s = compute_stats(parsed("{}"));
    EXPECT_EQ(s.total_values, 1u);
    EXPECT_EQ(s.height, 0u);
    EXPECT_EQ(s.minified_size, 2u);
    EXPECT_EQ(s.total_duplicates, 0u);
    EXPECT_EQ(count(s, S), 1u);
    EXPECT_EQ(count(s, T) + count(s, N) + count(s, B), 0u);
    EXPECT_EQ(s.per_class[S].byte_size, 2u);
    EXPECT_TRUE(s.per_level.empty());
    EXPECT_EQ(s.largest_level, 0u);
}

TEST(ComputeStats, SingleCandidateLevel) {
    const auto s = compute_stats(parsed(R"({"a":{"b":"x","c":[[]]}})"));
    EXPECT_EQ(s.height, 3u);
    EXPECT_EQ(s.largest_level, 2u);
}

TEST(ComputeStats, StructuralBytesAreOverheadOnly) {
    const auto s = compute_stats(parsed(R"({"ab":[1,true]})"));
    // {"ab":} = 7, [,] = 3
    EXPECT_EQ(s.per_class[S].byte_size, 10u);
    EXPECT_EQ(s.per_class[N].byte_size, 1u);
    EXPECT_EQ(s.per_class[B].byte_size, 4u);
    EXPECT_EQ(s.minified_size, 15u);
    ASSERT_EQ(s.per_level.size(), 2u);
    EXPECT_EQ(s.per_level[0], (LevelAggregate{1, 1, 0}));
    EXPECT_EQ(s.per_level[1], (LevelAggregate{2, 2, 5}));
}

TEST(ComputeStats, LevelsAreRelativeToTheGivenNode) {
    const Value root = parsed(R"({"a":{"b":[1,2]}})");
    const auto inner = compute_stats(root.children()[0]);
    EXPECT_EQ(inner.height, 2u);
    EXPECT_EQ(inner.total_values, 4u);
    EXPECT_EQ(inner.largest_level, 2u);
    EXPECT_EQ(height(root.children()[0]), 2u);
}

TEST(CountDuplicates, NineEqualBooleans) {
    const auto d = count_duplicates(
        parsed(R"({"a":null,"b":null,"c":null,"d":null,"e":null,"f":null,"g":null,"h":null,"i":null})"));
    EXPECT_EQ(d[B], 8u);
    EXPECT_EQ(d[T] + d[N] + d[S], 0u);
}

TEST(CountDuplicates, NestedEqualObjects) {
    const auto d = count_duplicates(parsed(R"([{"a":1},{"a":1}])"));
    EXPECT_EQ(d[S], 1u);
    EXPECT_EQ(d[N], 1u);
}

TEST(CountDuplicates, EqualityIsCanonical) {
    auto d = count_duplicates(parsed("[1, 1.0, 1e0, 10e-1]"));
    EXPECT_EQ(d[N], 3u);
    d = count_duplicates(parsed(R"(["A", "A"])"));
    EXPECT_EQ(d[T], 1u);
    d = count_duplicates(parsed(R"([{"a":1,"b":2},{"b":2,"a":1}])"));
    EXPECT_EQ(d[S], 0u);
    d = count_duplicates(parsed(R"([[],{},[],{}])"));
    EXPECT_EQ(d[S], 2u);
    d = count_duplicates(parsed(R"([true,false,null,null])"));
    EXPECT_EQ(d[B], 1u);
}

TEST(CountDuplicates, RootParticipates) {
    // The inner [[]] equals nothing; the innermost [] appears once.
    EXPECT_EQ(count_duplicates(parsed("[[],[]]"))[S], 1u);
    EXPECT_EQ(count_duplicates(parsed("5"))[N], 0u);
}

TEST(ValueEquals, Examples) {
    EXPECT_TRUE(value_equals(parsed("1.0"), parsed("1")));
    EXPECT_FALSE(value_equals(parsed(R"({"a":1,"b":2})"), parsed(R"({"b":2,"a":1})")));
    EXPECT_TRUE(value_equals(parsed(R"("x")"), parsed(R"("x")")));
    EXPECT_FALSE(value_equals(parsed("[]"), parsed("{}")));
    EXPECT_FALSE(value_equals(parsed("null"), parsed("false")));
    EXPECT_TRUE(value_equals(parsed("-0"), parsed("0")));
}

TEST(ValueEquals, AgreesWithMinifiedComparison) {
    const auto docs = random_json::corpus(200, 12, 5000);
    std::vector<Value> values;
    for (const auto& d : docs) {
        values.push_back(parsed(d));
    }
    for (const auto& a : values) {
        for (const auto& b : values) {
            ASSERT_EQ(value_equals(a, b), minify(a) == minify(b));
        }
    }
}

TEST(Height, Examples) {
    EXPECT_EQ(height(parsed("5")), 0u);
    EXPECT_EQ(height(parsed("[]")), 0u);
    EXPECT_EQ(height(parsed(R"({"a":1,"b":true})")), 1u);
    EXPECT_EQ(height(parsed("[[[[[[[[[1]]]]]]]]]")), 9u);
}

TEST(LargestLevel, TieGoesToTheDeeperLevel) {
    const std::vector<LevelAggregate> levels = {{1, 2, 8}, {2, 3, 8}, {3, 1, 4}};
    EXPECT_EQ(largest_level(levels), 2u);
    EXPECT_EQ(compute_stats(parsed(R"({"a":"xy","b":{"c":"zw"}})")).largest_level, 2u);
    EXPECT_EQ(compute_stats(parsed(R"({"a":"xyz","b":{"c":"zw"}})")).largest_level, 1u);
}

TEST(LargestLevel, ZeroWhenNoScalarBytes) {
    EXPECT_EQ(largest_level({}), 0u);
    EXPECT_EQ(largest_level({{1, 1, 0}, {2, 1, 0}}), 0u);
    EXPECT_EQ(compute_stats(parsed("[[[]]]")).largest_level, 0u);
}

TEST(StructuralOverhead, Values) {
    EXPECT_EQ(structural_overhead(parsed("1")), 0u);
    EXPECT_EQ(structural_overhead(parsed("[]")), 2u);
    EXPECT_EQ(structural_overhead(parsed("[1,2,3]")), 4u);
    EXPECT_EQ(structural_overhead(parsed(R"({"é":1,"b":[]})")), 12u);
}

// Recorded statistics of the worked examples, reproduced on reconstructed fixtures.
struct Recorded {
    const char* file;
    std::size_t size, values, height, duplicates, largest_level;
};

class RecordedFixtures : public ::testing::TestWithParam<Recorded> {};

TEST_P(RecordedFixtures, StatsMatchRecordAndOracle) {
    const auto& r = GetParam();
    const std::string text = read_fixture(r.file);
    const auto s = compute_stats(parsed(text));
    EXPECT_EQ(s.minified_size, r.size);
    EXPECT_EQ(s.total_values, r.values);
    EXPECT_EQ(s.height, r.height);
    EXPECT_EQ(s.total_duplicates, r.duplicates);
    EXPECT_EQ(s.largest_level, r.largest_level);

    const auto reference = oracle::Json::parse(text);
    const auto summary = oracle::summarize(reference);
    const auto pairwise = oracle::pairwise_duplicates(reference);
    EXPECT_EQ(s.minified_size, oracle::minified_size(reference));
    EXPECT_EQ(s.height, summary.height);
    EXPECT_EQ(s.largest_level, summary.largest_level);
    for (ValueClass cls : all_value_classes) {
        const auto i = static_cast<std::size_t>(cls);
        EXPECT_EQ(s.per_class[cls].count, summary.counts[i]);
        EXPECT_EQ(s.per_class[cls].byte_size, summary.bytes[i]);
        EXPECT_EQ(s.per_class[cls].duplicates, pairwise[i]);
    }
}

INSTANTIATE_TEST_SUITE_P(Recorded, RecordedFixtures,
                         ::testing::Values(Recorded{"01-grunt-clean-task.json", 92, 10, 3, 3, 2},
                                           Recorded{"02-circleci-matrix.json", 94, 13, 9, 0, 9},
                                           Recorded{"03-tslint-basic.json", 66, 5, 4, 0, 4},
                                           Recorded{"04-entry-point-regulation.json", 519, 32, 4, 10, 3},
                                           Recorded{"05-travis-notifications.json", 672, 16, 3, 12, 3},
                                           Recorded{"06-geojson-multipolygon.json", 189, 53, 5, 21, 5},
                                           Recorded{"07-github-funding-empty.json", 182, 11, 1, 8, 1},
                                           Recorded{"08-npm-package-manifest.json", 2258, 72, 3, 3, 1},
                                           Recorded{"09-json-resume.json", 3047, 99, 4, 2, 3},
                                           Recorded{"10-eslint-configuration.json", 1140, 54, 4, 39, 2},
                                           Recorded{"11-nightwatch-configuration.json", 1506, 66, 3, 42, 1}));

TEST(RecordedBreakdowns, ClassBreakdowns) {
    auto s = compute_stats(parsed(read_fixture("04-entry-point-regulation.json")));
    EXPECT_EQ(dups(s, T), 4u);
    EXPECT_EQ(dups(s, B), 3u);
    EXPECT_EQ(dups(s, S), 3u);
    EXPECT_EQ(s.total_values - count(s, S), 20u);

    s = compute_stats(parsed(read_fixture("07-github-funding-empty.json")));
    EXPECT_EQ(count(s, B), 9u);
    EXPECT_EQ(dups(s, B), 8u);

    s = compute_stats(parsed(read_fixture("10-eslint-configuration.json")));
    EXPECT_EQ(count(s, N), 39u);
}

class RandomCorpus : public ::testing::Test {
protected:
    static const std::vector<std::string>& corpus() {
        static const auto docs = random_json::corpus(1000, 50, 100);
        return docs;
    }
};

TEST_F(RandomCorpus, DuplicatesMatchPairwiseOracle) {
    for (const auto& text : corpus()) {
        const auto mine = count_duplicates(parsed(text));
        const auto theirs = oracle::pairwise_duplicates(oracle::Json::parse(text));
        for (ValueClass cls : all_value_classes) {
            ASSERT_EQ(mine[cls], theirs[static_cast<std::size_t>(cls)]) << to_string(cls) << " in " << text;
        }
    }
}

TEST_F(RandomCorpus, Conservation) {
    for (const auto& text : corpus()) {
        const auto s = compute_stats(parsed(text));
        std::size_t counts = 0, bytes = 0, dup_sum = 0;
        for (ValueClass cls : all_value_classes) {
            counts += s.per_class[cls].count;
            bytes += s.per_class[cls].byte_size;
            dup_sum += s.per_class[cls].duplicates;
            EXPECT_LE(s.per_class[cls].duplicates, s.per_class[cls].count == 0 ? 0 : s.per_class[cls].count - 1);
            if (s.per_class[cls].count == 0) {
                EXPECT_EQ(s.per_class[cls].byte_size, 0u);
            }
        }
        EXPECT_EQ(counts, s.total_values);
        EXPECT_EQ(bytes, s.minified_size);
        EXPECT_EQ(dup_sum, s.total_duplicates);
        const auto level_values = std::accumulate(s.per_level.begin(), s.per_level.end(), std::size_t{0},
                                                  [](std::size_t acc, const LevelAggregate& l) { return acc + l.value_count; });
        EXPECT_EQ(level_values + 1, s.total_values);
        EXPECT_EQ(s.per_level.size(), s.height);
        for (std::size_t i = 0; i < s.per_level.size(); ++i) {
            EXPECT_EQ(s.per_level[i].level, i + 1);
        }
    }
}

TEST_F(RandomCorpus, MatchesOracleSummary) {
    for (const auto& text : corpus()) {
        const auto s = compute_stats(parsed(text));
        const auto o = oracle::summarize(oracle::Json::parse(text));
        ASSERT_EQ(s.total_values, o.total_values);
        ASSERT_EQ(s.height, o.height);
        ASSERT_EQ(s.largest_level, o.largest_level) << text;
        for (const auto& level : s.per_level) {
            const auto vc = o.level_counts.count(level.level) ? o.level_counts.at(level.level) : 0;
            const auto sb = o.level_scalar_bytes.count(level.level) ? o.level_scalar_bytes.at(level.level) : 0;
            ASSERT_EQ(level.value_count, vc);
            ASSERT_EQ(level.scalar_byte_size, sb);
        }
    }
}

TEST_F(RandomCorpus, Deterministic) {
    for (const auto& text : corpus()) {
        EXPECT_EQ(compute_stats(parsed(text)), compute_stats(parsed(text)));
    }
}

TEST_F(RandomCorpus, AppendingANodeIsMonotone) {
    for (const auto& text : corpus()) {
        const Value root = parsed(text);
        const auto before = compute_stats(root);
        const Value grown = Value::array({root, Value::number(1)});
        const auto after = compute_stats(grown);
        EXPECT_GT(after.total_values, before.total_values);
        EXPECT_GE(after.height, before.height);

        if (root.kind() == Kind::array) {
            std::vector<Value> items = root.children();
            items.push_back(Value::null());
            const auto appended = compute_stats(Value::array(std::move(items)));
            EXPECT_EQ(appended.total_values, before.total_values + 1);
            EXPECT_GE(appended.height, before.height);
        }
    }
}
