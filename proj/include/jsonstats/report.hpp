#ifndef JSONSTATS_REPORT_HPP
#define JSONSTATS_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jsonstats/document.hpp"
#include "jsonstats/stats.hpp"
#include "jsonstats/taxonomy.hpp"

namespace jsonstats {

inline constexpr int report_schema_version = 1;

struct ContentDistribution {
    PerClass<std::size_t> by_count;
    /// Scalar bytes per scalar class; composite overhead under structural.
    PerClass<std::size_t> by_bytes;

    bool operator==(const ContentDistribution&) const = default;
};

struct ReportSummary {
    std::size_t minified_size = 0;
    std::size_t total_values = 0;
    std::size_t height = 0;
    std::size_t duplicated_values = 0;

    bool operator==(const ReportSummary&) const = default;
};

struct ClassRow {
    ValueClass cls = ValueClass::textual;
    std::size_t count = 0;
    std::size_t byte_size = 0;
    std::size_t duplicates = 0;
    /// Share of this class's values that are duplicates, in percent,
    /// rounded half-up to two decimals. Display only.
    double duplicate_percent = 0.0;

    bool operator==(const ClassRow&) const = default;
};

/// Sections in presentation order.
struct AnalysisReport {
    TaxonomyLabel classification;
    ContentDistribution content_distribution;
    ReportSummary summary;
    std::vector<ClassRow> by_class;       // textual, numeric, boolean, structural
    std::vector<LevelAggregate> by_level; // levels 1..height

    bool operator==(const AnalysisReport&) const = default;
};

/// `part / whole` as a percentage rounded half-up to two decimals; 0 when
/// `whole` is 0.
double rounded_percent(std::size_t part, std::size_t whole) noexcept;

AnalysisReport build_report(const DocumentStats& stats);
AnalysisReport build_report(const Value& root);

/// Report as a JSON value tree (schemaVersion, classification,
/// contentDistribution, summary, byClass, byLevel).
Value report_to_value(const AnalysisReport& report);

/// Minified JSON text of `report_to_value`.
std::string serialize_report(const AnalysisReport& report);

/// Inverse of `serialize_report`. Throws std::runtime_error when the text
/// is not a report of the current schema version.
AnalysisReport parse_report(std::string_view text);

/// {"error":{"message":...,"line":...,"column":...}}
std::string serialize_failure(const ParseFailure& failure);

} // namespace jsonstats

#endif
