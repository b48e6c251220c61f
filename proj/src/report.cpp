#include "jsonstats/report.hpp"

#include <cmath>
#include <stdexcept>

namespace jsonstats {

double rounded_percent(std::size_t part, std::size_t whole) noexcept {
    if (whole == 0) {
        return 0.0;
    }
    // Round half-up in hundredths of a percent using integers only.
    const auto hundredths = (static_cast<std::uint64_t>(part) * 20000 + whole) / (2 * whole);
    return static_cast<double>(hundredths) / 100.0;
}

AnalysisReport build_report(const DocumentStats& stats) {
    AnalysisReport report;
    report.classification = classify(stats);

    for (ValueClass cls : all_value_classes) {
        const auto& aggregate = stats.per_class[cls];
        report.content_distribution.by_count[cls] = aggregate.count;
        report.content_distribution.by_bytes[cls] = aggregate.byte_size;
        report.by_class.push_back(ClassRow{cls, aggregate.count, aggregate.byte_size,
                                           aggregate.duplicates,
                                           rounded_percent(aggregate.duplicates, aggregate.count)});
    }

    report.summary = ReportSummary{stats.minified_size, stats.total_values, stats.height,
                                   stats.total_duplicates};
    report.by_level = stats.per_level;
    return report;
}

AnalysisReport build_report(const Value& root) { return build_report(compute_stats(root)); }

namespace {

Value count(std::size_t n) { return Value::number(static_cast<double>(n)); }

Value distribution_value(const PerClass<std::size_t>& values) {
    std::vector<Value::Member> members;
    for (ValueClass cls : all_value_classes) {
        members.emplace_back(std::string(to_string(cls)), count(values[cls]));
    }
    return Value::object(std::move(members));
}

// Reading side. Every accessor throws on a shape mismatch.

[[noreturn]] void schema_error(std::string_view what) {
    throw std::runtime_error("malformed report: " + std::string(what));
}

const Value& member(const Value& object, std::string_view key) {
    if (object.kind() != Kind::object) {
        schema_error("expected an object around '" + std::string(key) + "'");
    }
    for (std::size_t i = 0; i < object.keys().size(); ++i) {
        if (object.keys()[i] == key) {
            return object.children()[i];
        }
    }
    schema_error("missing field '" + std::string(key) + "'");
}

std::size_t read_count(const Value& object, std::string_view key) {
    const Value& v = member(object, key);
    if (v.kind() != Kind::number || v.as_number() < 0 || std::floor(v.as_number()) != v.as_number()) {
        schema_error("field '" + std::string(key) + "' is not a count");
    }
    return static_cast<std::size_t>(v.as_number());
}

const std::vector<Value>& read_array(const Value& object, std::string_view key) {
    const Value& v = member(object, key);
    if (v.kind() != Kind::array) {
        schema_error("field '" + std::string(key) + "' is not an array");
    }
    return v.children();
}

ValueClass read_class(std::string_view name) {
    for (ValueClass cls : all_value_classes) {
        if (to_string(cls) == name) {
            return cls;
        }
    }
    schema_error("unknown class '" + std::string(name) + "'");
}

PerClass<std::size_t> read_distribution(const Value& object) {
    PerClass<std::size_t> values;
    for (ValueClass cls : all_value_classes) {
        values[cls] = read_count(object, to_string(cls));
    }
    return values;
}

// Rebuilds the label from its qualifier strings; content scores come from
// the by-class rows.
TaxonomyLabel read_label(const Value& object, const std::vector<ClassRow>& rows) {
    TaxonomyLabel label;
    for (const Value& q : read_array(object, "qualifiers")) {
        if (q.kind() != Kind::string) {
            schema_error("qualifier is not a string");
        }
        label.qualifiers.push_back(q.as_string());
    }
    if (label.qualifiers.size() < 4) {
        schema_error("too few qualifiers");
    }

    const auto& first = label.qualifiers.front();
    bool tier_found = false;
    for (SizeTier tier : {SizeTier::tier1, SizeTier::tier2, SizeTier::tier3}) {
        if (qualifier(tier) == first) {
            label.tier = tier;
            tier_found = true;
        }
    }
    if (!tier_found) {
        schema_error("unknown size qualifier");
    }
    for (std::size_t i = 1; i + 2 < label.qualifiers.size(); ++i) {
        label.content.classes.push_back(read_class(label.qualifiers[i]));
    }
    const auto& redundancy = label.qualifiers[label.qualifiers.size() - 2];
    const auto& nesting = label.qualifiers.back();
    if (redundancy == qualifier(Redundancy::redundant)) {
        label.redundancy = Redundancy::redundant;
    } else if (redundancy == qualifier(Redundancy::non_redundant)) {
        label.redundancy = Redundancy::non_redundant;
    } else {
        schema_error("unknown redundancy qualifier");
    }
    if (nesting == qualifier(Nesting::flat)) {
        label.nesting = Nesting::flat;
    } else if (nesting == qualifier(Nesting::nested)) {
        label.nesting = Nesting::nested;
    } else {
        schema_error("unknown nesting qualifier");
    }

    for (const ClassRow& row : rows) {
        if (row.cls != ValueClass::structural) {
            label.content.scores[row.cls] = static_cast<std::uint64_t>(row.count) * row.byte_size;
        }
    }

    const Value& code = member(object, "acronym");
    if (code.kind() == Kind::string) {
        label.acronym = code.as_string();
    } else if (code.kind() != Kind::null) {
        schema_error("acronym must be a string or null");
    }
    return label;
}

} // namespace

Value report_to_value(const AnalysisReport& report) {
    std::vector<Value> qualifiers;
    for (const auto& q : report.classification.qualifiers) {
        qualifiers.push_back(Value::string(q));
    }
    Value classification = Value::object({
        {"qualifiers", Value::array(std::move(qualifiers))},
        {"acronym", report.classification.acronym ? Value::string(*report.classification.acronym)
                                                  : Value::null()},
    });

    Value distribution = Value::object({
        {"byCount", distribution_value(report.content_distribution.by_count)},
        {"byBytes", distribution_value(report.content_distribution.by_bytes)},
    });

    Value summary = Value::object({
        {"minifiedSize", count(report.summary.minified_size)},
        {"totalValues", count(report.summary.total_values)},
        {"height", count(report.summary.height)},
        {"duplicatedValues", count(report.summary.duplicated_values)},
    });

    std::vector<Value> by_class;
    for (const auto& row : report.by_class) {
        by_class.push_back(Value::object({
            {"class", Value::string(std::string(to_string(row.cls)))},
            {"count", count(row.count)},
            {"byteSize", count(row.byte_size)},
            {"duplicates", count(row.duplicates)},
            {"duplicatePercent", Value::number(row.duplicate_percent)},
        }));
    }

    std::vector<Value> by_level;
    for (const auto& row : report.by_level) {
        by_level.push_back(Value::object({
            {"level", count(row.level)},
            {"valueCount", count(row.value_count)},
            {"scalarByteSize", count(row.scalar_byte_size)},
        }));
    }

    return Value::object({
        {"schemaVersion", Value::number(report_schema_version)},
        {"classification", std::move(classification)},
        {"contentDistribution", std::move(distribution)},
        {"summary", std::move(summary)},
        {"byClass", Value::array(std::move(by_class))},
        {"byLevel", Value::array(std::move(by_level))},
    });
}

std::string serialize_report(const AnalysisReport& report) { return minify(report_to_value(report)); }

AnalysisReport parse_report(std::string_view text) {
    auto parsed = parse(text);
    if (!parsed) {
        throw std::runtime_error("malformed report: " + parsed.error().message);
    }
    const Value& root = parsed.value();
    if (read_count(root, "schemaVersion") != static_cast<std::size_t>(report_schema_version)) {
        schema_error("unsupported schemaVersion");
    }

    AnalysisReport report;
    for (const Value& row : read_array(root, "byClass")) {
        const Value& name = member(row, "class");
        if (name.kind() != Kind::string) {
            schema_error("class is not a string");
        }
        const Value& percent = member(row, "duplicatePercent");
        if (percent.kind() != Kind::number) {
            schema_error("duplicatePercent is not a number");
        }
        report.by_class.push_back(ClassRow{read_class(name.as_string()), read_count(row, "count"),
                                           read_count(row, "byteSize"), read_count(row, "duplicates"),
                                           percent.as_number()});
    }
    for (const Value& row : read_array(root, "byLevel")) {
        report.by_level.push_back(LevelAggregate{read_count(row, "level"), read_count(row, "valueCount"),
                                                 read_count(row, "scalarByteSize")});
    }

    report.classification = read_label(member(root, "classification"), report.by_class);

    const Value& distribution = member(root, "contentDistribution");
    report.content_distribution.by_count = read_distribution(member(distribution, "byCount"));
    report.content_distribution.by_bytes = read_distribution(member(distribution, "byBytes"));

    const Value& summary = member(root, "summary");
    report.summary = ReportSummary{read_count(summary, "minifiedSize"), read_count(summary, "totalValues"),
                                   read_count(summary, "height"), read_count(summary, "duplicatedValues")};
    return report;
}

std::string serialize_failure(const ParseFailure& failure) {
    return minify(Value::object({{"error", Value::object({
                                               {"message", Value::string(failure.message)},
                                               {"line", count(failure.line)},
                                               {"column", count(failure.column)},
                                           })}}));
}

} // namespace jsonstats
