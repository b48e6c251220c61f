#include "jsonstats/taxonomy.hpp"

#include <algorithm>

namespace jsonstats {

SizeTier classify_size(std::size_t minified_size) noexcept {
    if (minified_size < tier2_min_bytes) {
        return SizeTier::tier1;
    }
    if (minified_size < tier3_min_bytes) {
        return SizeTier::tier2;
    }
    return SizeTier::tier3;
}

ContentProfile classify_content(const PerClass<ClassAggregate>& per_class) {
    ContentProfile profile;
    std::uint64_t best = 0;
    bool any_scalar = false;
    for (ValueClass cls : scalar_value_classes) {
        const auto& aggregate = per_class[cls];
        profile.scores[cls] = static_cast<std::uint64_t>(aggregate.count) * aggregate.byte_size;
        if (aggregate.count > 0) {
            any_scalar = true;
            best = std::max(best, profile.scores[cls]);
        }
    }
    if (!any_scalar) {
        profile.classes = {ValueClass::structural};
        return profile;
    }
    for (ValueClass cls : scalar_value_classes) {
        if (per_class[cls].count > 0 && profile.scores[cls] == best) {
            profile.classes.push_back(cls);
        }
    }
    return profile;
}

Redundancy classify_redundancy(std::size_t total_duplicates, std::size_t total_values) noexcept {
    // duplicates / values >= 1/4, without rounding
    return 4 * static_cast<std::uint64_t>(total_duplicates) >= total_values
               ? Redundancy::redundant
               : Redundancy::non_redundant;
}

Nesting classify_nesting(std::size_t height, std::size_t largest_level, bool structural) noexcept {
    if (structural && height >= 5) {
        return Nesting::nested;
    }
    return static_cast<std::uint64_t>(height) * largest_level >= 10 ? Nesting::nested
                                                                    : Nesting::flat;
}

Nesting classify_nesting(const DocumentStats& stats, const ContentProfile& content) noexcept {
    return classify_nesting(stats.height, stats.largest_level, content.is_structural());
}

std::string_view qualifier(SizeTier tier) noexcept {
    switch (tier) {
    case SizeTier::tier1: return "tier 1 minified < 100 bytes";
    case SizeTier::tier2: return "tier 2 minified >= 100 < 1000 bytes";
    case SizeTier::tier3: return "tier 3 minified >= 1000 bytes";
    }
    return "";
}

std::string_view qualifier(Redundancy redundancy) noexcept {
    return redundancy == Redundancy::redundant ? "redundant" : "non-redundant";
}

std::string_view qualifier(Nesting nesting) noexcept {
    return nesting == Nesting::flat ? "flat" : "nested";
}

std::optional<std::string> acronym(SizeTier tier, ValueClass content, Redundancy redundancy,
                                   Nesting nesting) {
    std::string code;
    switch (tier) {
    case SizeTier::tier1: code.push_back('T'); break;
    case SizeTier::tier2: code.push_back('S'); break;
    case SizeTier::tier3: code.push_back('L'); break;
    }
    switch (content) {
    case ValueClass::textual: code.push_back('T'); break;
    case ValueClass::numeric: code.push_back('N'); break;
    case ValueClass::booleanish: code.push_back('B'); break;
    case ValueClass::structural: return std::nullopt;
    }
    code.push_back(redundancy == Redundancy::redundant ? 'R' : 'N');
    code.push_back(nesting == Nesting::flat ? 'F' : 'N');
    return code;
}

TaxonomyLabel classify(const DocumentStats& stats) {
    TaxonomyLabel label;
    label.tier = classify_size(stats.minified_size);
    label.content = classify_content(stats.per_class);
    label.redundancy = classify_redundancy(stats.total_duplicates, stats.total_values);
    label.nesting = classify_nesting(stats, label.content);

    label.qualifiers.emplace_back(qualifier(label.tier));
    for (ValueClass cls : label.content.classes) {
        label.qualifiers.emplace_back(to_string(cls));
    }
    label.qualifiers.emplace_back(qualifier(label.redundancy));
    label.qualifiers.emplace_back(qualifier(label.nesting));

    label.acronym = acronym(label.tier, label.content.primary(), label.redundancy, label.nesting);
    return label;
}

TaxonomyLabel classify(const Value& root) { return classify(compute_stats(root)); }

} // namespace jsonstats
