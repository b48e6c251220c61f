#ifndef JSONSTATS_TAXONOMY_HPP
#define JSONSTATS_TAXONOMY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsonstats/stats.hpp"

namespace jsonstats {

enum class SizeTier { tier1, tier2, tier3 };
enum class Redundancy { redundant, non_redundant };
enum class Nesting { flat, nested };

inline constexpr std::size_t tier2_min_bytes = 100;
inline constexpr std::size_t tier3_min_bytes = 1000;

/// Qualifying content classes and the scores that selected them.
///
/// `classes` is either a nonempty subset of the scalar classes, in
/// textual, numeric, boolean order, or exactly {structural} for documents
/// without any scalar value.
struct ContentProfile {
    std::vector<ValueClass> classes;
    PerClass<std::uint64_t> scores; // count * cumulative bytes, scalar classes only

    bool is_structural() const noexcept {
        return classes.size() == 1 && classes.front() == ValueClass::structural;
    }
    ValueClass primary() const noexcept { return classes.front(); }

    bool operator==(const ContentProfile&) const = default;
};

struct TaxonomyLabel {
    SizeTier tier = SizeTier::tier1;
    ContentProfile content;
    Redundancy redundancy = Redundancy::non_redundant;
    Nesting nesting = Nesting::flat;
    /// [size, content..., redundancy, nesting]
    std::vector<std::string> qualifiers;
    /// Four-letter code; absent for structural documents.
    std::optional<std::string> acronym;

    bool operator==(const TaxonomyLabel&) const = default;
};

/// Printed in place of an acronym for structural documents.
inline constexpr std::string_view no_acronym_marker = "no acronym: structural";

SizeTier classify_size(std::size_t minified_size) noexcept;
ContentProfile classify_content(const PerClass<ClassAggregate>& per_class);
Redundancy classify_redundancy(std::size_t total_duplicates, std::size_t total_values) noexcept;
Nesting classify_nesting(std::size_t height, std::size_t largest_level, bool structural) noexcept;
Nesting classify_nesting(const DocumentStats& stats, const ContentProfile& content) noexcept;

TaxonomyLabel classify(const DocumentStats& stats);
TaxonomyLabel classify(const Value& root);

std::string_view qualifier(SizeTier tier) noexcept;
std::string_view qualifier(Redundancy redundancy) noexcept;
std::string_view qualifier(Nesting nesting) noexcept;

/// Table code for a scalar content class; nullopt for structural.
std::optional<std::string> acronym(SizeTier tier, ValueClass content, Redundancy redundancy,
                                   Nesting nesting);

} // namespace jsonstats

#endif
