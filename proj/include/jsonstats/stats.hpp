#ifndef JSONSTATS_STATS_HPP
#define JSONSTATS_STATS_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "jsonstats/document.hpp"

namespace jsonstats {

/// Content class of a value. Booleans and nulls share a class.
enum class ValueClass { textual, numeric, booleanish, structural };

inline constexpr std::array<ValueClass, 4> all_value_classes = {
    ValueClass::textual, ValueClass::numeric, ValueClass::booleanish, ValueClass::structural};

inline constexpr std::array<ValueClass, 3> scalar_value_classes = {
    ValueClass::textual, ValueClass::numeric, ValueClass::booleanish};

ValueClass classify_value(Kind kind) noexcept;

/// Lowercase name as used in qualifiers and reports ("boolean" for booleanish).
std::string_view to_string(ValueClass cls) noexcept;

/// Fixed-size map keyed by ValueClass.
template <typename T>
class PerClass {
public:
    T& operator[](ValueClass cls) noexcept { return slots_[static_cast<std::size_t>(cls)]; }
    const T& operator[](ValueClass cls) const noexcept { return slots_[static_cast<std::size_t>(cls)]; }

    bool operator==(const PerClass&) const = default;

private:
    std::array<T, 4> slots_{};
};

struct ClassAggregate {
    std::size_t count = 0;
    // Scalar classes: sum of scalar sizes. Structural: delimiter, comma,
    // colon and key bytes of composites, excluding their children.
    std::size_t byte_size = 0;
    std::size_t duplicates = 0;

    bool operator==(const ClassAggregate&) const = default;
};

struct LevelAggregate {
    std::size_t level = 0;
    std::size_t value_count = 0;
    std::size_t scalar_byte_size = 0;

    bool operator==(const LevelAggregate&) const = default;
};

struct DocumentStats {
    std::size_t minified_size = 0;
    std::size_t total_values = 0;
    std::size_t height = 0;
    std::size_t total_duplicates = 0;
    PerClass<ClassAggregate> per_class;
    /// Levels 1..height in order.
    std::vector<LevelAggregate> per_level;
    /// Non-root level with the most scalar bytes, deepest on ties; 0 when no
    /// non-root level holds scalar bytes.
    std::size_t largest_level = 0;

    bool operator==(const DocumentStats&) const = default;
};

DocumentStats compute_stats(const Value& root);

/// Every node, root included, is grouped by class and minified form; a
/// group of n equal nodes contributes n - 1 duplicates.
PerClass<std::size_t> count_duplicates(const Value& root);

/// True iff both values have the same minified serialization.
bool value_equals(const Value& a, const Value& b) noexcept;

/// Maximum node level; 0 for scalars and empty composites.
std::size_t height(const Value& root) noexcept;

/// Bytes a composite contributes beyond its children. 0 for scalars.
std::size_t structural_overhead(const Value& value) noexcept;

/// Index of the largest `scalar_byte_size`, preferring deeper levels on
/// ties; 0 if every level is empty.
std::size_t largest_level(const std::vector<LevelAggregate>& levels) noexcept;

} // namespace jsonstats

#endif
