#include "jsonstats/stats.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>

namespace jsonstats {

ValueClass classify_value(Kind kind) noexcept {
    switch (kind) {
    case Kind::string: return ValueClass::textual;
    case Kind::number: return ValueClass::numeric;
    case Kind::boolean:
    case Kind::null: return ValueClass::booleanish;
    case Kind::object:
    case Kind::array: return ValueClass::structural;
    }
    return ValueClass::structural;
}

std::string_view to_string(ValueClass cls) noexcept {
    switch (cls) {
    case ValueClass::textual: return "textual";
    case ValueClass::numeric: return "numeric";
    case ValueClass::booleanish: return "boolean";
    case ValueClass::structural: return "structural";
    }
    return "unknown";
}

std::size_t structural_overhead(const Value& value) noexcept {
    if (value.is_scalar()) {
        return 0;
    }
    std::size_t size = value.serialized_size();
    for (const auto& child : value.children()) {
        size -= child.serialized_size();
    }
    return size;
}

std::size_t height(const Value& root) noexcept {
    std::size_t below = 0;
    for (const auto& child : root.children()) {
        below = std::max(below, height(child) + 1);
    }
    return below;
}

bool value_equals(const Value& a, const Value& b) noexcept {
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
    case Kind::string: return a.as_string() == b.as_string();
    // Shortest round-trip rendering is injective on doubles apart from the
    // two zeros, which both render as "0" and compare equal here.
    case Kind::number: return a.as_number() == b.as_number();
    case Kind::boolean: return a.as_boolean() == b.as_boolean();
    case Kind::null: return true;
    case Kind::object:
    case Kind::array:
        if (a.keys() != b.keys() || a.children().size() != b.children().size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.children().size(); ++i) {
            if (!value_equals(a.children()[i], b.children()[i])) {
                return false;
            }
        }
        return true;
    }
    return false;
}

namespace {

// Assigns every distinct subtree a small integer id. Two nodes receive the
// same id exactly when their minified forms are equal, so grouping never
// has to materialize the serialization of a composite.
class SubtreeInterner {
public:
    std::size_t intern(const Value& node) {
        std::string key;
        key.push_back(static_cast<char>(node.kind()));
        switch (node.kind()) {
        case Kind::string: key += node.as_string(); break;
        case Kind::number: key += format_number(node.as_number()); break;
        case Kind::boolean: key.push_back(node.as_boolean() ? 't' : 'f'); break;
        case Kind::null: break;
        case Kind::object:
        case Kind::array: {
            const bool is_object = node.kind() == Kind::object;
            for (std::size_t i = 0; i < node.children().size(); ++i) {
                if (is_object) {
                    const auto& name = node.keys()[i];
                    append_word(name.size(), key);
                    key += name;
                }
                append_word(intern(node.children()[i]), key);
            }
            break;
        }
        }

        const auto [it, inserted] = ids_.try_emplace(std::move(key), counts_.size());
        if (inserted) {
            counts_.push_back(0);
            classes_.push_back(classify_value(node.kind()));
        }
        ++counts_[it->second];
        return it->second;
    }

    PerClass<std::size_t> duplicates() const {
        PerClass<std::size_t> result;
        for (std::size_t id = 0; id < counts_.size(); ++id) {
            result[classes_[id]] += counts_[id] - 1;
        }
        return result;
    }

private:
    static void append_word(std::uint64_t word, std::string& out) {
        char bytes[sizeof word];
        std::memcpy(bytes, &word, sizeof word);
        out.append(bytes, sizeof word);
    }

    std::unordered_map<std::string, std::size_t> ids_;
    std::vector<std::size_t> counts_;
    std::vector<ValueClass> classes_;
};

// `depth` is relative to the node compute_stats was called on.
void accumulate(const Value& node, std::size_t depth, DocumentStats& stats) {
    ++stats.total_values;
    stats.height = std::max(stats.height, depth);

    auto& aggregate = stats.per_class[classify_value(node.kind())];
    ++aggregate.count;
    aggregate.byte_size += node.is_scalar() ? node.serialized_size() : structural_overhead(node);

    if (depth > 0) {
        if (stats.per_level.size() < depth) {
            stats.per_level.resize(depth);
        }
        auto& level = stats.per_level[depth - 1];
        ++level.value_count;
        if (node.is_scalar()) {
            level.scalar_byte_size += node.serialized_size();
        }
    }

    for (const auto& child : node.children()) {
        accumulate(child, depth + 1, stats);
    }
}

} // namespace

PerClass<std::size_t> count_duplicates(const Value& root) {
    SubtreeInterner interner;
    interner.intern(root);
    return interner.duplicates();
}

std::size_t largest_level(const std::vector<LevelAggregate>& levels) noexcept {
    std::size_t best = 0;
    std::size_t best_bytes = 0;
    for (const auto& level : levels) {
        if (level.scalar_byte_size > 0 && level.scalar_byte_size >= best_bytes) {
            best = level.level;
            best_bytes = level.scalar_byte_size;
        }
    }
    return best;
}

DocumentStats compute_stats(const Value& root) {
    DocumentStats stats;
    stats.minified_size = root.serialized_size();
    accumulate(root, 0, stats);
    for (std::size_t i = 0; i < stats.per_level.size(); ++i) {
        stats.per_level[i].level = i + 1;
    }

    const auto duplicates = count_duplicates(root);
    for (ValueClass cls : all_value_classes) {
        stats.per_class[cls].duplicates = duplicates[cls];
        stats.total_duplicates += duplicates[cls];
    }
    stats.largest_level = largest_level(stats.per_level);
    return stats;
}

} // namespace jsonstats
