#ifndef JSONSTATS_DOCUMENT_HPP
#define JSONSTATS_DOCUMENT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jsonstats {

enum class Kind { string, number, boolean, null, object, array };

std::string_view to_string(Kind kind) noexcept;

/// An immutable JSON node annotated with its depth and the byte length of
/// its minified UTF-8 serialization.
///
/// Nodes built through the factory functions start at level 0; wrapping a
/// value in `object()` or `array()` re-levels the whole subtree, so the
/// level of a node is always its distance from the root of the tree it was
/// last placed in.
class Value {
public:
    using Member = std::pair<std::string, Value>;

    static Value string(std::string text);
    static Value number(double value);
    static Value boolean(bool value);
    static Value null();
    /// Members are kept in the given order. Repeated keys keep the position
    /// of the first occurrence and the value of the last one.
    static Value object(std::vector<Member> members);
    static Value array(std::vector<Value> items);

    Kind kind() const noexcept { return kind_; }
    bool is_scalar() const noexcept { return kind_ != Kind::object && kind_ != Kind::array; }
    bool is_composite() const noexcept { return !is_scalar(); }

    std::size_t level() const noexcept { return level_; }
    std::size_t serialized_size() const noexcept { return serialized_size_; }

    // Scalar payloads. Accessing the wrong one throws std::logic_error.
    const std::string& as_string() const;
    double as_number() const;
    bool as_boolean() const;

    /// Children in document order. Empty for scalars.
    const std::vector<Value>& children() const noexcept { return children_; }
    /// Object keys, parallel to `children()`. Empty for arrays and scalars.
    const std::vector<std::string>& keys() const noexcept { return keys_; }

private:
    friend class Parser;

    Value() = default;
    void shift_levels(std::size_t by) noexcept;
    void compute_size();

    Kind kind_ = Kind::null;
    std::size_t level_ = 0;
    std::size_t serialized_size_ = 0;
    std::string text_;
    double number_ = 0.0;
    bool boolean_ = false;
    std::vector<std::string> keys_;
    std::vector<Value> children_;
};

struct ParseFailure {
    std::string message;
    std::size_t line = 1;   // 1-based
    std::size_t column = 1; // 1-based, counted in code points
};

/// Either a parsed tree or the position of the first syntax error.
class ParseResult {
public:
    ParseResult(Value value) : state_(std::move(value)) {}
    ParseResult(ParseFailure failure) : state_(std::move(failure)) {}

    bool ok() const noexcept { return std::holds_alternative<Value>(state_); }
    explicit operator bool() const noexcept { return ok(); }

    const Value& value() const& { return std::get<Value>(state_); }
    Value&& value() && { return std::get<Value>(std::move(state_)); }
    const ParseFailure& error() const& { return std::get<ParseFailure>(state_); }

private:
    std::variant<Value, ParseFailure> state_;
};

/// Maximum container nesting accepted by `parse`.
inline constexpr std::size_t max_parse_depth = 10000;

/// Parses RFC 8259 JSON. The input must be valid UTF-8 and contain exactly
/// one value surrounded by optional whitespace.
ParseResult parse(std::string_view text);

/// Canonical serialization: no whitespace between tokens, keys in parse
/// order, minimal string escaping, shortest round-trip number rendering.
std::string minify(const Value& value);
void minify_to(const Value& value, std::string& out);

/// Minified byte length of a scalar node. Throws std::invalid_argument for
/// objects and arrays.
std::size_t scalar_size(const Value& value);

/// Shortest round-trip decimal rendering of a binary64 value, using the
/// same layout rules as ECMAScript Number::toString (exponent form below
/// 1e-6 and from 1e21 upward; negative zero renders as "0").
std::string format_number(double value);

/// Appends `text` as a JSON string literal. Only the quote, backslash and
/// control characters are escaped.
void append_quoted(std::string_view text, std::string& out);

} // namespace jsonstats

#endif
