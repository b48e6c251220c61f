#include "jsonstats/document.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"

namespace jsonstats {

std::string_view to_string(Kind kind) noexcept {
    switch (kind) {
    case Kind::string: return "string";
    case Kind::number: return "number";
    case Kind::boolean: return "boolean";
    case Kind::null: return "null";
    case Kind::object: return "object";
    case Kind::array: return "array";
    }
    return "unknown";
}

namespace {

constexpr std::array<char, 16> hex_digits = {'0', '1', '2', '3', '4', '5', '6', '7',
                                             '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};

// Short escapes as produced by JSON.stringify; other control bytes use \u00XX.
char short_escape(unsigned char c) noexcept {
    switch (c) {
    case '"': return '"';
    case '\\': return '\\';
    case '\b': return 'b';
    case '\f': return 'f';
    case '\n': return 'n';
    case '\r': return 'r';
    case '\t': return 't';
    default: return 0;
    }
}

std::size_t quoted_size(std::string_view text) noexcept {
    std::size_t size = 2;
    for (unsigned char c : text) {
        if (short_escape(c) != 0) {
            size += 2;
        } else if (c < 0x20) {
            size += 6;
        } else {
            ++size;
        }
    }
    return size;
}

} // namespace

void append_quoted(std::string_view text, std::string& out) {
    out.push_back('"');
    for (unsigned char c : text) {
        if (char e = short_escape(c); e != 0) {
            out.push_back('\\');
            out.push_back(e);
        } else if (c < 0x20) {
            out.append("\\u00");
            out.push_back(hex_digits[c >> 4]);
            out.push_back(hex_digits[c & 0xF]);
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    out.push_back('"');
}

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("JSON numbers must be finite");
    }
    if (value == 0.0) {
        return "0";
    }

    // Shortest scientific form, e.g. "-1.2345e+02" or "5e-07".
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::scientific);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    std::string_view sci(buffer.data(), static_cast<std::size_t>(end - buffer.data()));

    std::string result;
    if (sci.front() == '-') {
        result.push_back('-');
        sci.remove_prefix(1);
    }

    const auto e_pos = sci.find('e');
    std::string digits;
    for (char c : sci.substr(0, e_pos)) {
        if (c != '.') {
            digits.push_back(c);
        }
    }
    int exponent = 0;
    auto exp_text = sci.substr(e_pos + 1);
    if (exp_text.front() == '+') {
        exp_text.remove_prefix(1);
    }
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);

    // value = 0.digits * 10^point
    const int k = static_cast<int>(digits.size());
    const int point = exponent + 1;

    if (k <= point && point <= 21) {
        result += digits;
        result.append(static_cast<std::size_t>(point - k), '0');
    } else if (0 < point && point <= 21) {
        result.append(digits, 0, static_cast<std::size_t>(point));
        result.push_back('.');
        result.append(digits, static_cast<std::size_t>(point));
    } else if (-6 < point && point <= 0) {
        result += "0.";
        result.append(static_cast<std::size_t>(-point), '0');
        result += digits;
    } else {
        result.push_back(digits.front());
        if (k > 1) {
            result.push_back('.');
            result.append(digits, 1);
        }
        result.push_back('e');
        result.push_back(point - 1 < 0 ? '-' : '+');
        result += std::to_string(std::abs(point - 1));
    }
    return result;
}

Value Value::string(std::string text) {
    if (!detail::is_valid_utf8(text)) {
        throw std::invalid_argument("string value is not valid UTF-8");
    }
    Value v;
    v.kind_ = Kind::string;
    v.text_ = std::move(text);
    v.compute_size();
    return v;
}

Value Value::number(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("JSON numbers must be finite");
    }
    Value v;
    v.kind_ = Kind::number;
    v.number_ = value;
    v.compute_size();
    return v;
}

Value Value::boolean(bool value) {
    Value v;
    v.kind_ = Kind::boolean;
    v.boolean_ = value;
    v.compute_size();
    return v;
}

Value Value::null() {
    Value v;
    v.kind_ = Kind::null;
    v.compute_size();
    return v;
}

Value Value::object(std::vector<Member> members) {
    std::vector<std::string> keys;
    std::vector<Value> children;
    keys.reserve(members.size());
    children.reserve(members.size());
    for (auto& [key, child] : members) {
        if (!detail::is_valid_utf8(key)) {
            throw std::invalid_argument("object key is not valid UTF-8");
        }
        keys.push_back(std::move(key));
        children.push_back(std::move(child));
    }
    detail::collapse_duplicate_keys(keys, children);

    Value v;
    v.kind_ = Kind::object;
    v.keys_ = std::move(keys);
    v.children_ = std::move(children);
    for (auto& child : v.children_) {
        child.shift_levels(1);
    }
    v.compute_size();
    return v;
}

Value Value::array(std::vector<Value> items) {
    Value v;
    v.kind_ = Kind::array;
    v.children_ = std::move(items);
    for (auto& child : v.children_) {
        child.shift_levels(1);
    }
    v.compute_size();
    return v;
}

const std::string& Value::as_string() const {
    if (kind_ != Kind::string) {
        throw std::logic_error("value is not a string");
    }
    return text_;
}

double Value::as_number() const {
    if (kind_ != Kind::number) {
        throw std::logic_error("value is not a number");
    }
    return number_;
}

bool Value::as_boolean() const {
    if (kind_ != Kind::boolean) {
        throw std::logic_error("value is not a boolean");
    }
    return boolean_;
}

void Value::shift_levels(std::size_t by) noexcept {
    level_ += by;
    for (auto& child : children_) {
        child.shift_levels(by);
    }
}

void Value::compute_size() {
    switch (kind_) {
    case Kind::string: serialized_size_ = quoted_size(text_); break;
    case Kind::number: serialized_size_ = format_number(number_).size(); break;
    case Kind::boolean: serialized_size_ = boolean_ ? 4 : 5; break;
    case Kind::null: serialized_size_ = 4; break;
    case Kind::object:
    case Kind::array: {
        std::size_t size = 2;
        for (std::size_t i = 0; i < children_.size(); ++i) {
            size += children_[i].serialized_size_;
            if (kind_ == Kind::object) {
                size += quoted_size(keys_[i]) + 1; // key and colon
            }
        }
        if (!children_.empty()) {
            size += children_.size() - 1; // commas
        }
        serialized_size_ = size;
        break;
    }
    }
}

void minify_to(const Value& value, std::string& out) {
    switch (value.kind()) {
    case Kind::string: append_quoted(value.as_string(), out); break;
    case Kind::number: out += format_number(value.as_number()); break;
    case Kind::boolean: out += value.as_boolean() ? "true" : "false"; break;
    case Kind::null: out += "null"; break;
    case Kind::object: {
        out.push_back('{');
        const auto& keys = value.keys();
        const auto& children = value.children();
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i != 0) {
                out.push_back(',');
            }
            append_quoted(keys[i], out);
            out.push_back(':');
            minify_to(children[i], out);
        }
        out.push_back('}');
        break;
    }
    case Kind::array: {
        out.push_back('[');
        bool first = true;
        for (const auto& child : value.children()) {
            if (!first) {
                out.push_back(',');
            }
            first = false;
            minify_to(child, out);
        }
        out.push_back(']');
        break;
    }
    }
}

std::string minify(const Value& value) {
    std::string out;
    out.reserve(value.serialized_size());
    minify_to(value, out);
    return out;
}

std::size_t scalar_size(const Value& value) {
    if (value.is_composite()) {
        throw std::invalid_argument("scalar_size requires a scalar node");
    }
    return value.serialized_size();
}

namespace detail {

void collapse_duplicate_keys(std::vector<std::string>& keys, std::vector<Value>& children) {
    if (keys.size() < 2) {
        return;
    }
    std::unordered_map<std::string_view, std::size_t> first_index;
    first_index.reserve(keys.size());
    bool repeated = false;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = first_index.try_emplace(keys[i], i);
        if (!inserted) {
            repeated = true;
            break;
        }
    }
    if (!repeated) {
        return;
    }

    // Last value wins, placed where the key first appeared.
    first_index.clear();
    std::vector<std::string> out_keys;
    std::vector<Value> out_children;
    // first_index views into out_keys, which must not reallocate.
    out_keys.reserve(keys.size());
    out_children.reserve(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = first_index.find(keys[i]);
        if (it == first_index.end()) {
            out_keys.push_back(std::move(keys[i]));
            out_children.push_back(std::move(children[i]));
            first_index.emplace(out_keys.back(), out_keys.size() - 1);
        } else {
            out_children[it->second] = std::move(children[i]);
        }
    }
    keys = std::move(out_keys);
    children = std::move(out_children);
}

} // namespace detail

} // namespace jsonstats
