#include <charconv>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "detail.hpp"
#include "jsonstats/document.hpp"

namespace jsonstats {

namespace detail {

// Length of the UTF-8 sequence starting at `text[i]`, or 0 if it is not a
// well-formed sequence (overlongs, surrogates and values above U+10FFFF are
// rejected).
std::size_t utf8_sequence_length(std::string_view text, std::size_t i) noexcept {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    const unsigned char lead = byte(i);
    if (lead < 0x80) {
        return 1;
    }
    std::size_t length = 0;
    unsigned char lo = 0x80;
    unsigned char hi = 0xBF;
    if (lead >= 0xC2 && lead <= 0xDF) {
        length = 2;
    } else if (lead >= 0xE0 && lead <= 0xEF) {
        length = 3;
        if (lead == 0xE0) {
            lo = 0xA0;
        } else if (lead == 0xED) {
            hi = 0x9F;
        }
    } else if (lead >= 0xF0 && lead <= 0xF4) {
        length = 4;
        if (lead == 0xF0) {
            lo = 0x90;
        } else if (lead == 0xF4) {
            hi = 0x8F;
        }
    } else {
        return 0;
    }
    if (i + length > text.size()) {
        return 0;
    }
    if (byte(i + 1) < lo || byte(i + 1) > hi) {
        return 0;
    }
    for (std::size_t k = 2; k < length; ++k) {
        if (byte(i + k) < 0x80 || byte(i + k) > 0xBF) {
            return 0;
        }
    }
    return length;
}

bool is_valid_utf8(std::string_view text) noexcept {
    for (std::size_t i = 0; i < text.size();) {
        const auto n = utf8_sequence_length(text, i);
        if (n == 0) {
            return false;
        }
        i += n;
    }
    return true;
}

} // namespace detail

namespace {

void append_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

struct SyntaxError {
    std::size_t offset;
    std::string message;
};

} // namespace

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        try {
            skip_whitespace();
            Value root = parse_value(0);
            skip_whitespace();
            if (pos_ != text_.size()) {
                fail("unexpected " + describe_current() + " after document value");
            }
            return root;
        } catch (const SyntaxError& e) {
            return locate(e);
        }
    }

private:
    [[noreturn]] void fail(std::string message) const { throw SyntaxError{pos_, std::move(message)}; }
    [[noreturn]] void fail_at(std::size_t offset, std::string message) const {
        throw SyntaxError{offset, std::move(message)};
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return text_[pos_]; }

    std::string describe_current() const {
        if (at_end()) {
            return "end of input";
        }
        const auto c = static_cast<unsigned char>(peek());
        if (c < 0x20 || c >= 0x7F) {
            static constexpr char hex[] = "0123456789ABCDEF";
            return std::string("byte 0x") + hex[c >> 4] + hex[c & 0xF];
        }
        return std::string("character '") + static_cast<char>(c) + "'";
    }

    void skip_whitespace() noexcept {
        while (!at_end()) {
            const char c = peek();
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
                break;
            }
            ++pos_;
        }
    }

    void expect(char c) {
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "' but found " + describe_current());
        }
        ++pos_;
    }

    Value make_node(Kind kind, std::size_t level) {
        Value v;
        v.kind_ = kind;
        v.level_ = level;
        return v;
    }

    Value parse_value(std::size_t level) {
        if (at_end()) {
            fail("unexpected end of input; expected a value");
        }
        switch (peek()) {
        case '{': return parse_object(level);
        case '[': return parse_array(level);
        case '"': {
            Value v = make_node(Kind::string, level);
            v.text_ = parse_string();
            v.compute_size();
            return v;
        }
        case 't': return parse_literal("true", Kind::boolean, true, level);
        case 'f': return parse_literal("false", Kind::boolean, false, level);
        case 'n': return parse_literal("null", Kind::null, false, level);
        default:
            if (peek() == '-' || is_digit(peek())) {
                return parse_number(level);
            }
            fail("unexpected " + describe_current() + "; expected a value");
        }
    }

    Value parse_literal(std::string_view word, Kind kind, bool truth, std::size_t level) {
        for (char c : word) {
            if (at_end()) {
                fail("unexpected end of input in literal");
            }
            if (peek() != c) {
                fail("invalid literal; expected '" + std::string(word) + "'");
            }
            ++pos_;
        }
        Value v = make_node(kind, level);
        v.boolean_ = truth;
        v.compute_size();
        return v;
    }

    Value parse_number(std::size_t level) {
        const std::size_t start = pos_;
        if (peek() == '-') {
            ++pos_;
        }
        if (at_end() || !is_digit(peek())) {
            fail("invalid number; expected a digit");
        }
        if (peek() == '0') {
            ++pos_;
        } else {
            while (!at_end() && is_digit(peek())) {
                ++pos_;
            }
        }
        if (!at_end() && peek() == '.') {
            ++pos_;
            if (at_end() || !is_digit(peek())) {
                fail("invalid number; expected a digit after '.'");
            }
            while (!at_end() && is_digit(peek())) {
                ++pos_;
            }
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            ++pos_;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                ++pos_;
            }
            if (at_end() || !is_digit(peek())) {
                fail("invalid number; expected a digit in exponent");
            }
            while (!at_end() && is_digit(peek())) {
                ++pos_;
            }
        }

        const std::string_view lexeme = text_.substr(start, pos_ - start);
        double number = 0.0;
        const auto [ptr, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), number);
        if (ec == std::errc::result_out_of_range) {
            // from_chars reports underflow and overflow alike; strtod tells
            // them apart (underflow rounds toward zero, overflow is infinite).
            const std::string copy(lexeme);
            number = std::strtod(copy.c_str(), nullptr);
            if (!std::isfinite(number)) {
                fail_at(start, "number out of range");
            }
        } else if (ec != std::errc{} || ptr != lexeme.data() + lexeme.size()) {
            fail_at(start, "invalid number");
        }

        Value v = make_node(Kind::number, level);
        v.number_ = number;
        v.compute_size();
        return v;
    }

    unsigned parse_hex4() {
        unsigned value = 0;
        for (int i = 0; i < 4; ++i) {
            if (at_end()) {
                fail("unexpected end of input in unicode escape");
            }
            const char c = peek();
            value <<= 4;
            if (c >= '0' && c <= '9') {
                value |= static_cast<unsigned>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                value |= static_cast<unsigned>(c - 'a' + 10);
            } else if (c >= 'A' && c <= 'F') {
                value |= static_cast<unsigned>(c - 'A' + 10);
            } else {
                fail("invalid hex digit in unicode escape");
            }
            ++pos_;
        }
        return value;
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            if (at_end()) {
                fail("unexpected end of input in string");
            }
            const auto c = static_cast<unsigned char>(peek());
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (c == '\\') {
                parse_escape(out);
                continue;
            }
            if (c < 0x20) {
                fail("unescaped control character in string");
            }
            if (c < 0x80) {
                out.push_back(static_cast<char>(c));
                ++pos_;
                continue;
            }
            const std::size_t n = detail::utf8_sequence_length(text_, pos_);
            if (n == 0) {
                fail("invalid UTF-8 sequence in string");
            }
            out.append(text_.substr(pos_, n));
            pos_ += n;
        }
    }

    void parse_escape(std::string& out) {
        const std::size_t start = pos_;
        ++pos_; // backslash
        if (at_end()) {
            fail("unexpected end of input in escape sequence");
        }
        const char c = peek();
        ++pos_;
        switch (c) {
        case '"': out.push_back('"'); return;
        case '\\': out.push_back('\\'); return;
        case '/': out.push_back('/'); return;
        case 'b': out.push_back('\b'); return;
        case 'f': out.push_back('\f'); return;
        case 'n': out.push_back('\n'); return;
        case 'r': out.push_back('\r'); return;
        case 't': out.push_back('\t'); return;
        case 'u': break;
        default: fail_at(start, "invalid escape sequence");
        }

        char32_t cp = parse_hex4();
        if (cp >= 0xDC00 && cp <= 0xDFFF) {
            fail_at(start, "unpaired low surrogate in unicode escape");
        }
        if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (pos_ + 1 >= text_.size() || text_[pos_] != '\\' || text_[pos_ + 1] != 'u') {
                fail_at(start, "unpaired high surrogate in unicode escape");
            }
            pos_ += 2;
            const char32_t low = parse_hex4();
            if (low < 0xDC00 || low > 0xDFFF) {
                fail_at(start, "unpaired high surrogate in unicode escape");
            }
            cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
        }
        append_utf8(cp, out);
    }

    void enter(std::size_t level) const {
        if (level >= max_parse_depth) {
            fail("maximum nesting depth exceeded");
        }
    }

    Value parse_object(std::size_t level) {
        enter(level);
        expect('{');
        Value v = make_node(Kind::object, level);
        skip_whitespace();
        if (!at_end() && peek() == '}') {
            ++pos_;
            v.compute_size();
            return v;
        }
        for (;;) {
            skip_whitespace();
            if (at_end() || peek() != '"') {
                fail("unexpected " + describe_current() + "; expected an object key");
            }
            v.keys_.push_back(parse_string());
            skip_whitespace();
            expect(':');
            skip_whitespace();
            v.children_.push_back(parse_value(level + 1));
            skip_whitespace();
            if (at_end()) {
                fail("unexpected end of input; expected ',' or '}'");
            }
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == '}') {
                ++pos_;
                break;
            }
            fail("unexpected " + describe_current() + "; expected ',' or '}'");
        }
        detail::collapse_duplicate_keys(v.keys_, v.children_);
        v.compute_size();
        return v;
    }

    Value parse_array(std::size_t level) {
        enter(level);
        expect('[');
        Value v = make_node(Kind::array, level);
        skip_whitespace();
        if (!at_end() && peek() == ']') {
            ++pos_;
            v.compute_size();
            return v;
        }
        for (;;) {
            skip_whitespace();
            v.children_.push_back(parse_value(level + 1));
            skip_whitespace();
            if (at_end()) {
                fail("unexpected end of input; expected ',' or ']'");
            }
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail("unexpected " + describe_current() + "; expected ',' or ']'");
        }
        v.compute_size();
        return v;
    }

    ParseFailure locate(const SyntaxError& error) const {
        ParseFailure failure;
        failure.message = error.message;
        const std::size_t offset = std::min(error.offset, text_.size());
        for (std::size_t i = 0; i < offset; ++i) {
            const auto c = static_cast<unsigned char>(text_[i]);
            if (c == '\n') {
                ++failure.line;
                failure.column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++failure.column;
            }
        }
        return failure;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

ParseResult parse(std::string_view text) { return Parser(text).run(); }

} // namespace jsonstats
