#pragma once
//  Lexer for the supported IEC 61131-3 ST subset.
//
//  Total: never throws on malformed input. Lexical errors are reported as
//  diagnostics and lexing continues, so a single pass surfaces every problem.
//  Unknown characters become punctuation tokens (with a diagnostic) rather
//  than being dropped, which keeps the stream byte-exact.

#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "pid2st/diagnostics.hpp"
#include "pid2st/token.hpp"

namespace pid2st {

inline const std::array<std::string_view, 39>& st_keywords()
{
    static const std::array<std::string_view, 39> kws = {
        "PROGRAM",  "END_PROGRAM",  "FUNCTION_BLOCK", "END_FUNCTION_BLOCK",
        "VAR",      "VAR_INPUT",    "VAR_OUTPUT",     "VAR_IN_OUT",
        "END_VAR",  "IF",           "THEN",           "ELSIF",
        "ELSE",     "END_IF",       "CASE",           "OF",
        "END_CASE", "FOR",          "TO",             "BY",
        "DO",       "END_FOR",      "WHILE",          "END_WHILE",
        "EXIT",     "RETURN",       "AND",            "OR",
        "XOR",      "NOT",          "MOD",            "TRUE",
        "FALSE",    "BOOL",         "INT",            "DINT",
        "REAL",     "TIME",         "STRING",
    };
    return kws;
}

inline bool is_st_keyword(std::string_view word)
{
    for (auto kw : st_keywords())
        if (iequals(word, kw)) return true;
    return false;
}

struct LexResult {
    TokenStream stream;
    Diagnostics diagnostics;
};

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    LexResult run()
    {
        while (true) {
            std::string leading = take_whitespace();
            if (at_end()) {
                Token eof;
                eof.kind = TokenKind::EndOfFile;
                eof.leading = std::move(leading);
                eof.span = {pos_, pos_};
                out_.stream.tokens.push_back(std::move(eof));
                break;
            }
            Token tok = next_token();
            tok.leading = std::move(leading);
            out_.stream.tokens.push_back(std::move(tok));
        }
        return std::move(out_);
    }

private:
    std::string_view src_;
    SourcePos pos_;
    LexResult out_;

    bool at_end() const { return pos_.offset >= src_.size(); }
    char peek(std::size_t ahead = 0) const
    {
        std::size_t i = pos_.offset + ahead;
        return i < src_.size() ? src_[i] : '\0';
    }

    char advance()
    {
        char c = src_[pos_.offset];
        ++pos_.offset;
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c)
    {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    std::string take_whitespace()
    {
        std::size_t start = pos_.offset;
        while (!at_end() && is_space(peek())) advance();
        return std::string(src_.substr(start, pos_.offset - start));
    }

    std::string_view slice_from(std::size_t start) const
    {
        return src_.substr(start, pos_.offset - start);
    }

    Token finish(TokenKind kind, SourcePos start)
    {
        Token t;
        t.kind = kind;
        t.span = {start, pos_};
        t.lexeme = std::string(src_.substr(start.offset, pos_.offset - start.offset));
        return t;
    }

    void report(std::string code, std::string msg, SourcePos start)
    {
        out_.diagnostics.push_back(make_error(std::move(code), std::move(msg), {start, pos_}));
    }

    Token next_token()
    {
        const SourcePos start = pos_;
        const char c = peek();

        if (c == '(' && peek(1) == '*') return block_comment(start);
        if (c == '/' && peek(1) == '/') return line_comment(start);
        if (c == '\'') return string_literal(start);
        if (is_digit(c)) return number(start);
        if (is_ident_start(c)) return word(start);
        return symbol(start);
    }

    Token block_comment(SourcePos start)
    {
        advance();  // (
        advance();  // *
        // Nested (* *) comments are honoured, as IEC editions >= 3 allow them.
        int depth = 1;
        while (!at_end() && depth > 0) {
            if (peek() == '(' && peek(1) == '*') {
                advance();
                advance();
                ++depth;
            } else if (peek() == '*' && peek(1) == ')') {
                advance();
                advance();
                --depth;
            } else {
                advance();
            }
        }
        if (depth > 0) report("P001", "unterminated comment", start);
        Token t = finish(TokenKind::Comment, start);
        t.comment_form = CommentForm::Block;
        return t;
    }

    Token line_comment(SourcePos start)
    {
        while (!at_end() && peek() != '\n') advance();
        Token t = finish(TokenKind::Comment, start);
        t.comment_form = CommentForm::Line;
        return t;
    }

    Token string_literal(SourcePos start)
    {
        advance();  // opening quote
        std::string value;
        bool terminated = false;
        while (!at_end() && peek() != '\n') {
            char c = advance();
            if (c == '\'') {
                terminated = true;
                break;
            }
            if (c == '$') {
                if (at_end()) break;
                char esc = advance();
                switch (esc) {
                    case '$': value += '$'; break;
                    case '\'': value += '\''; break;
                    case 'L': case 'l': case 'N': case 'n': value += '\n'; break;
                    case 'R': case 'r': value += '\r'; break;
                    case 'T': case 't': value += '\t'; break;
                    case 'P': case 'p': value += '\f'; break;
                    default:
                        report("P006", fmt::format("unknown string escape '${}'", esc), start);
                        value += esc;
                }
            } else {
                value += c;
            }
        }
        if (!terminated) report("P002", "unterminated string literal", start);
        Token t = finish(TokenKind::StringLiteral, start);
        t.string_value = std::move(value);
        return t;
    }

    // Digits with optional underscores; returns the digits only.
    std::string digit_run()
    {
        std::string digits;
        while (!at_end() && (is_digit(peek()) || peek() == '_')) {
            char c = advance();
            if (c != '_') digits += c;
        }
        return digits;
    }

    Token number(SourcePos start)
    {
        std::string digits = digit_run();
        bool is_real = false;
        std::string frac, exp;

        if (peek() == '.' && is_digit(peek(1))) {
            is_real = true;
            advance();  // .
            frac = digit_run();
        }
        if ((peek() == 'e' || peek() == 'E') &&
            (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
            is_real = true;
            exp += advance();
            if (peek() == '+' || peek() == '-') exp += advance();
            exp += digit_run();
        }

        if (is_real) {
            Token t = finish(TokenKind::RealLiteral, start);
            std::string canon = digits + (frac.empty() ? "" : "." + frac) + exp;
            double v = 0.0;
            auto [p, ec] = std::from_chars(canon.data(), canon.data() + canon.size(), v);
            if (ec != std::errc{} || p != canon.data() + canon.size())
                report("P005", fmt::format("malformed real literal '{}'", t.lexeme), start);
            t.real_value = v;
            return t;
        }

        Token t = finish(TokenKind::IntLiteral, start);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc{} || p != digits.data() + digits.size()) {
            report("P005", fmt::format("integer literal '{}' out of range", t.lexeme), start);
            v = 0;
        }
        t.int_value = v;
        return t;
    }

    Token word(SourcePos start)
    {
        while (!at_end() && is_ident_char(peek())) advance();
        std::string_view text = slice_from(start.offset);

        if ((iequals(text, "T") || iequals(text, "TIME")) && peek() == '#')
            return time_literal(start);

        Token t = finish(is_st_keyword(text) ? TokenKind::Keyword : TokenKind::Identifier, start);
        if (t.kind == TokenKind::Keyword && (t.is_keyword("TRUE") || t.is_keyword("FALSE")))
            t.int_value = t.is_keyword("TRUE") ? 1 : 0;
        return t;
    }

    //  T#<component>+ where component = digits[.digits]unit, unit in d|h|m|s|ms.
    //  Components must appear in strictly decreasing unit order; only the last
    //  one may carry a fraction, and the total must land on whole milliseconds.
    Token time_literal(SourcePos start)
    {
        advance();  // '#'
        static constexpr struct {
            std::string_view unit;
            std::int64_t ms;
        } units[] = {{"d", 86400000}, {"h", 3600000}, {"m", 60000}, {"s", 1000}, {"ms", 1}};

        double total_ms = 0.0;
        int last_unit = -1;
        bool saw_component = false;
        bool saw_fraction = false;
        bool malformed = false;

        while (!at_end() && (is_digit(peek()) || peek() == '_')) {
            if (saw_fraction) {
                malformed = true;  // fraction allowed only on the final component
                break;
            }
            std::string digits = digit_run();
            std::string frac;
            if (peek() == '.' && is_digit(peek(1))) {
                advance();
                frac = digit_run();
                saw_fraction = true;
            }

            // Unit: 'ms' must win over 'm'.
            int unit_idx = -1;
            if ((peek() == 'm' || peek() == 'M') && (peek(1) == 's' || peek(1) == 'S')) {
                advance();
                advance();
                unit_idx = 4;
            } else {
                char u = peek();
                if (u == 'd' || u == 'D') unit_idx = 0;
                else if (u == 'h' || u == 'H') unit_idx = 1;
                else if (u == 'm' || u == 'M') unit_idx = 2;
                else if (u == 's' || u == 'S') unit_idx = 3;
                if (unit_idx >= 0) advance();
            }
            if (unit_idx < 0 || digits.empty() || unit_idx <= last_unit) {
                malformed = true;
                break;
            }
            last_unit = unit_idx;
            saw_component = true;

            double v = 0.0;
            std::string num = digits + (frac.empty() ? "" : "." + frac);
            std::from_chars(num.data(), num.data() + num.size(), v);
            total_ms += v * static_cast<double>(units[unit_idx].ms);
        }

        if (!saw_component) malformed = true;
        std::int64_t ms = static_cast<std::int64_t>(total_ms + 0.5);
        if (!malformed && total_ms != static_cast<double>(ms)) malformed = true;

        Token t = finish(TokenKind::TimeLiteral, start);
        if (malformed) {
            report("P003", fmt::format("malformed time literal '{}'", t.lexeme), start);
            ms = 0;
        }
        t.time_ms = ms;
        return t;
    }

    Token symbol(SourcePos start)
    {
        char c = advance();
        switch (c) {
            case ':':
                if (peek() == '=') {
                    advance();
                    return finish(TokenKind::Operator, start);
                }
                return finish(TokenKind::Punctuation, start);
            case '=':
                if (peek() == '>') {
                    advance();
                    return finish(TokenKind::Operator, start);
                }
                return finish(TokenKind::Operator, start);
            case '<':
                if (peek() == '=' || peek() == '>') advance();
                return finish(TokenKind::Operator, start);
            case '>':
                if (peek() == '=') advance();
                return finish(TokenKind::Operator, start);
            case '+': case '-': case '*': case '/':
                return finish(TokenKind::Operator, start);
            case '.':
                if (peek() == '.') {
                    advance();
                    return finish(TokenKind::Punctuation, start);  // range '..'
                }
                return finish(TokenKind::Punctuation, start);
            case ';': case ',': case '(': case ')':
                return finish(TokenKind::Punctuation, start);
            default: {
                Token t = finish(TokenKind::Punctuation, start);
                report("P004", fmt::format("unexpected character '{}'", c), start);
                return t;
            }
        }
    }
};

}  // namespace detail

//  Lex `source` into a token stream plus diagnostics. Never fails outright.
inline LexResult tokenize(std::string_view source)
{
    return detail::Lexer(source).run();
}

}  // namespace pid2st
