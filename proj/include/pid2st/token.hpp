#pragma once
//  Token model for the ST front end.
//
//  Comments are ordinary tokens (kind Comment) so that tooling can inspect
//  them, and every token records the whitespace run preceding it (`leading`).
//  Concatenating leading + lexeme over the whole stream, terminator included,
//  reproduces the input byte-for-byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pid2st/span.hpp"

namespace pid2st {

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    RealLiteral,
    TimeLiteral,
    StringLiteral,
    Operator,
    Punctuation,
    Comment,
    EndOfFile,
};

enum class CommentForm { Block, Line };

inline std::string to_upper(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    return out;
}

inline bool iequals(std::string_view a, std::string_view b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
        if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
        if (x != y) return false;
    }
    return true;
}

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string lexeme;   // exact source text of the token
    std::string leading;  // whitespace between the previous token and this one
    SourceSpan span;

    // Decoded payloads, valid for the matching literal kinds.
    std::int64_t int_value = 0;      // IntLiteral
    double real_value = 0.0;         // RealLiteral
    std::int64_t time_ms = 0;        // TimeLiteral, milliseconds
    std::string string_value;        // StringLiteral, unescaped
    CommentForm comment_form = CommentForm::Block;

    bool is(TokenKind k) const { return kind == k; }

    bool is_keyword(std::string_view kw) const
    {
        return kind == TokenKind::Keyword && iequals(lexeme, kw);
    }

    bool is_op(std::string_view sym) const
    {
        return kind == TokenKind::Operator && lexeme == sym;
    }

    bool is_punct(std::string_view sym) const
    {
        return kind == TokenKind::Punctuation && lexeme == sym;
    }
};

struct TokenStream {
    std::vector<Token> tokens;  // comments included; last token is EndOfFile

    // Byte-exact reconstruction of the lexed input.
    std::string reconstruct() const
    {
        std::string out;
        for (const auto& t : tokens) {
            out += t.leading;
            out += t.lexeme;
        }
        return out;
    }
};

}  // namespace pid2st
