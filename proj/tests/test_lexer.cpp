#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pid2st/lexer.hpp"
#include "testutil.hpp"

using namespace pid2st;

namespace {

std::vector<Token> without_trivia(const TokenStream& ts)
{
    std::vector<Token> out;
    for (const auto& t : ts.tokens)
        if (t.kind != TokenKind::Comment && t.kind != TokenKind::EndOfFile) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("minimal assignment statement tokens")
{
    auto res = tokenize("x := 1;");
    REQUIRE(res.diagnostics.empty());
    auto toks = without_trivia(res.stream);
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].kind == TokenKind::Identifier);
    CHECK(toks[0].lexeme == "x");
    CHECK(toks[1].is_op(":="));
    CHECK(toks[2].kind == TokenKind::IntLiteral);
    CHECK(toks[2].int_value == 1);
    CHECK(toks[3].is_punct(";"));
}

TEST_CASE("timer invocation includes a time literal")
{
    auto res = tokenize("TON1(IN := Start, PT := T#5m);");
    REQUIRE(res.diagnostics.empty());
    bool found = false;
    for (const auto& t : res.stream.tokens) {
        if (t.kind == TokenKind::TimeLiteral) {
            found = true;
            CHECK(t.lexeme == "T#5m");
            CHECK(t.time_ms == 5 * 60 * 1000);
        }
    }
    CHECK(found);
}

TEST_CASE("time literal forms")
{
    struct Case {
        const char* text;
        std::int64_t ms;
    } cases[] = {
        {"T#100ms", 100},        {"T#5m", 300000},     {"t#2s", 2000},
        {"TIME#1h", 3600000},    {"T#1h30m", 5400000}, {"T#1.5s", 1500},
        {"T#1d2h3m4s5ms", 86400000 + 2 * 3600000 + 3 * 60000 + 4000 + 5},
        {"T#1_000ms", 1000},
    };
    for (const auto& c : cases) {
        INFO(c.text);
        auto res = tokenize(c.text);
        REQUIRE(res.diagnostics.empty());
        REQUIRE(res.stream.tokens.size() == 2);
        CHECK(res.stream.tokens[0].kind == TokenKind::TimeLiteral);
        CHECK(res.stream.tokens[0].time_ms == c.ms);
    }
}

TEST_CASE("malformed time literals diagnose but lexing continues")
{
    for (const char* bad : {"T#", "T#5", "T#5m3h", "T#1.5ms2s", "T#xyz"}) {
        INFO(bad);
        auto res = tokenize(std::string(bad) + " x := 1;");
        REQUIRE_FALSE(res.diagnostics.empty());
        CHECK(res.diagnostics[0].code == "P003");
        // the trailing assignment still lexes
        bool saw_assign = false;
        for (const auto& t : res.stream.tokens)
            if (t.is_op(":=")) saw_assign = true;
        CHECK(saw_assign);
    }
}

TEST_CASE("unterminated comment diagnosed at its opening offset")
{
    auto res = tokenize("x := 1; (* unclosed");
    REQUIRE(res.diagnostics.size() == 1);
    CHECK(res.diagnostics[0].code == "P001");
    CHECK(res.diagnostics[0].message == "unterminated comment");
    CHECK(res.diagnostics[0].span.begin.offset == 8);
}

TEST_CASE("unterminated string diagnosed")
{
    auto res = tokenize("s := 'abc;\n x := 1;");
    REQUIRE_FALSE(res.diagnostics.empty());
    CHECK(res.diagnostics[0].code == "P002");
}

TEST_CASE("string escapes decode")
{
    auto res = tokenize("'a$$b$'c$Nd'");
    REQUIRE(res.diagnostics.empty());
    CHECK(res.stream.tokens[0].string_value == "a$b'c\nd");
}

TEST_CASE("both comment forms are lexed as trivia tokens")
{
    auto res = tokenize("(* block *) x := 1; // line\n");
    REQUIRE(res.diagnostics.empty());
    int comments = 0;
    for (const auto& t : res.stream.tokens) {
        if (t.kind == TokenKind::Comment) {
            ++comments;
            if (t.comment_form == CommentForm::Line) CHECK(t.lexeme == "// line");
        }
    }
    CHECK(comments == 2);
}

TEST_CASE("nested block comments")
{
    auto res = tokenize("(* outer (* inner *) tail *) x");
    REQUIRE(res.diagnostics.empty());
    CHECK(res.stream.tokens[0].kind == TokenKind::Comment);
    CHECK(res.stream.tokens[1].kind == TokenKind::Identifier);
}

TEST_CASE("operators and punctuation disambiguate")
{
    auto res = tokenize("a := b <= c <> d .. e => f . g");
    REQUIRE(res.diagnostics.empty());
    std::vector<std::string> lexemes;
    for (const auto& t : res.stream.tokens)
        if (t.kind == TokenKind::Operator || t.kind == TokenKind::Punctuation)
            lexemes.push_back(t.lexeme);
    CHECK(lexemes == std::vector<std::string>{":=", "<=", "<>", "..", "=>", "."});
}

TEST_CASE("keywords are case-insensitive, identifiers preserved")
{
    auto res = tokenize("Program myProg end_program");
    REQUIRE(res.diagnostics.empty());
    CHECK(res.stream.tokens[0].kind == TokenKind::Keyword);
    CHECK(res.stream.tokens[0].lexeme == "Program");
    CHECK(res.stream.tokens[1].kind == TokenKind::Identifier);
    CHECK(res.stream.tokens[1].lexeme == "myProg");
    CHECK(res.stream.tokens[2].is_keyword("END_PROGRAM"));
}

TEST_CASE("byte-exact reconstruction over the fixture corpus")
{
    for (const auto& file : testutil::corpus_files()) {
        INFO(file.string());
        std::string text = testutil::slurp(file);
        auto res = tokenize(text);
        CHECK(res.stream.reconstruct() == text);
    }
}

TEST_CASE("lexer is total on arbitrary printable input and reconstructs bytes")
{
    std::mt19937 rng(20240917);
    const std::string alphabet =
        " \t\n'();:=<>.,+-*/_ABCdef0123456789#$%&\"\\!?@[]{}";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 120);
    for (int i = 0; i < 500; ++i) {
        std::string s;
        int n = len(rng);
        for (int j = 0; j < n; ++j) s += alphabet[pick(rng)];
        auto res = tokenize(s);
        REQUIRE(res.stream.reconstruct() == s);
        REQUIRE(res.stream.tokens.back().kind == TokenKind::EndOfFile);
        for (const auto& d : res.diagnostics) {
            REQUIRE(d.span.begin.offset <= d.span.end.offset);
            REQUIRE(d.span.end.offset <= s.size());
        }
    }
}

TEST_CASE("spans are 1-based and consistent")
{
    auto res = tokenize("x := 1;\ny := 2;");
    const auto& toks = res.stream.tokens;
    CHECK(toks[0].span.begin.line == 1);
    CHECK(toks[0].span.begin.column == 1);
    // y on line 2 col 1
    bool found = false;
    for (const auto& t : toks) {
        if (t.kind == TokenKind::Identifier && t.lexeme == "y") {
            CHECK(t.span.begin.line == 2);
            CHECK(t.span.begin.column == 1);
            found = true;
        }
    }
    CHECK(found);
}
