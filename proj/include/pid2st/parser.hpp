#pragma once
//  Recursive-descent parser for the ST subset.
//
//  Error recovery is at statement granularity: a failed statement emits one
//  diagnostic with an expected-token hint and the parser resynchronises at
//  the next ';' or block-closing keyword, so several errors surface in a
//  single pass. Comment tokens are collected while advancing and attached to
//  the next declaration/statement; comments left over at the end of a POU
//  are kept as its trailing comments.

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "pid2st/ast.hpp"
#include "pid2st/diagnostics.hpp"
#include "pid2st/lexer.hpp"

namespace pid2st {

struct ParseResult {
    SourceUnit unit;
    Diagnostics diagnostics;
};

namespace detail {

class Parser {
public:
    explicit Parser(const TokenStream& stream) : toks_(stream.tokens) { skip_comments(); }

    ParseResult parse_unit()
    {
        while (!at_end()) {
            if (cur().is_keyword("PROGRAM") || cur().is_keyword("FUNCTION_BLOCK")) {
                parse_pou();
            } else {
                error_here("P102", fmt::format("expected PROGRAM or FUNCTION_BLOCK, found {}",
                                               describe(cur())));
                advance();
                sync_to_pou();
            }
        }
        result_.unit.trailing = take_pending();
        sort_diagnostics(result_.diagnostics);
        return std::move(result_);
    }

    //  Parse a bare statement list (used when importing project bodies).
    std::pair<Block, Diagnostics> parse_statements()
    {
        Block block = parse_block({});
        if (!at_end())
            error_here("P101", fmt::format("expected statement, found {}", describe(cur())));
        sort_diagnostics(result_.diagnostics);
        return {std::move(block), std::move(result_.diagnostics)};
    }

    //  Parse a single expression (used for initializer round-trips).
    std::pair<ExprPtr, Diagnostics> parse_single_expression()
    {
        ExprPtr e = parse_expression();
        sort_diagnostics(result_.diagnostics);
        return {std::move(e), std::move(result_.diagnostics)};
    }

private:
    const std::vector<Token>& toks_;
    std::size_t idx_ = 0;
    ParseResult result_;
    std::vector<Comment> pending_comments_;

    // ---- token cursor -----------------------------------------------------

    const Token& cur() const { return toks_[idx_]; }
    bool at_end() const { return cur().kind == TokenKind::EndOfFile; }

    void skip_comments()
    {
        while (toks_[idx_].kind == TokenKind::Comment) {
            const Token& t = toks_[idx_];
            Comment c;
            c.form = t.comment_form;
            c.text = comment_text(t);
            c.span = t.span;
            pending_comments_.push_back(std::move(c));
            ++idx_;
        }
    }

    static std::string comment_text(const Token& t)
    {
        std::string_view s = t.lexeme;
        if (t.comment_form == CommentForm::Block) {
            s.remove_prefix(2);
            if (s.size() >= 2 && s.ends_with("*)")) s.remove_suffix(2);
        } else {
            s.remove_prefix(2);
        }
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                              s.back() == '\n'))
            s.remove_suffix(1);
        return std::string(s);
    }

    void advance()
    {
        if (!at_end()) ++idx_;
        skip_comments();
    }

    std::vector<Comment> take_pending() { return std::exchange(pending_comments_, {}); }

    static std::string describe(const Token& t)
    {
        switch (t.kind) {
            case TokenKind::EndOfFile: return "end of input";
            case TokenKind::StringLiteral: return "string literal";
            default: return fmt::format("'{}'", t.lexeme);
        }
    }

    void error_here(std::string code, std::string msg)
    {
        result_.diagnostics.push_back(make_error(std::move(code), std::move(msg), cur().span));
    }

    struct StatementError {};  // thrown to unwind to the statement boundary

    [[noreturn]] void fail(std::string msg)
    {
        error_here("P101", std::move(msg));
        throw StatementError{};
    }

    bool accept_keyword(std::string_view kw)
    {
        if (cur().is_keyword(kw)) {
            advance();
            return true;
        }
        return false;
    }

    void expect_keyword(std::string_view kw)
    {
        if (!accept_keyword(kw))
            fail(fmt::format("expected {}, found {}", kw, describe(cur())));
    }

    bool accept_punct(std::string_view p)
    {
        if (cur().is_punct(p)) {
            advance();
            return true;
        }
        return false;
    }

    void expect_punct(std::string_view p)
    {
        if (!accept_punct(p))
            fail(fmt::format("expected '{}', found {}", p, describe(cur())));
    }

    bool accept_op(std::string_view op)
    {
        if (cur().is_op(op)) {
            advance();
            return true;
        }
        return false;
    }

    void expect_op(std::string_view op)
    {
        if (!accept_op(op))
            fail(fmt::format("expected '{}', found {}", op, describe(cur())));
    }

    std::string expect_identifier(std::string_view what)
    {
        if (cur().kind != TokenKind::Identifier)
            fail(fmt::format("expected {}, found {}", what, describe(cur())));
        std::string name = cur().lexeme;
        advance();
        return name;
    }

    // ---- recovery ---------------------------------------------------------

    static bool is_block_end_keyword(const Token& t)
    {
        return t.is_keyword("END_IF") || t.is_keyword("END_CASE") || t.is_keyword("END_FOR") ||
               t.is_keyword("END_WHILE") || t.is_keyword("END_PROGRAM") ||
               t.is_keyword("END_FUNCTION_BLOCK") || t.is_keyword("END_VAR") ||
               t.is_keyword("ELSIF") || t.is_keyword("ELSE") || t.is_keyword("PROGRAM") ||
               t.is_keyword("FUNCTION_BLOCK");
    }

    void sync_statement()
    {
        while (!at_end()) {
            if (cur().is_punct(";")) {
                advance();
                return;
            }
            if (is_block_end_keyword(cur())) return;
            advance();
        }
    }

    void sync_to_pou()
    {
        while (!at_end() && !cur().is_keyword("PROGRAM") && !cur().is_keyword("FUNCTION_BLOCK"))
            advance();
    }

    // ---- declarations -----------------------------------------------------

    void parse_pou()
    {
        Pou pou;
        pou.leading = take_pending();
        SourcePos start = cur().span.begin;
        pou.kind = cur().is_keyword("PROGRAM") ? PouKind::Program : PouKind::FunctionBlock;
        std::string_view end_kw =
            pou.kind == PouKind::Program ? "END_PROGRAM" : "END_FUNCTION_BLOCK";
        advance();

        try {
            pou.name = expect_identifier("POU name");
        } catch (StatementError&) {
            sync_to_pou();
            return;
        }

        while (cur().kind == TokenKind::Keyword &&
               (cur().is_keyword("VAR") || cur().is_keyword("VAR_INPUT") ||
                cur().is_keyword("VAR_OUTPUT") || cur().is_keyword("VAR_IN_OUT"))) {
            parse_var_block(pou);
        }

        pou.body = parse_block({end_kw});
        pou.trailing = take_pending();
        if (cur().is_keyword(end_kw)) {
            advance();
        } else {
            error_here("P101", fmt::format("expected {}, found {}", end_kw, describe(cur())));
        }
        accept_punct(";");

        pou.span = {start, idx_ > 0 ? toks_[idx_ - 1].span.end : cur().span.end};

        if (find_pou(result_.unit, pou.name)) {
            result_.diagnostics.push_back(make_error(
                "P103", fmt::format("duplicate POU name '{}'", pou.name), pou.span));
            return;  // keep the first definition
        }
        result_.unit.pous.push_back(std::move(pou));
    }

    void parse_var_block(Pou& pou)
    {
        VarBlock block;
        SourcePos start = cur().span.begin;
        if (cur().is_keyword("VAR")) block.section = VarSection::Local;
        else if (cur().is_keyword("VAR_INPUT")) block.section = VarSection::Input;
        else if (cur().is_keyword("VAR_OUTPUT")) block.section = VarSection::Output;
        else block.section = VarSection::InOut;
        advance();

        while (!at_end() && !cur().is_keyword("END_VAR")) {
            if (is_block_end_keyword(cur()) && !cur().is_keyword("END_VAR")) break;
            try {
                parse_var_decl(block);
            } catch (StatementError&) {
                sync_statement();
            }
        }
        if (!accept_keyword("END_VAR"))
            error_here("P101", fmt::format("expected END_VAR, found {}", describe(cur())));
        block.span = {start, toks_[idx_ ? idx_ - 1 : 0].span.end};
        pou.var_blocks.push_back(std::move(block));
    }

    //  name {',' name} ':' type [':=' expr] ';'
    void parse_var_decl(VarBlock& block)
    {
        std::vector<Comment> leading = take_pending();
        SourcePos start = cur().span.begin;

        std::vector<std::string> names;
        names.push_back(expect_identifier("variable name"));
        while (accept_punct(",")) names.push_back(expect_identifier("variable name"));

        expect_punct(":");
        TypeRef type = parse_type();

        ExprPtr init;
        if (accept_op(":=")) init = parse_expression();
        expect_punct(";");

        SourceSpan span{start, toks_[idx_ ? idx_ - 1 : 0].span.end};
        for (std::size_t i = 0; i < names.size(); ++i) {
            VarDecl d;
            d.name = names[i];
            d.type = type;
            d.span = span;
            if (i == 0) d.leading = std::move(leading);
            if (init) d.init = clone_expr(*init);
            block.decls.push_back(std::move(d));
        }
    }

    TypeRef parse_type()
    {
        if (cur().kind == TokenKind::Keyword) {
            static constexpr std::pair<std::string_view, ElemType> kElementary[] = {
                {"BOOL", ElemType::Bool}, {"INT", ElemType::Int},   {"DINT", ElemType::Dint},
                {"REAL", ElemType::Real}, {"TIME", ElemType::Time}, {"STRING", ElemType::String},
            };
            for (auto [kw, et] : kElementary) {
                if (cur().is_keyword(kw)) {
                    advance();
                    return TypeRef::of(et);
                }
            }
            fail(fmt::format("expected type name, found {}", describe(cur())));
        }
        return TypeRef::named(expect_identifier("type name"));
    }

    static ExprPtr clone_expr(const Expr& e)
    {
        ExprPtr c = std::make_unique<Expr>();
        c->span = e.span;
        c->node = std::visit(
            [](const auto& n) -> ExprNode {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, UnaryExpr>)
                    return UnaryExpr{n.op, clone_expr(*n.operand)};
                else if constexpr (std::is_same_v<T, BinaryExpr>)
                    return BinaryExpr{n.op, clone_expr(*n.lhs), clone_expr(*n.rhs)};
                else if constexpr (std::is_same_v<T, CallExpr>) {
                    CallExpr c2{n.function, {}};
                    for (const auto& a : n.args) c2.args.push_back(clone_expr(*a));
                    return c2;
                } else {
                    return n;
                }
            },
            e.node);
        return c;
    }

    // ---- statements -------------------------------------------------------

    Block parse_block(std::initializer_list<std::string_view> stop)
    {
        Block block;
        while (!at_end()) {
            bool stopped = false;
            for (auto kw : stop)
                if (cur().is_keyword(kw)) stopped = true;
            if (is_block_end_keyword(cur())) stopped = true;
            if (stopped) break;

            if (accept_punct(";")) continue;  // stray empty statement

            try {
                block.push_back(parse_statement());
            } catch (StatementError&) {
                sync_statement();
            }
        }
        return block;
    }

    StmtPtr parse_statement()
    {
        std::vector<Comment> leading = take_pending();
        StmtPtr s = parse_statement_inner();
        s->leading = std::move(leading);
        return s;
    }

    StmtPtr parse_statement_inner()
    {
        const SourcePos start = cur().span.begin;
        if (cur().is_keyword("IF")) return parse_if(start);
        if (cur().is_keyword("CASE")) return parse_case(start);
        if (cur().is_keyword("FOR")) return parse_for(start);
        if (cur().is_keyword("WHILE")) return parse_while(start);
        if (cur().is_keyword("EXIT")) {
            advance();
            expect_punct(";");
            return make_stmt(span_from(start), ExitStmt{});
        }
        if (cur().is_keyword("RETURN")) {
            advance();
            expect_punct(";");
            return make_stmt(span_from(start), ReturnStmt{});
        }
        if (cur().kind == TokenKind::Identifier) return parse_assign_or_call(start);
        fail(fmt::format("expected statement, found {}", describe(cur())));
    }

    SourceSpan span_from(SourcePos start) const
    {
        return {start, toks_[idx_ ? idx_ - 1 : 0].span.end};
    }

    StmtPtr parse_if(SourcePos start)
    {
        IfStmt node;
        advance();  // IF
        while (true) {
            IfArm arm;
            arm.condition = parse_expression();
            expect_keyword("THEN");
            arm.body = parse_block({"ELSIF", "ELSE", "END_IF"});
            node.arms.push_back(std::move(arm));
            if (accept_keyword("ELSIF")) continue;
            break;
        }
        if (accept_keyword("ELSE")) {
            node.has_else = true;
            node.else_body = parse_block({"END_IF"});
        }
        expect_keyword("END_IF");
        accept_punct(";");
        return make_stmt(span_from(start), std::move(node));
    }

    StmtPtr parse_case(SourcePos start)
    {
        CaseStmt node;
        advance();  // CASE
        node.selector = parse_expression();
        expect_keyword("OF");

        while (!at_end() && (cur().kind == TokenKind::IntLiteral || cur().is_op("-"))) {
            CaseArm arm;
            arm.labels.push_back(parse_case_label());
            while (accept_punct(",")) arm.labels.push_back(parse_case_label());
            expect_punct(":");
            arm.body = parse_block({"ELSE", "END_CASE"});
            node.arms.push_back(std::move(arm));
        }
        if (accept_keyword("ELSE")) {
            node.has_else = true;
            node.else_body = parse_block({"END_CASE"});
        }
        expect_keyword("END_CASE");
        accept_punct(";");
        return make_stmt(span_from(start), std::move(node));
    }

    CaseLabel parse_case_label()
    {
        std::int64_t low = parse_label_value();
        std::int64_t high = low;
        if (accept_punct("..")) high = parse_label_value();
        if (high < low) fail("case range upper bound below lower bound");
        return CaseLabel{low, high};
    }

    std::int64_t parse_label_value()
    {
        bool neg = accept_op("-");
        if (cur().kind != TokenKind::IntLiteral)
            fail(fmt::format("expected integer case label, found {}", describe(cur())));
        std::int64_t v = cur().int_value;
        advance();
        return neg ? -v : v;
    }

    StmtPtr parse_for(SourcePos start)
    {
        ForStmt node;
        advance();  // FOR
        node.var = expect_identifier("loop variable");
        expect_op(":=");
        node.from = parse_expression();
        expect_keyword("TO");
        node.to = parse_expression();
        if (accept_keyword("BY")) node.by = parse_expression();
        expect_keyword("DO");
        node.body = parse_block({"END_FOR"});
        expect_keyword("END_FOR");
        accept_punct(";");
        return make_stmt(span_from(start), std::move(node));
    }

    StmtPtr parse_while(SourcePos start)
    {
        WhileStmt node;
        advance();  // WHILE
        node.condition = parse_expression();
        expect_keyword("DO");
        node.body = parse_block({"END_WHILE"});
        expect_keyword("END_WHILE");
        accept_punct(";");
        return make_stmt(span_from(start), std::move(node));
    }

    //  Starting at an identifier: assignment to a variable or member, or an
    //  FB invocation with named parameter bindings.
    StmtPtr parse_assign_or_call(SourcePos start)
    {
        std::string name = expect_identifier("identifier");

        if (cur().is_punct("(")) {
            FbCallStmt node;
            node.instance = std::move(name);
            advance();  // (
            if (!cur().is_punct(")")) {
                parse_fb_arg(node);
                while (accept_punct(",")) parse_fb_arg(node);
            }
            expect_punct(")");
            expect_punct(";");
            return make_stmt(span_from(start), std::move(node));
        }

        ExprPtr target;
        SourceSpan target_span = toks_[idx_ - 1].span;
        if (accept_punct(".")) {
            std::string member = expect_identifier("member name");
            target = make_expr(span_from(start), MemberRef{std::move(name), std::move(member)});
        } else {
            target = make_expr(target_span, VarRef{std::move(name)});
        }

        expect_op(":=");
        AssignStmt node;
        node.target = std::move(target);
        node.value = parse_expression();
        expect_punct(";");
        return make_stmt(span_from(start), std::move(node));
    }

    void parse_fb_arg(FbCallStmt& call)
    {
        FbArg arg;
        SourcePos start = cur().span.begin;
        arg.name = expect_identifier("parameter name");
        if (accept_op(":=")) {
            arg.dir = ArgDir::In;
        } else if (accept_op("=>")) {
            arg.dir = ArgDir::Out;
        } else {
            fail(fmt::format("expected ':=' or '=>' after parameter name, found {}",
                             describe(cur())));
        }
        arg.value = parse_expression();
        arg.span = span_from(start);
        call.args.push_back(std::move(arg));
    }

    // ---- expressions ------------------------------------------------------
    //  Precedence, loosest first: OR, XOR, AND, =/<>, relational, +/-, */("/")/MOD,
    //  unary NOT/-, primary.

    ExprPtr parse_expression() { return parse_or(); }

    ExprPtr parse_or()
    {
        ExprPtr lhs = parse_xor();
        while (cur().is_keyword("OR")) {
            advance();
            ExprPtr rhs = parse_xor();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{BinaryOp::Or, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_xor()
    {
        ExprPtr lhs = parse_and();
        while (cur().is_keyword("XOR")) {
            advance();
            ExprPtr rhs = parse_and();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{BinaryOp::Xor, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_and()
    {
        ExprPtr lhs = parse_equality();
        while (cur().is_keyword("AND")) {
            advance();
            ExprPtr rhs = parse_equality();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{BinaryOp::And, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_equality()
    {
        ExprPtr lhs = parse_relational();
        while (cur().is_op("=") || cur().is_op("<>")) {
            BinaryOp op = cur().is_op("=") ? BinaryOp::Eq : BinaryOp::Ne;
            advance();
            ExprPtr rhs = parse_relational();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_relational()
    {
        ExprPtr lhs = parse_additive();
        while (cur().is_op("<") || cur().is_op("<=") || cur().is_op(">") || cur().is_op(">=")) {
            BinaryOp op = cur().is_op("<")    ? BinaryOp::Lt
                          : cur().is_op("<=") ? BinaryOp::Le
                          : cur().is_op(">")  ? BinaryOp::Gt
                                              : BinaryOp::Ge;
            advance();
            ExprPtr rhs = parse_additive();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_additive()
    {
        ExprPtr lhs = parse_multiplicative();
        while (cur().is_op("+") || cur().is_op("-")) {
            BinaryOp op = cur().is_op("+") ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            ExprPtr rhs = parse_multiplicative();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_multiplicative()
    {
        ExprPtr lhs = parse_unary();
        while (cur().is_op("*") || cur().is_op("/") || cur().is_keyword("MOD")) {
            BinaryOp op = cur().is_op("*")   ? BinaryOp::Mul
                          : cur().is_op("/") ? BinaryOp::Div
                                             : BinaryOp::Mod;
            advance();
            ExprPtr rhs = parse_unary();
            SourceSpan sp = join(lhs->span, rhs->span);
            lhs = make_expr(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_unary()
    {
        const SourcePos start = cur().span.begin;
        if (cur().is_keyword("NOT")) {
            advance();
            ExprPtr operand = parse_unary();
            return make_expr({start, operand->span.end},
                             UnaryExpr{UnaryOp::Not, std::move(operand)});
        }
        if (cur().is_op("-")) {
            advance();
            // Fold a minus applied directly to a numeric literal into the
            // literal; keeps -32768 inside INT and canonicalises printing.
            if (cur().kind == TokenKind::IntLiteral) {
                std::int64_t v = cur().int_value;
                SourceSpan sp{start, cur().span.end};
                advance();
                return make_expr(sp, IntLit{-v});
            }
            if (cur().kind == TokenKind::RealLiteral) {
                double v = cur().real_value;
                SourceSpan sp{start, cur().span.end};
                advance();
                return make_expr(sp, RealLit{-v});
            }
            ExprPtr operand = parse_unary();
            return make_expr({start, operand->span.end},
                             UnaryExpr{UnaryOp::Neg, std::move(operand)});
        }
        return parse_primary();
    }

    ExprPtr parse_primary()
    {
        const Token& t = cur();
        const SourcePos start = t.span.begin;
        switch (t.kind) {
            case TokenKind::IntLiteral: {
                std::int64_t v = t.int_value;
                SourceSpan sp = t.span;
                advance();
                return make_expr(sp, IntLit{v});
            }
            case TokenKind::RealLiteral: {
                double v = t.real_value;
                SourceSpan sp = t.span;
                advance();
                return make_expr(sp, RealLit{v});
            }
            case TokenKind::TimeLiteral: {
                std::int64_t ms = t.time_ms;
                SourceSpan sp = t.span;
                advance();
                return make_expr(sp, TimeLit{ms});
            }
            case TokenKind::StringLiteral: {
                std::string v = t.string_value;
                SourceSpan sp = t.span;
                advance();
                return make_expr(sp, StringLit{std::move(v)});
            }
            case TokenKind::Keyword:
                if (t.is_keyword("TRUE") || t.is_keyword("FALSE")) {
                    bool v = t.is_keyword("TRUE");
                    SourceSpan sp = t.span;
                    advance();
                    return make_expr(sp, BoolLit{v});
                }
                fail(fmt::format("expected expression, found {}", describe(t)));
            case TokenKind::Identifier: {
                std::string name = t.lexeme;
                advance();
                if (cur().is_punct("(")) {
                    advance();
                    CallExpr call{std::move(name), {}};
                    if (!cur().is_punct(")")) {
                        call.args.push_back(parse_expression());
                        while (accept_punct(",")) call.args.push_back(parse_expression());
                    }
                    expect_punct(")");
                    return make_expr(span_from(start), std::move(call));
                }
                if (cur().is_punct(".")) {
                    advance();
                    std::string member = expect_identifier("member name");
                    return make_expr(span_from(start),
                                     MemberRef{std::move(name), std::move(member)});
                }
                return make_expr(span_from(start), VarRef{std::move(name)});
            }
            case TokenKind::Punctuation:
                if (t.is_punct("(")) {
                    advance();
                    ExprPtr inner = parse_expression();
                    expect_punct(")");
                    return inner;
                }
                [[fallthrough]];
            default:
                fail(fmt::format("expected expression, found {}", describe(t)));
        }
    }
};

}  // namespace detail

inline ParseResult parse_unit(const TokenStream& stream)
{
    return detail::Parser(stream).parse_unit();
}

//  Convenience: lex + parse; lexical and syntactic diagnostics combined.
inline ParseResult parse_text(std::string_view source)
{
    LexResult lexed = tokenize(source);
    ParseResult parsed = detail::Parser(lexed.stream).parse_unit();
    Diagnostics all = std::move(lexed.diagnostics);
    all.insert(all.end(), std::make_move_iterator(parsed.diagnostics.begin()),
               std::make_move_iterator(parsed.diagnostics.end()));
    sort_diagnostics(all);
    parsed.diagnostics = std::move(all);
    return parsed;
}

//  Parse a statement list in isolation (project import path).
inline std::pair<Block, Diagnostics> parse_statements_text(std::string_view source)
{
    LexResult lexed = tokenize(source);
    detail::Parser parser(lexed.stream);
    auto [block, diags] = parser.parse_statements();
    Diagnostics all = std::move(lexed.diagnostics);
    all.insert(all.end(), std::make_move_iterator(diags.begin()),
               std::make_move_iterator(diags.end()));
    sort_diagnostics(all);
    return {std::move(block), std::move(all)};
}

//  Parse one expression in isolation (initializer import path).
inline std::pair<ExprPtr, Diagnostics> parse_expression_text(std::string_view source)
{
    LexResult lexed = tokenize(source);
    detail::Parser parser(lexed.stream);
    try {
        auto [expr, diags] = parser.parse_single_expression();
        Diagnostics all = std::move(lexed.diagnostics);
        all.insert(all.end(), std::make_move_iterator(diags.begin()),
                   std::make_move_iterator(diags.end()));
        sort_diagnostics(all);
        return {std::move(expr), std::move(all)};
    } catch (...) {
        Diagnostics all = std::move(lexed.diagnostics);
        all.push_back(make_error("P101", "malformed expression", SourceSpan{}));
        return {nullptr, std::move(all)};
    }
}

}  // namespace pid2st
