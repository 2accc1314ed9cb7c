#pragma once
//  Canonical pretty printer.
//
//  Deterministic output: two-space indentation, uppercase keywords, one
//  declaration per line, minimal parentheses re-inserted from the precedence
//  table. Comments are re-emitted in (* *) notation only; `//` comments from
//  the source are converted. Identifier spelling is preserved as written.

#include <cstdio>
#include <charconv>
#include <string>
#include <string_view>
#include <variant>

#include <fmt/format.h>

#include "pid2st/ast.hpp"

namespace pid2st {

//  Shortest round-trip double formatting, forced to re-lex as a REAL.
inline std::string format_real(double v)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, p);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos && s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

//  Canonical duration: T# followed by nonzero d/h/m/s/ms components.
inline std::string format_time(std::int64_t ms)
{
    if (ms == 0) return "T#0s";
    std::string out = "T#";
    if (ms < 0) {
        out += '-';
        ms = -ms;
    }
    struct {
        std::int64_t factor;
        const char* unit;
    } parts[] = {{86400000, "d"}, {3600000, "h"}, {60000, "m"}, {1000, "s"}, {1, "ms"}};
    for (const auto& p : parts) {
        std::int64_t n = ms / p.factor;
        if (n > 0) out += fmt::format("{}{}", n, p.unit);
        ms %= p.factor;
    }
    return out;
}

inline std::string format_string_literal(std::string_view value)
{
    std::string out = "'";
    for (char c : value) {
        switch (c) {
            case '$': out += "$$"; break;
            case '\'': out += "$'"; break;
            case '\n': out += "$N"; break;
            case '\r': out += "$R"; break;
            case '\t': out += "$T"; break;
            case '\f': out += "$P"; break;
            default: out += c;
        }
    }
    out += '\'';
    return out;
}

namespace detail {

inline int binary_precedence(BinaryOp op)
{
    switch (op) {
        case BinaryOp::Or: return 1;
        case BinaryOp::Xor: return 2;
        case BinaryOp::And: return 3;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 4;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return 5;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 6;
        case BinaryOp::Mul:
        case BinaryOp::Div:
        case BinaryOp::Mod: return 7;
    }
    return 0;
}

inline std::string_view binary_symbol(BinaryOp op)
{
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Mod: return "MOD";
        case BinaryOp::Eq: return "=";
        case BinaryOp::Ne: return "<>";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::And: return "AND";
        case BinaryOp::Or: return "OR";
        case BinaryOp::Xor: return "XOR";
    }
    return "?";
}

constexpr int kUnaryPrec = 8;
constexpr int kPrimaryPrec = 9;

class Printer {
public:
    std::string print_unit(const SourceUnit& unit)
    {
        for (std::size_t i = 0; i < unit.pous.size(); ++i) {
            if (i > 0) out_ += '\n';
            print_pou(unit.pous[i]);
        }
        for (const auto& c : unit.trailing) emit_comment(c, 0);
        return std::move(out_);
    }

    std::string print_block_only(const Block& block, int indent)
    {
        print_block(block, indent);
        return std::move(out_);
    }

    std::string print_pou_only(const Pou& pou)
    {
        print_pou(pou);
        return std::move(out_);
    }

    static std::string expr_text(const Expr& e)
    {
        Printer p;
        return p.print_expr(e, 0);
    }

private:
    std::string out_;

    void line(int indent, std::string_view text)
    {
        out_.append(static_cast<std::size_t>(indent) * 2, ' ');
        out_ += text;
        out_ += '\n';
    }

    void emit_comment(const Comment& c, int indent)
    {
        std::string body = c.text;
        // A converted // comment must not terminate the block form early.
        std::size_t pos = 0;
        while ((pos = body.find("*)", pos)) != std::string::npos && c.form == CommentForm::Line)
            body.replace(pos, 2, "* )");
        if (body.empty()) line(indent, "(* *)");
        else line(indent, fmt::format("(* {} *)", body));
    }

    void print_pou(const Pou& pou)
    {
        for (const auto& c : pou.leading) emit_comment(c, 0);
        line(0, fmt::format("{} {}", pou_kind_keyword(pou.kind), pou.name));
        for (const auto& vb : pou.var_blocks) {
            line(1, var_section_keyword(vb.section));
            for (const auto& d : vb.decls) {
                for (const auto& c : d.leading) emit_comment(c, 2);
                std::string decl = fmt::format("{} : {}", d.name, d.type.display());
                if (d.init) decl += fmt::format(" := {}", print_expr(*d.init, 0));
                decl += ';';
                line(2, decl);
            }
            line(1, "END_VAR");
        }
        print_block(pou.body, 1);
        for (const auto& c : pou.trailing) emit_comment(c, 1);
        line(0, fmt::format("END_{}", pou_kind_keyword(pou.kind)));
    }

    void print_block(const Block& block, int indent)
    {
        for (const auto& s : block) print_stmt(*s, indent);
    }

    void print_stmt(const Stmt& stmt, int indent)
    {
        for (const auto& c : stmt.leading) emit_comment(c, indent);
        std::visit([&](const auto& node) { print_stmt_node(node, indent); }, stmt.node);
    }

    void print_stmt_node(const AssignStmt& s, int indent)
    {
        line(indent, fmt::format("{} := {};", print_expr(*s.target, 0), print_expr(*s.value, 0)));
    }

    void print_stmt_node(const IfStmt& s, int indent)
    {
        for (std::size_t i = 0; i < s.arms.size(); ++i) {
            line(indent, fmt::format("{} {} THEN", i == 0 ? "IF" : "ELSIF",
                                     print_expr(*s.arms[i].condition, 0)));
            print_block(s.arms[i].body, indent + 1);
        }
        if (s.has_else) {
            line(indent, "ELSE");
            print_block(s.else_body, indent + 1);
        }
        line(indent, "END_IF;");
    }

    void print_stmt_node(const CaseStmt& s, int indent)
    {
        line(indent, fmt::format("CASE {} OF", print_expr(*s.selector, 0)));
        for (const auto& arm : s.arms) {
            std::string labels;
            for (std::size_t i = 0; i < arm.labels.size(); ++i) {
                if (i > 0) labels += ", ";
                if (arm.labels[i].low == arm.labels[i].high)
                    labels += fmt::format("{}", arm.labels[i].low);
                else
                    labels += fmt::format("{}..{}", arm.labels[i].low, arm.labels[i].high);
            }
            line(indent + 1, labels + ":");
            print_block(arm.body, indent + 2);
        }
        if (s.has_else) {
            line(indent + 1, "ELSE");
            print_block(s.else_body, indent + 2);
        }
        line(indent, "END_CASE;");
    }

    void print_stmt_node(const ForStmt& s, int indent)
    {
        std::string head = fmt::format("FOR {} := {} TO {}", s.var, print_expr(*s.from, 0),
                                       print_expr(*s.to, 0));
        if (s.by) head += fmt::format(" BY {}", print_expr(*s.by, 0));
        head += " DO";
        line(indent, head);
        print_block(s.body, indent + 1);
        line(indent, "END_FOR;");
    }

    void print_stmt_node(const WhileStmt& s, int indent)
    {
        line(indent, fmt::format("WHILE {} DO", print_expr(*s.condition, 0)));
        print_block(s.body, indent + 1);
        line(indent, "END_WHILE;");
    }

    void print_stmt_node(const FbCallStmt& s, int indent)
    {
        std::string args;
        for (std::size_t i = 0; i < s.args.size(); ++i) {
            if (i > 0) args += ", ";
            args += fmt::format("{} {} {}", s.args[i].name,
                                s.args[i].dir == ArgDir::In ? ":=" : "=>",
                                print_expr(*s.args[i].value, 0));
        }
        line(indent, fmt::format("{}({});", s.instance, args));
    }

    void print_stmt_node(const ExitStmt&, int indent) { line(indent, "EXIT;"); }
    void print_stmt_node(const ReturnStmt&, int indent) { line(indent, "RETURN;"); }

    //  min_prec: parenthesise when this node binds looser than the context.
    std::string print_expr(const Expr& e, int min_prec)
    {
        return std::visit(
            [&](const auto& node) -> std::string {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, BoolLit>)
                    return node.value ? "TRUE" : "FALSE";
                else if constexpr (std::is_same_v<T, IntLit>)
                    return fmt::format("{}", node.value);
                else if constexpr (std::is_same_v<T, RealLit>)
                    return format_real(node.value);
                else if constexpr (std::is_same_v<T, TimeLit>)
                    return format_time(node.ms);
                else if constexpr (std::is_same_v<T, StringLit>)
                    return format_string_literal(node.value);
                else if constexpr (std::is_same_v<T, VarRef>)
                    return node.name;
                else if constexpr (std::is_same_v<T, MemberRef>)
                    return fmt::format("{}.{}", node.base, node.member);
                else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    std::string inner = print_expr(*node.operand, kUnaryPrec);
                    std::string text = node.op == UnaryOp::Not ? "NOT " + inner : "-" + inner;
                    return min_prec > kUnaryPrec ? "(" + text + ")" : text;
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    int prec = binary_precedence(node.op);
                    std::string text =
                        fmt::format("{} {} {}", print_expr(*node.lhs, prec),
                                    binary_symbol(node.op), print_expr(*node.rhs, prec + 1));
                    return min_prec > prec ? "(" + text + ")" : text;
                } else {
                    static_assert(std::is_same_v<T, CallExpr>);
                    std::string args;
                    for (std::size_t i = 0; i < node.args.size(); ++i) {
                        if (i > 0) args += ", ";
                        args += print_expr(*node.args[i], 0);
                    }
                    return fmt::format("{}({})", to_upper(node.function), args);
                }
            },
            e.node);
    }
};

}  // namespace detail

inline std::string pretty_print(const SourceUnit& unit)
{
    detail::Printer p;
    return p.print_unit(unit);
}

inline std::string pretty_print(const Pou& pou)
{
    detail::Printer p;
    return p.print_pou_only(pou);
}

//  Statement list as canonical text (project export body).
inline std::string print_statements(const Block& block, int indent = 0)
{
    detail::Printer p;
    return p.print_block_only(block, indent);
}

inline std::string print_expression(const Expr& e)
{
    return detail::Printer::expr_text(e);
}

}  // namespace pid2st
