#pragma once
//  AST for the supported ST subset.
//
//  Nodes are plain structs held in std::variant; trees are move-only through
//  unique_ptr. Every statement and expression carries a span. Comments are
//  attached to the nearest following declaration/statement so the pretty
//  printer can re-emit them; structural equality ignores spans and comments,
//  and compares identifiers case-insensitively (IEC identifiers are
//  case-preserving but case-insensitive).

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pid2st/span.hpp"
#include "pid2st/token.hpp"

namespace pid2st {

// ---------------------------------------------------------------------------
// Types

enum class ElemType { Bool, Int, Dint, Real, Time, String };

inline std::string_view elem_type_name(ElemType t)
{
    switch (t) {
        case ElemType::Bool: return "BOOL";
        case ElemType::Int: return "INT";
        case ElemType::Dint: return "DINT";
        case ElemType::Real: return "REAL";
        case ElemType::Time: return "TIME";
        case ElemType::String: return "STRING";
    }
    return "?";
}

//  Declared type of a variable: an elementary type or a named FB type.
struct TypeRef {
    bool elementary = true;
    ElemType elem = ElemType::Bool;
    std::string name;  // FB type name as written, when !elementary

    std::string display() const
    {
        return elementary ? std::string(elem_type_name(elem)) : name;
    }

    static TypeRef of(ElemType t) { return TypeRef{true, t, {}}; }
    static TypeRef named(std::string n) { return TypeRef{false, ElemType::Bool, std::move(n)}; }
};

inline bool type_ref_equal(const TypeRef& a, const TypeRef& b)
{
    if (a.elementary != b.elementary) return false;
    return a.elementary ? a.elem == b.elem : iequals(a.name, b.name);
}

// ---------------------------------------------------------------------------
// Expressions

enum class UnaryOp { Neg, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Xor };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct BoolLit { bool value = false; };
struct IntLit { std::int64_t value = 0; };
struct RealLit { double value = 0.0; };
struct TimeLit { std::int64_t ms = 0; };
struct StringLit { std::string value; };
struct VarRef { std::string name; };
struct MemberRef { std::string base; std::string member; };  // instance.Q
struct UnaryExpr { UnaryOp op; ExprPtr operand; };
struct BinaryExpr { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
struct CallExpr { std::string function; std::vector<ExprPtr> args; };  // MIN/MAX/LIMIT/ABS

using ExprNode = std::variant<BoolLit, IntLit, RealLit, TimeLit, StringLit, VarRef, MemberRef,
                              UnaryExpr, BinaryExpr, CallExpr>;

struct Expr {
    SourceSpan span;
    ExprNode node;
};

template <typename Node>
ExprPtr make_expr(SourceSpan span, Node&& node)
{
    auto e = std::make_unique<Expr>();
    e->span = span;
    e->node = std::forward<Node>(node);
    return e;
}

// ---------------------------------------------------------------------------
// Statements

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using Block = std::vector<StmtPtr>;

struct Comment {
    CommentForm form = CommentForm::Block;
    std::string text;  // without delimiters, trimmed
    SourceSpan span;
};

struct AssignStmt { ExprPtr target; ExprPtr value; };  // target is VarRef or MemberRef

struct IfArm { ExprPtr condition; Block body; };
struct IfStmt {
    std::vector<IfArm> arms;  // IF + ELSIFs
    Block else_body;
    bool has_else = false;
};

struct CaseLabel { std::int64_t low = 0; std::int64_t high = 0; };  // single value: low == high
struct CaseArm { std::vector<CaseLabel> labels; Block body; };
struct CaseStmt {
    ExprPtr selector;
    std::vector<CaseArm> arms;
    Block else_body;
    bool has_else = false;
};

struct ForStmt {
    std::string var;
    ExprPtr from;
    ExprPtr to;
    ExprPtr by;  // optional
    Block body;
};

struct WhileStmt { ExprPtr condition; Block body; };

enum class ArgDir { In, Out };  // ':=' input binding / '=>' output binding

struct FbArg {
    std::string name;
    ArgDir dir = ArgDir::In;
    ExprPtr value;  // for Out the expression must be an lvalue
    SourceSpan span;
};

struct FbCallStmt {
    std::string instance;
    std::vector<FbArg> args;
};

struct ExitStmt {};
struct ReturnStmt {};

using StmtNode = std::variant<AssignStmt, IfStmt, CaseStmt, ForStmt, WhileStmt, FbCallStmt,
                              ExitStmt, ReturnStmt>;

struct Stmt {
    SourceSpan span;
    std::vector<Comment> leading;
    StmtNode node;
};

template <typename Node>
StmtPtr make_stmt(SourceSpan span, Node&& node)
{
    auto s = std::make_unique<Stmt>();
    s->span = span;
    s->node = std::forward<Node>(node);
    return s;
}

// ---------------------------------------------------------------------------
// Declarations and units

enum class VarSection { Local, Input, Output, InOut };

inline std::string_view var_section_keyword(VarSection s)
{
    switch (s) {
        case VarSection::Local: return "VAR";
        case VarSection::Input: return "VAR_INPUT";
        case VarSection::Output: return "VAR_OUTPUT";
        case VarSection::InOut: return "VAR_IN_OUT";
    }
    return "VAR";
}

struct VarDecl {
    std::string name;
    TypeRef type;
    ExprPtr init;  // optional; literal expression
    SourceSpan span;
    std::vector<Comment> leading;
};

struct VarBlock {
    VarSection section = VarSection::Local;
    std::vector<VarDecl> decls;
    SourceSpan span;
};

enum class PouKind { Program, FunctionBlock };

inline std::string_view pou_kind_keyword(PouKind k)
{
    return k == PouKind::Program ? "PROGRAM" : "FUNCTION_BLOCK";
}

struct Pou {
    PouKind kind = PouKind::Program;
    std::string name;
    std::vector<VarBlock> var_blocks;
    Block body;
    SourceSpan span;
    std::vector<Comment> leading;
    std::vector<Comment> trailing;  // comments between the last statement and END_*
};

struct SourceUnit {
    std::vector<Pou> pous;
    std::vector<Comment> trailing;  // comments after the last POU
};

// ---------------------------------------------------------------------------
// Structural equality (ignores spans and comments)

bool expr_equal(const Expr& a, const Expr& b);
bool stmt_equal(const Stmt& a, const Stmt& b);

inline bool block_equal(const Block& a, const Block& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!stmt_equal(*a[i], *b[i])) return false;
    return true;
}

inline bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b)
{
    if (!a || !b) return !a && !b;
    return expr_equal(*a, *b);
}

inline bool expr_equal(const Expr& a, const Expr& b)
{
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, BoolLit>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, IntLit>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, RealLit>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, TimeLit>) return x.ms == y.ms;
            else if constexpr (std::is_same_v<T, StringLit>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, VarRef>) return iequals(x.name, y.name);
            else if constexpr (std::is_same_v<T, MemberRef>)
                return iequals(x.base, y.base) && iequals(x.member, y.member);
            else if constexpr (std::is_same_v<T, UnaryExpr>)
                return x.op == y.op && expr_equal(*x.operand, *y.operand);
            else if constexpr (std::is_same_v<T, BinaryExpr>)
                return x.op == y.op && expr_equal(*x.lhs, *y.lhs) && expr_equal(*x.rhs, *y.rhs);
            else {
                static_assert(std::is_same_v<T, CallExpr>);
                if (!iequals(x.function, y.function) || x.args.size() != y.args.size())
                    return false;
                for (std::size_t i = 0; i < x.args.size(); ++i)
                    if (!expr_equal(*x.args[i], *y.args[i])) return false;
                return true;
            }
        },
        a.node);
}

inline bool stmt_equal(const Stmt& a, const Stmt& b)
{
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, AssignStmt>)
                return expr_equal(*x.target, *y.target) && expr_equal(*x.value, *y.value);
            else if constexpr (std::is_same_v<T, IfStmt>) {
                if (x.arms.size() != y.arms.size() || x.has_else != y.has_else) return false;
                for (std::size_t i = 0; i < x.arms.size(); ++i) {
                    if (!expr_equal(*x.arms[i].condition, *y.arms[i].condition)) return false;
                    if (!block_equal(x.arms[i].body, y.arms[i].body)) return false;
                }
                return block_equal(x.else_body, y.else_body);
            } else if constexpr (std::is_same_v<T, CaseStmt>) {
                if (x.arms.size() != y.arms.size() || x.has_else != y.has_else) return false;
                if (!expr_equal(*x.selector, *y.selector)) return false;
                for (std::size_t i = 0; i < x.arms.size(); ++i) {
                    const auto& xa = x.arms[i];
                    const auto& ya = y.arms[i];
                    if (xa.labels.size() != ya.labels.size()) return false;
                    for (std::size_t j = 0; j < xa.labels.size(); ++j)
                        if (xa.labels[j].low != ya.labels[j].low ||
                            xa.labels[j].high != ya.labels[j].high)
                            return false;
                    if (!block_equal(xa.body, ya.body)) return false;
                }
                return block_equal(x.else_body, y.else_body);
            } else if constexpr (std::is_same_v<T, ForStmt>) {
                return iequals(x.var, y.var) && expr_equal(*x.from, *y.from) &&
                       expr_equal(*x.to, *y.to) && opt_expr_equal(x.by, y.by) &&
                       block_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
                return expr_equal(*x.condition, *y.condition) && block_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, FbCallStmt>) {
                if (!iequals(x.instance, y.instance) || x.args.size() != y.args.size())
                    return false;
                for (std::size_t i = 0; i < x.args.size(); ++i) {
                    if (!iequals(x.args[i].name, y.args[i].name)) return false;
                    if (x.args[i].dir != y.args[i].dir) return false;
                    if (!expr_equal(*x.args[i].value, *y.args[i].value)) return false;
                }
                return true;
            } else {
                return true;  // ExitStmt / ReturnStmt carry no payload
            }
        },
        a.node);
}

inline bool pou_equal(const Pou& a, const Pou& b)
{
    if (a.kind != b.kind || !iequals(a.name, b.name)) return false;
    if (a.var_blocks.size() != b.var_blocks.size()) return false;
    for (std::size_t i = 0; i < a.var_blocks.size(); ++i) {
        const auto& xa = a.var_blocks[i];
        const auto& xb = b.var_blocks[i];
        if (xa.section != xb.section || xa.decls.size() != xb.decls.size()) return false;
        for (std::size_t j = 0; j < xa.decls.size(); ++j) {
            const auto& da = xa.decls[j];
            const auto& db = xb.decls[j];
            if (!iequals(da.name, db.name) || !type_ref_equal(da.type, db.type)) return false;
            if (!opt_expr_equal(da.init, db.init)) return false;
        }
    }
    return block_equal(a.body, b.body);
}

inline bool unit_equal(const SourceUnit& a, const SourceUnit& b)
{
    if (a.pous.size() != b.pous.size()) return false;
    for (std::size_t i = 0; i < a.pous.size(); ++i)
        if (!pou_equal(a.pous[i], b.pous[i])) return false;
    return true;
}

inline const Pou* find_pou(const SourceUnit& unit, std::string_view name)
{
    for (const auto& p : unit.pous)
        if (iequals(p.name, name)) return &p;
    return nullptr;
}

}  // namespace pid2st
