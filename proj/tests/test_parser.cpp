#include <catch2/catch_amalgamated.hpp>

#include "pid2st/parser.hpp"
#include "testutil.hpp"

using namespace pid2st;

TEST_CASE("minimal program parses")
{
    auto res = parse_text("PROGRAM Main VAR x : INT; END_VAR x := 1; END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    REQUIRE(res.unit.pous.size() == 1);
    const Pou& p = res.unit.pous[0];
    CHECK(p.kind == PouKind::Program);
    CHECK(p.name == "Main");
    REQUIRE(p.var_blocks.size() == 1);
    REQUIRE(p.var_blocks[0].decls.size() == 1);
    CHECK(p.var_blocks[0].decls[0].name == "x");
    CHECK(p.var_blocks[0].decls[0].type.elem == ElemType::Int);
    REQUIRE(p.body.size() == 1);
    CHECK(std::holds_alternative<AssignStmt>(p.body[0]->node));
}

TEST_CASE("tank fill fixture parses clean")
{
    auto res = parse_text(testutil::fixture_text("tank_b101.st"));
    CAPTURE(render_human(res.diagnostics));
    CHECK(res.diagnostics.empty());
    REQUIRE(res.unit.pous.size() == 1);
    CHECK(res.unit.pous[0].name == "TankB101Fill");
}

TEST_CASE("missing END_IF reports an expected-token diagnostic at end of input")
{
    std::string src = "PROGRAM P VAR a : BOOL; b : INT; END_VAR IF a THEN b := 1;";
    auto res = parse_text(src);
    REQUIRE_FALSE(res.diagnostics.empty());
    bool found = false;
    for (const auto& d : res.diagnostics) {
        if (d.message.find("expected END_IF") != std::string::npos) {
            found = true;
            CHECK(d.span.begin.offset == src.size());
        }
    }
    CHECK(found);
}

TEST_CASE("parser recovers at statement boundaries and reports several errors")
{
    auto res = parse_text(
        "PROGRAM P\n"
        "  VAR a : INT; b : INT; END_VAR\n"
        "  a := ;\n"
        "  b := 2;\n"
        "  a := * 3;\n"
        "  b := 4;\n"
        "END_PROGRAM\n");
    std::size_t errors = count_severity(res.diagnostics, Severity::Error);
    CHECK(errors == 2);
    // the two good assignments survive
    REQUIRE(res.unit.pous.size() == 1);
    CHECK(res.unit.pous[0].body.size() == 2);
}

TEST_CASE("operator precedence shapes the tree")
{
    auto res = parse_text("PROGRAM P VAR a : BOOL; x : INT; END_VAR a := 1 + 2 * 3 = 7; END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    const auto& assign = std::get<AssignStmt>(res.unit.pous[0].body[0]->node);
    const auto& eq = std::get<BinaryExpr>(assign.value->node);
    CHECK(eq.op == BinaryOp::Eq);
    const auto& add = std::get<BinaryExpr>(eq.lhs->node);
    CHECK(add.op == BinaryOp::Add);
    const auto& mul = std::get<BinaryExpr>(add.rhs->node);
    CHECK(mul.op == BinaryOp::Mul);
}

TEST_CASE("boolean precedence: NOT > AND > XOR > OR")
{
    auto res = parse_text("PROGRAM P VAR a, b, c, d : BOOL; END_VAR d := NOT a AND b OR c XOR d; END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    const auto& assign = std::get<AssignStmt>(res.unit.pous[0].body[0]->node);
    const auto& orE = std::get<BinaryExpr>(assign.value->node);
    CHECK(orE.op == BinaryOp::Or);
    const auto& andE = std::get<BinaryExpr>(orE.lhs->node);
    CHECK(andE.op == BinaryOp::And);
    CHECK(std::holds_alternative<UnaryExpr>(andE.lhs->node));
    const auto& xorE = std::get<BinaryExpr>(orE.rhs->node);
    CHECK(xorE.op == BinaryOp::Xor);
}

TEST_CASE("fb invocation with named bindings in both directions")
{
    auto res = parse_text(
        "FUNCTION_BLOCK F\n"
        "  VAR Start : BOOL; Y : BOOL; T1 : TON; END_VAR\n"
        "  T1(IN := Start, PT := T#5m, Q => Y);\n"
        "END_FUNCTION_BLOCK\n");
    REQUIRE(res.diagnostics.empty());
    const auto& call = std::get<FbCallStmt>(res.unit.pous[0].body[0]->node);
    CHECK(call.instance == "T1");
    REQUIRE(call.args.size() == 3);
    CHECK(call.args[0].dir == ArgDir::In);
    CHECK(call.args[2].dir == ArgDir::Out);
    CHECK(call.args[2].name == "Q");
}

TEST_CASE("case statement with values, lists and ranges")
{
    auto res = parse_text(
        "PROGRAM P VAR s : INT; y : INT; END_VAR\n"
        "CASE s OF\n"
        "  1: y := 1;\n"
        "  2, 3: y := 2;\n"
        "  10..20: y := 3;\n"
        "  -5: y := 4;\n"
        "ELSE\n"
        "  y := 0;\n"
        "END_CASE;\n"
        "END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    const auto& cs = std::get<CaseStmt>(res.unit.pous[0].body[0]->node);
    REQUIRE(cs.arms.size() == 4);
    CHECK(cs.arms[1].labels.size() == 2);
    CHECK(cs.arms[2].labels[0].low == 10);
    CHECK(cs.arms[2].labels[0].high == 20);
    CHECK(cs.arms[3].labels[0].low == -5);
    CHECK(cs.has_else);
}

TEST_CASE("negative literals fold")
{
    auto res = parse_text("PROGRAM P VAR x : INT := -7; r : REAL; END_VAR r := -2.5; END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    const auto& d = res.unit.pous[0].var_blocks[0].decls[0];
    REQUIRE(d.init);
    CHECK(std::get<IntLit>(d.init->node).value == -7);
    const auto& assign = std::get<AssignStmt>(res.unit.pous[0].body[0]->node);
    CHECK(std::get<RealLit>(assign.value->node).value == -2.5);
}

TEST_CASE("multi-name declarations expand")
{
    auto res = parse_text("PROGRAM P VAR a, b, c : REAL := 1.0; END_VAR END_PROGRAM");
    REQUIRE(res.diagnostics.empty());
    const auto& decls = res.unit.pous[0].var_blocks[0].decls;
    REQUIRE(decls.size() == 3);
    CHECK(decls[1].name == "b");
    REQUIRE(decls[2].init);
    CHECK(std::get<RealLit>(decls[2].init->node).value == 1.0);
}

TEST_CASE("duplicate POU names are rejected, first wins")
{
    auto res = parse_text("PROGRAM A END_PROGRAM PROGRAM a END_PROGRAM");
    REQUIRE(res.unit.pous.size() == 1);
    bool dup = false;
    for (const auto& d : res.diagnostics)
        if (d.code == "P103") dup = true;
    CHECK(dup);
}

TEST_CASE("whole corpus parses without diagnostics")
{
    auto files = testutil::corpus_files();
    REQUIRE(files.size() >= 12);
    for (const auto& f : files) {
        INFO(f.string());
        auto res = parse_text(testutil::slurp(f));
        CAPTURE(render_human(res.diagnostics, f.filename().string()));
        CHECK(res.diagnostics.empty());
        CHECK_FALSE(res.unit.pous.empty());
    }
}

TEST_CASE("parsing is deterministic (same AST and diagnostics twice)")
{
    std::string src = testutil::fixture_text("startup_aircooler.st") + "\nIF broken";
    auto a = parse_text(src);
    auto b = parse_text(src);
    CHECK(unit_equal(a.unit, b.unit));
    REQUIRE(a.diagnostics.size() == b.diagnostics.size());
    for (std::size_t i = 0; i < a.diagnostics.size(); ++i)
        CHECK(a.diagnostics[i] == b.diagnostics[i]);
}

TEST_CASE("diagnostic spans stay within input bounds across corpus and error inputs")
{
    std::vector<std::string> sources;
    for (const auto& f : testutil::corpus_files()) sources.push_back(testutil::slurp(f));
    sources.push_back("PROGRAM P x := ; END_PROGRAM");
    sources.push_back("IF a THEN b := 1;");
    sources.push_back("(* unclosed");
    for (const auto& src : sources) {
        auto res = parse_text(src);
        for (const auto& d : res.diagnostics) {
            CHECK(d.span.begin.offset <= d.span.end.offset);
            CHECK(d.span.end.offset <= src.size());
            CHECK(d.span.begin.line >= 1);
            CHECK(d.span.begin.column >= 1);
        }
    }
}
