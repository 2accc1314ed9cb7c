#pragma once
//  Diagnostic records shared by the lexer, parser, checker and pipeline.
//
//  Codes are stable identifiers: the repair loop embeds them in prompts and
//  downstream tools key on them, so existing codes must never be renumbered.
//
//    P0xx  lexical errors          P1xx  parse errors
//    E0xx  semantic errors         W1xx  semantic warnings
//    L0xx  style lints
//
//  Rendering is either human-oriented ("file:line:col: error CODE: msg") or
//  a line-delimited machine record (code, severity, line, column, message,
//  tab-separated).

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "pid2st/span.hpp"

namespace pid2st {

enum class Severity { Error, Warning, Lint };

inline std::string_view severity_name(Severity s)
{
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Lint: return "lint";
    }
    return "?";
}

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic make_error(std::string code, std::string message, SourceSpan span)
{
    return Diagnostic{Severity::Error, std::move(code), std::move(message), span};
}

inline Diagnostic make_warning(std::string code, std::string message, SourceSpan span)
{
    return Diagnostic{Severity::Warning, std::move(code), std::move(message), span};
}

inline Diagnostic make_lint(std::string code, std::string message, SourceSpan span)
{
    return Diagnostic{Severity::Lint, std::move(code), std::move(message), span};
}

inline bool has_errors(const Diagnostics& diags)
{
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

inline std::size_t count_severity(const Diagnostics& diags, Severity s)
{
    return static_cast<std::size_t>(
        std::count_if(diags.begin(), diags.end(),
                      [s](const Diagnostic& d) { return d.severity == s; }));
}

// Deterministic order: by span, then code, then message.
inline void sort_diagnostics(Diagnostics& diags)
{
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (!(a.span == b.span)) return a.span < b.span;
        if (a.code != b.code) return a.code < b.code;
        return a.message < b.message;
    });
}

inline std::string render_human(const Diagnostic& d, std::string_view file = {})
{
    if (file.empty()) {
        return fmt::format("{}:{}: {} {}: {}", d.span.begin.line, d.span.begin.column,
                           severity_name(d.severity), d.code, d.message);
    }
    return fmt::format("{}:{}:{}: {} {}: {}", file, d.span.begin.line, d.span.begin.column,
                       severity_name(d.severity), d.code, d.message);
}

// One tab-separated record per line: code, severity, line, column, message.
inline std::string render_machine(const Diagnostic& d)
{
    return fmt::format("{}\t{}\t{}\t{}\t{}", d.code, severity_name(d.severity),
                       d.span.begin.line, d.span.begin.column, d.message);
}

inline std::string render_human(const Diagnostics& diags, std::string_view file = {})
{
    std::string out;
    for (const auto& d : diags) {
        out += render_human(d, file);
        out += '\n';
    }
    return out;
}

inline std::string render_machine(const Diagnostics& diags)
{
    std::string out;
    for (const auto& d : diags) {
        out += render_machine(d);
        out += '\n';
    }
    return out;
}

}  // namespace pid2st
