#pragma once
//  Source positions and spans for diagnostics and AST nodes.
//  Lines and columns are 1-based; byte offsets are 0-based half-open.

#include <cstddef>
#include <cstdint>
#include <string>

#include <fmt/format.h>

namespace pid2st {

struct SourcePos {
    int line = 1;
    int column = 1;
    std::size_t offset = 0;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
    SourcePos begin;
    SourcePos end;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;

    bool valid() const { return begin.offset <= end.offset; }

    // Ordering used to sort diagnostics: by start position, then end.
    friend bool operator<(const SourceSpan& a, const SourceSpan& b)
    {
        if (a.begin.offset != b.begin.offset) return a.begin.offset < b.begin.offset;
        return a.end.offset < b.end.offset;
    }

    std::string to_string() const
    {
        return fmt::format("{}:{}", begin.line, begin.column);
    }
};

inline SourceSpan join(const SourceSpan& a, const SourceSpan& b)
{
    SourceSpan s;
    s.begin = a.begin.offset <= b.begin.offset ? a.begin : b.begin;
    s.end = a.end.offset >= b.end.offset ? a.end : b.end;
    return s;
}

}  // namespace pid2st
