#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "optic/dyn.hpp"
#include "optic/kind.hpp"

namespace optic::path {

// Token stream of a path expression.
//   .name   field access        (lens)
//   ?name   variant match       (prism)
//   [n]     array index         (affine traversal)
//   each    all array elements  (traversal)
// Whitespace separates segments and is discarded.
enum class TokenType { Dot, QMark, LBracket, RBracket, Ident, Nat, Each };

struct Token {
    TokenType type;
    std::string text;     // identifier name, when type == Ident
    std::size_t number{}; // index, when type == Nat
    std::size_t offset{}; // byte offset in the source

    friend bool operator==(const Token& a, const Token& b) {
        return a.type == b.type && a.text == b.text && a.number == b.number;
    }
};

std::vector<Token> tokenize(const std::string& src);

struct FieldSeg {
    std::string name;
};
struct VariantSeg {
    std::string name;
};
struct IndexSeg {
    std::size_t index;
};
struct EachSeg {};

using Segment = std::variant<FieldSeg, VariantSeg, IndexSeg, EachSeg>;

// A parsed path; the empty path is the identity optic.
using PathAst = std::vector<Segment>;

PathAst parse(const std::vector<Token>& tokens);
PathAst parse(const std::string& src);

// Canonical source text; parse(print(ast)) tokenizes back to the same
// token stream.
std::string print(const PathAst& ast);

// Kind a segment compiles to on its own.
OpticKind segment_kind(const Segment& seg);

// Left fold of join over the segment kinds, starting from Adapter.
// Always equals compile(ast).kind().
OpticKind infer_kind(const PathAst& ast);

// Builds the dynamic optic for one segment.
DynOptic compile_segment(const Segment& seg);

// Folds the segments with lattice composition, starting from the
// identity adapter. Document-shape errors surface at run time.
DynOptic compile(const PathAst& ast);
DynOptic compile(const std::string& src);

} // namespace optic::path
