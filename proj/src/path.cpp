#include "optic/path.hpp"

#include <cctype>

#include "optic/errors.hpp"

namespace optic::path {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '.') {
            tokens.push_back({TokenType::Dot, "", 0, i});
            ++i;
        } else if (c == '?') {
            tokens.push_back({TokenType::QMark, "", 0, i});
            ++i;
        } else if (c == '[') {
            tokens.push_back({TokenType::LBracket, "", 0, i});
            ++i;
        } else if (c == ']') {
            tokens.push_back({TokenType::RBracket, "", 0, i});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::size_t n = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                n = n * 10 + static_cast<std::size_t>(src[i] - '0');
                ++i;
            }
            tokens.push_back({TokenType::Nat, "", n, start});
        } else if (ident_start(c)) {
            std::size_t start = i;
            while (i < src.size() && ident_char(src[i])) ++i;
            std::string word = src.substr(start, i - start);
            if (word == "each")
                tokens.push_back({TokenType::Each, "", 0, start});
            else
                tokens.push_back({TokenType::Ident, word, 0, start});
        } else {
            throw LexError("unexpected character '" + std::string(1, c) + "' at byte " +
                               std::to_string(i),
                           i);
        }
    }
    return tokens;
}

PathAst parse(const std::vector<Token>& tokens) {
    PathAst ast;
    std::size_t i = 0;
    auto expect = [&](TokenType t, const char* what) -> const Token& {
        if (i >= tokens.size())
            throw ParseError(std::string("expected ") + what + " at end of path", i);
        if (tokens[i].type != t)
            throw ParseError(std::string("expected ") + what + " at token " + std::to_string(i), i);
        return tokens[i++];
    };
    while (i < tokens.size()) {
        switch (tokens[i].type) {
            case TokenType::Dot: {
                ++i;
                ast.push_back(FieldSeg{expect(TokenType::Ident, "identifier").text});
                break;
            }
            case TokenType::QMark: {
                ++i;
                ast.push_back(VariantSeg{expect(TokenType::Ident, "identifier").text});
                break;
            }
            case TokenType::LBracket: {
                ++i;
                std::size_t n = expect(TokenType::Nat, "index").number;
                expect(TokenType::RBracket, "']'");
                ast.push_back(IndexSeg{n});
                break;
            }
            case TokenType::Each: {
                ++i;
                ast.push_back(EachSeg{});
                break;
            }
            default:
                throw ParseError("unexpected token at position " + std::to_string(i), i);
        }
    }
    return ast;
}

PathAst parse(const std::string& src) { return parse(tokenize(src)); }

std::string print(const PathAst& ast) {
    std::string out;
    for (const auto& seg : ast) {
        if (std::holds_alternative<EachSeg>(seg)) {
            if (!out.empty()) out += ' ';
            out += "each";
        } else if (const auto* f = std::get_if<FieldSeg>(&seg)) {
            out += '.';
            out += f->name;
        } else if (const auto* v = std::get_if<VariantSeg>(&seg)) {
            out += '?';
            out += v->name;
        } else {
            out += '[';
            out += std::to_string(std::get<IndexSeg>(seg).index);
            out += ']';
        }
    }
    return out;
}

OpticKind segment_kind(const Segment& seg) {
    if (std::holds_alternative<FieldSeg>(seg)) return OpticKind::Lens;
    if (std::holds_alternative<VariantSeg>(seg)) return OpticKind::Prism;
    if (std::holds_alternative<IndexSeg>(seg)) return OpticKind::Affine;
    return OpticKind::Traversal;
}

OpticKind infer_kind(const PathAst& ast) {
    OpticKind k = OpticKind::Adapter;
    for (const auto& seg : ast) k = join(k, segment_kind(seg));
    return k;
}

DynOptic compile_segment(const Segment& seg) {
    if (const auto* f = std::get_if<FieldSeg>(&seg)) {
        std::string key = f->name;
        return VLens{
            [key](const Value& s) { return expect_object_field(s, key); },
            [key](const Value& s, const Value& b) {
                expect_object_field(s, key);
                Value t = s;
                t[key] = b;
                return t;
            },
        };
    }
    if (const auto* v = std::get_if<VariantSeg>(&seg)) {
        std::string tag = v->name;
        return VPrism{
            [tag](const Value& s) {
                if (s.is_object() && s.size() == 1 && s.contains(tag))
                    return Either<Value, Value>::right(s.at(tag));
                return Either<Value, Value>::left(s);
            },
            [tag](const Value& b) {
                Value t = Value::object();
                t[tag] = b;
                return t;
            },
        };
    }
    if (const auto* ix = std::get_if<IndexSeg>(&seg)) {
        std::size_t i = ix->index;
        return VAffine{[i](const Value& s) {
            if (s.is_array() && i < s.size()) {
                ValueFn put = [s, i](const Value& b) {
                    Value t = s;
                    t[i] = b;
                    return t;
                };
                return Either<Value, std::pair<Value, ValueFn>>::right({s.at(i), put});
            }
            return Either<Value, std::pair<Value, ValueFn>>::left(s);
        }};
    }
    return VTraversal{[](const Value& s) {
        expect_array(s, "'each'");
        VFunList split;
        split.contents.assign(s.begin(), s.end());
        std::size_t n = split.contents.size();
        split.rebuild = [n](const std::vector<Value>& bs) {
            if (bs.size() != n) throw LengthMismatchError("'each' rebuild expects the extracted length");
            return Value(bs);
        };
        return split;
    }};
}

DynOptic compile(const PathAst& ast) {
    DynOptic optic = identity_optic();
    for (const auto& seg : ast) optic = compose(optic, compile_segment(seg));
    return optic;
}

DynOptic compile(const std::string& src) { return compile(parse(src)); }

} // namespace optic::path
