#include <doctest.h>

#include "testutil.hpp"

using namespace optic;
using namespace optic::path;
using testutil::Value;

TEST_CASE("tokenizer recognizes the segment vocabulary") {
    auto tokens = tokenize(".postal.street");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].type == TokenType::Dot);
    CHECK(tokens[1].type == TokenType::Ident);
    CHECK(tokens[1].text == "postal");
    CHECK(tokens[2].type == TokenType::Dot);
    CHECK(tokens[3].text == "street");

    tokens = tokenize("?postal .street");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].type == TokenType::QMark);
    CHECK(tokens[1].text == "postal");
    CHECK(tokens[2].type == TokenType::Dot);

    tokens = tokenize(".a[0]each");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].type == TokenType::Dot);
    CHECK(tokens[1].text == "a");
    CHECK(tokens[2].type == TokenType::LBracket);
    CHECK(tokens[3].type == TokenType::Nat);
    CHECK(tokens[3].number == 0);
    CHECK(tokens[4].type == TokenType::RBracket);
    CHECK(tokens[5].type == TokenType::Each);
}

TEST_CASE("tokenizer reports the offending byte") {
    try {
        tokenize(".a!bad");
        FAIL("expected a lex error");
    } catch (const LexError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("parser handles the grammar and rejects danglers") {
    CHECK(parse("").empty());

    auto ast = parse("?postal.street");
    REQUIRE(ast.size() == 2);
    CHECK(std::get<VariantSeg>(ast[0]).name == "postal");
    CHECK(std::get<FieldSeg>(ast[1]).name == "street");

    CHECK_THROWS_AS(parse("."), ParseError);
    CHECK_THROWS_AS(parse(".a["), ParseError);
    CHECK_THROWS_AS(parse("[1"), ParseError);
    CHECK_THROWS_AS(parse("]"), ParseError);
    CHECK_THROWS_AS(parse("?[0]"), ParseError);
}

TEST_CASE("printing a parsed path tokenizes back to the same stream") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 2000; ++i) {
        PathAst ast = testutil::gen_ast(rng, 6);
        std::string text = print(ast);
        CHECK(tokenize(print(parse(tokenize(text)))) == tokenize(text));
        // And the reprinted AST is the same AST.
        PathAst again = parse(text);
        REQUIRE(again.size() == ast.size());
        CHECK(print(again) == text);
    }
}

TEST_CASE("the empty path compiles to the identity adapter") {
    DynOptic id = compile("");
    CHECK(id.kind() == OpticKind::Adapter);
    std::mt19937_64 rng(127);
    for (int i = 0; i < 200; ++i) {
        Value doc = testutil::gen_value(rng, 3);
        REQUIRE(dyn_get(id, doc) == doc);
        REQUIRE(dyn_set(id, doc, Value(5)) == Value(5));
    }
}

TEST_CASE("segment kinds and inference") {
    CHECK(infer_kind(parse("")) == OpticKind::Adapter);
    CHECK(infer_kind(parse(".a.b")) == OpticKind::Lens);
    CHECK(infer_kind(parse("?v.a")) == OpticKind::Affine);
    CHECK(infer_kind(parse(".a each .b")) == OpticKind::Traversal);
    CHECK(infer_kind(parse("[3]")) == OpticKind::Affine);
}

TEST_CASE("inferred kind always matches the compiled kind") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 10000; ++i) {
        PathAst ast = testutil::gen_ast(rng, 6);
        REQUIRE(infer_kind(ast) == compile(ast).kind());
    }
}

TEST_CASE("compiled field lens demands the field at run time") {
    DynOptic lens = compile(".city");
    Value doc = Value::object();
    doc["city"] = "Oxford";
    CHECK(dyn_get(lens, doc) == Value("Oxford"));

    Value missing = Value::object();
    missing["town"] = "Oxford";
    CHECK_THROWS_AS(dyn_get(lens, missing), DocTypeError);
    CHECK_THROWS_AS(dyn_get(lens, Value(3)), DocTypeError);
    CHECK_THROWS_AS(dyn_set(lens, missing, Value(1)), DocTypeError);
}

TEST_CASE("compiled variant prism is total") {
    DynOptic prism = compile("?left");
    Value hit = Value::object();
    hit["left"] = 5;
    CHECK(dyn_preview(prism, hit) == std::optional<Value>(Value(5)));

    Value two_keys = hit;
    two_keys["right"] = 6;
    CHECK(dyn_preview(prism, two_keys) == std::nullopt);
    CHECK(dyn_preview(prism, Value("text")) == std::nullopt);
}

TEST_CASE("compiled index affine misses out-of-range and non-arrays") {
    DynOptic at = compile("[1]");
    CHECK(dyn_preview(at, Value{10, 20, 30}) == std::optional<Value>(Value(20)));
    CHECK(dyn_preview(at, Value{10}) == std::nullopt);
    CHECK(dyn_preview(at, Value("no")) == std::nullopt);
    CHECK(dyn_set(at, Value{10, 20}, Value(99)) == Value{10, 99});
    CHECK(dyn_set(at, Value{10}, Value(99)) == Value{10});
}

TEST_CASE("compiled each traversal requires an array at run time") {
    DynOptic each = compile("each");
    CHECK_THROWS_AS(dyn_to_list(each, Value(1)), DocTypeError);
    CHECK(dyn_to_list(each, Value::array()).empty());
}

TEST_CASE("laws of compiled optics over randomized documents") {
    std::mt19937_64 rng(71);
    DynOptic lens = compile(".a");
    DynOptic prism = compile("?v");
    DynOptic affine = compile("[1]");

    auto vlens = upcast(lens, OpticKind::Lens).as<VLens>();
    auto vprism = upcast(prism, OpticKind::Prism).as<VPrism>();
    auto vaffine = upcast(affine, OpticKind::Affine).as<VAffine>();

    for (int i = 0; i < 1000; ++i) {
        Value with_field = testutil::gen_doc_with_field(rng, "a");
        Value payload = testutil::gen_value(rng, 2);
        REQUIRE(vlens.update(with_field, vlens.view(with_field)) == with_field);
        REQUIRE(vlens.view(vlens.update(with_field, payload)) == payload);

        auto m = vprism.match(vprism.build(payload));
        REQUIRE(m.is_right());
        REQUIRE(m.right_value() == payload);
        Value arbitrary = testutil::gen_value(rng, 3);
        auto direct = vprism.match(arbitrary);
        if (direct.is_left()) REQUIRE(direct.left_value() == arbitrary);
        else REQUIRE(vprism.build(direct.right_value()) == arbitrary);

        Value arr = testutil::gen_array(rng, rng() % 2 == 0 ? 2 : 0);
        auto access = vaffine.access(arr);
        if (access.is_left()) {
            REQUIRE(access.left_value() == arr);
        } else {
            REQUIRE(access.right_value().second(access.right_value().first) == arr);
        }
    }
}
