#include <doctest.h>

#include "optic/path.hpp"
#include "testutil.hpp"

using namespace optic;
using testutil::Value;

namespace {

Value obj(std::initializer_list<std::pair<const char*, Value>> fields) {
    Value v = Value::object();
    for (const auto& [k, val] : fields) v[k] = val;
    return v;
}

VLens field_lens(const std::string& key) {
    return upcast(path::compile("." + key), OpticKind::Lens).as<VLens>();
}

VPrism variant_prism(const std::string& tag) {
    return upcast(path::compile("?" + tag), OpticKind::Prism).as<VPrism>();
}

} // namespace

TEST_CASE("lens view and update on document fields") {
    auto city = field_lens("city");
    Value address = obj({{"street", "45 Banbury Rd"}, {"city", "Oxford"}});

    CHECK(lens_view(city, address) == Value("Oxford"));
    CHECK(lens_view(field_lens("x"), obj({{"x", 0}})) == Value(0));

    Value updated = lens_update(city, address, Value("Oxford (UK)"));
    CHECK(updated == obj({{"street", "45 Banbury Rd"}, {"city", "Oxford (UK)"}}));
}

TEST_CASE("lens laws on random documents containing the field") {
    std::mt19937_64 rng(7);
    auto lens = field_lens("a");
    for (int i = 0; i < 1000; ++i) {
        Value s = testutil::gen_doc_with_field(rng, "a");
        Value b1 = testutil::gen_value(rng, 2);
        Value b2 = testutil::gen_value(rng, 2);
        REQUIRE(lens_update(lens, s, lens_view(lens, s)) == s);
        REQUIRE(lens_view(lens, lens_update(lens, s, b1)) == b1);
        REQUIRE(lens_update(lens, lens_update(lens, s, b1), b2) == lens_update(lens, s, b2));
    }
}

TEST_CASE("prism match and build") {
    auto postal = variant_prism("postal");
    Value hit = obj({{"postal", "OX1 3QD"}});
    Value miss = obj({{"email", "who@where"}});

    auto matched = prism_match(postal, hit);
    REQUIRE(matched.is_right());
    CHECK(matched.right_value() == Value("OX1 3QD"));

    auto missed = prism_match(postal, miss);
    REQUIRE(missed.is_left());
    CHECK(missed.left_value() == miss);

    CHECK(prism_build(postal, Value("P")) == obj({{"postal", "P"}}));
}

TEST_CASE("prism laws on random payloads") {
    std::mt19937_64 rng(11);
    auto postal = variant_prism("postal");
    for (int i = 0; i < 1000; ++i) {
        Value b = testutil::gen_value(rng, 2);
        auto m = prism_match(postal, prism_build(postal, b));
        REQUIRE(m.is_right());
        REQUIRE(m.right_value() == b);
        // A miss keeps the whole unchanged.
        Value s = testutil::gen_value(rng, 2);
        auto direct = prism_match(postal, s);
        if (direct.is_left()) REQUIRE(direct.left_value() == s);
    }
}

TEST_CASE("composed prism build equals composition of builds") {
    std::mt19937_64 rng(13);
    auto outer = variant_prism("v");
    auto inner = variant_prism("w");
    auto composed = upcast(compose(DynOptic(outer), DynOptic(inner)), OpticKind::Prism);
    const auto& build2 = composed.as<VPrism>().build;
    for (int i = 0; i < 200; ++i) {
        Value b = testutil::gen_value(rng, 2);
        REQUIRE(build2(b) == prism_build(outer, prism_build(inner, b)));
    }
}

TEST_CASE("affine preview and set") {
    auto first = upcast(path::compile("?left .fst"), OpticKind::Affine).as<VAffine>();
    Value hit = obj({{"left", obj({{"fst", 5}, {"snd", "x"}})}});
    Value miss = obj({{"right", 7}});

    CHECK(affine_preview(first, hit) == std::optional<Value>(Value(5)));
    CHECK(affine_preview(first, miss) == std::nullopt);
    CHECK(affine_set(first, miss, Value(9)) == miss);
    CHECK(affine_set(first, hit, Value(9)) == obj({{"left", obj({{"fst", 9}, {"snd", "x"}})}}));
}

TEST_CASE("affine law: set of a successful preview is the identity") {
    std::mt19937_64 rng(17);
    auto at1 = upcast(path::compile("[1]"), OpticKind::Affine).as<VAffine>();
    int hits = 0;
    for (int i = 0; i < 1000; ++i) {
        Value s = testutil::gen_array(rng, rng() % 2 == 0 ? 2 : 0);
        auto focus = affine_preview(at1, s);
        if (!focus) continue;
        ++hits;
        REQUIRE(affine_set(at1, s, *focus) == s);
    }
    CHECK(hits > 100);
}

TEST_CASE("traversal toList and over") {
    auto each = upcast(path::compile("each"), OpticKind::Traversal).as<VTraversal>();
    CHECK(traversal_to_list(each, Value::array()).empty());
    Value nums = Value{1, 2, 3};
    auto listed = traversal_to_list(each, nums);
    CHECK(Value(listed) == nums);

    auto incr = [](const Value& v) { return Value(v.get<double>() + 1.0); };
    CHECK(traversal_over(each, incr, nums) == Value{2.0, 3.0, 4.0});
}

TEST_CASE("traversal laws: identity over and rebuild of own contents") {
    std::mt19937_64 rng(19);
    auto each = upcast(path::compile("each"), OpticKind::Traversal).as<VTraversal>();
    for (int i = 0; i < 1000; ++i) {
        Value s = testutil::gen_array(rng, 0);
        auto split = each.extract(s);
        REQUIRE(split.rebuild(split.contents) == s);
        auto same = traversal_over(each, [](const Value& v) { return v; }, s);
        REQUIRE(same == s);
    }
}

TEST_CASE("over distributes over function composition") {
    std::mt19937_64 rng(23);
    auto each = upcast(path::compile("each"), OpticKind::Traversal).as<VTraversal>();
    auto f = [](const Value& v) { return Value(v.get<double>() * 2.0); };
    auto g = [](const Value& v) { return Value(v.get<double>() + 3.0); };
    for (int i = 0; i < 500; ++i) {
        Value s = Value::array();
        std::size_t n = rng() % 5;
        for (std::size_t k = 0; k < n; ++k)
            s.push_back(static_cast<double>(rng() % 100));
        auto lhs = traversal_over(each, [&](const Value& v) { return f(g(v)); }, s);
        auto rhs = traversal_over(each, f, traversal_over(each, g, s));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("toList after over equals mapping over toList") {
    std::mt19937_64 rng(139);
    auto each = upcast(path::compile("each"), OpticKind::Traversal).as<VTraversal>();
    auto f = testutil::probe_fn();
    for (int i = 0; i < 1000; ++i) {
        Value s = testutil::gen_array(rng, 0);
        auto lhs = traversal_to_list(each, traversal_over(each, f, s));
        auto rhs = traversal_to_list(each, s);
        for (auto& v : rhs) v = f(v);
        REQUIRE(Value(lhs) == Value(rhs));
    }
}

TEST_CASE("rebuild rejects lists of the wrong length") {
    auto each = upcast(path::compile("each"), OpticKind::Traversal).as<VTraversal>();
    auto split = each.extract(Value{1, 2, 3});
    CHECK_THROWS_AS(split.rebuild({Value(1)}), LengthMismatchError);
}

TEST_CASE("grate zipping") {
    auto id_grate = upcast(identity_optic(), OpticKind::Grate).as<VGrate>();
    auto add = [](const Value& x, const Value& y) {
        return Value(x.get<double>() + y.get<double>());
    };
    CHECK(grate_zip2(id_grate, Value(2), Value(5), std::function(add)) == Value(7.0));

    // Componentwise zip through a pairwise grate.
    VGrate pairwise{[](const std::function<Value(const ValueFn&)>& k) {
        Value out = Value::array();
        out.push_back(k([](const Value& s) { return s.at(0); }));
        out.push_back(k([](const Value& s) { return s.at(1); }));
        return out;
    }};
    CHECK(grate_zip2(pairwise, Value{1, 2}, Value{10, 20}, std::function(add)) ==
          Value{11.0, 22.0});

    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        Value s = testutil::gen_value(rng, 2);
        REQUIRE(id_grate.degrate([&](const ValueFn& v) { return v(s); }) == s);
    }
}

TEST_CASE("glass from lens runs update over a rewritten view") {
    auto lens = field_lens("a");
    auto glass = upcast(DynOptic(lens), OpticKind::Glass).as<VGlass>();
    auto f = testutil::probe_fn();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Value s = testutil::gen_doc_with_field(rng, "a");
        Value got = glass_run(glass, s, [&](const Fn1<Value, Value>& view) { return f(view(s)); });
        REQUIRE(got == lens_update(lens, s, f(lens_view(lens, s))));
    }
}

TEST_CASE("glass from grate ignores the concrete whole") {
    auto grate = upcast(identity_optic(), OpticKind::Grate).as<VGrate>();
    auto glass = upcast(DynOptic(grate), OpticKind::Glass).as<VGlass>();
    auto k = [](const Fn1<Value, Value>& v) { return v(Value(41)); };
    CHECK(glass_run(glass, Value("ignored"), k) == Value(41));
    CHECK(glass_run(glass, Value{1, 2, 3}, k) == Value(41));
}

TEST_CASE("setter over") {
    auto id_setter = upcast(identity_optic(), OpticKind::Setter).as<VSetter>();
    CHECK(setter_over(id_setter, testutil::probe_fn())(Value(1)) == Value(2.0));
    CHECK(setter_over(id_setter, [](const Value& v) { return v; })(Value{1, 2}) == Value{1, 2});

    auto lens_setter = upcast(DynOptic(field_lens("a")), OpticKind::Setter).as<VSetter>();
    Value s = obj({{"a", 1}, {"b", 2}});
    CHECK(setter_over(lens_setter, testutil::probe_fn())(s) == obj({{"a", 2.0}, {"b", 2}}));

    auto each_setter = upcast(path::compile("each"), OpticKind::Setter).as<VSetter>();
    auto incr = [](const Value& v) { return Value(v.get<double>() + 1.0); };
    CHECK(setter_over(each_setter, incr)(Value{1, 2, 3}) == Value{2.0, 3.0, 4.0});
}

TEST_CASE("kaleidoscope applies folds through a list lens") {
    VListLens plain{[](const Value& s) { return s; },
                    [](const std::vector<Value>&, const Value& b) { return b; }};
    auto scope = upcast(DynOptic(plain), OpticKind::Kaleidoscope).as<VKaleidoscope>();
    auto mean = [](const std::vector<Value>& xs) {
        double total = 0;
        for (const auto& x : xs) total += x.get<double>();
        return Value(total / static_cast<double>(xs.size()));
    };
    CHECK(kaleidoscope_apply(scope, mean, {Value(1), Value(2), Value(3)}) == Value(2.0));
}

TEST_CASE("list lens classify accepts the empty context") {
    VListLens counter{[](const Value& s) { return s; },
                      [](const std::vector<Value>& ss, const Value& b) {
                          Value out = Value::object();
                          out["context"] = ss.size();
                          out["value"] = b;
                          return out;
                      }};
    Value out = listlens_classify(counter, {}, Value(5));
    CHECK(out.at("context") == Value(0));
}

TEST_CASE("achromatic lens behaviors") {
    auto base = field_lens("a");
    // Always-a-setter: behaves exactly like the lens.
    AchromaticLens<Value, Value, Value, Value> lens_like{
        [base](const Value& s) {
            return std::optional<ValueFn>([base, s](const Value& b) { return base.update(s, b); });
        },
        base.view,
        [](const Value& b) { return b; },
    };
    auto ops = achromatic_ops(lens_like);
    Value s = obj({{"a", 10}, {"b", 0}});
    CHECK(ops.view(s) == Value(10));
    CHECK(ops.update(s, Value(3)) == obj({{"a", 3}, {"b", 0}}));

    // Never-a-setter: update falls back to build.
    AchromaticLens<Value, Value, Value, Value> builder{
        [](const Value&) { return std::optional<ValueFn>(); },
        [](const Value& v) { return v; },
        [](const Value& b) { return obj({{"built", b}}); },
    };
    CHECK(achromatic_ops(builder).update(s, Value(3)) == obj({{"built", 3}}));
}

TEST_CASE("achromatic lens built from a lawful lens satisfies the lens laws") {
    auto base = field_lens("a");
    AchromaticLens<Value, Value, Value, Value> al{
        [base](const Value& s) {
            return std::optional<ValueFn>([base, s](const Value& b) { return base.update(s, b); });
        },
        base.view,
        [](const Value& b) { return b; },
    };
    auto lens = achromatic_to_lens(al);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
        Value s = testutil::gen_doc_with_field(rng, "a");
        Value b1 = testutil::gen_value(rng, 1);
        Value b2 = testutil::gen_value(rng, 1);
        REQUIRE(lens.update(s, lens.view(s)) == s);
        REQUIRE(lens.view(lens.update(s, b1)) == b1);
        REQUIRE(lens.update(lens.update(s, b1), b2) == lens.update(s, b2));
    }
}
