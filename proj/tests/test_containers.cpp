#include <doctest.h>

#include <random>

#include "optic/containers.hpp"
#include "optic/lawsuite.hpp"

using namespace optic::containers;

namespace {

Container<int> leaf_node_tree() {
    return Container<int>::tree(Tree<int>::node(Tree<int>::leaf(5), Tree<int>::leaf(6)));
}

Container<int> random_container(std::mt19937_64& rng, std::size_t max_elems) {
    switch (rng() % 4) {
        case 0: {
            std::vector<int> xs(rng() % (max_elems + 1));
            for (auto& x : xs) x = static_cast<int>(rng() % 100);
            return Container<int>::sequence(std::move(xs));
        }
        case 1:
            return rng() % 2 == 0 ? Container<int>::optional(std::nullopt)
                                  : Container<int>::optional(static_cast<int>(rng() % 100));
        case 2:
            return Container<int>::pair(static_cast<int>(rng() % 100),
                                        static_cast<int>(rng() % 100));
        default: {
            std::function<Tree<int>(std::size_t)> build = [&](std::size_t leaves) {
                if (leaves <= 1) return Tree<int>::leaf(static_cast<int>(rng() % 100));
                std::size_t k = 1 + rng() % (leaves - 1);
                return Tree<int>::node(build(k), build(leaves - k));
            };
            return Container<int>::tree(build(1 + rng() % max_elems));
        }
    }
}

} // namespace

TEST_CASE("decompose splits into length, indexed shape and contents") {
    auto sc = decompose(Container<int>::sequence({7, 8}));
    CHECK(sc.length == 2);
    CHECK(sc.contents == std::vector<int>{7, 8});
    CHECK(sc.shape == Container<Index>::sequence({0, 1}));

    auto none = decompose(Container<int>::optional(std::nullopt));
    CHECK(none.length == 0);
    CHECK(none.contents.empty());
    CHECK(none.shape == Container<Index>::optional(std::nullopt));

    auto tree = decompose(leaf_node_tree());
    CHECK(tree.length == 2);
    CHECK(tree.contents == std::vector<int>{5, 6});
    CHECK(tree.shape ==
          Container<Index>::tree(Tree<Index>::node(Tree<Index>::leaf(0), Tree<Index>::leaf(1))));
}

TEST_CASE("recombine substitutes contents into slots") {
    ShapeContents<int> empty_seq{0, Container<Index>::sequence({}), {}};
    CHECK(recombine(empty_seq) == Container<int>::sequence({}));

    // Permuting the contents permutes the container.
    auto sc = decompose(Container<int>::sequence({7, 8}));
    std::swap(sc.contents[0], sc.contents[1]);
    CHECK(recombine(sc) == Container<int>::sequence({8, 7}));

    ShapeContents<int> broken{2, Container<Index>::pair(0, 1), {1}};
    CHECK_THROWS_AS(recombine(broken), optic::LengthMismatchError);
    ShapeContents<int> out_of_range{1, Container<Index>::optional(3), {5}};
    CHECK_THROWS_AS(recombine(out_of_range), optic::LengthMismatchError);
}

TEST_CASE("counitality and shape idempotence on random containers") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 2000; ++i) {
        auto c = random_container(rng, 6);
        REQUIRE(recombine(decompose(c)) == c);
        auto shape = shape_of(c);
        REQUIRE(shape_of(shape) == shape);
    }
}

TEST_CASE("shape examples") {
    CHECK(shape_of(Container<int>::sequence({9, 9})) == Container<Index>::sequence({0, 1}));
    CHECK(shape_of(Container<int>::optional(std::nullopt)) ==
          Container<Index>::optional(std::nullopt));
}

TEST_CASE("optional traversal fails when any element fails") {
    std::function<std::optional<int>(const int&)> evens = [](const int& a) {
        return a % 2 == 0 ? std::optional<int>(a) : std::nullopt;
    };
    CHECK(traverse_optional(Container<int>::sequence({1, 2, 3}), evens) == std::nullopt);
    CHECK(traverse_optional(Container<int>::sequence({2, 4}), evens) ==
          std::optional(Container<int>::sequence({2, 4})));
}

TEST_CASE("counter traversal visits contents left to right") {
    std::function<std::pair<int, int>(const int&, int)> tag = [](const int&, int n) {
        return std::make_pair(n, n + 1);
    };
    auto tree = Container<int>::tree(
        Tree<int>::node(Tree<int>::node(Tree<int>::leaf(10), Tree<int>::leaf(11)),
                        Tree<int>::leaf(12)));
    auto [tagged, count] = traverse_counter(tree, tag, 0);
    CHECK(count == 3);

    // Hand-rolled structural recursion as the oracle.
    std::function<Tree<int>(const Tree<int>::Ptr&, int&)> walk = [&](const Tree<int>::Ptr& node,
                                                                     int& n) {
        if (node->data.index() == 0) return Tree<int>::leaf(n++);
        const auto& [l, r] = std::get<1>(node->data);
        auto left = walk(l, n);
        auto right = walk(r, n);
        return Tree<int>::node(left, right);
    };
    int n = 0;
    auto expected = Container<int>::tree(walk(std::get<Tree<int>>(tree.data).root, n));
    CHECK(tagged == expected);
}

TEST_CASE("law suites report all-pass") {
    auto report = optic::lawsuite::run_container_suites();
    for (const auto& suite : report.suites) {
        INFO(suite.name);
        CHECK(suite.passed);
        CHECK(suite.cases > 0);
    }
    // Exhaustive set over a two-symbol alphabet with up to four
    // elements: 31 sequences + 3 optionals + 4 pairs + 102 trees.
    CHECK(report.suites[0].cases == 140);
}
