#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "optic/errors.hpp"

// Concrete container families with a shape/contents split: a container
// decomposes into its arity, a shape holding slot indices, and the
// ordered contents; recombining evaluates the shape at the contents.

namespace optic::containers {

template <class A>
struct Tree {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;
    struct Node {
        // A leaf carries a label; an inner node carries two subtrees.
        std::variant<A, std::pair<Ptr, Ptr>> data;
    };

    Ptr root;

    static Tree leaf(A value) {
        return Tree{std::make_shared<const Node>(Node{std::move(value)})};
    }
    static Tree node(Tree left, Tree right) {
        return Tree{std::make_shared<const Node>(
            Node{std::make_pair(std::move(left.root), std::move(right.root))})};
    }

    friend bool operator==(const Tree& x, const Tree& y) { return equal(x.root, y.root); }

    static bool equal(const Ptr& p, const Ptr& q) {
        if (p->data.index() != q->data.index()) return false;
        if (p->data.index() == 0) return std::get<0>(p->data) == std::get<0>(q->data);
        const auto& [pl, pr] = std::get<1>(p->data);
        const auto& [ql, qr] = std::get<1>(q->data);
        return equal(pl, ql) && equal(pr, qr);
    }
};

template <class A>
struct Container {
    using Seq = std::vector<A>;
    using Opt = std::optional<A>;
    using Pair = std::pair<A, A>;

    std::variant<Seq, Opt, Pair, Tree<A>> data;

    static Container sequence(Seq xs) { return {std::move(xs)}; }
    static Container optional(Opt x) { return {std::move(x)}; }
    static Container pair(A first, A second) { return {Pair{std::move(first), std::move(second)}}; }
    static Container tree(Tree<A> t) { return {std::move(t)}; }

    friend bool operator==(const Container& x, const Container& y) { return x.data == y.data; }
};

using Index = std::size_t;

template <class A>
struct ShapeContents {
    std::size_t length{};
    Container<Index> shape;
    std::vector<A> contents;
};

namespace detail {

template <class A, class B>
Tree<B> map_tree(const typename Tree<A>::Ptr& node, const std::function<B(const A&)>& f) {
    if (node->data.index() == 0) return Tree<B>::leaf(f(std::get<0>(node->data)));
    const auto& [l, r] = std::get<1>(node->data);
    // Sequence the recursion explicitly; f may carry state that must
    // run left to right.
    Tree<B> left = map_tree<A, B>(l, f);
    Tree<B> right = map_tree<A, B>(r, f);
    return Tree<B>::node(std::move(left), std::move(right));
}

template <class A>
void tree_contents(const typename Tree<A>::Ptr& node, std::vector<A>& out) {
    if (node->data.index() == 0) {
        out.push_back(std::get<0>(node->data));
        return;
    }
    const auto& [l, r] = std::get<1>(node->data);
    tree_contents<A>(l, out);
    tree_contents<A>(r, out);
}

} // namespace detail

// Slot order is left to right; the shape holds 0..n-1 in that order.
template <class A>
ShapeContents<A> decompose(const Container<A>& c) {
    ShapeContents<A> sc;
    std::size_t next = 0;
    if (const auto* seq = std::get_if<typename Container<A>::Seq>(&c.data)) {
        std::vector<Index> slots;
        for (const auto& a : *seq) {
            slots.push_back(next++);
            sc.contents.push_back(a);
        }
        sc.shape = Container<Index>::sequence(std::move(slots));
    } else if (const auto* opt = std::get_if<typename Container<A>::Opt>(&c.data)) {
        if (opt->has_value()) {
            sc.contents.push_back(**opt);
            sc.shape = Container<Index>::optional(next++);
        } else {
            sc.shape = Container<Index>::optional(std::nullopt);
        }
    } else if (const auto* pr = std::get_if<typename Container<A>::Pair>(&c.data)) {
        sc.contents.push_back(pr->first);
        sc.contents.push_back(pr->second);
        sc.shape = Container<Index>::pair(0, 1);
        next = 2;
    } else {
        const auto& tree = std::get<Tree<A>>(c.data);
        detail::tree_contents<A>(tree.root, sc.contents);
        std::function<Index(const A&)> number = [&next](const A&) { return next++; };
        // Re-walk in the same order, handing out consecutive slots.
        next = 0;
        sc.shape = Container<Index>::tree(detail::map_tree<A, Index>(tree.root, number));
    }
    sc.length = sc.contents.size();
    return sc;
}

// Substitutes contents[i] for slot i. Throws LengthMismatchError when
// the split violates its own invariants.
template <class A>
Container<A> recombine(const ShapeContents<A>& sc) {
    if (sc.contents.size() != sc.length)
        throw LengthMismatchError("shape/contents split with inconsistent length");
    auto at = [&sc](Index i) -> const A& {
        if (i >= sc.contents.size())
            throw LengthMismatchError("shape slot index out of range");
        return sc.contents[i];
    };
    std::function<A(const Index&)> fill = [&at](const Index& i) { return at(i); };
    const auto& shape = sc.shape;
    if (const auto* seq = std::get_if<typename Container<Index>::Seq>(&shape.data)) {
        std::vector<A> xs;
        xs.reserve(seq->size());
        for (Index i : *seq) xs.push_back(at(i));
        return Container<A>::sequence(std::move(xs));
    }
    if (const auto* opt = std::get_if<typename Container<Index>::Opt>(&shape.data)) {
        if (!opt->has_value()) return Container<A>::optional(std::nullopt);
        return Container<A>::optional(at(**opt));
    }
    if (const auto* pr = std::get_if<typename Container<Index>::Pair>(&shape.data)) {
        return Container<A>::pair(at(pr->first), at(pr->second));
    }
    return Container<A>::tree(detail::map_tree<Index, A>(std::get<Tree<Index>>(shape.data).root, fill));
}

template <class A>
Container<Index> shape_of(const Container<A>& c) {
    return decompose(c).shape;
}

// --- effectful traversal ----------------------------------------------------
// Two concrete applicative effects; both traversals go decompose ->
// map the contents left to right -> recombine.

// Short-circuit-free Optional: every slot is visited through the
// split, the result is empty when any element fails.
template <class A, class B>
std::optional<Container<B>> traverse_optional(const Container<A>& c,
                                              const std::function<std::optional<B>(const A&)>& f) {
    auto sc = decompose(c);
    ShapeContents<B> out;
    out.length = sc.length;
    out.shape = sc.shape;
    bool ok = true;
    for (const auto& a : sc.contents) {
        auto b = f(a);
        if (!b) {
            ok = false;
            break;
        }
        out.contents.push_back(*b);
    }
    if (!ok) return std::nullopt;
    return recombine(out);
}

// Counter: threads an integer state left to right; each application
// sees the running count.
template <class A, class B>
std::pair<Container<B>, int> traverse_counter(
    const Container<A>& c, const std::function<std::pair<B, int>(const A&, int)>& f, int start) {
    auto sc = decompose(c);
    ShapeContents<B> out;
    out.length = sc.length;
    out.shape = sc.shape;
    int state = start;
    for (const auto& a : sc.contents) {
        auto [b, next] = f(a, state);
        out.contents.push_back(std::move(b));
        state = next;
    }
    return {recombine(out), state};
}

// Composite Counter-over-Optional effect: the counter threads through
// every slot; the optional layer collapses afterwards.
template <class A, class B>
std::pair<std::optional<Container<B>>, int> traverse_counter_optional(
    const Container<A>& c,
    const std::function<std::pair<std::optional<B>, int>(const A&, int)>& f, int start) {
    auto sc = decompose(c);
    ShapeContents<B> out;
    out.length = sc.length;
    out.shape = sc.shape;
    int state = start;
    bool ok = true;
    for (const auto& a : sc.contents) {
        auto [b, next] = f(a, state);
        state = next;
        if (!b) {
            ok = false;
            continue;
        }
        out.contents.push_back(*b);
    }
    if (!ok) return {std::nullopt, state};
    return {recombine(out), state};
}

} // namespace optic::containers
