#pragma once

#include <functional>
#include <type_traits>
#include <optional>
#include <utility>
#include <vector>

#include "optic/either.hpp"
#include "optic/errors.hpp"

// Concrete representations of the optic zoo, generic over the whole
// types (S, T) and the focus types (A, B). Every optic is a bundle of
// plain function values; construction never checks laws.

namespace optic {

template <class S, class A>
using Fn1 = std::function<A(const S&)>;

// view a from s / send b back into t.
template <class S, class T, class A, class B>
struct Adapter {
    Fn1<S, A> fwd;
    Fn1<B, T> bwd;
};

template <class S, class T, class A, class B>
struct Lens {
    Fn1<S, A> view;
    std::function<T(const S&, const B&)> update;
};

template <class S, class T, class A, class B>
struct Prism {
    std::function<Either<T, A>(const S&)> match;
    Fn1<B, T> build;
};

// One-shot access: either the replacement whole, or the focus together
// with the continuation that puts a new focus back.
template <class S, class T, class A, class B>
struct AffineTraversal {
    std::function<Either<T, std::pair<A, Fn1<B, T>>>(const S&)> access;
};

// Contents plus a rebuild defined exactly on lists of the same length.
template <class T, class A, class B>
struct FunList {
    std::vector<A> contents;
    std::function<T(const std::vector<B>&)> rebuild;
};

template <class S, class T, class A, class B>
struct Traversal {
    std::function<FunList<T, A, B>(const S&)> extract;
};

template <class S, class T, class A, class B>
struct Grate {
    std::function<T(const std::function<B(const Fn1<S, A>&)>&)> degrate;
};

template <class S, class T, class A, class B>
struct Glass {
    std::function<T(const S&, const std::function<B(const Fn1<S, A>&)>&)> run;
};

template <class S, class T, class A, class B>
struct Setter {
    std::function<Fn1<S, T>(const Fn1<A, B>&)> over;
};

// Folds of the foci lift to folds of the wholes; one uniform function
// over sequences stands in for the whole family indexed by length.
// Naturality in the length is up to the caller.
template <class S, class T, class A, class B>
struct Kaleidoscope {
    std::function<std::function<T(const std::vector<S>&)>(const std::function<B(const std::vector<A>&)>&)> agg;
};

// Algebraic lens for the list monad: update may consult a whole list
// of wholes. classify must accept the empty context.
template <class S, class T, class A, class B>
struct ListLens {
    Fn1<S, A> view;
    std::function<T(const std::vector<S>&, const B&)> classify;
};

// Standalone; upcasts to Lens only. setter_opt(s) empty means "no
// per-whole setter here, fall back to build".
template <class S, class T, class A, class B>
struct AchromaticLens {
    std::function<std::optional<Fn1<B, T>>(const S&)> setter_opt;
    Fn1<S, A> view;
    Fn1<B, T> build;
};

// ---------------------------------------------------------------------------
// Per-kind run operations.

template <class S, class T, class A, class B>
A lens_view(const Lens<S, T, A, B>& l, const S& s) {
    return l.view(s);
}

template <class S, class T, class A, class B>
T lens_update(const Lens<S, T, A, B>& l, const S& s, const B& b) {
    return l.update(s, b);
}

template <class S, class T, class A, class B>
Either<T, A> prism_match(const Prism<S, T, A, B>& p, const S& s) {
    return p.match(s);
}

template <class S, class T, class A, class B>
T prism_build(const Prism<S, T, A, B>& p, const B& b) {
    return p.build(b);
}

template <class S, class T, class A, class B>
std::optional<A> affine_preview(const AffineTraversal<S, T, A, B>& af, const S& s) {
    auto r = af.access(s);
    if (r.is_left()) return std::nullopt;
    return r.right_value().first;
}

template <class S, class T, class A, class B>
T affine_set(const AffineTraversal<S, T, A, B>& af, const S& s, const B& b) {
    auto r = af.access(s);
    if (r.is_left()) return r.left_value();
    return r.right_value().second(b);
}

template <class S, class T, class A, class B>
std::vector<A> traversal_to_list(const Traversal<S, T, A, B>& t, const S& s) {
    return t.extract(s).contents;
}

template <class S, class T, class A, class B>
T traversal_over(const Traversal<S, T, A, B>& t, const std::type_identity_t<Fn1<A, B>>& f,
                 const S& s) {
    auto split = t.extract(s);
    std::vector<B> out;
    out.reserve(split.contents.size());
    for (const auto& a : split.contents) out.push_back(f(a));
    return split.rebuild(out);
}

template <class S, class T, class A, class B>
T grate_zip2(const Grate<S, T, A, B>& g, const S& s1, const S& s2,
             const std::type_identity_t<std::function<B(const A&, const A&)>>& combine) {
    return g.degrate([&](const Fn1<S, A>& v) { return combine(v(s1), v(s2)); });
}

template <class S, class T, class A, class B>
T glass_run(const Glass<S, T, A, B>& gl, const S& s,
            const std::type_identity_t<std::function<B(const Fn1<S, A>&)>>& k) {
    return gl.run(s, k);
}

template <class S, class T, class A, class B>
Fn1<S, T> setter_over(const Setter<S, T, A, B>& st, const std::type_identity_t<Fn1<A, B>>& f) {
    return st.over(f);
}

template <class S, class T, class A, class B>
T kaleidoscope_apply(const Kaleidoscope<S, T, A, B>& k,
                     const std::type_identity_t<std::function<B(const std::vector<A>&)>>& fold,
                     const std::vector<S>& ss) {
    return k.agg(fold)(ss);
}

template <class S, class T, class A, class B>
T listlens_classify(const ListLens<S, T, A, B>& ll, const std::vector<S>& ss, const B& b) {
    return ll.classify(ss, b);
}

// view / update / build triple of an achromatic lens. update prefers
// the per-whole setter and falls back to build.
template <class S, class T, class A, class B>
struct AchromaticOps {
    Fn1<S, A> view;
    std::function<T(const S&, const B&)> update;
    Fn1<B, T> build;
};

template <class S, class T, class A, class B>
AchromaticOps<S, T, A, B> achromatic_ops(const AchromaticLens<S, T, A, B>& al) {
    AchromaticOps<S, T, A, B> ops;
    ops.view = al.view;
    ops.build = al.build;
    ops.update = [al](const S& s, const B& b) -> T {
        auto f = al.setter_opt(s);
        if (f) return (*f)(b);
        return al.build(b);
    };
    return ops;
}

template <class S, class T, class A, class B>
Lens<S, T, A, B> achromatic_to_lens(const AchromaticLens<S, T, A, B>& al) {
    auto ops = achromatic_ops(al);
    return Lens<S, T, A, B>{ops.view, ops.update};
}

} // namespace optic
