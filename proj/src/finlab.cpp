#include "optic/finlab.hpp"

namespace optic::finlab {

FinFn fin_identity(std::size_t n) {
    FinFn f{n, n, std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) f.table[i] = i;
    return f;
}

FinFn fin_compose(const FinFn& g, const FinFn& f) {
    FinFn h{f.dom, g.cod, std::vector<std::size_t>(f.dom)};
    for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = g(f(i));
    return h;
}

FinFn fin_product(const FinFn& f, const FinFn& g) {
    FinFn h{f.dom * g.dom, f.cod * g.cod, std::vector<std::size_t>(f.dom * g.dom)};
    for (std::size_t x = 0; x < f.dom; ++x)
        for (std::size_t y = 0; y < g.dom; ++y) h.table[x * g.dom + y] = f(x) * g.cod + g(y);
    return h;
}

FinFn fin_coproduct(const FinFn& f, const FinFn& g) {
    FinFn h{f.dom + g.dom, f.cod + g.cod, std::vector<std::size_t>(f.dom + g.dom)};
    for (std::size_t x = 0; x < f.dom; ++x) h.table[x] = f(x);
    for (std::size_t y = 0; y < g.dom; ++y) h.table[f.dom + y] = f.cod + g(y);
    return h;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

// --- concretize ---------------------------------------------------------------

ConcreteLens concretize(const ExistentialLens& e) {
    ConcreteLens l;
    l.sz = e.sz;
    l.view.resize(e.sz.s);
    l.update.resize(e.sz.s * e.sz.b);
    for (std::size_t x = 0; x < e.sz.s; ++x) {
        std::size_t pair = e.fwd(x);
        std::size_t res = pair / e.sz.a;
        l.view[x] = pair % e.sz.a;
        for (std::size_t y = 0; y < e.sz.b; ++y)
            l.update[x * e.sz.b + y] = e.bwd(res * e.sz.b + y);
    }
    return l;
}

ConcretePrism concretize(const ExistentialPrism& e) {
    ConcretePrism p;
    p.sz = e.sz;
    p.match.resize(e.sz.s);
    p.build.resize(e.sz.b);
    for (std::size_t x = 0; x < e.sz.s; ++x) {
        std::size_t v = e.fwd(x);
        // Misses route through bwd on the residual block; hits shift
        // into the focus block of t + a.
        p.match[x] = v < e.residual ? e.bwd(v) : e.sz.t + (v - e.residual);
    }
    for (std::size_t y = 0; y < e.sz.b; ++y) p.build[y] = e.bwd(e.residual + y);
    return p;
}

std::size_t ConcreteAffine::continuation_count() const {
    return static_cast<std::size_t>(ipow(sz.t, sz.b));
}

std::size_t ConcreteAffine::hit_focus(std::size_t x) const {
    return (access[x] - sz.t) % sz.a;
}

std::size_t ConcreteAffine::hit_continuation(std::size_t x, std::size_t y) const {
    std::size_t table = (access[x] - sz.t) / sz.a;
    return table / ipow(sz.t, y) % sz.t;
}

ConcreteAffine concretize(const ExistentialAffine& e) {
    ConcreteAffine af;
    af.sz = e.sz;
    af.access.resize(e.sz.s);
    const std::size_t c = e.residual_miss;
    for (std::size_t x = 0; x < e.sz.s; ++x) {
        std::size_t v = e.fwd(x);
        if (v < c) {
            af.access[x] = e.bwd(v);
            continue;
        }
        std::size_t res = (v - c) / e.sz.a;
        std::size_t focus = (v - c) % e.sz.a;
        std::size_t table = 0;
        for (std::size_t y = e.sz.b; y-- > 0;)
            table = table * e.sz.t + e.bwd(c + res * e.sz.b + y);
        af.access[x] = e.sz.t + table * e.sz.a + focus;
    }
    return af;
}

// --- abstract -----------------------------------------------------------------

ExistentialLens abstract_lens(const ConcreteLens& l) {
    ExistentialLens e;
    e.sz = l.sz;
    e.residual = l.sz.s;
    e.fwd = FinFn{l.sz.s, l.sz.s * l.sz.a, std::vector<std::size_t>(l.sz.s)};
    for (std::size_t x = 0; x < l.sz.s; ++x) e.fwd.table[x] = x * l.sz.a + l.view[x];
    e.bwd = FinFn{l.sz.s * l.sz.b, l.sz.t, l.update};
    return e;
}

ExistentialPrism abstract_prism(const ConcretePrism& p) {
    ExistentialPrism e;
    e.sz = p.sz;
    e.residual = p.sz.t;
    e.fwd = FinFn{p.sz.s, p.sz.t + p.sz.a, p.match};
    e.bwd = FinFn{p.sz.t + p.sz.b, p.sz.t, std::vector<std::size_t>(p.sz.t + p.sz.b)};
    for (std::size_t u = 0; u < p.sz.t; ++u) e.bwd.table[u] = u;
    for (std::size_t y = 0; y < p.sz.b; ++y) e.bwd.table[p.sz.t + y] = p.build[y];
    return e;
}

ExistentialAffine abstract_affine(const ConcreteAffine& af) {
    ExistentialAffine e;
    e.sz = af.sz;
    e.residual_miss = af.sz.t;
    e.residual_hit = af.continuation_count();
    const std::size_t c = e.residual_miss;
    e.fwd = FinFn{af.sz.s, c + e.residual_hit * af.sz.a, std::vector<std::size_t>(af.sz.s)};
    for (std::size_t x = 0; x < af.sz.s; ++x) {
        if (!af.is_hit(x)) {
            e.fwd.table[x] = af.miss_value(x);
            continue;
        }
        std::size_t table = (af.access[x] - af.sz.t) / af.sz.a;
        e.fwd.table[x] = c + table * af.sz.a + af.hit_focus(x);
    }
    e.bwd = FinFn{c + e.residual_hit * af.sz.b, af.sz.t,
                  std::vector<std::size_t>(c + e.residual_hit * af.sz.b)};
    for (std::size_t u = 0; u < c; ++u) e.bwd.table[u] = u;
    for (std::size_t table = 0; table < e.residual_hit; ++table)
        for (std::size_t y = 0; y < af.sz.b; ++y)
            e.bwd.table[c + table * af.sz.b + y] = table / ipow(af.sz.t, y) % af.sz.t;
    return e;
}

// --- existential composition ----------------------------------------------------

ExistentialLens compose(const ExistentialLens& outer, const ExistentialLens& inner) {
    ExistentialLens e;
    e.sz = Sizes{outer.sz.s, outer.sz.t, inner.sz.a, inner.sz.b};
    e.residual = outer.residual * inner.residual;
    const std::size_t c = outer.residual, d = inner.residual;
    e.fwd = FinFn{outer.sz.s, c * d * inner.sz.a, std::vector<std::size_t>(outer.sz.s)};
    for (std::size_t x = 0; x < outer.sz.s; ++x) {
        std::size_t p1 = outer.fwd(x);
        std::size_t i = p1 / outer.sz.a, mid = p1 % outer.sz.a;
        std::size_t p2 = inner.fwd(mid);
        std::size_t j = p2 / inner.sz.a, focus = p2 % inner.sz.a;
        e.fwd.table[x] = (i * d + j) * inner.sz.a + focus;
    }
    e.bwd = FinFn{c * d * inner.sz.b, outer.sz.t, std::vector<std::size_t>(c * d * inner.sz.b)};
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t y = 0; y < inner.sz.b; ++y) {
                std::size_t midb = inner.bwd(j * inner.sz.b + y);
                e.bwd.table[(i * d + j) * inner.sz.b + y] = outer.bwd(i * outer.sz.b + midb);
            }
    return e;
}

ExistentialPrism compose(const ExistentialPrism& outer, const ExistentialPrism& inner) {
    ExistentialPrism e;
    e.sz = Sizes{outer.sz.s, outer.sz.t, inner.sz.a, inner.sz.b};
    e.residual = outer.residual + inner.residual;
    const std::size_t c = outer.residual, d = inner.residual;
    e.fwd = FinFn{outer.sz.s, c + d + inner.sz.a, std::vector<std::size_t>(outer.sz.s)};
    for (std::size_t x = 0; x < outer.sz.s; ++x) {
        std::size_t v = outer.fwd(x);
        if (v < c) {
            e.fwd.table[x] = v;
            continue;
        }
        // Blocks line up as c | d | a, so both the inner-residual and
        // the focus case land at the same offset.
        e.fwd.table[x] = c + inner.fwd(v - c);
    }
    e.bwd = FinFn{c + d + inner.sz.b, outer.sz.t, std::vector<std::size_t>(c + d + inner.sz.b)};
    for (std::size_t u = 0; u < c; ++u) e.bwd.table[u] = outer.bwd(u);
    for (std::size_t w = 0; w < d + inner.sz.b; ++w)
        e.bwd.table[c + w] = outer.bwd(c + inner.bwd(w));
    return e;
}

ExistentialAffine compose(const ExistentialAffine& outer, const ExistentialAffine& inner) {
    // Residuals combine as (c + d*c', d*d') along the distributivity
    // c + d*(c' + d'*a)  =  (c + d*c') + (d*d')*a.
    ExistentialAffine e;
    e.sz = Sizes{outer.sz.s, outer.sz.t, inner.sz.a, inner.sz.b};
    const std::size_t c = outer.residual_miss, d = outer.residual_hit;
    const std::size_t c2 = inner.residual_miss, d2 = inner.residual_hit;
    e.residual_miss = c + d * c2;
    e.residual_hit = d * d2;
    const std::size_t amid = inner.sz.s;
    e.fwd = FinFn{outer.sz.s, e.residual_miss + e.residual_hit * inner.sz.a,
                  std::vector<std::size_t>(outer.sz.s)};
    for (std::size_t x = 0; x < outer.sz.s; ++x) {
        std::size_t v = outer.fwd(x);
        if (v < c) {
            e.fwd.table[x] = v;
            continue;
        }
        std::size_t i = (v - c) / amid, mid = (v - c) % amid;
        std::size_t w = inner.fwd(mid);
        if (w < c2) {
            e.fwd.table[x] = c + i * c2 + w;
        } else {
            std::size_t j = (w - c2) / inner.sz.a, focus = (w - c2) % inner.sz.a;
            e.fwd.table[x] = e.residual_miss + (i * d2 + j) * inner.sz.a + focus;
        }
    }
    e.bwd = FinFn{e.residual_miss + e.residual_hit * inner.sz.b, outer.sz.t,
                  std::vector<std::size_t>(e.residual_miss + e.residual_hit * inner.sz.b)};
    for (std::size_t u = 0; u < c; ++u) e.bwd.table[u] = outer.bwd(u);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < c2; ++j)
            e.bwd.table[c + i * c2 + j] = outer.bwd(c + i * outer.sz.b + inner.bwd(j));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t y = 0; y < inner.sz.b; ++y) {
                std::size_t midb = inner.bwd(c2 + j * inner.sz.b + y);
                e.bwd.table[e.residual_miss + (i * d2 + j) * inner.sz.b + y] =
                    outer.bwd(c + i * outer.sz.b + midb);
            }
    return e;
}

// --- dinaturality -----------------------------------------------------------------

bool dinaturality_invariant(const LensGenerator& g) {
    FinFn ida{g.sz.a, g.sz.a, fin_identity(g.sz.a).table};
    FinFn idb = fin_identity(g.sz.b);
    ExistentialLens lhs{g.sz, g.c2, fin_compose(fin_product(g.h, ida), g.fwd), g.bwd};
    ExistentialLens rhs{g.sz, g.c, g.fwd, fin_compose(g.bwd, fin_product(g.h, idb))};
    return concretize(lhs) == concretize(rhs);
}

bool dinaturality_invariant(const PrismGenerator& g) {
    FinFn ida = fin_identity(g.sz.a);
    FinFn idb = fin_identity(g.sz.b);
    ExistentialPrism lhs{g.sz, g.c2, fin_compose(fin_coproduct(g.h, ida), g.fwd), g.bwd};
    ExistentialPrism rhs{g.sz, g.c, g.fwd, fin_compose(g.bwd, fin_coproduct(g.h, idb))};
    return concretize(lhs) == concretize(rhs);
}

bool dinaturality_invariant(const AffineGenerator& g) {
    FinFn ida = fin_identity(g.sz.a);
    FinFn idb = fin_identity(g.sz.b);
    FinFn act_fwd = fin_coproduct(g.hc, fin_product(g.hd, ida));
    FinFn act_bwd = fin_coproduct(g.hc, fin_product(g.hd, idb));
    ExistentialAffine lhs{g.sz, g.c2, g.d2, fin_compose(act_fwd, g.fwd), g.bwd};
    ExistentialAffine rhs{g.sz, g.c, g.d, g.fwd, fin_compose(g.bwd, act_bwd)};
    return concretize(lhs) == concretize(rhs);
}

// --- counting and enumeration -------------------------------------------------------

std::uint64_t count_concrete(ConcreteKind kind, const Sizes& sz) {
    switch (kind) {
        case ConcreteKind::Adapter: return ipow(sz.a, sz.s) * ipow(sz.t, sz.b);
        case ConcreteKind::Lens: return ipow(sz.a, sz.s) * ipow(sz.t, sz.s * sz.b);
        case ConcreteKind::Prism: return ipow(sz.t + sz.a, sz.s) * ipow(sz.t, sz.b);
        case ConcreteKind::Affine: return ipow(sz.t + sz.a * ipow(sz.t, sz.b), sz.s);
    }
    return 0;
}

namespace {

// Reads `count` base-`radix` digits out of an enumeration index.
std::vector<std::size_t> digits(std::uint64_t& index, std::size_t radix, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<std::size_t>(index % radix);
        index /= radix;
    }
    return out;
}

} // namespace

ConcreteLens lens_from_index(const Sizes& sz, std::uint64_t index) {
    ConcreteLens l;
    l.sz = sz;
    l.view = digits(index, sz.a, sz.s);
    l.update = digits(index, sz.t, sz.s * sz.b);
    return l;
}

ConcretePrism prism_from_index(const Sizes& sz, std::uint64_t index) {
    ConcretePrism p;
    p.sz = sz;
    p.match = digits(index, sz.t + sz.a, sz.s);
    p.build = digits(index, sz.t, sz.b);
    return p;
}

ConcreteAffine affine_from_index(const Sizes& sz, std::uint64_t index) {
    ConcreteAffine af;
    af.sz = sz;
    std::size_t radix = sz.t + sz.a * static_cast<std::size_t>(ipow(sz.t, sz.b));
    af.access = digits(index, radix, sz.s);
    return af;
}

ConcreteAdapter adapter_from_index(const Sizes& sz, std::uint64_t index) {
    ConcreteAdapter ad;
    ad.sz = sz;
    ad.fwd = digits(index, sz.a, sz.s);
    ad.bwd = digits(index, sz.t, sz.b);
    return ad;
}

} // namespace optic::finlab
