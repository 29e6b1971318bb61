#pragma once

#include <cstdint>
#include <vector>

// Brute-force laboratory: optics over finite sets, in both the
// existential form (residual object plus forward/backward tables) and
// the concrete, residual-free form. Finite sets are 0-based initial
// segments; products pair row-major (index = x * |Y| + y) and
// coproducts tag the left block first (inl x = x, inr y = |X| + y).

namespace optic::finlab {

// A tabulated function between finite sets; table[i] < cod for all i.
struct FinFn {
    std::size_t dom{};
    std::size_t cod{};
    std::vector<std::size_t> table;

    std::size_t operator()(std::size_t x) const { return table[x]; }

    friend bool operator==(const FinFn& f, const FinFn& g) {
        return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
    }
};

FinFn fin_identity(std::size_t n);
FinFn fin_compose(const FinFn& g, const FinFn& f); // g after f
// f x g on the row-major product of domains/codomains.
FinFn fin_product(const FinFn& f, const FinFn& g);
// f + g on the left-tagged sum of domains/codomains.
FinFn fin_coproduct(const FinFn& f, const FinFn& g);

// Sizes of the four corners of an optic over finite sets.
struct Sizes {
    std::size_t s{}, t{}, a{}, b{};

    friend bool operator==(const Sizes&, const Sizes&) = default;
};

// --- concrete forms ----------------------------------------------------------

struct ConcreteLens {
    Sizes sz;
    std::vector<std::size_t> view;   // s entries, each < a
    std::vector<std::size_t> update; // s*b entries (row-major), each < t

    friend bool operator==(const ConcreteLens&, const ConcreteLens&) = default;
};

struct ConcretePrism {
    Sizes sz;
    std::vector<std::size_t> match; // s entries into t + a (left block t)
    std::vector<std::size_t> build; // b entries, each < t

    friend bool operator==(const ConcretePrism&, const ConcretePrism&) = default;
};

struct ConcreteAffine {
    Sizes sz;
    // s entries into t + a * t^b: the left block is the replacement
    // whole, the right block pairs a focus with a continuation table
    // encoded little-endian in base t (digit j is the output on j).
    std::vector<std::size_t> access;

    friend bool operator==(const ConcreteAffine&, const ConcreteAffine&) = default;

    std::size_t continuation_count() const; // t^b
    bool is_hit(std::size_t x) const { return access[x] >= sz.t; }
    std::size_t miss_value(std::size_t x) const { return access[x]; }
    std::size_t hit_focus(std::size_t x) const;
    std::size_t hit_continuation(std::size_t x, std::size_t y) const;
};

struct ConcreteAdapter {
    Sizes sz;
    std::vector<std::size_t> fwd; // s entries < a
    std::vector<std::size_t> bwd; // b entries < t

    friend bool operator==(const ConcreteAdapter&, const ConcreteAdapter&) = default;
};

// --- existential forms --------------------------------------------------------

struct ExistentialLens {
    Sizes sz;
    std::size_t residual{}; // c
    FinFn fwd;              // s -> c * a
    FinFn bwd;              // c * b -> t
};

struct ExistentialPrism {
    Sizes sz;
    std::size_t residual{}; // c
    FinFn fwd;              // s -> c + a
    FinFn bwd;              // c + b -> t
};

struct ExistentialAffine {
    Sizes sz;
    std::size_t residual_miss{}; // c
    std::size_t residual_hit{};  // d
    FinFn fwd;                   // s -> c + d * a
    FinFn bwd;                   // c + d * b -> t
};

// Collapse the residual into the concrete, residual-free form.
ConcreteLens concretize(const ExistentialLens& e);
ConcretePrism concretize(const ExistentialPrism& e);
ConcreteAffine concretize(const ExistentialAffine& e);

// Canonical sections of the reduction: residual s for lenses,
// residual t for prisms, residuals (t, t^b) for affines.
ExistentialLens abstract_lens(const ConcreteLens& l);
ExistentialPrism abstract_prism(const ConcretePrism& p);
ExistentialAffine abstract_affine(const ConcreteAffine& af);

// Existential composition; residuals combine by the action's tensor.
ExistentialLens compose(const ExistentialLens& outer, const ExistentialLens& inner);
ExistentialPrism compose(const ExistentialPrism& outer, const ExistentialPrism& inner);
ExistentialAffine compose(const ExistentialAffine& outer, const ExistentialAffine& inner);

// --- dinaturality generators ---------------------------------------------------
// A generator presents two existential optics that differ only by a
// residual morphism pushed across the pair; the quotient demands both
// concretize identically.

struct LensGenerator {
    Sizes sz;
    std::size_t c{}, c2{};
    FinFn fwd; // s -> c * a
    FinFn bwd; // c2 * b -> t
    FinFn h;   // c -> c2
};

struct PrismGenerator {
    Sizes sz;
    std::size_t c{}, c2{};
    FinFn fwd; // s -> c + a
    FinFn bwd; // c2 + b -> t
    FinFn h;   // c -> c2
};

struct AffineGenerator {
    Sizes sz;
    std::size_t c{}, c2{}, d{}, d2{};
    FinFn fwd; // s -> c + d * a
    FinFn bwd; // c2 + d2 * b -> t
    FinFn hc;  // c -> c2
    FinFn hd;  // d -> d2
};

bool dinaturality_invariant(const LensGenerator& g);
bool dinaturality_invariant(const PrismGenerator& g);
bool dinaturality_invariant(const AffineGenerator& g);

// --- cardinality ---------------------------------------------------------------

enum class ConcreteKind { Adapter, Lens, Prism, Affine };

// Number of concrete optics of the kind at the given sizes.
//   Adapter: a^s * t^b
//   Lens:    a^s * t^(s*b)
//   Prism:   (t+a)^s * t^b
//   Affine:  (t + a * t^b)^s
std::uint64_t count_concrete(ConcreteKind kind, const Sizes& sz);

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

// Decode enumeration index -> concrete optic; index < count_concrete.
ConcreteLens lens_from_index(const Sizes& sz, std::uint64_t index);
ConcretePrism prism_from_index(const Sizes& sz, std::uint64_t index);
ConcreteAffine affine_from_index(const Sizes& sz, std::uint64_t index);
ConcreteAdapter adapter_from_index(const Sizes& sz, std::uint64_t index);

} // namespace optic::finlab
