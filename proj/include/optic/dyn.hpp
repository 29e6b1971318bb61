#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "optic/kind.hpp"
#include "optic/optics.hpp"
#include "optic/value.hpp"

namespace optic {

// Type-invariant instantiations at the document model; the payload of
// a dynamic optic is always one of these.
using VAdapter = Adapter<Value, Value, Value, Value>;
using VLens = Lens<Value, Value, Value, Value>;
using VPrism = Prism<Value, Value, Value, Value>;
using VAffine = AffineTraversal<Value, Value, Value, Value>;
using VTraversal = Traversal<Value, Value, Value, Value>;
using VGrate = Grate<Value, Value, Value, Value>;
using VGlass = Glass<Value, Value, Value, Value>;
using VSetter = Setter<Value, Value, Value, Value>;
using VKaleidoscope = Kaleidoscope<Value, Value, Value, Value>;
using VListLens = ListLens<Value, Value, Value, Value>;

using VFunList = FunList<Value, Value, Value>;
using ValueFn = Fn1<Value, Value>;

// A dynamic optic: one of the ten concrete forms, tagged with its kind.
class DynOptic {
public:
    DynOptic(VAdapter o) : kind_(OpticKind::Adapter), payload_(std::move(o)) {}
    DynOptic(VGrate o) : kind_(OpticKind::Grate), payload_(std::move(o)) {}
    DynOptic(VPrism o) : kind_(OpticKind::Prism), payload_(std::move(o)) {}
    DynOptic(VListLens o) : kind_(OpticKind::ListLens), payload_(std::move(o)) {}
    DynOptic(VLens o) : kind_(OpticKind::Lens), payload_(std::move(o)) {}
    DynOptic(VAffine o) : kind_(OpticKind::Affine), payload_(std::move(o)) {}
    DynOptic(VGlass o) : kind_(OpticKind::Glass), payload_(std::move(o)) {}
    DynOptic(VKaleidoscope o) : kind_(OpticKind::Kaleidoscope), payload_(std::move(o)) {}
    DynOptic(VTraversal o) : kind_(OpticKind::Traversal), payload_(std::move(o)) {}
    DynOptic(VSetter o) : kind_(OpticKind::Setter), payload_(std::move(o)) {}

    OpticKind kind() const { return kind_; }

    template <class O>
    const O& as() const {
        return std::get<O>(payload_);
    }

private:
    OpticKind kind_;
    std::variant<VAdapter, VGrate, VPrism, VListLens, VLens, VAffine, VGlass, VKaleidoscope,
                 VTraversal, VSetter>
        payload_;
};

// The identity optic; unit of composition and bottom of the hierarchy.
DynOptic identity_optic();

// Rewrites the payload one inclusion edge up. `target` must be a direct
// successor of o.kind().
DynOptic upcast_step(const DynOptic& o, OpticKind target);

// Rewrites the payload along a shortest inclusion path to `target`.
// Throws NoPathError when the target kind is unreachable.
DynOptic upcast(const DynOptic& o, OpticKind target);

// Upcast along an explicit edge path (endpoints included); used to
// probe path independence.
DynOptic upcast_along(const DynOptic& o, const std::vector<OpticKind>& path);

// Heterogeneous composition: both sides are upcast to the join of
// their kinds and composed there. outer focuses first.
DynOptic compose(const DynOptic& outer, const DynOptic& inner);

// ---------------------------------------------------------------------------
// Uniform observation helpers. Each upcasts as needed and throws
// NoPathError when the optic's kind does not support the observation.

Value dyn_get(const DynOptic& o, const Value& s);                 // via Lens
std::optional<Value> dyn_preview(const DynOptic& o, const Value& s); // via Affine
std::vector<Value> dyn_to_list(const DynOptic& o, const Value& s);   // via Traversal
Value dyn_set(const DynOptic& o, const Value& s, const Value& b);    // via Setter
Value dyn_over(const DynOptic& o, const ValueFn& f, const Value& s); // via Setter

} // namespace optic
