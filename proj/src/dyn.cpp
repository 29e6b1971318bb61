#include "optic/dyn.hpp"

#include <stdexcept>

namespace optic {

namespace {

using K = OpticKind;

// --- single-edge upcasts ----------------------------------------------------

VGrate adapter_to_grate(const VAdapter& o) {
    return {[o](const std::function<Value(const ValueFn&)>& k) { return o.bwd(k(o.fwd)); }};
}

VPrism adapter_to_prism(const VAdapter& o) {
    return {[o](const Value& s) { return Either<Value, Value>::right(o.fwd(s)); }, o.bwd};
}

VListLens adapter_to_listlens(const VAdapter& o) {
    return {o.fwd, [o](const std::vector<Value>&, const Value& b) { return o.bwd(b); }};
}

VLens listlens_to_lens(const VListLens& o) {
    return {o.view,
            [o](const Value& s, const Value& b) { return o.classify(std::vector<Value>{s}, b); }};
}

VKaleidoscope listlens_to_kaleidoscope(const VListLens& o) {
    return {[o](const std::function<Value(const std::vector<Value>&)>& fold) {
        return [o, fold](const std::vector<Value>& ss) {
            std::vector<Value> views;
            views.reserve(ss.size());
            for (const auto& s : ss) views.push_back(o.view(s));
            return o.classify(ss, fold(views));
        };
    }};
}

VAffine lens_to_affine(const VLens& o) {
    return {[o](const Value& s) {
        ValueFn put = [o, s](const Value& b) { return o.update(s, b); };
        return Either<Value, std::pair<Value, ValueFn>>::right({o.view(s), put});
    }};
}

VGlass lens_to_glass(const VLens& o) {
    return {[o](const Value& s, const std::function<Value(const ValueFn&)>& k) {
        return o.update(s, k(o.view));
    }};
}

VAffine prism_to_affine(const VPrism& o) {
    return {[o](const Value& s) {
        auto m = o.match(s);
        if (m.is_left()) return Either<Value, std::pair<Value, ValueFn>>::left(m.left_value());
        return Either<Value, std::pair<Value, ValueFn>>::right({m.right_value(), o.build});
    }};
}

VGlass grate_to_glass(const VGrate& o) {
    return {[o](const Value&, const std::function<Value(const ValueFn&)>& k) {
        return o.degrate(k);
    }};
}

VTraversal affine_to_traversal(const VAffine& o) {
    return {[o](const Value& s) {
        auto r = o.access(s);
        VFunList split;
        if (r.is_left()) {
            Value t = r.left_value();
            split.rebuild = [t](const std::vector<Value>& bs) {
                if (!bs.empty()) throw LengthMismatchError("rebuild of a missed affine expects []");
                return t;
            };
        } else {
            split.contents.push_back(r.right_value().first);
            ValueFn put = r.right_value().second;
            split.rebuild = [put](const std::vector<Value>& bs) {
                if (bs.size() != 1) throw LengthMismatchError("rebuild of an affine expects one element");
                return put(bs.front());
            };
        }
        return split;
    }};
}

VSetter glass_to_setter(const VGlass& o) {
    return {[o](const ValueFn& f) {
        return [o, f](const Value& s) {
            return o.run(s, [&](const ValueFn& v) { return f(v(s)); });
        };
    }};
}

VSetter traversal_to_setter(const VTraversal& o) {
    return {[o](const ValueFn& f) {
        return [o, f](const Value& s) { return traversal_over(o, f, s); };
    }};
}

VSetter kaleidoscope_to_setter(const VKaleidoscope& o) {
    return {[o](const ValueFn& f) {
        return [o, f](const Value& s) {
            auto fold = [f](const std::vector<Value>& xs) { return f(xs.front()); };
            return o.agg(fold)(std::vector<Value>{s});
        };
    }};
}

// --- within-kind composition ------------------------------------------------

VAdapter compose_adapter(const VAdapter& o1, const VAdapter& o2) {
    return {[o1, o2](const Value& s) { return o2.fwd(o1.fwd(s)); },
            [o1, o2](const Value& y) { return o1.bwd(o2.bwd(y)); }};
}

VLens compose_lens(const VLens& o1, const VLens& o2) {
    return {[o1, o2](const Value& s) { return o2.view(o1.view(s)); },
            [o1, o2](const Value& s, const Value& y) {
                return o1.update(s, o2.update(o1.view(s), y));
            }};
}

VPrism compose_prism(const VPrism& o1, const VPrism& o2) {
    return {[o1, o2](const Value& s) {
                auto m1 = o1.match(s);
                if (m1.is_left()) return m1;
                auto m2 = o2.match(m1.right_value());
                if (m2.is_left()) return Either<Value, Value>::left(o1.build(m2.left_value()));
                return m2;
            },
            [o1, o2](const Value& y) { return o1.build(o2.build(y)); }};
}

VAffine compose_affine(const VAffine& o1, const VAffine& o2) {
    return {[o1, o2](const Value& s) {
        auto r1 = o1.access(s);
        if (r1.is_left()) return r1;
        const Value mid = r1.right_value().first;
        ValueFn put1 = r1.right_value().second;
        auto r2 = o2.access(mid);
        if (r2.is_left())
            return Either<Value, std::pair<Value, ValueFn>>::left(put1(r2.left_value()));
        ValueFn put2 = r2.right_value().second;
        ValueFn put = [put1, put2](const Value& y) { return put1(put2(y)); };
        return Either<Value, std::pair<Value, ValueFn>>::right({r2.right_value().first, put});
    }};
}

VTraversal compose_traversal(const VTraversal& o1, const VTraversal& o2) {
    return {[o1, o2](const Value& s) {
        auto outer = o1.extract(s);
        VFunList split;
        std::vector<VFunList> inner;
        std::vector<std::size_t> lengths;
        inner.reserve(outer.contents.size());
        for (const auto& mid : outer.contents) {
            inner.push_back(o2.extract(mid));
            lengths.push_back(inner.back().contents.size());
            split.contents.insert(split.contents.end(), inner.back().contents.begin(),
                                  inner.back().contents.end());
        }
        auto rebuild_outer = outer.rebuild;
        std::size_t total = split.contents.size();
        split.rebuild = [rebuild_outer, inner, lengths, total](const std::vector<Value>& ys) {
            if (ys.size() != total)
                throw LengthMismatchError("composite rebuild got a list of the wrong length");
            std::vector<Value> mids;
            mids.reserve(inner.size());
            std::size_t at = 0;
            for (std::size_t i = 0; i < inner.size(); ++i) {
                std::vector<Value> chunk(ys.begin() + at, ys.begin() + at + lengths[i]);
                at += lengths[i];
                mids.push_back(inner[i].rebuild(chunk));
            }
            return rebuild_outer(mids);
        };
        return split;
    }};
}

VGrate compose_grate(const VGrate& o1, const VGrate& o2) {
    return {[o1, o2](const std::function<Value(const ValueFn&)>& k) {
        return o1.degrate([o2, k](const ValueFn& v1) {
            return o2.degrate([k, v1](const ValueFn& v2) {
                return k([v1, v2](const Value& s) { return v2(v1(s)); });
            });
        });
    }};
}

VGlass compose_glass(const VGlass& o1, const VGlass& o2) {
    return {[o1, o2](const Value& s, const std::function<Value(const ValueFn&)>& k) {
        return o1.run(s, [o2, k, s](const ValueFn& va) {
            return o2.run(va(s), [k, va](const ValueFn& vx) {
                return k([va, vx](const Value& u) { return vx(va(u)); });
            });
        });
    }};
}

VSetter compose_setter(const VSetter& o1, const VSetter& o2) {
    return {[o1, o2](const ValueFn& f) { return o1.over(o2.over(f)); }};
}

VKaleidoscope compose_kaleidoscope(const VKaleidoscope& o1, const VKaleidoscope& o2) {
    return {[o1, o2](const std::function<Value(const std::vector<Value>&)>& fold) {
        return o1.agg(o2.agg(fold));
    }};
}

VListLens compose_listlens(const VListLens& o1, const VListLens& o2) {
    return {[o1, o2](const Value& s) { return o2.view(o1.view(s)); },
            [o1, o2](const std::vector<Value>& ss, const Value& y) {
                std::vector<Value> mids;
                mids.reserve(ss.size());
                for (const auto& s : ss) mids.push_back(o1.view(s));
                return o1.classify(ss, o2.classify(mids, y));
            }};
}

DynOptic compose_same_kind(const DynOptic& a, const DynOptic& b) {
    switch (a.kind()) {
        case K::Adapter: return compose_adapter(a.as<VAdapter>(), b.as<VAdapter>());
        case K::Grate: return compose_grate(a.as<VGrate>(), b.as<VGrate>());
        case K::Prism: return compose_prism(a.as<VPrism>(), b.as<VPrism>());
        case K::ListLens: return compose_listlens(a.as<VListLens>(), b.as<VListLens>());
        case K::Lens: return compose_lens(a.as<VLens>(), b.as<VLens>());
        case K::Affine: return compose_affine(a.as<VAffine>(), b.as<VAffine>());
        case K::Glass: return compose_glass(a.as<VGlass>(), b.as<VGlass>());
        case K::Kaleidoscope:
            return compose_kaleidoscope(a.as<VKaleidoscope>(), b.as<VKaleidoscope>());
        case K::Traversal: return compose_traversal(a.as<VTraversal>(), b.as<VTraversal>());
        case K::Setter: return compose_setter(a.as<VSetter>(), b.as<VSetter>());
    }
    throw std::logic_error("unknown optic kind");
}

} // namespace

DynOptic identity_optic() {
    return VAdapter{[](const Value& s) { return s; }, [](const Value& b) { return b; }};
}

DynOptic upcast_step(const DynOptic& o, OpticKind target) {
    switch (o.kind()) {
        case K::Adapter:
            if (target == K::Grate) return adapter_to_grate(o.as<VAdapter>());
            if (target == K::Prism) return adapter_to_prism(o.as<VAdapter>());
            if (target == K::ListLens) return adapter_to_listlens(o.as<VAdapter>());
            break;
        case K::ListLens:
            if (target == K::Lens) return listlens_to_lens(o.as<VListLens>());
            if (target == K::Kaleidoscope) return listlens_to_kaleidoscope(o.as<VListLens>());
            break;
        case K::Lens:
            if (target == K::Affine) return lens_to_affine(o.as<VLens>());
            if (target == K::Glass) return lens_to_glass(o.as<VLens>());
            break;
        case K::Prism:
            if (target == K::Affine) return prism_to_affine(o.as<VPrism>());
            break;
        case K::Grate:
            if (target == K::Glass) return grate_to_glass(o.as<VGrate>());
            break;
        case K::Affine:
            if (target == K::Traversal) return affine_to_traversal(o.as<VAffine>());
            break;
        case K::Glass:
            if (target == K::Setter) return glass_to_setter(o.as<VGlass>());
            break;
        case K::Traversal:
            if (target == K::Setter) return traversal_to_setter(o.as<VTraversal>());
            break;
        case K::Kaleidoscope:
            if (target == K::Setter) return kaleidoscope_to_setter(o.as<VKaleidoscope>());
            break;
        case K::Setter: break;
    }
    throw NoPathError("no inclusion edge from " + kind_name(o.kind()) + " to " + kind_name(target));
}

DynOptic upcast(const DynOptic& o, OpticKind target) {
    return upcast_along(o, kind_path(o.kind(), target));
}

DynOptic upcast_along(const DynOptic& o, const std::vector<OpticKind>& path) {
    if (path.empty() || path.front() != o.kind())
        throw std::invalid_argument("upcast path must start at the optic's kind");
    DynOptic cur = o;
    for (std::size_t i = 1; i < path.size(); ++i) cur = upcast_step(cur, path[i]);
    return cur;
}

DynOptic compose(const DynOptic& outer, const DynOptic& inner) {
    OpticKind k = join(outer.kind(), inner.kind());
    return compose_same_kind(upcast(outer, k), upcast(inner, k));
}

Value dyn_get(const DynOptic& o, const Value& s) {
    return upcast(o, OpticKind::Lens).as<VLens>().view(s);
}

std::optional<Value> dyn_preview(const DynOptic& o, const Value& s) {
    return affine_preview(upcast(o, OpticKind::Affine).as<VAffine>(), s);
}

std::vector<Value> dyn_to_list(const DynOptic& o, const Value& s) {
    return traversal_to_list(upcast(o, OpticKind::Traversal).as<VTraversal>(), s);
}

Value dyn_set(const DynOptic& o, const Value& s, const Value& b) {
    return dyn_over(o, [b](const Value&) { return b; }, s);
}

Value dyn_over(const DynOptic& o, const ValueFn& f, const Value& s) {
    return upcast(o, OpticKind::Setter).as<VSetter>().over(f)(s);
}

} // namespace optic
