#pragma once

#include <utility>
#include <variant>

namespace optic {

// Minimal sum type. Left conventionally carries the "miss" branch of a
// match and Right the focused value.
template <class L, class R>
class Either {
public:
    static Either left(L value) { return Either(std::variant<L, R>(std::in_place_index<0>, std::move(value))); }
    static Either right(R value) { return Either(std::variant<L, R>(std::in_place_index<1>, std::move(value))); }

    bool is_left() const { return data_.index() == 0; }
    bool is_right() const { return data_.index() == 1; }

    const L& left_value() const { return std::get<0>(data_); }
    const R& right_value() const { return std::get<1>(data_); }

    friend bool operator==(const Either& a, const Either& b) { return a.data_ == b.data_; }

private:
    explicit Either(std::variant<L, R> data) : data_(std::move(data)) {}
    std::variant<L, R> data_;
};

struct Unit {
    friend bool operator==(Unit, Unit) { return true; }
};

} // namespace optic
