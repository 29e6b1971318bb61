#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace optic {

// The ten optic kinds, ordered bottom (most structure preserved) to
// top (least). Inclusions between them form a DAG; join is the least
// kind both arguments embed into, and heterogeneous composition lands
// in the join.
enum class OpticKind : std::uint8_t {
    Adapter,
    Grate,
    Prism,
    ListLens,
    Lens,
    Affine,
    Glass,
    Kaleidoscope,
    Traversal,
    Setter,
};

inline constexpr std::size_t kKindCount = 10;

inline constexpr std::array<OpticKind, kKindCount> all_kinds{
    OpticKind::Adapter,   OpticKind::Grate, OpticKind::Prism,        OpticKind::ListLens,
    OpticKind::Lens,      OpticKind::Affine, OpticKind::Glass,       OpticKind::Kaleidoscope,
    OpticKind::Traversal, OpticKind::Setter,
};

const std::string& kind_name(OpticKind k);

// Direct inclusion edges of the hierarchy.
const std::vector<std::pair<OpticKind, OpticKind>>& kind_edges();

// Direct successors of k in the inclusion DAG.
const std::vector<OpticKind>& kind_successors(OpticKind k);

// True when `to` can be reached from `from` along inclusion edges
// (reflexively).
bool kind_reaches(OpticKind from, OpticKind to);

// Unique minimal common upper bound of the two kinds. Throws
// std::logic_error if the DAG ever yielded several minimal bounds;
// the invariant suite checks it never does.
OpticKind join(OpticKind k1, OpticKind k2);

// A shortest edge path from -> to, both endpoints included. Throws
// NoPathError when `to` is unreachable.
std::vector<OpticKind> kind_path(OpticKind from, OpticKind to);

// Every simple path from -> to (used to check that upcasting does not
// depend on the route taken).
std::vector<std::vector<OpticKind>> all_kind_paths(OpticKind from, OpticKind to);

} // namespace optic
