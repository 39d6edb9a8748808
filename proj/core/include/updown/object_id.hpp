#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace updown {

/// Address of one object in a rank-tabulated category: the rank (grade) and
/// the position within that rank's object list.
struct ObjectId {
  std::size_t rank = 0;
  std::size_t index = 0;

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

std::string to_string(const ObjectId& id);

}  // namespace updown

template <>
struct std::hash<updown::ObjectId> {
  std::size_t operator()(const updown::ObjectId& id) const noexcept {
    return std::hash<std::size_t>{}(id.rank * 0x9e3779b97f4a7c15ull + id.index);
  }
};
