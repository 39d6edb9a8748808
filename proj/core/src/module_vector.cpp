#include "updown/module_vector.hpp"

#include "updown/errors.hpp"

namespace updown {

Rational ModuleVector::coeff(ObjectId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ModuleVector::set(ObjectId id, Rational value) {
  if (value == 0) {
    coeffs_.erase(id);
  } else {
    coeffs_[id] = std::move(value);
  }
}

void ModuleVector::add(ObjectId id, const Rational& delta) {
  auto [it, inserted] = coeffs_.try_emplace(id, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
  } else if (it->second == 0) {
    coeffs_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [id, c] : other.coeffs_) add(id, c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [id, c] : coeffs_) c *= scalar;
  return *this;
}

ModuleVector up_op(const UpdownTable& table, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [id, c] : v.coeffs()) {
    if (id.rank >= table.max_rank()) {
      throw TruncationError("up operator applied at the top tabulated rank " +
                            std::to_string(id.rank) + " of table '" + table.name() + "'");
    }
    for (const auto& e : table.covers(id)) {
      out.add(e.dst, c * e.u);
    }
  }
  return out;
}

ModuleVector down_op(const UpdownTable& table, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [id, c] : v.coeffs()) {
    for (const auto& e : table.covered_by(id)) {
      out.add(e.src, c * e.d);
    }
  }
  return out;
}

Rational inner(const UpdownTable& table, const ModuleVector& v, const ModuleVector& w) {
  Rational out = 0;
  const auto& a = v.coeffs();
  const auto& b = w.coeffs();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out += ia->second * ib->second * table.aut(ia->first);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace updown
