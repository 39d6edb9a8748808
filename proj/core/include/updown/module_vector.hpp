#pragma once

#include <map>

#include "updown/object_id.hpp"
#include "updown/rational.hpp"
#include "updown/table.hpp"

namespace updown {

/// A finitely supported map ObjectId -> rational: an element of the free
/// module on the object set.  Zero coefficients are never stored, so equal
/// vectors have identical representations.
class ModuleVector {
 public:
  ModuleVector() = default;

  static ModuleVector basis(ObjectId id) {
    ModuleVector v;
    v.coeffs_[id] = 1;
    return v;
  }

  bool empty() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  /// Zero when absent.
  Rational coeff(ObjectId id) const;
  /// Erases the entry when value becomes zero.
  void set(ObjectId id, Rational value);
  void add(ObjectId id, const Rational& delta);

  const std::map<ObjectId, Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator*=(const Rational& scalar);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator*(const Rational& s, ModuleVector v) { return v *= s; }

 private:
  std::map<ObjectId, Rational> coeffs_;
};

/// U: linear extension of p |-> sum of u(p;q) q over covering edges.
/// Throws TruncationError if the support touches the top tabulated rank,
/// where outgoing data is missing.
ModuleVector up_op(const UpdownTable& table, const ModuleVector& v);

/// D: linear extension of p |-> sum of d(q;p) q over edges into p, with the
/// rank-0 object sent to zero.
ModuleVector down_op(const UpdownTable& table, const ModuleVector& v);

/// <v, w> = sum over p of v_p * w_p * |Aut p|.  U and D are adjoint for it.
Rational inner(const UpdownTable& table, const ModuleVector& v, const ModuleVector& w);

}  // namespace updown
