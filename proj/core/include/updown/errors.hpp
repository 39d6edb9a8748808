#pragma once

#include <stdexcept>
#include <string>

namespace updown {

struct UpdownError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed construction input: bad object references, empty rank list,
/// nonpositive automorphism orders or hom-set sizes.
struct TableSpecError : UpdownError {
  using UpdownError::UpdownError;
};

/// An edge whose endpoints are not on adjacent ranks.
struct NonAdjacentEdge : TableSpecError {
  using TableSpecError::TableSpecError;
};

/// Two edge specs for the same (src, dst) pair.
struct DuplicateEdge : TableSpecError {
  using TableSpecError::TableSpecError;
};

/// hom_size not divisible by an endpoint automorphism order, i.e. the free
/// group actions required on a covering hom-set cannot exist.
struct DivisibilityViolation : TableSpecError {
  using TableSpecError::TableSpecError;
};

struct RankOrderError : UpdownError {
  using UpdownError::UpdownError;
};

/// Raising a vector supported at the top tabulated rank would silently drop
/// terms, so it is refused.
struct TruncationError : UpdownError {
  using UpdownError::UpdownError;
};

struct OrderExceedsTable : UpdownError {
  using UpdownError::UpdownError;
};

struct InvalidConstantTerm : UpdownError {
  using UpdownError::UpdownError;
};

struct NotUnivalent : UpdownError {
  using UpdownError::UpdownError;
};

struct RankOutOfRange : UpdownError {
  using UpdownError::UpdownError;
};

struct PreconditionFailed : UpdownError {
  using UpdownError::UpdownError;
};

struct BudgetExceeded : UpdownError {
  using UpdownError::UpdownError;
};

struct UnknownFamily : UpdownError {
  using UpdownError::UpdownError;
};

struct UnsupportedFamily : UpdownError {
  using UpdownError::UpdownError;
};

/// Import-time schema problem; path is a JSON pointer to the offending node.
struct SchemaError : UpdownError {
  SchemaError(std::string json_path, const std::string& message)
      : UpdownError(json_path + ": " + message), path(std::move(json_path)) {}
  std::string path;
};

}  // namespace updown
