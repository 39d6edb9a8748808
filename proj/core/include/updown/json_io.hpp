#pragma once

#include <string>

#include "updown/table.hpp"

namespace updown::io {

/// Serializes a table as a JSON instance document:
///
///   {
///     "name": "...",
///     "ranks": [[{"label": "...", "aut": 1}, ...], ...],
///     "edges": [{"src": [r,i], "dst": [r,i], "hom": h}, ...]
///   }
///
/// u and d are never serialized; they are derived on import.  Output is
/// deterministic: ranks in order, edges sorted by (src, dst), fixed
/// indentation, trailing newline.  import(export(t)) reproduces t exactly
/// and re-exports byte-identically.
std::string export_json(const UpdownTable& table);

/// Throws SchemaError (with a JSON pointer path) for malformed documents;
/// table construction errors are rethrown as SchemaError at the offending
/// edge's path.
UpdownTable import_json(const std::string& text);

}  // namespace updown::io
