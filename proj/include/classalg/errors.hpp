#pragma once

#include <stdexcept>
#include <string>

namespace classalg {

// Base class for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed literal or document.
struct parse_error : error { using error::error; };
// Entry outside the allowed index range (e.g. cycle entry > degree).
struct range_error : error { using error::error; };
// Repeated entry where entries must be distinct.
struct duplicate_entry : error { using error::error; };
// Permutations of different degrees were combined.
struct degree_mismatch : error { using error::error; };
// A point does not belong to the acting set of the element.
struct point_out_of_range : error { using error::error; };
// Embedding into a smaller ambient size.
struct shrink_not_allowed : error { using error::error; };
// Projection onto a larger ambient size.
struct grow_not_allowed : error { using error::error; };
// Operands live over different group families.
struct family_mismatch : error { using error::error; };
// Operands live at different ambient sizes where equality is required.
struct ambient_mismatch : error { using error::error; };
// Incompatible sizes (e.g. composing partial maps with mismatched segments).
struct size_mismatch : error { using error::error; };
// A configurable cap (canonical-form search, enumeration) was exceeded.
struct cap_exceeded : error { using error::error; };
// A hard resource guard on a verification-scale computation was exceeded.
struct resource_guard : error { using error::error; };
// The zero element has no degree.
struct zero_element : error { using error::error; };
// The operation is only defined for a specific family shape.
struct wrong_family : error { using error::error; };
// Unknown export format.
struct unsupported_format : error { using error::error; };
// File could not be read or written.
struct io_error : error { using error::error; };

}  // namespace classalg
