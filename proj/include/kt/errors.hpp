#pragma once
#include <stdexcept>
#include <string>

namespace kt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problems in an input document: missing fields, wrong types,
// malformed PD text.
struct SchemaError : Error { using Error::Error; };

// Well-formed data violating a semantic invariant (bad matching, bad pair,
// zero arcs, ...).
struct InvariantError : Error { using Error::Error; };

// Two objects that must agree (arc counts, grids) do not.
struct MismatchError : Error { using Error::Error; };

// Grid dimensions below the allowed minimum.
struct SizeError : Error { using Error::Error; };

// Grid too small for the requested construction; message names the minimum.
struct CapacityError : Error { using Error::Error; };

// Stabilization missing or wrong for the requested tiling.
struct IsolationError : Error { using Error::Error; };

// Mismatched colors/labels across an identified face, or incompatible
// tilings handed to a gluing operation.
struct InterfaceError : Error { using Error::Error; };

// A knot-level query was given a multi-component diagram.
struct MultiComponentError : Error { using Error::Error; };

// The disk search could not produce an embedded disk system.
struct DiskNotFoundError : Error { using Error::Error; };

// A region that must be connected is not.
struct ConnectivityError : Error { using Error::Error; };

}  // namespace kt
