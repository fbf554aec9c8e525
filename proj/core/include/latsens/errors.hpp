#pragma once

#include <stdexcept>
#include <string>

namespace latsens {

// Precondition violations on operation inputs (bad dimension, non-disjoint
// blocks, malformed parameters).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (probe budget, candidate-block cap, table size)
// would be exceeded.  Never raised for a failed mathematical check.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// is_minimal_block was asked about a block that is not sensitive at all.
class BlockNotSensitiveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// min_width found an axis with no blue point within the search cap.
// Axis is 1-based, matching report conventions.
class MinWidthError : public std::runtime_error {
 public:
  MinWidthError(int axis, long long cap)
      : std::runtime_error("no blue within cap " + std::to_string(cap) +
                           " on axis " + std::to_string(axis)),
        axis_(axis) {}
  int axis() const { return axis_; }

 private:
  int axis_;
};

// A sliced coloring does not meet the structural requirements some checks
// need (exactly d slices, distinct axes, |c| >= 3).
class ConformanceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed file or spec text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latsens
