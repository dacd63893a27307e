#pragma once

#include <cstdint>

#include "qlab/errors.hpp"

namespace qlab {

/// Working precision shared by all floating operations of one computation.
///
/// Every numeric routine takes a PrecisionContext; results are quoted with
/// roughly `bits - guard` trustworthy bits.  Exact (rational / integer)
/// arithmetic ignores the context entirely.
struct PrecisionContext {
    long bits = 256;
    long guard = 16;

    PrecisionContext() = default;
    explicit PrecisionContext(long b, long g = 16) : bits(b), guard(g) {
        if (bits < 53) throw DomainError("PrecisionContext: bits must be >= 53");
        if (guard < 0) throw DomainError("PrecisionContext: guard must be >= 0");
    }

    /// Precision actually carried by intermediate values.
    long work_bits() const { return bits + guard; }
};

} // namespace qlab
