#pragma once

#include "rlcband/interval.hpp"

namespace rlcband {

/// Rigorous enclosure of pi: the two doubles adjacent to it.
Interval pi_interval() noexcept;

// Range enclosures of the elementary functions. Point evaluations from the
// C library are assumed faithful (<= 1 ulp) and every endpoint is widened by
// two ulps outward, except where the result is known to be exact
// (exp(0), log(1), cos(0), acos(1), ...).

Interval iexp(const Interval& x);
/// Throws NonPositiveArgument if lo <= 0.
Interval iln(const Interval& x);
/// Correctly rounded sqrt, so this one is tight to one ulp. Throws
/// NegativeArgument if lo < 0.
Interval isqrt(const Interval& x);

/// Range of sin/cos over x; x may span several periods. Arguments with
/// magnitude above 2^52 rad throw PrecisionLoss.
Interval isin(const Interval& x);
Interval icos(const Interval& x);

/// acos over x intersected with [-1, 1]; DomainViolation if that is empty.
Interval iacos(const Interval& x);
Interval iatan(const Interval& x);

}  // namespace rlcband
