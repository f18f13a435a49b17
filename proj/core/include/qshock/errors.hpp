#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qshock {

// Base class for recoverable computational failures. The tag is the stable
// machine-readable name surfaced on the CLI diagnostic stream with exit code 2.
class TaggedError : public std::runtime_error {
public:
    TaggedError(std::string tag, const std::string& what)
        : std::runtime_error(what), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

#define QSHOCK_DEFINE_TAGGED_ERROR(NAME)                                       \
    class NAME : public TaggedError {                                          \
    public:                                                                    \
        explicit NAME(const std::string& what) : TaggedError(#NAME, what) {}   \
    }

// |d rho/dx| below threshold: the pointwise dQ/d rho ratio is undefined there.
QSHOCK_DEFINE_TAGGED_ERROR(DegenerateGradient);
// rho * Q_rho < 0: characteristic speeds are complex; reported, never clamped.
QSHOCK_DEFINE_TAGGED_ERROR(EllipticRegime);
// Q_rho = 0: eigenvector first component diverges (eigenvalues still defined).
QSHOCK_DEFINE_TAGGED_ERROR(EigvecUndefined);
// Residual slices were sampled on different grids or incompatible time stamps.
QSHOCK_DEFINE_TAGGED_ERROR(GridMismatch);
// x0 = 0 seeds the self-similar center line; the shock condition degenerates.
QSHOCK_DEFINE_TAGGED_ERROR(DegenerateLaunch);
// The shock condition derivative has no sign change in (0, T_max].
QSHOCK_DEFINE_TAGGED_ERROR(NoRootInHorizon);
// No pairwise characteristic intersection falls inside (0, T_max].
QSHOCK_DEFINE_TAGGED_ERROR(NoCrossing);
// Q_rho / rho < 0 somewhere on a quadrature path.
QSHOCK_DEFINE_TAGGED_ERROR(NegativeRadicand);
// Wave mass reached the periodic guard band; the domain must be enlarged.
QSHOCK_DEFINE_TAGGED_ERROR(BoundaryLeak);
// Adjacent-sample phase jump too close to pi; the grid is too coarse.
QSHOCK_DEFINE_TAGGED_ERROR(PhaseUnwrapAmbiguity);

#undef QSHOCK_DEFINE_TAGGED_ERROR

} // namespace qshock
