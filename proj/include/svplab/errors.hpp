#pragma once

#include <stdexcept>
#include <string>

namespace svplab {

// Bad argument: malformed input, out-of-domain parameter, invalid ideal form.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A divisibility precondition failed (e.g. 2^k | p-1 or disc_K^{N/g} | disc_L).
struct DivisibilityError : std::runtime_error {
    explicit DivisibilityError(const std::string& what) : std::runtime_error(what) {}
};

// A generating set did not span a full-rank lattice where one was required.
struct RankError : std::runtime_error {
    explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration refused: dimension exceeds the configured cap.
struct DimensionCapError : std::runtime_error {
    explicit DimensionCapError(const std::string& what) : std::runtime_error(what) {}
};

// A reduction would need an enumeration above the cap; names the hard class.
struct CapError : DimensionCapError {
    explicit CapError(const std::string& what) : DimensionCapError(what) {}
};

// Supplied polynomial is not a factor of x^{2^n}+1 mod p.
struct FactorError : std::runtime_error {
    explicit FactorError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration abandoned by a caller-supplied cancellation check.
struct CancelledError : std::runtime_error {
    explicit CancelledError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace svplab
