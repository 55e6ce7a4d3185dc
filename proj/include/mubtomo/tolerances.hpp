#pragma once

// Central tolerance ledger. Dimensions never exceed 27, so conditioning is
// benign and these bounds are generous.
namespace mubtomo::tol {

inline constexpr double kEq = 1e-10;    // algebraic identities
inline constexpr double kEig = 1e-9;    // spectral results, Hermiticity checks
inline constexpr double kRank = 1e-8;   // singular-value rank decisions
inline constexpr double kMatch = 1e-8;  // phase/permutation basis identity

}  // namespace mubtomo::tol
