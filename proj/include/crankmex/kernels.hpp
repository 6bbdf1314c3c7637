#pragma once

// Inner loops of the dense series products. Each kernel has an OpenMP
// version (used by the series operators) and a sequential reference kept
// for testing and benchmarking. Both write out = a * b truncated; `out`
// must be zero-initialized and sized like the inputs.

#include <span>

#include "crankmex/bigint.hpp"

namespace crankmex::kernels {

void q_mul(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out);

void zq_mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                   int zmax, int qmax);
void zq_mul_omp(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                int zmax, int qmax);

/// Rows are y-exponents -qmax..qmax. Returns false, leaving `out` partly
/// written, if some nonzero product term falls outside the y window.
bool yq_mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                   int qmax);
bool yq_mul_omp(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                int qmax);

}  // namespace crankmex::kernels
