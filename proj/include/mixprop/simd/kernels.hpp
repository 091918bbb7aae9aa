/*
Copyright (c) 2026 The mixprop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Dense f64 inner loops with a scalar reference and ISA-specific variants
// chosen once at startup. All variants are bit-identical to the scalar
// reference: no fused multiply-add, and dot() reduces in four interleaved
// lanes combined as (l0 + l1) + (l2 + l3) followed by the sequential tail.

#include <cstddef>
#include <string_view>

namespace mixprop::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
};

std::string_view isa_name(Isa isa);

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

// Table for a specific ISA; throws InputError if unavailable.
const KernelTable& kernels_for(Isa isa);

// Best available ISA, overridable with MIXPROP_SIMD=scalar|avx2|neon.
const KernelTable& active();

inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }
inline double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }

namespace detail {
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
#if defined(MIXPROP_BUILD_AVX2)
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
#endif
#if defined(MIXPROP_BUILD_NEON)
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void scale_neon(double a, double* x, std::size_t n);
double dot_neon(const double* x, const double* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace mixprop::simd
