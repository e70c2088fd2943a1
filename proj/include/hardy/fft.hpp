#pragma once

#include <complex>
#include <vector>

namespace hardy::detail {

// In-place radix-2 transform; size must be a power of two.
//   forward:  a[k] <- sum_j a[j] exp(-i 2 pi j k / n)   (no scaling)
//   inverse:  a[j] <- sum_k a[k] exp(+i 2 pi j k / n)   (no scaling)
// Stateless, safe to call concurrently.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace hardy::detail
