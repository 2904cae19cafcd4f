#pragma once

// Length-v {-1,+1} sequences and their periodic autocorrelation (PAF) and
// power spectral density (PSD). A sequence and its support set -- the index
// set carrying the -1 entries -- are interchangeable views of the same data.

#include <cstdint>
#include <utility>
#include <vector>

#include "dopt/numtheory.hpp"

namespace dopt {

struct PmSequence {
    int v = 0;
    std::vector<std::int8_t> entries;  // each +1 or -1

    std::vector<int> support() const;  // sorted indices with entry == -1
    int row_sum() const;               // equals v - 2*|support|
};

// entry_i = -1 iff i in X. X must be a duplicate-free subset of [0, v-1].
PmSequence sequence_from_set(int v, const std::vector<int>& x_set);

struct PafVector {
    int v = 0;
    std::vector<long long> values;  // index d = 0..v-1; values[0] = v
};

// values[d] = sum_i entry_i * entry_{(i+d) mod v}
PafVector paf(const PmSequence& seq);

// Set form: values[d] = |X intersect (X + d mod v)|, so values[0] = |X|.
// Related to the +-1 form by PAF(d) = v - 4*(|X| - set_paf(X)[d]) for d != 0.
std::vector<int> set_paf(int v, const std::vector<int>& x_set);

struct PsdVector {
    int v = 0;
    std::vector<double> values;  // index k = 0..v-1; values[0] = row_sum^2
};

// values[k] = |sum_a entry_a * w^{ak}|^2 with w = exp(2*pi*i/v).
// Direct O(v^2) evaluation; v stays small enough that an FFT buys nothing.
PsdVector psd(const PmSequence& seq);

// Single PSD value at frequency k, O(v).
double psd_at(const PmSequence& seq, int k);

// Absolute comparison tolerance for PSD identities at length v.
inline double psd_tolerance(int v) { return 1e-6 * v; }

// One PSD value per nonzero orbit of the negation-extended subgroup, taken at
// the orbit representative, ascending. Requires the support of `seq` to be a
// union of orbits of `sys` (PSD is constant on those orbits only then).
std::vector<std::pair<int, double>> psd_on_orbit_reps(const PmSequence& seq, const OrbitSystem& sys);

// Throws unless the support is a union of orbits; the exception names a
// violating in-support/out-of-support index pair.
void require_orbit_closed(const std::vector<int>& support, const OrbitSystem& sys);

}  // namespace dopt
