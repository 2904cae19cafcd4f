#pragma once

// Ground-truth certification. An SDS pair (X, Y) with parameters
// (v; r, s; lambda) is certified by the difference-count condition
// |X n (X+d)| + |Y n (Y+d)| = lambda for every d != 0; the equivalent matrix
// statement A A^T + B B^T = 2(v-1) I + 2J is checked through PAF sums. The
// 2v x 2v block matrix built from a certified pair attains Ehlich's
// determinant bound 2^v (2v-1) (v-1)^(v-1), which exact_determinant can
// confirm directly at small orders.

#include <optional>
#include <vector>

#include "dopt/bigint.hpp"
#include "dopt/constraints.hpp"
#include "dopt/seqcore.hpp"

namespace dopt {

struct SdsCertificate {
    int v = 0;
    ParamSet params;
    bool sizes_ok = false;
    std::vector<int> difference_counts;  // index d = 1..v-1 at [d-1]
    std::vector<int> violated_ds;        // d with count != lambda
    bool pass = false;
};

SdsCertificate verify_sds(int v, const std::vector<int>& x_set, const std::vector<int>& y_set,
                          const ParamSet& params);

// Exact integer check of A A^T + B B^T = 2(v-1) I + 2J via PAF:
// paf(A)[0] + paf(B)[0] = 2v and paf(A)[d] + paf(B)[d] = 2 for d != 0.
bool verify_matrix_equation(const PmSequence& a, const PmSequence& b);

// Block matrix [[A, B], [-B^T, A^T]] with circulant blocks from first rows.
struct DMatrix {
    int v = 0;
    std::vector<std::vector<int>> entries;  // 2v x 2v, each +1 or -1
};

DMatrix build_dmatrix(const PmSequence& a, const PmSequence& b);

// Exact determinant by fraction-free (Bareiss) elimination. Entries and all
// intermediate minors live in arbitrary-precision integers; a same-shape
// int128 path handles matrices small enough to bound analytically.
BigInt exact_determinant(const std::vector<std::vector<long long>>& matrix);

BigInt ehlich_bound(int v);

struct EhlichReport {
    int v = 0;
    BigInt bound;
    std::optional<BigInt> det;       // set only when v <= det_cap
    std::optional<bool> attained;    // |det| == bound
};

// det_cap limits the determinant computation (order 2v grows fast); above
// the cap only the bound is reported.
EhlichReport verify_ehlich(const PmSequence& a, const PmSequence& b, int det_cap = 15);

}  // namespace dopt
