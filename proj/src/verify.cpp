#include "dopt/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dopt {

SdsCertificate verify_sds(int v, const std::vector<int>& x_set, const std::vector<int>& y_set,
                          const ParamSet& params) {
    check_modulus(v);
    auto x_paf = set_paf(v, x_set);
    auto y_paf = set_paf(v, y_set);

    SdsCertificate cert;
    cert.v = v;
    cert.params = params;
    cert.sizes_ok = static_cast<int>(x_set.size()) == params.r &&
                    static_cast<int>(y_set.size()) == params.s;
    cert.difference_counts.reserve(v - 1);
    for (int d = 1; d < v; ++d) {
        int count = x_paf[d] + y_paf[d];
        cert.difference_counts.push_back(count);
        if (count != params.lambda) cert.violated_ds.push_back(d);
    }
    cert.pass = cert.sizes_ok && cert.violated_ds.empty();
    return cert;
}

bool verify_matrix_equation(const PmSequence& a, const PmSequence& b) {
    if (a.v != b.v) throw std::invalid_argument("sequences must have equal length");
    auto pa = paf(a);
    auto pb = paf(b);
    if (pa.values[0] + pb.values[0] != 2LL * a.v) return false;
    for (int d = 1; d < a.v; ++d)
        if (pa.values[d] + pb.values[d] != 2) return false;
    return true;
}

DMatrix build_dmatrix(const PmSequence& a, const PmSequence& b) {
    if (a.v != b.v) throw std::invalid_argument("sequences must have equal length");
    const int v = a.v;
    DMatrix m;
    m.v = v;
    m.entries.assign(2 * v, std::vector<int>(2 * v, 0));
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            int fwd = (j - i + v) % v;  // circulant offset
            int bwd = (i - j + v) % v;  // transpose offset
            m.entries[i][j] = a.entries[fwd];
            m.entries[i][v + j] = b.entries[fwd];
            m.entries[v + i][j] = -b.entries[bwd];
            m.entries[v + i][v + j] = a.entries[bwd];
        }
    }
    return m;
}

namespace {

// Bareiss elimination over a generic ring element; Elem needs *, -, /exact,
// zero test and sign flip. Instantiated for __int128 and BigInt.
template <typename Elem, typename DivExact>
Elem bareiss(std::vector<std::vector<Elem>> m, DivExact div_exact) {
    const std::size_t n = m.size();
    int sign = 1;
    Elem prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == Elem(0)) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == Elem(0)) ++pivot;
            if (pivot == n) return Elem(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Elem num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = div_exact(num, prev);
            }
        }
        prev = m[k][k];
    }
    Elem det = m[n - 1][n - 1];
    return sign < 0 ? Elem(0) - det : det;
}

bool fits_int128(const std::vector<std::vector<long long>>& matrix) {
    const std::size_t n = matrix.size();
    long long max_abs = 1;
    for (const auto& row : matrix)
        for (long long e : row) max_abs = std::max(max_abs, std::llabs(e));
    // Hadamard: any j x j minor is at most (sqrt(j) * max_abs)^j, and a
    // Bareiss numerator is a product of two minors (plus one doubling).
    double log_minor = 0.5 * n * std::log2(static_cast<double>(n)) +
                       n * std::log2(static_cast<double>(max_abs));
    return 2.0 * log_minor + 1.0 < 125.0;
}

}  // namespace

BigInt exact_determinant(const std::vector<std::vector<long long>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) return BigInt(1);
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");

    if (fits_int128(matrix)) {
        std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = matrix[i][j];
        __int128 det = bareiss<__int128>(std::move(m), [](__int128 a, __int128 b) { return a / b; });
        BigInt out(static_cast<long long>(det % 1000000000000000000LL));
        __int128 high = det / 1000000000000000000LL;
        if (high != 0) out = BigInt(static_cast<long long>(high)) * BigInt(1000000000000000000LL) + out;
        return out;
    }

    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = BigInt(matrix[i][j]);
    return bareiss<BigInt>(std::move(m), [](const BigInt& a, const BigInt& b) { return a.div_exact(b); });
}

BigInt ehlich_bound(int v) {
    check_modulus(v);
    return pow(BigInt(2), static_cast<unsigned>(v)) * BigInt(2 * v - 1) *
           pow(BigInt(v - 1), static_cast<unsigned>(v - 1));
}

EhlichReport verify_ehlich(const PmSequence& a, const PmSequence& b, int det_cap) {
    EhlichReport report;
    report.v = a.v;
    report.bound = ehlich_bound(a.v);
    if (a.v > det_cap) return report;

    DMatrix dm = build_dmatrix(a, b);
    std::vector<std::vector<long long>> m(dm.entries.size());
    for (std::size_t i = 0; i < dm.entries.size(); ++i)
        m[i].assign(dm.entries[i].begin(), dm.entries[i].end());
    report.det = exact_determinant(m);
    report.attained = report.det->abs() == report.bound;
    return report;
}

}  // namespace dopt
