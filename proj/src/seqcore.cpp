#include "dopt/seqcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dopt {

namespace {

std::vector<char> membership(int v, const std::vector<int>& x_set) {
    std::vector<char> in(v, 0);
    for (int i : x_set) {
        if (i < 0 || i >= v)
            throw std::out_of_range("set element " + std::to_string(i) + " outside [0, " +
                                    std::to_string(v - 1) + "]");
        if (in[i])
            throw std::invalid_argument("duplicate set element " + std::to_string(i));
        in[i] = 1;
    }
    return in;
}

}  // namespace

std::vector<int> PmSequence::support() const {
    std::vector<int> x_set;
    for (int i = 0; i < v; ++i)
        if (entries[i] < 0) x_set.push_back(i);
    return x_set;
}

int PmSequence::row_sum() const {
    int s = 0;
    for (auto e : entries) s += e;
    return s;
}

PmSequence sequence_from_set(int v, const std::vector<int>& x_set) {
    if (v <= 0) throw std::invalid_argument("sequence length must be positive");
    auto in = membership(v, x_set);
    PmSequence seq;
    seq.v = v;
    seq.entries.resize(v);
    for (int i = 0; i < v; ++i) seq.entries[i] = in[i] ? -1 : 1;
    return seq;
}

PafVector paf(const PmSequence& seq) {
    const int v = seq.v;
    PafVector out;
    out.v = v;
    out.values.resize(v);
    for (int d = 0; d < v; ++d) {
        long long acc = 0;
        for (int i = 0; i < v; ++i) {
            int j = i + d;
            if (j >= v) j -= v;
            acc += seq.entries[i] * seq.entries[j];
        }
        out.values[d] = acc;
    }
    return out;
}

std::vector<int> set_paf(int v, const std::vector<int>& x_set) {
    auto in = membership(v, x_set);
    std::vector<int> values(v, 0);
    for (int d = 0; d < v; ++d) {
        int count = 0;
        for (int x : x_set) {
            int y = x + d;
            if (y >= v) y -= v;
            if (in[y]) ++count;
        }
        values[d] = count;
    }
    return values;
}

double psd_at(const PmSequence& seq, int k) {
    const int v = seq.v;
    const double step = 2.0 * std::numbers::pi * k / v;
    double re = 0.0, im = 0.0;
    for (int a = 0; a < v; ++a) {
        re += seq.entries[a] * std::cos(step * a);
        im += seq.entries[a] * std::sin(step * a);
    }
    return re * re + im * im;
}

PsdVector psd(const PmSequence& seq) {
    PsdVector out;
    out.v = seq.v;
    out.values.resize(seq.v);
    for (int k = 0; k < seq.v; ++k) out.values[k] = psd_at(seq, k);
    return out;
}

void require_orbit_closed(const std::vector<int>& support, const OrbitSystem& sys) {
    std::vector<char> in(sys.v, 0);
    for (int i : support) in.at(i) = 1;
    for (int i : support) {
        for (int j : sys.orbit_of(i)) {
            if (!in[j])
                throw std::invalid_argument("support is not a union of orbits: contains " +
                                            std::to_string(i) + " but not " + std::to_string(j) +
                                            " from the same orbit");
        }
    }
}

std::vector<std::pair<int, double>> psd_on_orbit_reps(const PmSequence& seq, const OrbitSystem& sys) {
    if (seq.v != sys.v) throw std::invalid_argument("sequence length does not match orbit system modulus");
    require_orbit_closed(seq.support(), sys);

    OrbitSystem extended = orbit_decomposition(sys.v, extend_with_negation(sys.subgroup));
    std::vector<std::pair<int, double>> out;
    for (int rep : extended.nonzero_representatives())
        out.emplace_back(rep, psd_at(seq, rep));
    return out;
}

}  // namespace dopt
