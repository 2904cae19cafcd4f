#include "dopt/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace dopt {

void check_modulus(int v) {
    if (v < 3 || v % 2 == 0)
        throw std::invalid_argument("modulus must be odd and >= 3, got " + std::to_string(v));
}

int euler_phi(int v) {
    int result = v;
    int n = v;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int mod_mul(int x, int y, int v) {
    return static_cast<int>((static_cast<long long>(x) * y) % v);
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<int> unit_group(int v) {
    check_modulus(v);
    std::vector<int> units;
    for (int k = 1; k < v; ++k)
        if (std::gcd(k, v) == 1) units.push_back(k);
    return units;
}

Subgroup subgroup_from_generators(int v, const std::vector<int>& gens) {
    check_modulus(v);
    for (int g : gens) {
        int gm = ((g % v) + v) % v;
        if (std::gcd(gm, v) != 1)
            throw std::invalid_argument("generator " + std::to_string(g) +
                                        " is not coprime to " + std::to_string(v));
    }

    // Closure by iterative multiplication until fixpoint; |Z_v*| <= v bounds the loop.
    std::set<int> closure{1};
    std::vector<int> frontier{1};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int g : gens) {
                int gm = ((g % v) + v) % v;
                int y = mod_mul(x, gm, v);
                if (closure.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }

    Subgroup h;
    h.v = v;
    h.elements.assign(closure.begin(), closure.end());
    return h;
}

Subgroup extend_with_negation(const Subgroup& h) {
    if (h.contains(h.v - 1)) return h;
    std::vector<int> gens = h.elements;
    gens.push_back(h.v - 1);
    return subgroup_from_generators(h.v, gens);
}

OrbitSystem orbit_decomposition(int v, const Subgroup& h) {
    check_modulus(v);
    if (h.v != v) throw std::invalid_argument("subgroup modulus does not match v");

    OrbitSystem sys;
    sys.v = v;
    sys.subgroup = h;
    sys.orbit_index.assign(v, -1);

    // Scanning elements in ascending order makes each new orbit start at its
    // minimal element, so the orbit list comes out ordered by representative.
    for (int e = 0; e < v; ++e) {
        if (sys.orbit_index[e] >= 0) continue;
        std::vector<int> orbit;
        for (int s : h.elements) orbit.push_back(mod_mul(e, s, v));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        int pos = static_cast<int>(sys.orbits.size());
        for (int x : orbit) sys.orbit_index[x] = pos;
        sys.orbits.push_back(std::move(orbit));
    }
    return sys;
}

const std::vector<int>& OrbitSystem::orbit_of(int element) const {
    if (element < 0 || element >= v)
        throw std::out_of_range("element " + std::to_string(element) + " outside Z_" + std::to_string(v));
    return orbits[orbit_index[element]];
}

int OrbitSystem::orbit_pos_of_rep(int rep) const {
    if (rep < 0 || rep >= v)
        throw std::out_of_range("representative " + std::to_string(rep) + " outside Z_" + std::to_string(v));
    int pos = orbit_index[rep];
    if (orbits[pos][0] != rep)
        throw std::invalid_argument(std::to_string(rep) + " is not an orbit representative (orbit minimum is " +
                                    std::to_string(orbits[pos][0]) + ")");
    return pos;
}

std::vector<int> OrbitSystem::nonzero_representatives() const {
    std::vector<int> reps;
    reps.reserve(orbits.size() - 1);
    for (std::size_t i = 1; i < orbits.size(); ++i) reps.push_back(orbits[i][0]);
    return reps;
}

}  // namespace dopt
