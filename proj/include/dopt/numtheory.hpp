#pragma once

// Modular arithmetic over Z_v for odd v: unit groups, multiplicative
// subgroups and the orbit decomposition of the subgroup action on Z_v.
// Everything here is a pure function on immutable data.

#include <vector>

namespace dopt {

// Throws std::invalid_argument unless v is odd and v >= 3.
void check_modulus(int v);

// Euler totient by trial division.
int euler_phi(int v);

int mod_mul(int x, int y, int v);

// Multiplicative subgroup of Z_v*.
struct Subgroup {
    int v = 0;
    std::vector<int> elements;  // sorted, subset of [1, v-1], closed under mod-v product

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
};

// Orbits of a subgroup acting on Z_v by multiplication.
// orbits[0] == {0}; each orbit sorted; orbits ordered by minimal element.
struct OrbitSystem {
    int v = 0;
    Subgroup subgroup;
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_index;  // element -> position in `orbits`

    int orbit_count() const { return static_cast<int>(orbits.size()); }
    const std::vector<int>& orbit_of(int element) const;
    int representative(int orbit_pos) const { return orbits[orbit_pos][0]; }
    // Position of the orbit whose minimal element is `rep`; throws if `rep`
    // is not a representative.
    int orbit_pos_of_rep(int rep) const;
    // Representatives of all orbits other than {0}, ascending.
    std::vector<int> nonzero_representatives() const;
};

// {k in [1, v-1] : gcd(k, v) = 1}, sorted.
std::vector<int> unit_group(int v);

// Closure of `gens` under multiplication mod v. Every generator must be
// coprime to v; a violating generator is named in the exception.
Subgroup subgroup_from_generators(int v, const std::vector<int>& gens);

// Subgroup generated by H and v-1. Equals H when -1 is already in H,
// otherwise has order 2|H|.
Subgroup extend_with_negation(const Subgroup& h);

OrbitSystem orbit_decomposition(int v, const Subgroup& h);

}  // namespace dopt
