#pragma once

// Random orbit-union candidate generation and the PAF fingerprint encoding
// that turns SDS pair detection into equality of sort keys: the A side
// records its set-form PAF at the nonzero orbit representatives of the
// negation-extended subgroup, the B side records lambda minus the same, so
// the two fingerprints coincide exactly when the pair is an SDS.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dopt/constraints.hpp"
#include "dopt/numtheory.hpp"

namespace dopt {

enum class Side : char { A = 'A', B = 'B' };

inline char side_char(Side s) { return static_cast<char>(s); }
Side side_from_char(char c);

struct CandidateRecord {
    int v = 0;
    Side side = Side::A;
    int size = 0;    // r for side A, s for side B
    int lambda = 0;
    std::vector<int> fingerprint;
    std::vector<int> orbit_reps;  // sorted orbit representatives (the J / K set)
};

struct SdsSolution {
    ParamSet params;
    std::vector<int> x_set, y_set;
    std::vector<int> j_set, k_set;  // orbit representatives; empty when unused
    std::string provenance;
};

// Portable deterministic randomness: a fixed-algorithm engine plus our own
// bounded draw and shuffle, so pools are byte-identical across platforms
// (std distributions are not pinned by the standard).
class SearchRng {
  public:
    explicit SearchRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform draw in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n);
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[bounded(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

// True when some union of distinct orbits has total size exactly `target`.
bool orbit_union_feasible(const OrbitSystem& sys, int target);

// Support set from orbit representatives.
std::vector<int> support_from_reps(const OrbitSystem& sys, const std::vector<int>& reps);

// Nonzero orbit representatives of the negation-extended subgroup; this is
// the index set fingerprints are evaluated at.
std::vector<int> fingerprint_reps(const OrbitSystem& sys);

std::vector<int> encode_fingerprint(const std::vector<int>& support, const ParamSet& params,
                                    const OrbitSystem& sys, Side side);

// Up to `count` distinct random candidates whose supports are orbit unions of
// exact total size (r or s by side) and which pass the PSD criterion.
// Deterministic for fixed (seed, count). Throws before generating anything
// when the target size is not a sum of distinct orbit sizes.
std::vector<CandidateRecord> generate_candidates(const ParamSet& params, const OrbitSystem& sys,
                                                 Side side, long long count, std::uint64_t seed);

// Same stream split over `workers` threads; worker w draws from seed + w.
// Output is the workers' streams concatenated in worker order with
// cross-worker duplicates dropped, hence again deterministic.
std::vector<CandidateRecord> generate_candidates_parallel(const ParamSet& params,
                                                          const OrbitSystem& sys, Side side,
                                                          long long count, std::uint64_t seed,
                                                          int workers);

// Rebuilds (X, Y) from a matched record pair and fully verifies it. Returns
// nothing when the match was a fingerprint collision rather than an SDS.
std::optional<SdsSolution> reconstruct(const CandidateRecord& a_record,
                                       const CandidateRecord& b_record, const OrbitSystem& sys,
                                       const ParamSet& params);

}  // namespace dopt
