#pragma once

// Candidate pool files: UTF-8 text, one record per line,
//   v <TAB> side <TAB> r_or_s <TAB> lambda <TAB> fingerprint-csv <TAB> reps-csv
// preceded by a header line
//   #dopt-pool v=... h=... gens=... params=(r,s,lambda)
// Sorting is a chunked external merge sort keyed on the parsed fingerprint
// (element-wise numeric, ties broken by the rep set), so the order never
// depends on byte-level formatting. Matching is a single linear pass over
// two sorted pools that cross-products equal-fingerprint runs.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <utility>
#include <vector>

#include "dopt/search.hpp"

namespace dopt {

struct PoolHeader {
    int v = 0;
    std::vector<int> gens;
    int r = 0, s = 0, lambda = 0;

    bool operator==(const PoolHeader&) const = default;
};

std::string format_pool_header(const PoolHeader& header);
PoolHeader parse_pool_header(const std::string& line);

std::string format_pool_record(const CandidateRecord& record);
CandidateRecord parse_pool_record(const std::string& line);

// Sort key: fingerprint, then orbit reps, both as integer sequences.
bool pool_record_less(const CandidateRecord& lhs, const CandidateRecord& rhs);
bool fingerprint_less(const CandidateRecord& lhs, const CandidateRecord& rhs);
bool fingerprint_equal(const CandidateRecord& lhs, const CandidateRecord& rhs);

void write_pool(const std::filesystem::path& path, const PoolHeader& header,
                const std::vector<CandidateRecord>& records);

// Streaming record reader; throws on malformed input naming the record number.
class PoolReader {
  public:
    explicit PoolReader(const std::filesystem::path& path, bool expect_header = true);
    const PoolHeader& header() const { return header_; }
    bool next(CandidateRecord& record);

  private:
    std::filesystem::path path_;
    std::ifstream in_;
    PoolHeader header_;
    long long line_number_ = 0;
};

// In-place external merge sort (writes a temp file, then renames over the
// input). Stable and idempotent; chunk_records bounds memory use.
void pool_sort(const std::filesystem::path& path, std::size_t chunk_records = 100000);

struct MatchResult {
    std::vector<std::pair<CandidateRecord, CandidateRecord>> pairs;
};

// Both pools must be sorted and built for the same (v, gens, params); a
// mismatch or an out-of-order record throws.
MatchResult match_pools(const std::filesystem::path& a_path, const std::filesystem::path& b_path);

}  // namespace dopt
