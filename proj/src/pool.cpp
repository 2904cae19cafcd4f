#include "dopt/pool.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dopt {

namespace {

constexpr std::string_view kHeaderTag = "#dopt-pool";

void append_csv(std::string& out, const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
}

std::vector<int> parse_csv(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc())
            throw std::invalid_argument("bad integer in list: '" + std::string(text) + "'");
        out.push_back(value);
        p = next;
        if (p < end) {
            if (*p != ',') throw std::invalid_argument("expected ',' in list: '" + std::string(text) + "'");
            ++p;
        }
    }
    return out;
}

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || next != text.data() + text.size())
        throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

std::string format_pool_header(const PoolHeader& header) {
    Subgroup h = subgroup_from_generators(header.v, header.gens);
    std::string out(kHeaderTag);
    out += " v=" + std::to_string(header.v);
    out += " h=" + std::to_string(h.order());
    out += " gens=";
    append_csv(out, header.gens);
    out += " params=(" + std::to_string(header.r) + "," + std::to_string(header.s) + "," +
           std::to_string(header.lambda) + ")";
    return out;
}

PoolHeader parse_pool_header(const std::string& line) {
    if (line.rfind(kHeaderTag, 0) != 0)
        throw std::invalid_argument("missing pool header line");
    PoolHeader header;
    int declared_order = -1;
    std::istringstream in(line.substr(kHeaderTag.size()));
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad pool header token: '" + token + "'");
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "v") {
            header.v = parse_int(value, "header v");
        } else if (key == "h") {
            declared_order = parse_int(value, "header h");
        } else if (key == "gens") {
            header.gens = parse_csv(value);
        } else if (key == "params") {
            if (value.size() < 2 || value.front() != '(' || value.back() != ')')
                throw std::invalid_argument("bad params in pool header: '" + value + "'");
            auto triple = parse_csv(std::string_view(value).substr(1, value.size() - 2));
            if (triple.size() != 3)
                throw std::invalid_argument("params must be (r,s,lambda): '" + value + "'");
            header.r = triple[0];
            header.s = triple[1];
            header.lambda = triple[2];
        } else {
            throw std::invalid_argument("unknown pool header key: '" + key + "'");
        }
    }
    if (header.v == 0) throw std::invalid_argument("pool header lacks v");
    if (declared_order >= 0) {
        Subgroup h = subgroup_from_generators(header.v, header.gens);
        if (h.order() != declared_order)
            throw std::invalid_argument("pool header subgroup order mismatch");
    }
    return header;
}

std::string format_pool_record(const CandidateRecord& record) {
    std::string out = std::to_string(record.v);
    out.push_back('\t');
    out.push_back(side_char(record.side));
    out.push_back('\t');
    out += std::to_string(record.size);
    out.push_back('\t');
    out += std::to_string(record.lambda);
    out.push_back('\t');
    append_csv(out, record.fingerprint);
    out.push_back('\t');
    append_csv(out, record.orbit_reps);
    return out;
}

CandidateRecord parse_pool_record(const std::string& line) {
    auto fields = split(line, '\t');
    if (fields.size() != 6)
        throw std::invalid_argument("expected 6 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    CandidateRecord record;
    record.v = parse_int(fields[0], "record v");
    if (fields[1].size() != 1) throw std::invalid_argument("bad side field");
    record.side = side_from_char(fields[1][0]);
    record.size = parse_int(fields[2], "record size");
    record.lambda = parse_int(fields[3], "record lambda");
    record.fingerprint = parse_csv(fields[4]);
    record.orbit_reps = parse_csv(fields[5]);
    return record;
}

bool fingerprint_less(const CandidateRecord& lhs, const CandidateRecord& rhs) {
    return std::lexicographical_compare(lhs.fingerprint.begin(), lhs.fingerprint.end(),
                                        rhs.fingerprint.begin(), rhs.fingerprint.end());
}

bool fingerprint_equal(const CandidateRecord& lhs, const CandidateRecord& rhs) {
    return lhs.fingerprint == rhs.fingerprint;
}

bool pool_record_less(const CandidateRecord& lhs, const CandidateRecord& rhs) {
    if (lhs.fingerprint != rhs.fingerprint) return fingerprint_less(lhs, rhs);
    return std::lexicographical_compare(lhs.orbit_reps.begin(), lhs.orbit_reps.end(),
                                        rhs.orbit_reps.begin(), rhs.orbit_reps.end());
}

void write_pool(const std::filesystem::path& path, const PoolHeader& header,
                const std::vector<CandidateRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << format_pool_header(header) << '\n';
    for (const auto& record : records) out << format_pool_record(record) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

PoolReader::PoolReader(const std::filesystem::path& path, bool expect_header)
    : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw std::runtime_error("cannot open pool file " + path.string());
    if (expect_header) {
        std::string line;
        if (!std::getline(in_, line))
            throw std::runtime_error("empty pool file " + path.string());
        ++line_number_;
        header_ = parse_pool_header(line);
    }
}

bool PoolReader::next(CandidateRecord& record) {
    std::string line;
    if (!std::getline(in_, line)) return false;
    ++line_number_;
    try {
        record = parse_pool_record(line);
    } catch (const std::exception& e) {
        throw std::runtime_error(path_.string() + ":" + std::to_string(line_number_) +
                                 ": malformed record: " + e.what());
    }
    return true;
}

namespace {

std::filesystem::path temp_sibling(const std::filesystem::path& path, const std::string& suffix) {
    auto tmp = path;
    tmp += suffix;
    return tmp;
}

void write_chunk(const std::filesystem::path& path, const std::vector<CandidateRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open chunk file " + path.string());
    for (const auto& record : records) out << format_pool_record(record) << '\n';
}

}  // namespace

void pool_sort(const std::filesystem::path& path, std::size_t chunk_records) {
    if (chunk_records == 0) throw std::invalid_argument("chunk size must be positive");

    PoolReader reader(path);
    std::vector<std::filesystem::path> chunk_paths;
    std::vector<CandidateRecord> buffer;
    buffer.reserve(chunk_records);

    auto flush = [&]() {
        if (buffer.empty()) return;
        std::stable_sort(buffer.begin(), buffer.end(), pool_record_less);
        auto chunk = temp_sibling(path, ".chunk" + std::to_string(chunk_paths.size()));
        write_chunk(chunk, buffer);
        chunk_paths.push_back(chunk);
        buffer.clear();
    };

    CandidateRecord record;
    while (reader.next(record)) {
        buffer.push_back(std::move(record));
        if (buffer.size() >= chunk_records) flush();
    }
    flush();

    auto out_path = temp_sibling(path, ".sorted");
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path.string());
        out << format_pool_header(reader.header()) << '\n';

        // K-way merge; ties prefer the earlier chunk, keeping the sort stable.
        struct Head {
            CandidateRecord record;
            std::size_t chunk;
        };
        auto greater = [](const Head& x, const Head& y) {
            if (pool_record_less(x.record, y.record)) return false;
            if (pool_record_less(y.record, x.record)) return true;
            return x.chunk > y.chunk;
        };
        std::priority_queue<Head, std::vector<Head>, decltype(greater)> heap(greater);
        std::vector<PoolReader> readers;
        readers.reserve(chunk_paths.size());
        for (std::size_t i = 0; i < chunk_paths.size(); ++i) {
            readers.emplace_back(chunk_paths[i], /*expect_header=*/false);
            CandidateRecord head;
            if (readers[i].next(head)) heap.push({std::move(head), i});
        }
        while (!heap.empty()) {
            Head top = heap.top();
            heap.pop();
            out << format_pool_record(top.record) << '\n';
            CandidateRecord next_record;
            if (readers[top.chunk].next(next_record)) heap.push({std::move(next_record), top.chunk});
        }
        if (!out) throw std::runtime_error("failed writing " + out_path.string());
    }

    for (const auto& chunk : chunk_paths) std::filesystem::remove(chunk);
    std::filesystem::rename(out_path, path);
}

MatchResult match_pools(const std::filesystem::path& a_path, const std::filesystem::path& b_path) {
    PoolReader a_reader(a_path);
    PoolReader b_reader(b_path);
    if (!(a_reader.header() == b_reader.header()))
        throw std::invalid_argument("pool headers disagree (v/gens/params must match)");

    auto next_run = [](PoolReader& reader, std::vector<CandidateRecord>& run,
                       std::optional<CandidateRecord>& pending, const char* name) {
        run.clear();
        if (!pending) return false;
        run.push_back(std::move(*pending));
        pending.reset();
        CandidateRecord record;
        while (reader.next(record)) {
            if (fingerprint_equal(record, run.front())) {
                run.push_back(std::move(record));
                continue;
            }
            if (fingerprint_less(record, run.front()))
                throw std::runtime_error(std::string(name) + " pool is not sorted");
            pending = std::move(record);
            break;
        }
        return true;
    };

    std::optional<CandidateRecord> a_pending, b_pending;
    {
        CandidateRecord record;
        if (a_reader.next(record)) a_pending = std::move(record);
        if (b_reader.next(record)) b_pending = std::move(record);
    }

    std::vector<CandidateRecord> a_run, b_run;
    bool a_ok = next_run(a_reader, a_run, a_pending, "A");
    bool b_ok = next_run(b_reader, b_run, b_pending, "B");

    MatchResult result;
    while (a_ok && b_ok) {
        if (fingerprint_less(a_run.front(), b_run.front())) {
            a_ok = next_run(a_reader, a_run, a_pending, "A");
        } else if (fingerprint_less(b_run.front(), a_run.front())) {
            b_ok = next_run(b_reader, b_run, b_pending, "B");
        } else {
            for (const auto& a_record : a_run)
                for (const auto& b_record : b_run) result.pairs.emplace_back(a_record, b_record);
            a_ok = next_run(a_reader, a_run, a_pending, "A");
            b_ok = next_run(b_reader, b_run, b_pending, "B");
        }
    }
    return result;
}

}  // namespace dopt
