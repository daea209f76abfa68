#pragma once

// Batch census pipeline: ingest graph6 files, group graphs by the canonical
// certificate of their canonical double cover, emit the groups with at least
// two non-isomorphic members (TF-cousin groups), verify the odd-circuit
// conjecture on each group, and persist everything as a newline-delimited
// catalog.
//
// Determinism contract: the same input produces byte-identical catalogs for
// any worker count.  Per-graph certificate computation is a stateless map
// into an index-addressed buffer; grouping happens in one ordered merge.

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tfcover/canonical.hpp"
#include "tfcover/common.hpp"
#include "tfcover/cover.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/graph6.hpp"

namespace tfcover {

// ---------------------------------------------------------------------------
// Ingestion: stream graphs out of a graph6 file, tracking line numbers.

struct IngestRecord {
  Graph graph;
  long long line = 0;  // 1-based line number in the source file
};

class GraphStream {
 public:
  explicit GraphStream(std::string path, bool strict = true)
      : path_(std::move(path)), strict_(strict), in_(path_) {
    if (!in_) throw parse_error("ingest: cannot open file: " + path_);
  }

  // Next parseable record, or nullopt at end of file.  Blank lines are
  // skipped; an optional ">>graph6<<" header on the first line is stripped.
  // In strict mode a malformed line throws parse_error naming the line; in
  // lenient mode it is skipped and a warning is recorded.
  std::optional<IngestRecord> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (line_ == 1 && raw.rfind(">>graph6<<", 0) == 0) raw = raw.substr(10);
      if (raw.empty()) continue;
      try {
        return IngestRecord{from_graph6(raw), line_};
      } catch (const parse_error& e) {
        std::string msg = "line " + std::to_string(line_) + " of " + path_ +
                          ": " + e.what();
        if (strict_) throw parse_error("ingest: parse error at " + msg);
        warnings_.push_back(msg);
      }
    }
    return std::nullopt;
  }

  // Drain the stream into a vector of graphs.
  std::vector<Graph> all() {
    std::vector<Graph> out;
    while (auto rec = next()) out.push_back(std::move(rec->graph));
    return out;
  }

  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  bool strict_;
  long long line_ = 0;
  std::ifstream in_;
  std::vector<std::string> warnings_;
};

inline GraphStream ingest(const std::string& path, bool strict = true) {
  return GraphStream(path, strict);
}

// ---------------------------------------------------------------------------
// Cousin groups.

struct CousinRecord {
  int n = 0;                         // vertex count shared by all members
  std::string cdc_certificate;       // canonical certificate of the common CDC
  std::vector<std::string> members;  // canonical graph6, sorted, >= 2 entries
  long long pair_count = 0;          // C(|members|, 2)

  bool operator==(const CousinRecord&) const = default;
};

struct CensusOptions {
  bool connected_only = true;  // drop disconnected graphs before grouping
  int workers = 0;             // 0 = use hardware concurrency
};

namespace census_detail {

struct CertPair {
  std::string own;
  std::string cover;
};

// Stateless parallel map: graph index -> (own certificate, CDC certificate).
// Results are index-addressed, so the outcome is independent of scheduling.
inline std::vector<CertPair> certificate_map(const std::vector<Graph>& graphs,
                                             int workers) {
  std::vector<CertPair> out(graphs.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < graphs.size(); i += stride)
      out[i] = CertPair{certificate(graphs[i]), certificate(cdc(graphs[i]).graph)};
  };
  int w = workers;
  if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  w = static_cast<int>(std::min<std::size_t>(w, std::max<std::size_t>(graphs.size(), 1)));
  if (w == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      try {
        work(static_cast<std::size_t>(t), static_cast<std::size_t>(w));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace census_detail

// Group the input graphs (all on the same vertex count) by the certificate of
// their canonical double cover, after deduplicating isomorphic inputs.
// Groups with at least two non-isomorphic members are returned, sorted by
// CDC certificate; members are canonical graph6, sorted lexicographically.
inline std::vector<CousinRecord> census_cousins(const std::vector<Graph>& graphs,
                                                const CensusOptions& options = {}) {
  std::vector<Graph> pool;
  pool.reserve(graphs.size());
  int n = -1;
  for (const Graph& g : graphs) {
    if (n < 0) n = g.vertex_count();
    if (g.vertex_count() != n)
      throw std::invalid_argument(
          "census_cousins: mixed vertex counts (" + std::to_string(n) + " and " +
          std::to_string(g.vertex_count()) + ")");
    if (options.connected_only && !is_connected(g)) continue;
    pool.push_back(g);
  }
  auto certs = census_detail::certificate_map(pool, options.workers);

  // Ordered merge: dedup isomorphic graphs by own certificate, then group the
  // survivors by cover certificate.  std::map keeps everything sorted, which
  // pins the output order independently of input order and worker count.
  std::map<std::string, std::string> own_to_cover;
  for (const auto& c : certs) own_to_cover.emplace(c.own, c.cover);
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [own, cover] : own_to_cover) groups[cover].push_back(own);

  std::vector<CousinRecord> records;
  for (auto& [cover, members] : groups) {
    if (members.size() < 2) continue;
    CousinRecord r;
    r.n = n;
    r.cdc_certificate = cover;
    r.members = std::move(members);  // already sorted: keyed by own certificate
    const long long m = static_cast<long long>(r.members.size());
    r.pair_count = m * (m - 1) / 2;
    records.push_back(std::move(r));
  }
  return records;
}

inline std::vector<CousinRecord> census_cousins(GraphStream& stream,
                                                const CensusOptions& options = {}) {
  auto graphs = stream.all();
  return census_cousins(graphs, options);
}

// ---------------------------------------------------------------------------
// Odd-circuit conjecture.

struct ConjectureVerdict {
  std::optional<int> witness_k;  // smallest odd k that works, when one exists
  bool holds = false;            // holds <=> witness_k.has_value()

  bool operator==(const ConjectureVerdict&) const = default;
};

// Search odd k = 3, 5, ..., n for the smallest k such that every member
// contains a k-cycle or a 2k-cycle, and the members' common double cover
// contains a 2k-cycle.  Cycle containment means subgraph cycles.
//
// The circuits may be distributed across the pair: in the seed pair
// (C3 u C3, C6) one member carries the odd circuit C3 and the other carries
// C6, with C6 inside the common cover.  Requiring the odd circuit in every
// member would wrongly fail that pair (and the bridged seven-vertex pair,
// whose members have cycle spectra {3} and {5, 6}).
inline ConjectureVerdict verify_conjecture(const CousinRecord& r) {
  require(!r.members.empty(), "verify_conjecture: record has no members");
  std::vector<Graph> members;
  members.reserve(r.members.size());
  for (const auto& s : r.members) members.push_back(from_graph6(s));
  Graph cover = cdc(members.front()).graph;
  for (int k = 3; k <= r.n; k += 2) {
    bool all = true;
    for (const Graph& g : members)
      if (!contains_cycle(g, k) && !contains_cycle(g, 2 * k)) {
        all = false;
        break;
      }
    if (all && contains_cycle(cover, 2 * k)) return ConjectureVerdict{k, true};
  }
  return ConjectureVerdict{std::nullopt, false};
}

// ---------------------------------------------------------------------------
// Catalog persistence: one JSON object per line.

struct CatalogEntry {
  CousinRecord record;
  ConjectureVerdict verdict;

  bool operator==(const CatalogEntry&) const = default;
};

namespace census_detail {

inline std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

inline std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw parse_error("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw parse_error(std::string("invalid hex digit '") + c + "'");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

}  // namespace census_detail

// Serialize entries as newline-delimited JSON.  Key order and formatting are
// fixed so that equal entries always produce identical bytes.
inline std::string catalog_lines(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["n"] = e.record.n;
    j["cdc_certificate"] = census_detail::to_hex(e.record.cdc_certificate);
    j["members"] = e.record.members;
    j["pair_count"] = e.record.pair_count;
    nlohmann::ordered_json v;
    v["holds"] = e.verdict.holds;
    if (e.verdict.witness_k)
      v["witness_k"] = *e.verdict.witness_k;
    else
      v["witness_k"] = nullptr;
    v["containment"] = "subgraph";  // cycle containment = subgraph cycles
    j["conjecture"] = v;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline void write_catalog(const std::vector<CatalogEntry>& entries,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "write_catalog: cannot open file: " + path);
  out << catalog_lines(entries);
  require(static_cast<bool>(out), "write_catalog: write failed: " + path);
}

inline std::vector<CatalogEntry> read_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("read_catalog: cannot open file: " + path);
  std::vector<CatalogEntry> entries;
  std::string raw;
  long long line = 0;
  auto fail = [&](const std::string& what) -> parse_error {
    return parse_error("read_catalog: line " + std::to_string(line) + " of " +
                       path + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::exception& e) {
      throw fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw fail("expected a JSON object");
    for (const char* field : {"n", "cdc_certificate", "members", "pair_count", "conjecture"})
      if (!j.contains(field)) throw fail(std::string("missing field '") + field + "'");

    CatalogEntry e;
    if (!j["n"].is_number_integer()) throw fail("field 'n' must be an integer");
    e.record.n = j["n"].get<int>();
    if (!j["cdc_certificate"].is_string())
      throw fail("field 'cdc_certificate' must be a string");
    try {
      e.record.cdc_certificate =
          census_detail::from_hex(j["cdc_certificate"].get<std::string>());
    } catch (const parse_error& err) {
      throw fail(std::string("field 'cdc_certificate': ") + err.what());
    }
    if (!j["members"].is_array()) throw fail("field 'members' must be an array");
    for (const auto& m : j["members"]) {
      if (!m.is_string()) throw fail("field 'members' must contain strings");
      e.record.members.push_back(m.get<std::string>());
    }
    if (e.record.members.size() < 2) throw fail("field 'members' needs at least 2 entries");
    if (!std::is_sorted(e.record.members.begin(), e.record.members.end()))
      throw fail("field 'members' must be sorted");
    if (!j["pair_count"].is_number_integer())
      throw fail("field 'pair_count' must be an integer");
    e.record.pair_count = j["pair_count"].get<long long>();
    const long long m = static_cast<long long>(e.record.members.size());
    if (e.record.pair_count != m * (m - 1) / 2)
      throw fail("field 'pair_count' does not match the member count");

    const auto& v = j["conjecture"];
    if (!v.is_object()) throw fail("field 'conjecture' must be an object");
    for (const char* field : {"holds", "witness_k", "containment"})
      if (!v.contains(field)) throw fail(std::string("conjecture is missing field '") + field + "'");
    if (!v["holds"].is_boolean()) throw fail("conjecture field 'holds' must be a boolean");
    e.verdict.holds = v["holds"].get<bool>();
    if (v["witness_k"].is_null()) {
      e.verdict.witness_k = std::nullopt;
    } else if (v["witness_k"].is_number_integer()) {
      e.verdict.witness_k = v["witness_k"].get<int>();
    } else {
      throw fail("conjecture field 'witness_k' must be an integer or null");
    }
    if (e.verdict.holds != e.verdict.witness_k.has_value())
      throw fail("conjecture fields 'holds' and 'witness_k' disagree");
    if (!v["containment"].is_string() || v["containment"].get<std::string>() != "subgraph")
      throw fail("conjecture field 'containment' must be \"subgraph\"");
    entries.push_back(std::move(e));
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Text summary.

// Deterministic summary: one row per vertex count (group count, total pairs,
// largest group, conjecture status), then a grand-total "pairs: N" line.
inline std::string report(const std::vector<CatalogEntry>& entries) {
  struct Row {
    long long groups = 0;
    long long pairs = 0;
    std::size_t largest = 0;
    long long failing = 0;
  };
  std::map<int, Row> rows;
  long long total = 0;
  for (const auto& e : entries) {
    Row& row = rows[e.record.n];
    row.groups += 1;
    row.pairs += e.record.pair_count;
    row.largest = std::max(row.largest, e.record.members.size());
    if (!e.verdict.holds) row.failing += 1;
    total += e.record.pair_count;
  }
  std::ostringstream out;
  for (const auto& [n, row] : rows) {
    out << "n=" << n << " groups=" << row.groups << " pairs=" << row.pairs
        << " largest=" << row.largest << " conjecture=";
    if (row.failing == 0)
      out << "holds";
    else
      out << "fails=" << row.failing;
    out << '\n';
  }
  out << "pairs: " << total << '\n';
  return out.str();
}

}  // namespace tfcover
