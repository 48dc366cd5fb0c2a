#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsgap/families.hpp"
#include "lcsgap/graph.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"
#include "lcsgap/soundness.hpp"
#include "lcsgap/types.hpp"

// Text and JSON formats. Every writer is canonical: reading a file and writing
// it back reproduces the original bytes. Parsers throw Error(kParse).
namespace lcsgap::io {

std::string read_file(const std::string& path);                      // kIo
void write_file(const std::string& path, std::string_view contents);  // kIo

// p <n> <m_edges>
// e <u> <v>        (1-based, u < v, sorted)
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

// family <n> <m> <sigma_prime> <alpha_num>/<alpha_den> <certified 0|1>
// then n lines of m symbols
std::string format_family(const StringFamily& f);
StringFamily parse_family(std::string_view text);

// mlcs <num_strings> <sigma> <m_block_or_1>
// then one line per string
struct InstanceFile {
  int sigma = 0;
  int m = 1;
  std::vector<Sequence> strings;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};
std::string format_instance(const InstanceFile& inst);
InstanceFile parse_instance(std::string_view text);

/// Symbolic instance with vertex v written as symbol v - 1, sigma = n, m = 1.
InstanceFile to_instance_file(const SymbolicInstance& inst);
InstanceFile to_instance_file(const BlockInstance& inst);
/// Vertex symbols back to 1-based labels (inverse of the shift above).
std::vector<Sequence> to_vertex_strings(const InstanceFile& inst);

// sync <length> <sigma>
// then one line of symbols
struct SyncFile {
  int sigma = 0;
  Sequence symbols;

  friend bool operator==(const SyncFile&, const SyncFile&) = default;
};
std::string format_sync(const SyncFile& s);
SyncFile parse_sync(std::string_view text);

/// Companion metadata of a reduced instance.
struct InstanceMetadata {
  std::string kind;  // "block" or "symbolic"
  std::optional<ReductionParams> params;
  std::vector<VertexSet> block_layout;
  std::map<std::string, std::string> provenance;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};
std::string format_metadata(const InstanceMetadata& meta);
InstanceMetadata parse_metadata(std::string_view text);

std::string format_params(const ReductionParams& p);
ReductionParams parse_params(std::string_view text);

struct SolveRecord {
  MultiLcsResult result;
  double elapsed_ms = 0.0;
};
std::string format_solve(const SolveRecord& r);
SolveRecord parse_solve(std::string_view text);

std::string format_extraction(const ExtractionReport& r);
ExtractionReport parse_extraction(std::string_view text);

std::string format_sync_report(const SyncStringReport& r);

std::string format_error(const Error& e);

/// Symbols separated by single spaces, no trailing newline.
std::string join_symbols(const Sequence& s);

}  // namespace lcsgap::io
