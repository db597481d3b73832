#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "runfree/counting.hpp"
#include "runfree/oracle.hpp"
#include "runfree/structure.hpp"

namespace runfree {

enum class Engine { Formula, Oracle };

std::string engine_name(Engine e);
Engine engine_from_name(const std::string& name);

/// One full count table for a (structure, k) pair: rows[j] for j in [0, V].
/// `notes` carries caveat flags (oracle delegation, results outside a
/// recurrence's stated hypothesis).
struct CountTable {
  StructureSpec spec;
  int k = 1;
  Engine engine = Engine::Formula;
  int vertex_count = 0;
  std::vector<Count> rows;
  std::vector<std::string> notes;
};

/// Single count through either engine.  Formula dispatch: loose paths and
/// m = 1 tight paths use the path recurrences, loose cycles the cycle
/// recurrences, (r-1)-tight paths/cycles the 2-uniform reductions; m-tight
/// paths with 1 < m < r-1 are oracle-only and rejected for the formula
/// engine.
Count single_count(PathCounter& pc, const StructureSpec& spec, int k, long j,
                   Engine engine, const OracleOptions& opts = {},
                   std::vector<std::string>* notes = nullptr);

CountTable make_table(PathCounter& pc, const StructureSpec& spec, int k,
                      Engine engine, const OracleOptions& opts = {});

/// Canonical JSON: {meta:{family,r,n,k,m?,vertex_count,engine,notes},
/// rows:[{j,count}]} with counts as decimal strings.
nlohmann::ordered_json table_to_json(const CountTable& table);

/// CSV with header "j,count".
std::string table_to_csv(const CountTable& table);

}  // namespace runfree
