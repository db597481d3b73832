#include "runfree/table.hpp"

#include <stdexcept>

#include "runfree/cycles.hpp"
#include "runfree/tight.hpp"

namespace runfree {

std::string engine_name(Engine e) {
  return e == Engine::Formula ? "formula" : "oracle";
}

Engine engine_from_name(const std::string& name) {
  if (name == "formula") return Engine::Formula;
  if (name == "oracle") return Engine::Oracle;
  throw std::invalid_argument("unknown engine: " + name);
}

namespace {

void add_note(std::vector<std::string>* notes, const std::string& note) {
  if (!notes) return;
  for (const auto& existing : *notes)
    if (existing == note) return;
  notes->push_back(note);
}

Count formula_count(PathCounter& pc, const StructureSpec& spec, int k, long j,
                    const OracleOptions& opts,
                    std::vector<std::string>* notes) {
  switch (spec.family) {
    case Family::LoosePath:
      return pc.f_loose(spec.r, spec.n, k, j);
    case Family::LooseCycle: {
      bool used_oracle = false;
      Count c = c_loose(pc, spec.r, spec.n, k, j, opts, &used_oracle);
      if (used_oracle)
        add_note(notes, "oracle fallback: cycle recurrences require n > k+2");
      return c;
    }
    case Family::TightPath:
      if (k <= spec.r)
        add_note(notes, "outside the tight reduction's stated hypothesis k > r");
      return t_tight(pc, spec.r, spec.n, k, j);
    case Family::TightCycle:
      add_note(notes, "corrected tight-cycle reduction (both sides on n vertices)");
      return tc_tight(pc, spec.r, spec.n, k, j);
    case Family::MTightPath:
      if (spec.m == 1) return pc.f_loose(spec.r, spec.n, k, j);
      if (spec.m == spec.r - 1 && spec.r >= 3)
        return t_tight(pc, spec.r, spec.n, k, j);
      throw std::invalid_argument(
          "no recurrence for m-tight paths with 1 < m < r-1; use --engine oracle");
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

Count single_count(PathCounter& pc, const StructureSpec& spec, int k, long j,
                   Engine engine, const OracleOptions& opts,
                   std::vector<std::string>* notes) {
  validate(spec);
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  if (engine == Engine::Oracle) return oracle_count(spec, k, j, opts);
  return formula_count(pc, spec, k, j, opts, notes);
}

CountTable make_table(PathCounter& pc, const StructureSpec& spec, int k,
                      Engine engine, const OracleOptions& opts) {
  CountTable table;
  table.spec = spec;
  table.k = k;
  table.engine = engine;
  table.vertex_count = vertex_count(spec);
  if (engine == Engine::Oracle) {
    table.rows = oracle_table(spec, k, opts);
  } else {
    table.rows.reserve(table.vertex_count + 1);
    for (long j = 0; j <= table.vertex_count; ++j)
      table.rows.push_back(
          single_count(pc, spec, k, j, engine, opts, &table.notes));
  }
  return table;
}

nlohmann::ordered_json table_to_json(const CountTable& table) {
  nlohmann::ordered_json meta;
  meta["family"] = family_name(table.spec.family);
  meta["r"] = table.spec.r;
  meta["n"] = table.spec.n;
  meta["k"] = table.k;
  if (table.spec.family == Family::MTightPath) meta["m"] = table.spec.m;
  meta["vertex_count"] = table.vertex_count;
  meta["engine"] = engine_name(table.engine);
  if (!table.notes.empty()) meta["notes"] = table.notes;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < table.rows.size(); ++j) {
    nlohmann::ordered_json row;
    row["j"] = j;
    row["count"] = table.rows[j].get_str();
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"meta", std::move(meta)},
                                {"rows", std::move(rows)}};
}

std::string table_to_csv(const CountTable& table) {
  std::string out = "j,count\n";
  for (std::size_t j = 0; j < table.rows.size(); ++j)
    out += std::to_string(j) + "," + table.rows[j].get_str() + "\n";
  return out;
}

}  // namespace runfree
