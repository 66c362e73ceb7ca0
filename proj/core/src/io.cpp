#include "cubical/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "cubical/error.hpp"

namespace cubical {

namespace {

using Json = nlohmann::ordered_json;

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::face: return "face";
    case OpKind::degeneracy: return "deg";
    case OpKind::connection: return "conn";
  }
  return "?";
}

OpKind op_kind(const std::string& s, const std::string& where) {
  if (s == "face") return OpKind::face;
  if (s == "deg") return OpKind::degeneracy;
  if (s == "conn") return OpKind::connection;
  throw ParseError(where + ": unknown op '" + s + "'");
}

// Sorted copy of a table keyed by identifier.
Json id_table(const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::pair<std::string, std::string>> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  Json obj = Json::object();
  for (auto& [k, v] : sorted) obj[k] = v;
  return obj;
}

Json presheaf_to_json(const Presheaf& x) {
  Json actions = Json::array();
  for (const GenOp& op : x.ops()) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (CellIndex c = 0; c < x.size(op.dim); ++c) entries.emplace_back(x.id(op.dim, c), x.id(op.target_dim(), x.act(op, c)));
    Json rec = Json::object();
    rec["dim"] = op.dim;
    rec["index"] = op.index;
    rec["map"] = id_table(entries);
    rec["op"] = op_name(op.kind);
    if (op.kind == OpKind::face) rec["sign"] = op.sign;
    actions.push_back(std::move(rec));
  }
  Json cells = Json::object();
  for (int d = 0; d <= x.truncation(); ++d) cells[std::to_string(d)] = x.ids(d);
  Json out = Json::object();
  out["actions"] = std::move(actions);
  out["cells"] = std::move(cells);
  out["kind"] = std::string(to_string(x.flavor()));
  out["truncation"] = x.truncation();
  return out;
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

Presheaf presheaf_from_json(const Json& j, const std::string& where) {
  const std::string kind = as_string(field(j, "kind", where), where + ".kind");
  Flavor flavor;
  if (kind == "cubical") {
    flavor = Flavor::cubical;
  } else if (kind == "simplicial") {
    flavor = Flavor::simplicial;
  } else {
    throw ParseError(where + ".kind: expected \"cubical\" or \"simplicial\"");
  }
  const int n = as_int(field(j, "truncation", where), where + ".truncation");
  if (n < 0) throw ParseError(where + ".truncation: negative");
  const Json& cells = field(j, "cells", where);
  if (!cells.is_object()) throw ParseError(where + ".cells: expected an object");
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(n + 1));
  std::vector<std::map<std::string, CellIndex>> lookup(static_cast<std::size_t>(n + 1));
  for (auto it = cells.begin(); it != cells.end(); ++it) {
    const std::string w = where + ".cells." + it.key();
    int d = -1;
    try {
      std::size_t used = 0;
      d = std::stoi(it.key(), &used);
      if (used != it.key().size()) d = -1;
    } catch (const std::exception&) {
      d = -1;
    }
    if (d < 0 || d > n) throw ParseError(w + ": dimension outside 0.." + std::to_string(n));
    if (!it.value().is_array()) throw ParseError(w + ": expected a list of identifiers");
    for (const Json& v : it.value()) {
      const std::string id = as_string(v, w);
      auto& lk = lookup[static_cast<std::size_t>(d)];
      if (lk.count(id)) throw ParseError(w + ": duplicate identifier '" + id + "'");
      lk[id] = static_cast<CellIndex>(ids[static_cast<std::size_t>(d)].size());
      ids[static_cast<std::size_t>(d)].push_back(id);
    }
  }
  const Json& actions = field(j, "actions", where);
  if (!actions.is_array()) throw ParseError(where + ".actions: expected a list");
  std::map<GenOp, std::vector<CellIndex>> tables;
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const std::string w = where + ".actions[" + std::to_string(a) + "]";
    const Json& rec = actions[a];
    GenOp op{op_kind(as_string(field(rec, "op", w), w + ".op"), w), as_int(field(rec, "dim", w), w + ".dim"),
             as_int(field(rec, "index", w), w + ".index"), 0};
    if (op.kind == OpKind::face) {
      op.sign = as_int(field(rec, "sign", w), w + ".sign");
      if (flavor == Flavor::simplicial && op.sign != 0) throw ParseError(w + ".sign: simplicial faces carry sign 0");
    } else if (rec.contains("sign")) {
      throw ParseError(w + ": 'sign' is only allowed on faces");
    }
    const auto& all = site_ops(flavor, n);
    if (std::find(all.begin(), all.end(), op) == all.end()) throw ParseError(w + ": not an action of this site and truncation");
    if (tables.count(op)) throw ParseError(w + ": duplicate action " + render(op, flavor));
    const Json& map = field(rec, "map", w);
    if (!map.is_object()) throw ParseError(w + ".map: expected an object");
    const auto& src_ids = ids[static_cast<std::size_t>(op.dim)];
    const auto& dst = lookup[static_cast<std::size_t>(op.target_dim())];
    std::vector<CellIndex> table;
    for (const std::string& id : src_ids) {
      const auto it = map.find(id);
      if (it == map.end()) throw ParseError(w + ".map: no entry for cell '" + id + "'");
      const std::string target = as_string(*it, w + ".map." + id);
      const auto t = dst.find(target);
      if (t == dst.end()) throw ParseError(w + ".map." + id + ": unknown cell '" + target + "'");
      table.push_back(t->second);
    }
    if (map.size() != src_ids.size()) throw ParseError(w + ".map: entries for unknown cells");
    tables[op] = std::move(table);
  }
  std::vector<std::vector<CellIndex>> ordered;
  for (const GenOp& op : site_ops(flavor, n)) {
    const auto it = tables.find(op);
    if (it == tables.end()) throw ParseError(where + ".actions: missing action " + render(op, flavor));
    ordered.push_back(std::move(it->second));
  }
  Presheaf x(flavor, n, std::move(ids), std::move(ordered));
  const auto violations = validate(x);
  if (!violations.empty()) throw ValidationError(where + ": " + violations.front().describe());
  return x;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_presheaf(const Presheaf& x) { return dump(presheaf_to_json(x)); }

Presheaf parse_presheaf(std::string_view text) { return presheaf_from_json(parse_document(text), "presheaf"); }

std::string serialize_map(const PresheafMap& f) {
  Json comps = Json::object();
  for (int d = 0; d <= f.source().truncation(); ++d) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (CellIndex c = 0; c < f.source().size(d); ++c) entries.emplace_back(f.source().id(d, c), f.target().id(d, f(d, c)));
    comps[std::to_string(d)] = id_table(entries);
  }
  Json out = Json::object();
  out["components"] = std::move(comps);
  out["source"] = presheaf_to_json(f.source());
  out["target"] = presheaf_to_json(f.target());
  return dump(out);
}

PresheafMap parse_map(std::string_view text) {
  const Json j = parse_document(text);
  auto src = share(presheaf_from_json(field(j, "source", "map"), "map.source"));
  auto dst = share(presheaf_from_json(field(j, "target", "map"), "map.target"));
  const Json& comps = field(j, "components", "map");
  std::vector<std::vector<CellIndex>> out;
  for (int d = 0; d <= src->truncation(); ++d) {
    const std::string w = "map.components." + std::to_string(d);
    const Json& table = field(comps, std::to_string(d).c_str(), "map.components");
    out.emplace_back();
    for (const std::string& id : src->ids(d)) {
      const auto it = table.find(id);
      if (it == table.end()) throw ParseError(w + ": no entry for cell '" + id + "'");
      const auto t = dst->find(d, as_string(*it, w + "." + id));
      if (!t) throw ParseError(w + "." + id + ": unknown target cell");
      out.back().push_back(*t);
    }
  }
  return PresheafMap(src, dst, std::move(out));
}

}  // namespace cubical
