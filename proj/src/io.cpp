#include <gcoh/io.hpp>

#include <gcoh/errors.hpp>

#include <fstream>
#include <sstream>

namespace gcoh::io {

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + origin + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json parse_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_json_text(text);
  std::ifstream in(text);
  if (!in) throw ValidationError("cannot read input file '" + text + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), "'" + text + "'");
}

BigInt read_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<unsigned long>()) : BigInt(j.get<long>());
  if (j.is_string()) {
    try {
      return scalar::parse_bigint(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError(what + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  throw ValidationError(what + ": expected an integer, got " + j.dump());
}

long read_small(const Json& j, const std::string& what, long lo, long hi) {
  const BigInt v = read_integer(j, what);
  if (v < lo || v > hi)
    throw ValidationError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                          v.get_str());
  return v.get_si();
}

IntMatrix read_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw ValidationError(what + ": row 0 is not an array");
    cols = static_cast<Index>(j[0].size());
  }
  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ValidationError(what + ": row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = read_integer(row[static_cast<std::size_t>(c)],
                             what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

FgAbGroup parse_group(const std::string& text) {
  const std::string t = trim(text);
  if (t == "0") return FgAbGroup::trivial();
  Index free = 0;
  std::vector<BigInt> orders;
  std::stringstream ss(t);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    try {
      if (term == "Z") {
        ++free;
      } else if (term.rfind("Z^", 0) == 0) {
        const BigInt r = scalar::parse_bigint(term.substr(2));
        if (r < 0 || r > 1000) throw std::invalid_argument("rank");
        free += r.get_si();
      } else if (term.rfind("Z/", 0) == 0) {
        const BigInt d = scalar::parse_bigint(term.substr(2));
        if (d < 1) throw std::invalid_argument("order");
        orders.push_back(d);
      } else {
        throw std::invalid_argument("term");
      }
    } catch (const std::invalid_argument&) {
      throw ValidationError("cannot read group '" + text + "': bad term '" + term + "'");
    }
  }
  return FgAbGroup::from_factors(free, orders);
}

FgAbGroup read_group(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  if (!j.is_object()) throw ValidationError(what + ": expected a group string or {\"free\", \"torsion\"}");
  const long free = j.contains("free") ? read_small(j["free"], what + ".free", 0, 1000) : 0;
  std::vector<BigInt> orders;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) throw ValidationError(what + ".torsion: expected an array");
    for (const auto& d : j["torsion"]) {
      BigInt v = read_integer(d, what + ".torsion");
      if (v < 1) throw ValidationError(what + ".torsion: orders must be positive");
      orders.push_back(v);
    }
  }
  return FgAbGroup::from_factors(free, orders);
}

FiniteSystem read_system(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("sigma"))
    throw ValidationError("system: expected {\"points\": [...], \"sigma\": {...}}");
  if (!j["points"].is_array() || !j["sigma"].is_object())
    throw ValidationError("system: points must be an array and sigma an object");
  std::vector<std::string> points;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw ValidationError("system: point labels must be strings");
    points.push_back(p.get<std::string>());
  }
  std::map<std::string, std::string> sigma;
  for (const auto& [k, v] : j["sigma"].items()) {
    if (!v.is_string()) throw ValidationError("system: sigma(" + k + ") must be a point label");
    sigma[k] = v.get<std::string>();
  }
  return FiniteSystem::from_labels(points, sigma);
}

SimplicialComplex read_complex(const Json& j) {
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    throw ValidationError("complex: expected {\"vertices\": [...], \"simplices\": [[...], ...]}");
  std::vector<std::vector<std::string>> simplices;
  std::vector<std::string> vertices;
  auto label = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ValidationError("complex: vertex labels must be strings or integers");
  };
  for (const auto& s : j["simplices"]) {
    if (!s.is_array()) throw ValidationError("complex: every simplex must be an array of vertices");
    std::vector<std::string> simplex;
    for (const auto& v : s) simplex.push_back(label(v));
    simplices.push_back(simplex);
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ValidationError("complex: vertices must be an array");
    for (const auto& v : j["vertices"]) vertices.push_back(label(v));
  } else {
    for (const auto& s : simplices)
      for (const auto& v : s)
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  }
  return SimplicialComplex(vertices, simplices);
}

Tower read_tower(const Json& j) {
  if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array())
    throw ValidationError("tower: expected {\"stages\": [...], \"maps\": [...], \"tail\": ...}");
  std::vector<FgAbGroup> stages;
  for (std::size_t k = 0; k < j["stages"].size(); ++k)
    stages.push_back(read_group(j["stages"][k], "tower.stages[" + std::to_string(k) + "]"));
  std::vector<AbHom> maps;
  const Json maps_json = j.value("maps", Json::array());
  if (!maps_json.is_array()) throw ValidationError("tower: maps must be an array");
  if (maps_json.size() + 1 != stages.size())
    throw ValidationError("tower: " + std::to_string(stages.size()) + " stages need " +
                          std::to_string(stages.empty() ? 0 : stages.size() - 1) + " maps, got " +
                          std::to_string(maps_json.size()));
  for (std::size_t k = 0; k < maps_json.size(); ++k)
    maps.emplace_back(stages[k + 1], stages[k], read_matrix(maps_json[k], "tower.maps[" + std::to_string(k) + "]"));
  TailPolicy tail = TailPolicy::Stabilized;
  if (j.contains("tail")) {
    const std::string t = j["tail"].is_string() ? j["tail"].get<std::string>() : "";
    if (t == "stabilized")
      tail = TailPolicy::Stabilized;
    else if (t == "truncated")
      tail = TailPolicy::Truncated;
    else
      throw ValidationError("tower: tail must be \"stabilized\" or \"truncated\"");
  }
  return Tower(stages, maps, tail);
}

FiniteGroup read_finite_group(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "klein" || name == "Z/2+Z/2") return FiniteGroup::klein();
    if (name == "S3") return FiniteGroup::symmetric3();
    if (name.rfind("Z/", 0) == 0) {
      const long n = read_small(Json(name.substr(2)), "group order", 1, 64);
      return FiniteGroup::cyclic(static_cast<int>(n));
    }
    throw ValidationError("group: unknown name '" + name + "' (use Z/n, klein, S3 or a table)");
  }
  if (j.is_object() && j.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(static_cast<int>(read_small(v, "group table entry", 0, 1 << 20)));
      table.push_back(r);
    }
    return FiniteGroup(j.value("name", std::string("G")), table);
  }
  throw ValidationError("group: expected a name or {\"table\": [[...]]}");
}

Json write_integer(const BigInt& a) { return a.get_str(); }

Json write_group(const FgAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(d.get_str());
  return {{"free", g.free_rank()}, {"torsion", torsion}};
}

Json write_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

Json write_vector(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).get_str());
  return out;
}

Json write_report(const VerificationReport& r) {
  Json laws = Json::array();
  for (const auto& l : r.laws)
    laws.push_back({{"law", l.name},
                    {"passed", l.passed},
                    {"checked", l.checked},
                    {"counterexample", l.counterexample ? Json(*l.counterexample) : Json(nullptr)}});
  return laws;
}

}  // namespace gcoh::io
