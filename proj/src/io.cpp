#include "kempe/io.hpp"

#include <fstream>
#include <sstream>

#include "kempe/error.hpp"
#include "kempe/hash.hpp"

namespace kempe::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::vector<Vertex> vertex_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(std::string(what) + " entries must be integers");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

std::uint64_t parse_hash(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a hex string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.empty() || s.size() > 16) fail(std::string("field \"") + key + "\" is not a 64-bit hex value");
  std::uint64_t out = 0;
  for (char ch : s) {
    int d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else fail(std::string("field \"") + key + "\" is not a 64-bit hex value");
    out = out << 4 | static_cast<std::uint64_t>(d);
  }
  return out;
}

Json colors_array(const Coloring& phi) {
  Json a = Json::array();
  for (Color c : phi.colors) a.push_back(static_cast<int>(c));
  return a;
}

Coloring coloring_with(int k, const Json& arr) {
  if (k < 1 || k > 255) fail("k must be between 1 and 255");
  if (!arr.is_array()) fail("colors must be an array");
  Coloring phi{k, {}};
  phi.colors.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number_integer()) fail("colors must be integers");
    const auto c = x.get<long long>();
    if (c < 1 || c > k) fail("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    phi.colors.push_back(static_cast<Color>(c));
  }
  return phi;
}

}  // namespace

Json to_json(const GraphParams& params) {
  if (const auto* p = std::get_if<ShiftedGridParams>(&params)) {
    return Json{{"family", "shifted_grid"}, {"a", p->a}, {"b", p->b}, {"c", p->c}};
  }
  const auto& p = std::get<CirculantParams>(params);
  return Json{{"family", "circulant"}, {"n", p.n}, {"r", p.r}};
}

GraphParams params_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) fail("family must be a string");
  const auto& name = fam.get_ref<const std::string&>();
  if (name == "shifted_grid") {
    return ShiftedGridParams{static_cast<int>(integer(j, "a")), static_cast<int>(integer(j, "b")),
                             static_cast<int>(integer(j, "c"))};
  }
  if (name == "circulant") {
    return CirculantParams{static_cast<int>(integer(j, "n")), static_cast<int>(integer(j, "r"))};
  }
  fail("unknown family \"" + name + "\"");
}

Json to_json(const Coloring& phi) { return Json{{"k", phi.k}, {"colors", colors_array(phi)}}; }

Coloring coloring_from_json(const Json& j) {
  return coloring_with(static_cast<int>(integer(j, "k")), field(j, "colors"));
}

Json to_json(const Certificate& cert) {
  Json moves = Json::array();
  for (const auto& m : cert.moves) {
    moves.push_back(Json{{"anchor", m.anchor}, {"alpha", m.alpha}, {"beta", m.beta}});
  }
  return Json{{"graph", cert.graph},
              {"start_hash", to_hex(cert.start_hash)},
              {"end_hash", to_hex(cert.end_hash)},
              {"moves", std::move(moves)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& g = field(j, "graph");
  if (!g.is_string()) fail("graph must be a fingerprint string");
  cert.graph = g.get<std::string>();
  cert.start_hash = parse_hash(j, "start_hash");
  cert.end_hash = parse_hash(j, "end_hash");
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) fail("moves must be an array");
  cert.moves.reserve(moves.size());
  for (const auto& m : moves) {
    cert.moves.push_back(KempeMove{static_cast<Vertex>(integer(m, "anchor")),
                                   static_cast<int>(integer(m, "alpha")),
                                   static_cast<int>(integer(m, "beta"))});
  }
  return cert;
}

Json to_json(const Template& t) {
  Json colors = Json::array();
  for (const auto& c : t.colors) colors.push_back(c);
  return Json{{"colors", std::move(colors)}};
}

Template template_from_json(const Json& j) {
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) fail("template colors must be an array");
  Template t;
  for (const auto& c : colors) t.colors.push_back(vertex_list(c, "template color"));
  return t;
}

Json to_json(const ClassReport& report) {
  Json reps = Json::array();
  for (const auto& r : report.representatives) reps.push_back(colors_array(r));
  return Json{{"k", report.k},
              {"quotient", report.quotient},
              {"state_count", report.state_count},
              {"class_count", report.class_count()},
              {"class_sizes", report.class_sizes},
              {"representatives", std::move(reps)}};
}

ClassReport class_report_from_json(const Json& j) {
  ClassReport report;
  report.k = static_cast<int>(integer(j, "k"));
  const Json& q = field(j, "quotient");
  if (!q.is_boolean()) fail("quotient must be a boolean");
  report.quotient = q.get<bool>();
  report.state_count = integer(j, "state_count");
  const Json& sizes = field(j, "class_sizes");
  const Json& reps = field(j, "representatives");
  if (!sizes.is_array() || !reps.is_array() || sizes.size() != reps.size()) {
    fail("class_sizes and representatives must be arrays of equal length");
  }
  for (const auto& s : sizes) {
    if (!s.is_number_integer()) fail("class sizes must be integers");
    report.class_sizes.push_back(s.get<long long>());
  }
  for (const auto& r : reps) report.representatives.push_back(coloring_with(report.k, r));
  return report;
}

Json to_json(const FourColorVerdict& verdict) {
  Json j{{"colorable", verdict.colorable}};
  j["exception_case"] = verdict.exception_case ? Json(*verdict.exception_case) : Json(nullptr);
  j["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  return j;
}

Json to_json(const Pattern& pattern) {
  return Json{{"kind", std::string(to_string(pattern.kind))},
              {"center", pattern.center},
              {"witness", pattern.witness}};
}

Json to_json(const EdgeWidth& ew) {
  return Json{{"edge_width", ew.length}, {"witness", ew.witness}};
}

Json to_json(const ChainStats& stats) {
  Json j{{"kernel", std::string(kWskKernel)},
         {"steps", stats.steps},
         {"accepted", stats.accepted},
         {"rejected", stats.rejected},
         {"distinct_colorings", stats.distinct_colorings}};
  j["class_visits"] = stats.class_visits ? Json(*stats.class_visits) : Json(nullptr);
  j["initial_hash"] = to_hex(coloring_hash(stats.initial));
  j["final_coloring"] = to_json(stats.final_coloring);
  return j;
}

Json rotation_sidecar(const TorusGraph& g) {
  Json rot = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json row = Json::array();
    for (Vertex u : g.rotation(v)) row.push_back(u + 1);
    rot.push_back(std::move(row));
  }
  return Json{{"graph", to_json(g.params())},
              {"name", g.name()},
              {"fingerprint", g.fingerprint()},
              {"vertex_base", 1},
              {"rotation", std::move(rot)}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path.string());
  out << dump(j);
}

}  // namespace kempe::io
