#include "permqubo/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permqubo {

namespace {

long long bit_code(const Bit& b) {
  switch (b.kind) {
    case Bit::Kind::Const:
      return b.value ? -2 : -1;
    case Bit::Kind::Var:
      return static_cast<long long>(b.var);
    case Bit::Kind::NegVar:
      throw std::invalid_argument("negated bits cannot appear in decode maps");
  }
  return -1;
}

json bus_to_json(const Bus& b) {
  json a = json::array();
  for (const Bit& bit : b.bits) a.push_back(bit_code(bit));
  return a;
}

json constraint_to_json(const ConstraintSpec& c) {
  json j;
  j["kind"] = c.kind;
  if (c.kind == "value" || c.kind == "forbid") {
    j["i"] = c.i;
    j["j"] = c.j;
  } else if (c.kind == "power" || c.kind == "order") {
    j["r"] = c.r;
  } else if (c.kind == "forbid_perm") {
    j["tau"] = c.tau;
  } else if (c.kind == "parity") {
    j["parity"] = c.parity == ParityKind::Even ? "even" : "odd";
  }
  return j;
}

ConstraintSpec constraint_from_json(const json& j) {
  ConstraintSpec c;
  c.kind = j.at("kind").get<std::string>();
  if (c.kind == "value" || c.kind == "forbid") {
    c.i = j.at("i").get<int>();
    c.j = j.at("j").get<int>();
  } else if (c.kind == "power" || c.kind == "order") {
    c.r = j.at("r").get<int>();
  } else if (c.kind == "forbid_perm") {
    c.tau = j.at("tau").get<Permutation>();
  } else if (c.kind == "parity") {
    c.parity = j.at("parity").get<std::string>() == "odd" ? ParityKind::Odd
                                                          : ParityKind::Even;
  }
  return c;
}

}  // namespace

json meta_to_json(const EncodingMeta& m) {
  json j;
  j["construction"] = m.construction;
  j["n"] = m.n;
  j["k"] = m.k;
  j["topology"] = topology_name(m.topo);
  if (!m.constraints.empty()) {
    json cs = json::array();
    for (const auto& c : m.constraints) cs.push_back(constraint_to_json(c));
    j["constraints"] = cs;
  }
  if (!m.pattern.empty()) j["pattern"] = m.pattern;
  if (!m.fixed_other.empty()) j["fixed_other"] = m.fixed_other;
  return j;
}

EncodingMeta meta_from_json(const json& j) {
  EncodingMeta m;
  m.construction = j.at("construction").get<std::string>();
  m.n = j.at("n").get<int>();
  m.k = j.value("k", 0);
  m.topo = topology_from_name(j.value("topology", "batcher"));
  if (j.contains("constraints")) {
    for (const auto& c : j["constraints"]) {
      m.constraints.push_back(constraint_from_json(c));
    }
  }
  if (j.contains("pattern")) m.pattern = j["pattern"].get<Permutation>();
  if (j.contains("fixed_other")) {
    m.fixed_other = j["fixed_other"].get<Permutation>();
  }
  return m;
}

json instance_to_json(const Encoding& e) {
  json j;
  j["schema_version"] = 1;
  j["meta"] = meta_to_json(e.meta);
  if (!e.topology.gates.empty()) {
    json gates = json::array();
    for (const auto& [a, b] : e.topology.gates) {
      gates.push_back(json::array({a, b}));
    }
    j["gates"] = gates;
  }

  json vars = json::array();
  for (VarId v = 0; v < e.reg->size(); ++v) {
    json jv;
    jv["id"] = v;
    jv["name"] = e.reg->name(v);
    jv["role"] = role_name(e.reg->role(v));
    vars.push_back(jv);
  }
  j["variables"] = vars;

  j["offset"] = e.poly.offset();
  json lin = json::array();
  for (const auto& [v, c] : e.poly.linear()) {
    lin.push_back(json::array({v, c}));
  }
  j["linear"] = lin;
  json quad = json::array();
  for (const auto& [vv, c] : e.poly.quadratic()) {
    quad.push_back(json::array({vv.first, vv.second, c}));
  }
  j["quadratic"] = quad;

  json groups = json::array();
  for (const auto& g : e.groups) {
    json jg;
    jg["name"] = g.name;
    json buses = json::array();
    for (const Bus& b : g.buses) buses.push_back(bus_to_json(b));
    jg["buses"] = buses;
    groups.push_back(jg);
  }
  json dec;
  dec["groups"] = groups;
  if (!e.selection.empty()) dec["selection"] = e.selection;
  j["decode"] = dec;
  j["uniform"] = e.uniform;
  return j;
}

QuadPoly poly_from_json(const json& j) {
  QuadPoly p;
  p.add_const(j.at("offset").get<long long>());
  for (const auto& t : j.at("linear")) {
    p.add_linear(t.at(0).get<VarId>(), t.at(1).get<long long>());
  }
  for (const auto& t : j.at("quadratic")) {
    p.add_quadratic(t.at(0).get<VarId>(), t.at(1).get<VarId>(),
                    t.at(2).get<long long>());
  }
  return p;
}

Encoding encoding_from_instance(const json& j) {
  Encoding e = build_encoding(meta_from_json(j.at("meta")));
  if (instance_to_json(e) != j) {
    throw std::runtime_error(
        "instance content does not match its metadata rebuild");
  }
  return e;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string to_qubo_text(const QuadPoly& p) {
  std::ostringstream out;
  out << "c offset " << p.offset() << "\n";
  const long long max_nodes =
      p.linear().empty() && p.quadratic().empty()
          ? 0
          : static_cast<long long>(p.max_var()) + 1;
  out << "p qubo 0 " << max_nodes << " " << p.linear().size() << " "
      << p.quadratic().size() << "\n";
  for (const auto& [v, c] : p.linear()) {
    out << v << " " << v << " " << c << "\n";
  }
  for (const auto& [vv, c] : p.quadratic()) {
    out << vv.first << " " << vv.second << " " << c << "\n";
  }
  return out.str();
}

QuadPoly parse_qubo_text(const std::string& text) {
  QuadPoly p;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'c') {
      std::string c, word;
      ls >> c >> word;
      if (word == "offset") {
        long long off;
        ls >> off;
        p.add_const(off);
      }
      continue;
    }
    if (line[0] == 'p') {
      header = true;
      continue;
    }
    long long i, j, c;
    if (!(ls >> i >> j >> c)) {
      throw std::runtime_error("malformed qubo line: " + line);
    }
    if (i == j) {
      p.add_linear(static_cast<VarId>(i), c);
    } else {
      p.add_quadratic(static_cast<VarId>(i), static_cast<VarId>(j), c);
    }
  }
  if (!header) throw std::runtime_error("missing qubo problem line");
  return p;
}

IsingModel to_ising(const QuadPoly& p) {
  IsingModel m;
  m.offset4 = 4 * p.offset();
  for (const auto& [v, c] : p.linear()) {
    m.offset4 += 2 * c;
    m.h4[v] += 2 * c;
  }
  for (const auto& [vv, c] : p.quadratic()) {
    m.offset4 += c;
    m.h4[vv.first] += c;
    m.h4[vv.second] += c;
    m.j4[vv] += c;
  }
  std::erase_if(m.h4, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(m.j4, [](const auto& kv) { return kv.second == 0; });
  return m;
}

namespace {

std::string quarter(long long v4) {
  if (v4 % 4 == 0) return std::to_string(v4 / 4);
  if (v4 % 2 == 0) return std::to_string(v4 / 2) + "/2";
  return std::to_string(v4) + "/4";
}

}  // namespace

std::string ising_to_text(const IsingModel& m) {
  std::ostringstream out;
  out << "offset " << quarter(m.offset4) << "\n";
  for (const auto& [v, c] : m.h4) {
    out << "h " << v << " " << quarter(c) << "\n";
  }
  for (const auto& [vv, c] : m.j4) {
    out << "J " << vv.first << " " << vv.second << " " << quarter(c) << "\n";
  }
  return out.str();
}

json report_to_json(const VerifyReport& r) {
  json j;
  j["pass"] = r.pass;
  j["mode"] = r.mode;
  j["zero_count"] = r.zero_count;
  j["solutions"] = r.solutions;
  j["completions"] = r.completions;
  j["negatives_checked"] = r.negatives_checked;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json stats_to_json(const SampleStats& s) {
  json j;
  j["total"] = s.total;
  j["ground_hits"] = s.ground_hits;
  j["best_energy"] = s.best_energy;
  j["invalid"] = s.invalid;
  j["distinct_solutions"] = s.counts.size();
  j["counts"] = s.counts;
  j["chi_square"] = s.chi_square;
  return j;
}

}  // namespace permqubo
