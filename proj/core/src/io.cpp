#include "treealpha/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace treealpha {

namespace {

using nlohmann::json;

json object_to_j(const GeometricObject& o) {
  json j;
  if (const Disk* d = std::get_if<Disk>(&o.shape)) {
    j["type"] = "disk";
    j["center"] = d->center;
    j["radius"] = d->radius;
  } else if (const Box* b = std::get_if<Box>(&o.shape)) {
    j["type"] = "box";
    j["lo"] = b->lo;
    j["hi"] = b->hi;
  } else if (const GridPath* p = std::get_if<GridPath>(&o.shape)) {
    j["type"] = "path";
    json pts = json::array();
    for (const auto& q : p->pts) pts.push_back({q[0], q[1]});
    j["pts"] = std::move(pts);
  } else {
    const UnionObject& u = std::get<UnionObject>(o.shape);
    j["type"] = "union";
    json ms = json::array();
    for (const auto& m : u.members) ms.push_back(object_to_j(m));
    j["members"] = std::move(ms);
  }
  return j;
}

GeometricObject object_from_j(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "disk") {
    Disk d;
    d.center = j.at("center").get<Point>();
    d.radius = j.at("radius").get<double>();
    return GeometricObject{std::move(d)};
  }
  if (type == "box") {
    Box b;
    b.lo = j.at("lo").get<Point>();
    b.hi = j.at("hi").get<Point>();
    return GeometricObject{std::move(b)};
  }
  if (type == "path") {
    GridPath p;
    for (const auto& q : j.at("pts"))
      p.pts.push_back({q.at(0).get<long long>(), q.at(1).get<long long>()});
    return GeometricObject{std::move(p)};
  }
  if (type == "union") {
    UnionObject u;
    for (const auto& m : j.at("members")) u.members.push_back(object_from_j(m));
    return GeometricObject{std::move(u)};
  }
  throw std::invalid_argument("unknown object type: " + type);
}

json weight_to_j(const Weight& w) { return to_string(w); }

Weight weight_from_j(const json& j) { return parse_weight(j.get<std::string>()); }

json td_to_j(const TreeDecomposition& td) {
  json j;
  j["bags"] = td.bags;
  json es = json::array();
  for (auto [a, b] : td.tree_edges) es.push_back({a, b});
  j["edges"] = std::move(es);
  return j;
}

TreeDecomposition td_from_j(const json& j) {
  TreeDecomposition td;
  td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
  for (const auto& e : j.at("edges"))
    td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return td;
}

json layering_to_j(const Layering& l) {
  json j;
  j["layers"] = l.layers;
  return j;
}

Layering layering_from_j(const json& j) {
  Layering l;
  l.layers = j.at("layers").get<std::vector<std::vector<int>>>();
  return l;
}

json solution_to_j(const DpSolution& s) {
  json j;
  j["chosen"] = s.chosen;
  j["peak_states"] = s.peak_states;
  j["weight"] = weight_to_j(s.weight);
  return j;
}

DpSolution solution_from_j(const json& j) {
  DpSolution s;
  s.chosen = j.at("chosen").get<std::vector<int>>();
  s.peak_states = j.at("peak_states").get<std::size_t>();
  s.weight = weight_from_j(j.at("weight"));
  return s;
}

}  // namespace

std::string instance_to_json(const ObjectCollection& c) {
  json j;
  j["dimension"] = c.dimension;
  j["kind"] = kind_name(c.kind);
  json params = json::object();
  if (c.params.radius) params["radius"] = *c.params.radius;
  if (c.params.width) params["width"] = *c.params.width;
  if (c.params.size_ratio) params["size_ratio"] = *c.params.size_ratio;
  if (c.params.fatness) params["fatness"] = *c.params.fatness;
  if (c.params.horiz_bound) params["horiz_bound"] = *c.params.horiz_bound;
  j["params"] = std::move(params);
  json objs = json::array();
  for (const auto& o : c.objects) objs.push_back(object_to_j(o));
  j["objects"] = std::move(objs);
  return j.dump();
}

ObjectCollection instance_from_json(const std::string& text) {
  const json j = json::parse(text);
  ObjectCollection c;
  c.dimension = j.at("dimension").get<int>();
  c.kind = kind_from_name(j.at("kind").get<std::string>());
  const json& params = j.at("params");
  if (params.contains("radius")) c.params.radius = params.at("radius").get<double>();
  if (params.contains("width")) c.params.width = params.at("width").get<double>();
  if (params.contains("size_ratio"))
    c.params.size_ratio = params.at("size_ratio").get<double>();
  if (params.contains("fatness")) c.params.fatness = params.at("fatness").get<double>();
  if (params.contains("horiz_bound"))
    c.params.horiz_bound = params.at("horiz_bound").get<long long>();
  for (const auto& o : j.at("objects")) c.objects.push_back(object_from_j(o));
  return c;
}

std::string graph_to_json(const Graph& g) {
  json j;
  json es = json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  j["edges"] = std::move(es);
  j["n"] = g.n();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edges(j.at("n").get<int>(), edges);
}

std::string family_to_json(const SubgraphFamily& fam) {
  json j;
  j["members"] = fam.members;
  json ws = json::array();
  for (const Weight& w : fam.weights) ws.push_back(weight_to_j(w));
  j["weights"] = std::move(ws);
  return j.dump();
}

SubgraphFamily family_from_json(const std::string& text) {
  const json j = json::parse(text);
  SubgraphFamily fam;
  fam.members = j.at("members").get<std::vector<std::vector<int>>>();
  for (const auto& w : j.at("weights")) fam.weights.push_back(weight_from_j(w));
  if (fam.members.size() != fam.weights.size())
    throw std::invalid_argument("family members/weights length mismatch");
  return fam;
}

std::string td_to_json(const TreeDecomposition& td) { return td_to_j(td).dump(); }

TreeDecomposition td_from_json(const std::string& text) {
  return td_from_j(json::parse(text));
}

std::string layering_to_json(const Layering& l) { return layering_to_j(l).dump(); }

Layering layering_from_json(const std::string& text) {
  return layering_from_j(json::parse(text));
}

std::string layered_to_json(const LayeredDecomposition& d) {
  json j;
  j["bound"] = d.declared_bound;
  j["layering"] = layering_to_j(d.layering);
  j["method"] = d.method;
  json strips;
  strips["breakpoints"] = d.strips.breakpoints;
  strips["width"] = d.strips.vertical_width;
  j["strips"] = std::move(strips);
  j["td"] = td_to_j(d.td);
  return j.dump();
}

LayeredDecomposition layered_from_json(const std::string& text) {
  const json j = json::parse(text);
  LayeredDecomposition d;
  d.declared_bound = j.at("bound").get<long long>();
  d.layering = layering_from_j(j.at("layering"));
  d.method = j.at("method").get<std::string>();
  d.strips.breakpoints = j.at("strips").at("breakpoints").get<std::vector<double>>();
  d.strips.vertical_width = j.at("strips").at("width").get<double>();
  d.td = td_from_j(j.at("td"));
  return d;
}

std::string cover_to_json(const GeneralCover& c) {
  json j;
  j["alpha_bound"] = c.alpha_bound;
  j["beta"] = weight_to_j(c.beta);
  json els = json::array();
  for (const auto& el : c.elements) {
    json e;
    if (el.residue)
      e["residue"] = *el.residue;
    else
      e["residue"] = nullptr;
    e["shift"] = el.shift;
    e["td"] = td_to_j(el.td);
    e["vertices"] = el.vertices;
    els.push_back(std::move(e));
  }
  j["elements"] = std::move(els);
  return j.dump();
}

GeneralCover cover_from_json(const std::string& text) {
  const json j = json::parse(text);
  GeneralCover c;
  c.alpha_bound = j.at("alpha_bound").get<long long>();
  c.beta = weight_from_j(j.at("beta"));
  for (const auto& e : j.at("elements")) {
    CoverElement el;
    if (!e.at("residue").is_null()) el.residue = e.at("residue").get<int>();
    el.shift = e.at("shift").get<std::vector<long long>>();
    el.td = td_from_j(e.at("td"));
    el.vertices = e.at("vertices").get<std::vector<int>>();
    c.elements.push_back(std::move(el));
  }
  return c;
}

std::string solution_to_json(const DpSolution& s) { return solution_to_j(s).dump(); }

DpSolution solution_from_json(const std::string& text) {
  return solution_from_j(json::parse(text));
}

std::string report_to_json(const PtasReport& r) {
  json j;
  j["alpha_bound"] = r.alpha_bound;
  j["chosen_shift"] = r.chosen_shift;
  j["method"] = r.method;
  j["ratio"] = weight_to_j(r.ratio);
  j["shift_count"] = r.shift_count;
  j["solution"] = solution_to_j(r.solution);
  return j.dump();
}

PtasReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  PtasReport r;
  r.alpha_bound = j.at("alpha_bound").get<long long>();
  r.chosen_shift = j.at("chosen_shift").get<int>();
  r.method = j.at("method").get<std::string>();
  r.ratio = weight_from_j(j.at("ratio"));
  r.shift_count = j.at("shift_count").get<int>();
  r.solution = solution_from_j(j.at("solution"));
  return r;
}

std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << "p edge " << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      long long m = 0;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0)
        throw std::invalid_argument("malformed problem line: " + line);
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw std::invalid_argument("unrecognized line: " + line);
    }
  }
  if (n < 0) throw std::invalid_argument("missing problem line");
  return Graph::from_edges(n, edges);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace treealpha
