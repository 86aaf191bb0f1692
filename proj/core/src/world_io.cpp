#include "nirrt/world_io.hpp"

#include <fstream>
#include <sstream>

namespace nirrt {

using nlohmann::json;

json state_to_json(const State& s) {
  json arr = json::array();
  for (double v : s.coords()) arr.push_back(v);
  return arr;
}

State state_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw FormatError("expected coordinate array of length " + std::to_string(dim));
  }
  State s(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number()) throw FormatError("coordinate is not a number");
    s[i] = j[i].get<double>();
  }
  return s;
}

namespace {

json box_to_json(const Box& b) { return {{"lo", state_to_json(b.lo)}, {"hi", state_to_json(b.hi)}}; }

Box box_from_json(const json& j, int dim) {
  return {state_from_json(j.at("lo"), dim), state_from_json(j.at("hi"), dim)};
}

}  // namespace

json problem_to_json(const ProblemInstance& p) {
  const World& w = p.world;
  json obstacles = json::array();
  for (const Obstacle& o : w.obstacles()) {
    if (o.is_box()) {
      obstacles.push_back({{"type", "box"},
                           {"lo", state_to_json(o.as_box().lo)},
                           {"hi", state_to_json(o.as_box().hi)}});
    } else {
      obstacles.push_back({{"type", "ball"},
                           {"center", state_to_json(o.as_ball().center)},
                           {"radius", o.as_ball().radius}});
    }
  }
  json doc = {{"version", kWorldFormatVersion},
              {"dimension", w.dim()},
              {"bounds", box_to_json(w.bounds())},
              {"clearance", w.clearance()},
              {"obstacles", obstacles},
              {"start", state_to_json(p.start)},
              {"goal", state_to_json(p.goal)}};
  if (!p.meta.family.empty() || p.meta.gap || p.meta.wall) {
    json meta = json::object();
    if (!p.meta.family.empty()) meta["family"] = p.meta.family;
    if (p.meta.gap) meta["gap"] = box_to_json(*p.meta.gap);
    if (p.meta.wall) meta["wall"] = box_to_json(*p.meta.wall);
    doc["meta"] = meta;
  }
  return doc;
}

ProblemInstance problem_from_json(const json& doc) {
  try {
    if (doc.at("version").get<int>() != kWorldFormatVersion) {
      throw FormatError("unsupported world version " + doc.at("version").dump());
    }
    const int dim = doc.at("dimension").get<int>();
    if (dim != 2 && dim != 3) throw FormatError("dimension must be 2 or 3");
    const Box bounds = box_from_json(doc.at("bounds"), dim);
    std::vector<Obstacle> obstacles;
    for (const json& o : doc.at("obstacles")) {
      const std::string type = o.at("type").get<std::string>();
      if (type == "box") {
        obstacles.push_back(Obstacle::box(state_from_json(o.at("lo"), dim),
                                          state_from_json(o.at("hi"), dim)));
      } else if (type == "ball") {
        obstacles.push_back(Obstacle::ball(state_from_json(o.at("center"), dim),
                                           o.at("radius").get<double>()));
      } else {
        throw FormatError("unknown obstacle type '" + type + "'");
      }
    }
    ProblemInstance p{World(bounds, std::move(obstacles), doc.at("clearance").get<double>()),
                      state_from_json(doc.at("start"), dim), state_from_json(doc.at("goal"), dim),
                      {}};
    if (auto it = doc.find("meta"); it != doc.end()) {
      p.meta.family = it->value("family", "");
      if (it->contains("gap")) p.meta.gap = box_from_json(it->at("gap"), dim);
      if (it->contains("wall")) p.meta.wall = box_from_json(it->at("wall"), dim);
    }
    return p;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed world document: ") + e.what());
  } catch (const ContractViolation& e) {
    throw FormatError(std::string("invalid world document: ") + e.what());
  }
}

std::string dump_problem(const ProblemInstance& problem) { return problem_to_json(problem).dump(); }

void write_problem_file(const std::filesystem::path& path, const ProblemInstance& problem) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << dump_problem(problem) << '\n';
}

ProblemInstance read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return problem_from_json(doc);
}

}  // namespace nirrt
