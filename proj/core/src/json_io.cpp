#include "biframe/json_io.hpp"

#include <fstream>
#include <sstream>

#include "biframe/error.hpp"
#include "json.hpp"

namespace biframe {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("json parse: ") + e.what());
  }
}

FinPoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw Error(ErrorKind::BadInput, "poset json needs \"elements\" and \"leq\"");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("leq")) {
    if (!p.is_array() || p.size() != 2)
      throw Error(ErrorKind::BadInput, "leq entries must be index pairs");
    pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  const int n = static_cast<int>(labels.size());
  for (auto [a, b] : pairs)
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::BadInput, "leq index out of range");
  return FinPoset(std::move(labels), pairs);
}

json poset_to_json(const FinPoset& p) {
  json j;
  j["elements"] = p.labels();
  json leq = json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) leq.push_back(json::array({a, b}));
  j["leq"] = std::move(leq);
  return j;
}

}  // namespace

FinPoset poset_from_json_text(const std::string& text) {
  return poset_from_json(parse(text));
}

std::string poset_to_json_text(const FinPoset& p) { return poset_to_json(p).dump(2); }

FramePtr frame_from_json_text(const std::string& text) {
  return FiniteFrame::validate(poset_from_json(parse(text)));
}

std::string frame_to_json_text(const FiniteFrame& f) {
  return poset_to_json_text(f.poset());
}

BiframePtr biframe_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("ambient") || !j.contains("comp1") || !j.contains("comp2"))
    throw Error(ErrorKind::BadInput, "biframe json needs \"ambient\", \"comp1\", \"comp2\"");
  FramePtr amb = FiniteFrame::validate(poset_from_json(j.at("ambient")));
  std::vector<int> c1 = j.at("comp1").get<std::vector<int>>();
  std::vector<int> c2 = j.at("comp2").get<std::vector<int>>();
  return Biframe::validate(std::move(amb), std::move(c1), std::move(c2));
}

std::string biframe_to_json_text(const Biframe& l) {
  json j;
  j["ambient"] = poset_to_json(l.ambient()->poset());
  j["comp1"] = l.component(1);
  j["comp2"] = l.component(2);
  return j.dump(2);
}

std::string hom_to_json_text(const FrameHom& f, const std::string& dom_id,
                             const std::string& cod_id) {
  json j;
  j["dom"] = dom_id;
  j["cod"] = cod_id;
  j["map"] = f.map;
  return j.dump(2);
}

std::string congruence_to_json_text(const Congruence& t, const std::string& frame_id) {
  json j;
  j["frame"] = frame_id;
  json blocks = json::array();
  for (int b = 0; b < t.num_blocks(); ++b) {
    json blk = json::array();
    for (int x = 0; x < t.frame()->size(); ++x)
      if (t.block_of(x) == b) blk.push_back(x);
    blocks.push_back(std::move(blk));
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2);
}

std::string lattice_to_json_text(const FinPoset& p) {
  json j;
  j["elements"] = p.labels();
  json rows = json::array();
  for (int a = 0; a < p.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["leq_matrix"] = std::move(rows);
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace biframe
