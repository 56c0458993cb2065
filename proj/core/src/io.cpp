#include "cableord/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cableord/errors.hpp"

namespace cableord {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

template <typename T>
T field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string(what) + " lacks \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string(what) + " has a mistyped \"" + key + "\"");
  }
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

}  // namespace

std::string complex_to_json(const BigradedComplex& c) {
  json doc;
  doc["ring"] = c.ring() == RingMode::Full ? "full" : "mod_uv";
  doc["generators"] = json::array();
  for (const auto& g : c.generators()) doc["generators"].push_back({{"id", g.id}, {"gr_u", g.gr_u}, {"gr_v", g.gr_v}});
  doc["differential"] = json::array();
  for (const auto& a : c.arrows()) {
    doc["differential"].push_back(
        {{"from", c.generator(a.from).id}, {"to", c.generator(a.to).id}, {"u", a.coeff.u}, {"v", a.coeff.v}});
  }
  return doc.dump(2) + "\n";
}

BigradedComplex complex_from_json(std::string_view text) {
  const json doc = parse(text);
  const auto ring_name = field<std::string>(doc, "ring", "complex");
  RingMode ring;
  if (ring_name == "full") {
    ring = RingMode::Full;
  } else if (ring_name == "mod_uv") {
    ring = RingMode::ModUV;
  } else {
    throw InvalidInput("unknown ring \"" + ring_name + "\"");
  }
  const auto gens_json = field<json>(doc, "generators", "complex");
  const auto diff_json = field<json>(doc, "differential", "complex");
  if (!gens_json.is_array() || !diff_json.is_array()) throw InvalidInput("generators and differential must be arrays");
  std::vector<Generator> gens;
  for (const auto& g : gens_json) {
    gens.push_back({field<std::string>(g, "id", "generator"), field<int>(g, "gr_u", "generator"),
                    field<int>(g, "gr_v", "generator")});
  }
  std::vector<ArrowSpec> arrows;
  for (const auto& a : diff_json) {
    arrows.push_back({field<std::string>(a, "from", "differential entry"), field<std::string>(a, "to", "differential entry"),
                      field<int>(a, "u", "differential entry"), field<int>(a, "v", "differential entry")});
  }
  return BigradedComplex::from_arrows(ring, std::move(gens), arrows);
}

std::string curve_to_json(const PegCurve& pc) {
  json doc;
  doc["components"] = json::array();
  for (const auto& comp : pc.components) {
    json j;
    j["kind"] = comp.kind == ComponentKind::Gamma0 ? "gamma0" : "closed";
    j["crossings"] = comp.crossings;
    j["first_side"] = side_name(comp.first_side);
    if (!comp.labels.empty()) j["labels"] = comp.labels;
    doc["components"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

PegCurve curve_from_json(std::string_view text) {
  const json doc = parse(text);
  const auto comps = field<json>(doc, "components", "curve");
  if (!comps.is_array()) throw InvalidInput("components must be an array");
  PegCurve pc;
  for (const auto& j : comps) {
    CurveComponent comp;
    const auto kind = field<std::string>(j, "kind", "component");
    if (kind == "gamma0") {
      comp.kind = ComponentKind::Gamma0;
    } else if (kind == "closed") {
      comp.kind = ComponentKind::Closed;
    } else {
      throw InvalidInput("unknown component kind \"" + kind + "\"");
    }
    comp.crossings = field<std::vector<int>>(j, "crossings", "component");
    const auto side = field<std::string>(j, "first_side", "component");
    if (side == "left") {
      comp.first_side = Side::Left;
    } else if (side == "right") {
      comp.first_side = Side::Right;
    } else {
      throw InvalidInput("first_side must be \"left\" or \"right\"");
    }
    if (j.contains("labels")) comp.labels = field<std::vector<std::string>>(j, "labels", "component");
    pc.components.push_back(std::move(comp));
  }
  return pc;
}

std::string report_to_json(const ValidationReport& r) {
  json doc;
  doc["schema"] = 1;
  doc["ok"] = r.ok();
  doc["checks"] = json::array();
  for (const auto& c : r.checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return doc.dump(2) + "\n";
}

bool is_curve_document(std::string_view text) {
  const json doc = parse(text);
  return doc.is_object() && doc.contains("components");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

BigradedComplex load_complex(const std::filesystem::path& path) { return complex_from_json(read_text(path)); }

PegCurve load_curve(const std::filesystem::path& path) { return curve_from_json(read_text(path)); }

}  // namespace cableord
