#include "excol/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excol {

namespace {

Json mask_to_json(Mask m) {
  Json arr = Json::array();
  for (int b : mask_bits(m)) arr.push_back(b);
  return arr;
}

Mask mask_from_json(const Json& j) {
  std::vector<int> bits;
  for (const auto& b : j) bits.push_back(b.get<int>());
  return mask_of(bits);
}

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

char status_letter(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ok:
      return 'o';
    case VerdictStatus::fail:
      return 'F';
    case VerdictStatus::skipped_expected:
      return 's';
    case VerdictStatus::inapplicable:
      return 'i';
  }
  return '?';
}

GameKind game_from_name(const std::string& name) {
  for (GameKind g : {GameKind::g1, GameKind::g2, GameKind::g3,
                     GameKind::odd_case1, GameKind::odd_case2})
    if (name == game_name(g)) return g;
  throw std::invalid_argument("unknown move kind: " + name);
}

}  // namespace

Json space_to_json(const MarkingSplit& space) {
  return Json{{"p", space.p}, {"q", space.q}};
}

MarkingSplit space_from_json(const Json& j) {
  return MarkingSplit{j.at("p").get<int>(), j.at("q").get<int>()};
}

Json collection_to_json(const Collection& c) {
  Json objects = Json::array();
  for (std::size_t k = 0; k < c.objects.size(); ++k) {
    const Obj& o = c.objects[k];
    Json jo{{"tag", obj_tag(o.kind)},
            {"order_index", static_cast<int>(k)},
            {"l", o.l},
            {"E", mask_to_json(o.E)}};
    if (o.kind == ObjKind::Boundary) {
      jo["divisor"] = mask_to_json(o.divisor);
      jo["a"] = o.a;
      jo["b"] = o.b;
    }
    objects.push_back(std::move(jo));
  }
  return Json{{"space", space_to_json(c.space)},
              {"variant", c.variant},
              {"objects", std::move(objects)}};
}

Collection collection_from_json(const Json& j) {
  Collection c;
  c.space = space_from_json(j.at("space"));
  c.variant = j.at("variant").get<std::string>();
  for (const auto& jo : j.at("objects")) {
    Obj o;
    const std::string tag = jo.at("tag").get<std::string>();
    if (tag == "F")
      o.kind = ObjKind::Bundle;
    else if (tag == "T")
      o.kind = ObjKind::Torsion;
    else if (tag == "TT")
      o.kind = ObjKind::TildeTorsion;
    else if (tag == "A")
      o.kind = ObjKind::Boundary;
    else
      throw std::invalid_argument("unknown object tag: " + tag);
    o.l = jo.at("l").get<int>();
    o.E = mask_from_json(jo.at("E"));
    if (o.kind == ObjKind::Boundary) {
      o.divisor = mask_from_json(jo.at("divisor"));
      o.a = jo.at("a").get<int>();
      o.b = jo.at("b").get<int>();
    }
    c.objects.push_back(o);
  }
  return c;
}

Json report_to_json(const VerifyReport& r) {
  Json verdicts = Json::array();
  for (const PairVerdict& v : r.verdicts) {
    Json jv{{"i", v.i},
            {"j", v.j},
            {"method", v.method},
            {"status", status_name(v.status)},
            {"detail", v.detail}};
    if (v.torsion_case > 0) jv["torsion_case"] = v.torsion_case;
    verdicts.push_back(std::move(jv));
  }
  Json fired = Json::array();
  for (int k : r.fired_cases) fired.push_back(k);
  return Json{{"space", space_to_json(r.space)},
              {"variant", r.variant},
              {"order_ok", r.order_ok},
              {"counts",
               Json{{"ok", r.ok_count},
                    {"fail", r.fail_count},
                    {"skipped", r.skipped_count},
                    {"inapplicable", r.inapplicable_count}}},
              {"fired_cases", std::move(fired)},
              {"verdicts", std::move(verdicts)}};
}

std::string report_to_csv(const VerifyReport& r) {
  int count = 0;
  for (const PairVerdict& v : r.verdicts)
    count = std::max({count, v.i + 1, v.j + 1});
  std::vector<std::string> cells(static_cast<std::size_t>(count) * count,
                                 ".");
  for (const PairVerdict& v : r.verdicts)
    cells[static_cast<std::size_t>(v.i) * count + v.j] =
        std::string(1, status_letter(v.status));
  std::ostringstream os;
  os << "src\\tgt";
  for (int j = 0; j < count; ++j) os << "," << j;
  os << "\n";
  for (int i = 0; i < count; ++i) {
    os << i;
    for (int j = 0; j < count; ++j)
      os << "," << cells[static_cast<std::size_t>(i) * count + j];
    os << "\n";
  }
  return os.str();
}

Json certificate_to_json(const Certificate& cert) {
  Json nodes = Json::array();
  for (const CertNode& node : cert.nodes) {
    Json children = Json::array();
    for (const GameChild& ch : node.children) {
      Json jc{{"l", ch.l},
              {"E", mask_to_json(ch.E)},
              {"stage", ch.stage},
              {"rdeg", ch.rdeg}};
      if (ch.torsion) jc["torsion"] = true;
      children.push_back(std::move(jc));
    }
    nodes.push_back(Json{{"l", node.label.l},
                         {"E", mask_to_json(node.label.E)},
                         {"game", game_name(node.game)},
                         {"I", mask_to_json(node.I)},
                         {"children", std::move(children)}});
  }
  return Json{{"space", space_to_json(cert.space)},
              {"variant", cert.variant},
              {"lmax", cert.lmax},
              {"nodes", std::move(nodes)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.space = space_from_json(j.at("space"));
  cert.variant = j.at("variant").get<std::string>();
  cert.lmax = j.at("lmax").get<int>();
  for (const auto& jn : j.at("nodes")) {
    CertNode node;
    node.label = FLabel{jn.at("l").get<int>(), mask_from_json(jn.at("E"))};
    node.game = game_from_name(jn.at("game").get<std::string>());
    node.I = mask_from_json(jn.at("I"));
    for (const auto& jc : jn.at("children")) {
      GameChild ch;
      ch.l = jc.at("l").get<int>();
      ch.E = mask_from_json(jc.at("E"));
      ch.stage = jc.at("stage").get<int>();
      ch.rdeg = jc.at("rdeg").get<int>();
      ch.torsion = jc.value("torsion", false);
      node.children.push_back(ch);
    }
    cert.nodes.push_back(std::move(node));
  }
  return cert;
}

Json decomposition_to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& [pair, mult] : d.mults) {
    terms.push_back(Json{{"heavy", partition_name(pair.first)},
                         {"light", partition_name(pair.second)},
                         {"mult", int_str(mult)}});
  }
  return Json{{"valid", d.valid},
              {"dimension_total", int_str(d.dimension_total)},
              {"terms", std::move(terms)}};
}

Json orbits_to_json(const OrbitReport& o) {
  Json sizes = Json::array();
  for (long s : o.orbit_sizes) sizes.push_back(s);
  Json reps = Json::array();
  for (int r : o.representatives) reps.push_back(r);
  return Json{{"orbit_count", o.orbit_count},
              {"orbit_sizes", std::move(sizes)},
              {"representatives", std::move(reps)},
              {"burnside_count", int_str(o.burnside_count)}};
}

std::optional<std::string> schema_violation(const Json& value,
                                            const Json& schema) {
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    const bool ok =
        (t == "object" && value.is_object()) ||
        (t == "array" && value.is_array()) ||
        (t == "string" && value.is_string()) ||
        (t == "integer" && value.is_number_integer()) ||
        (t == "number" && value.is_number()) ||
        (t == "boolean" && value.is_boolean());
    if (!ok) return "expected type " + t;
  }
  if (schema.contains("enum")) {
    const auto& options = schema.at("enum");
    if (std::find(options.begin(), options.end(), value) == options.end())
      return "value not in enum";
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!value.contains(key.get<std::string>()))
          return "missing required key " + key.get<std::string>();
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema.at("properties").items())
        if (value.contains(key))
          if (auto err = schema_violation(value.at(key), sub))
            return key + ": " + *err;
  }
  if (value.is_array() && schema.contains("items"))
    for (std::size_t idx = 0; idx < value.size(); ++idx)
      if (auto err = schema_violation(value[idx], schema.at("items")))
        return "[" + std::to_string(idx) + "]: " + *err;
  return std::nullopt;
}

}  // namespace excol
