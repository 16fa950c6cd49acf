#include "kt/tangle.hpp"

#include <algorithm>

#include "kt/errors.hpp"

namespace kt {

void validate_tangle(const TangleDiagram& t) {
  if (t.arcs <= 0) throw InvariantError("tangle: arc count must be positive");
  int n = 2 * t.arcs;
  if ((int)t.helpers.size() != t.arcs)
    throw InvariantError("tangle: helpers flag list must have one entry per arc");
  for (size_t i = 1; i < t.helpers.size(); ++i)
    if (t.helpers[i - 1] && !t.helpers[i])
      throw InvariantError("tangle: helper arcs must form a suffix");
  if (t.sections.empty()) throw InvariantError("tangle: missing top section");
  for (size_t s = 0; s < t.sections.size(); ++s) {
    const Section& sec = t.sections[s];
    bool last = (s + 1 == t.sections.size());
    switch (sec.kind) {
      case SectionKind::Trivial:
        if (last) throw InvariantError("tangle: last section must be the top");
        break;
      case SectionKind::Crossing:
        if (last) throw InvariantError("tangle: last section must be the top");
        if (sec.pos < 0 || sec.pos + 1 >= n)
          throw InvariantError("tangle: crossing strands out of range");
        if (sec.sign != 1 && sec.sign != -1)
          throw InvariantError("tangle: crossing sign must be +1 or -1");
        break;
      case SectionKind::Top: {
        if (!last) throw InvariantError("tangle: top section must come last");
        std::vector<int> seen(n, 0);
        for (auto& [a, b] : sec.matching) {
          if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw InvariantError("tangle: top matching strand out of range");
          seen[a] += 1;
          seen[b] += 1;
        }
        for (int v : seen)
          if (v != 1) throw InvariantError("tangle: top matching must pair every strand once");
        break;
      }
    }
  }
}

TangleDiagram tangle_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("arcs") || !j.contains("sections") || !j.contains("helpers"))
    throw SchemaError("tangle: expected object with arcs, sections, helpers");
  if (!j["arcs"].is_number_integer() || !j["sections"].is_array() || !j["helpers"].is_array())
    throw SchemaError("tangle: field types are wrong");
  TangleDiagram t;
  t.arcs = j["arcs"].get<int>();
  for (const auto& js : j["sections"]) {
    if (!js.is_object() || !js.contains("kind") || !js["kind"].is_string())
      throw SchemaError("tangle: section needs a kind string");
    std::string k = js["kind"].get<std::string>();
    Section sec;
    if (k == "trivial") {
      sec.kind = SectionKind::Trivial;
    } else if (k == "crossing") {
      sec.kind = SectionKind::Crossing;
      if (!js.contains("pair") || !js["pair"].is_array() || js["pair"].size() != 2 ||
          !js.contains("sign") || !js["sign"].is_number_integer())
        throw SchemaError("tangle: crossing needs pair [i,j] and sign");
      int a = js["pair"][0].get<int>(), b = js["pair"][1].get<int>();
      if (b != a + 1) throw InvariantError("tangle: crossing must involve adjacent strands");
      sec.pos = a;
      sec.sign = js["sign"].get<int>();
    } else if (k == "top") {
      sec.kind = SectionKind::Top;
      if (!js.contains("matching") || !js["matching"].is_array())
        throw SchemaError("tangle: top needs a matching array");
      for (const auto& jp : js["matching"]) {
        if (!jp.is_array() || jp.size() != 2) throw SchemaError("tangle: matching entries are pairs");
        sec.matching.push_back({jp[0].get<int>(), jp[1].get<int>()});
      }
    } else {
      throw SchemaError("tangle: unknown section kind '" + k + "'");
    }
    t.sections.push_back(std::move(sec));
  }
  for (const auto& jh : j["helpers"]) {
    if (!jh.is_boolean()) throw SchemaError("tangle: helpers entries are booleans");
    t.helpers.push_back(jh.get<bool>());
  }
  validate_tangle(t);
  return t;
}

ojson tangle_to_json(const TangleDiagram& t) {
  ojson j;
  j["arcs"] = t.arcs;
  j["sections"] = ojson::array();
  for (const Section& sec : t.sections) {
    ojson js;
    switch (sec.kind) {
      case SectionKind::Trivial:
        js["kind"] = "trivial";
        break;
      case SectionKind::Crossing:
        js["kind"] = "crossing";
        js["pair"] = {sec.pos, sec.pos + 1};
        js["sign"] = sec.sign;
        break;
      case SectionKind::Top:
        js["kind"] = "top";
        js["matching"] = ojson::array();
        for (auto& [a, b] : sec.matching) js["matching"].push_back({a, b});
        break;
    }
    j["sections"].push_back(std::move(js));
  }
  j["helpers"] = ojson::array();
  for (bool h : t.helpers) j["helpers"].push_back(h);
  return j;
}

TangleDiagram stabilize(const TangleDiagram& t, int k) {
  if (k < 0) throw InvariantError("stabilize: count must be nonnegative");
  validate_tangle(t);
  TangleDiagram out = t;
  int base = 2 * t.arcs;
  out.arcs += k;
  for (int m = 0; m < k; ++m) {
    out.sections.back().matching.push_back({base + 2 * m, base + 2 * m + 1});
    out.helpers.push_back(true);
  }
  return out;
}

int crossing_count(const TangleDiagram& t) {
  int n = 0;
  for (const Section& s : t.sections)
    if (s.kind == SectionKind::Crossing) ++n;
  return n;
}

int original_arc_count(const TangleDiagram& t) {
  int n = 0;
  for (bool h : t.helpers)
    if (!h) ++n;
  return n;
}

std::vector<int> induced_matching(const TangleDiagram& t) {
  validate_tangle(t);
  int n = 2 * t.arcs;
  std::vector<int> m(n, -1);
  for (auto& [a, b] : t.sections.back().matching) {
    m[a] = b;
    m[b] = a;
  }
  // pull the top matching down through the crossings
  for (auto it = t.sections.rbegin(); it != t.sections.rend(); ++it) {
    if (it->kind != SectionKind::Crossing) continue;
    int i = it->pos;
    std::vector<int> next(n);
    auto tau = [&](int x) { return x == i ? i + 1 : (x == i + 1 ? i : x); };
    for (int x = 0; x < n; ++x) next[x] = tau(m[tau(x)]);
    m = std::move(next);
  }
  return m;
}

int plat_components(const TangleDiagram& bottom, const TangleDiagram& top) {
  if (bottom.arcs != top.arcs)
    throw MismatchError("plat: tangles have different boundary sizes");
  auto mb = induced_matching(bottom);
  auto mt = induced_matching(top);
  int n = 2 * bottom.arcs;
  std::vector<bool> seen(n, false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    int x = s;
    while (!seen[x]) {
      seen[x] = true;
      int y = mb[x];
      seen[y] = true;
      x = mt[y];
    }
  }
  return comps;
}

}  // namespace kt
