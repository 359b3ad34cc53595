#include "vfk/io.hpp"

#include <fstream>
#include <functional>

#include "vfk/error.hpp"

namespace vfk {

namespace {

// nlohmann's type errors become InvalidInput so callers see one error family.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " is missing \"" + key + "\"");
  }
  return doc.at(key);
}

std::vector<std::vector<Element>> table_of(const Json& j) { return j.get<std::vector<std::vector<Element>>>(); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

RawPresentation presentation_from_json(const Json& doc) {
  return guarded("presentation", [&] {
    RawPresentation p;
    p.X = field(doc, "X", "presentation").get<std::vector<std::string>>();
    p.S = field(doc, "S", "presentation").get<std::vector<std::string>>();
    for (const auto& r : field(doc, "rules", "presentation")) {
      p.rules.push_back({field(r, "r", "rule").get<std::string>(), field(r, "a", "rule").get<std::string>(),
                         field(r, "word", "rule").get<std::vector<std::string>>(),
                         field(r, "rep", "rule").get<std::string>()});
    }
    return p;
  });
}

Json to_json(const RawPresentation& p) {
  Json rules = Json::array();
  for (const auto& r : p.rules) rules.push_back({{"r", r.r}, {"a", r.a}, {"word", r.word}, {"rep", r.rep}});
  return {{"X", p.X}, {"S", p.S}, {"rules", rules}};
}

GrammarFile grammar_from_json(const Json& doc) {
  return guarded("grammar", [&] {
    GrammarFile out;
    Grammar& g = out.grammar;
    g.variables = field(doc, "V", "grammar").get<std::vector<std::string>>();
    g.terminals.names = field(doc, "Sigma", "grammar").get<std::vector<std::string>>();
    const std::string start = field(doc, "start", "grammar").get<std::string>();
    auto var = [&](const std::string& name) -> std::optional<int> {
      auto it = std::find(g.variables.begin(), g.variables.end(), name);
      if (it == g.variables.end()) return std::nullopt;
      return static_cast<int>(it - g.variables.begin());
    };
    const auto s = var(start);
    if (!s) throw Error(ErrorCode::InvalidInput, "start symbol '" + start + "' is not in V");
    g.start = *s;
    for (const auto& pj : field(doc, "prods", "grammar")) {
      const std::string lhs = field(pj, "lhs", "production").get<std::string>();
      const auto l = var(lhs);
      if (!l) throw Error(ErrorCode::UnknownSymbol, "production lhs '" + lhs + "'");
      Production p{*l, {}};
      for (const auto& name : field(pj, "rhs", "production").get<std::vector<std::string>>()) {
        if (auto v = var(name)) {
          p.body.push_back({false, *v});
        } else {
          p.body.push_back({true, g.terminals.at(name)});
        }
      }
      g.productions.push_back(std::move(p));
    }
    g.validate();
    if (doc.contains("involution")) {
      out.involution.assign(g.terminals.size(), -1);
      for (const auto& pair : doc.at("involution")) {
        const auto names = pair.get<std::vector<std::string>>();
        if (names.size() != 2) throw Error(ErrorCode::InvalidInput, "involution entries are pairs");
        const int a = g.terminals.at(names[0]), b = g.terminals.at(names[1]);
        out.involution[a] = b;
        out.involution[b] = a;
      }
    }
    return out;
  });
}

Json to_json(const Grammar& g, const std::vector<int>& involution) {
  auto name = [&](const GSymbol& s) { return s.terminal ? g.terminals.names[s.id] : g.variables[s.id]; };
  Json prods = Json::array();
  for (const auto& p : g.productions) {
    Json rhs = Json::array();
    for (const auto& s : p.body) rhs.push_back(name(s));
    prods.push_back({{"lhs", g.variables[p.lhs]}, {"rhs", rhs}});
  }
  Json doc = {{"V", g.variables}, {"Sigma", g.terminals.names}, {"start", g.variables[g.start]}, {"prods", prods}};
  if (!involution.empty()) {
    Json pairs = Json::array();
    for (int a = 0; a < static_cast<int>(involution.size()); ++a)
      if (a <= involution[a]) pairs.push_back({g.terminals.names[a], g.terminals.names[involution[a]]});
    doc["involution"] = pairs;
  }
  return doc;
}

Nfa nfa_from_json(const Json& doc) {
  return guarded("NFA", [&] {
    Nfa n;
    n.alphabet.names = field(doc, "alphabet", "NFA").get<std::vector<std::string>>();
    n.num_states = field(doc, "states", "NFA").get<int>();
    for (const auto& t : field(doc, "transitions", "NFA")) {
      const Json& letter = field(t, "letter", "transition");
      int a = -1;
      if (!letter.is_null() && !letter.get<std::string>().empty()) a = n.alphabet.at(letter.get<std::string>());
      n.transitions.push_back({field(t, "from", "transition").get<int>(), a, field(t, "to", "transition").get<int>()});
    }
    n.initials = field(doc, "initials", "NFA").get<std::vector<int>>();
    n.finals = field(doc, "finals", "NFA").get<std::vector<int>>();
    n.validate();
    return n;
  });
}

Json to_json(const Nfa& n) {
  Json transitions = Json::array();
  for (const auto& t : n.transitions) {
    transitions.push_back({{"from", t.from},
                           {"letter", t.letter < 0 ? Json(nullptr) : Json(n.alphabet.names[t.letter])},
                           {"to", t.to}});
  }
  return {{"alphabet", n.alphabet.names},
          {"states", n.num_states},
          {"transitions", transitions},
          {"initials", n.initials},
          {"finals", n.finals}};
}

RawGog gog_from_json(const Json& doc) {
  return guarded("graph of groups", [&] {
    RawGog g;
    for (const auto& v : field(doc, "vertices", "graph of groups")) {
      g.vertices.push_back({field(v, "id", "vertex").get<std::string>(), table_of(field(v, "table", "vertex"))});
    }
    for (const auto& e : field(doc, "edges", "graph of groups")) {
      g.edges.push_back({field(e, "id", "edge").get<std::string>(), field(e, "inv", "edge").get<std::string>(),
                         field(e, "src", "edge").get<std::string>(), field(e, "tgt", "edge").get<std::string>()});
    }
    if (doc.contains("edge_groups")) {
      for (const auto& eg : doc.at("edge_groups")) {
        const auto pair = field(eg, "pair", "edge group").get<std::vector<std::string>>();
        if (pair.size() != 2) throw Error(ErrorCode::InvalidInput, "edge group pair must name two edges");
        g.edge_groups.push_back({pair[0], pair[1], table_of(field(eg, "table", "edge group")),
                                 field(eg, "into_src", "edge group").get<std::vector<Element>>(),
                                 field(eg, "into_tgt", "edge group").get<std::vector<Element>>()});
      }
    }
    return g;
  });
}

Json to_json(const RawGog& g) {
  Json vertices = Json::array(), edges = Json::array(), groups = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"table", v.table}});
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"inv", e.inv}, {"src", e.src}, {"tgt", e.tgt}});
  for (const auto& eg : g.edge_groups) {
    groups.push_back({{"pair", {eg.y, eg.y_inv}},
                      {"table", eg.table},
                      {"into_src", eg.into_src},
                      {"into_tgt", eg.into_tgt}});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"edge_groups", groups}};
}

RawGogHom hom_from_json(const Json& doc) {
  return guarded("homomorphism", [&] {
    RawGogHom h;
    h.base = field(doc, "base", "homomorphism").get<std::string>();
    for (const auto& im : field(doc, "images", "homomorphism")) {
      h.images.emplace_back(field(im, "sym", "image").get<std::string>(),
                            field(im, "word", "image").get<std::vector<std::string>>());
    }
    return h;
  });
}

Json to_json(const RawGogHom& h) {
  Json images = Json::array();
  for (const auto& [sym, word] : h.images) images.push_back({{"sym", sym}, {"word", word}});
  return {{"base", h.base}, {"images", images}};
}

std::vector<FiniteGroupTable> catalog_from_json(const Json& doc) {
  return guarded("catalog", [&] {
    const Json& list = doc.is_object() ? field(doc, "groups", "catalog") : doc;
    std::vector<FiniteGroupTable> out;
    for (const auto& t : list) out.push_back(FiniteGroupTable::validate(table_of(t.is_object() ? t.at("table") : t)));
    return out;
  });
}

bool is_presentation_document(const Json& doc) {
  return doc.is_object() && doc.contains("X") && doc.contains("S") && doc.contains("rules");
}

std::unique_ptr<GroupOracle> load_group(const std::string& path) {
  const Json doc = read_json_file(path);
  if (is_presentation_document(doc)) {
    return std::make_unique<PresentationOracle>(VfPresentation::validate(presentation_from_json(doc)));
  }
  if (doc.is_object() && doc.contains("V") && doc.contains("prods")) {
    GrammarFile g = grammar_from_json(doc);
    if (g.involution.empty()) throw Error(ErrorCode::InvalidInput, "grammar groups need an \"involution\" entry");
    return std::make_unique<GrammarOracle>(g.grammar, g.involution);
  }
  throw Error(ErrorCode::InvalidInput, "'" + path + "' is neither a presentation nor a grammar");
}

}  // namespace vfk
