#include "vfk/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "vfk/boundscalc.hpp"
#include "vfk/cayley.hpp"
#include "vfk/error.hpp"
#include "vfk/io.hpp"
#include "vfk/slide.hpp"
#include "vfk/synth.hpp"

namespace vfk {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::size_t cap = 2'000'000;
};

Json names(const Alphabet& a, const Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(a.names[x]);
  return out;
}

std::string render_or_epsilon(const Alphabet& a, const Word& w) { return w.empty() ? "ε" : a.render(w); }

VfPresentation load_presentation(const std::string& path) {
  return VfPresentation::validate(presentation_from_json(read_json_file(path)));
}

GraphOfGroups load_gog(const std::string& path) { return GraphOfGroups::build(gog_from_json(read_json_file(path))); }

// Prints either the JSON document or the human text.
int emit(const Context& ctx, int code, const Json& doc, const std::string& text) {
  if (ctx.json) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << text;
    if (!text.empty() && text.back() != '\n') ctx.out << "\n";
  }
  return code;
}

int yes_no(const Context& ctx, bool yes, const std::string& yes_text, const std::string& no_text, Json doc = {}) {
  if (doc.is_null()) doc = Json::object();
  doc["result"] = yes ? yes_text : no_text;
  return emit(ctx, yes ? kExitYes : kExitNo, doc, yes ? yes_text : no_text);
}

int cmd_validate(const Context& ctx, const std::string& file) {
  const VfPresentation p = load_presentation(file);
  std::ostringstream text;
  text << "valid: |X|=" << p.num_gens() << " |S|=" << p.num_reps() << " size=" << p.size() << "\n";
  return emit(ctx, kExitYes,
              {{"valid", true}, {"X", p.num_gens()}, {"S", p.num_reps()}, {"size", p.size()},
               {"sigma", p.sigma().names}},
              text.str());
}

Json normal_form_json(const VfPresentation& p, const NormalForm& nf) {
  return {{"free_part", names(p.sigma(), nf.free_part)}, {"rep", p.rep_names()[nf.rep]}, {"rendered", p.render(nf)}};
}

int cmd_nf(const Context& ctx, const std::string& file, const std::string& word) {
  const VfPresentation p = load_presentation(file);
  const NormalForm nf = p.normal_form(p.sigma().parse(word));
  return emit(ctx, kExitYes, normal_form_json(p, nf), p.render(nf));
}

int cmd_wp(const Context& ctx, const std::string& file, const std::string& word) {
  const auto group = load_group(file);
  return yes_no(ctx, group->is_trivial(group->sigma().parse(word)), "trivial", "nontrivial");
}

int cmd_size(const Context& ctx, const std::string& file) {
  const VfPresentation p = load_presentation(file);
  return emit(ctx, kExitYes, {{"size", p.size()}}, std::to_string(p.size()));
}

std::string render_grammar(const Grammar& g) {
  std::ostringstream out;
  for (const auto& prod : g.productions) {
    out << g.variables[prod.lhs] << " ->";
    if (prod.body.empty()) out << " ε";
    for (const auto& s : prod.body) out << " " << (s.terminal ? g.terminals.names[s.id] : g.variables[s.id]);
    out << "\n";
  }
  return out.str();
}

int cmd_grammar_cnf(const Context& ctx, const std::string& file) {
  const GrammarFile gf = grammar_from_json(read_json_file(file));
  const Grammar cnf = to_cnf(gf.grammar);
  return emit(ctx, kExitYes, to_json(cnf, gf.involution), render_grammar(cnf));
}

int cmd_grammar_member(const Context& ctx, const std::string& file, const std::string& word) {
  const GrammarFile gf = grammar_from_json(read_json_file(file));
  const Grammar cnf = to_cnf(gf.grammar);
  return yes_no(ctx, cyk_member(cnf, cnf.terminals.parse(word)), "member", "not a member");
}

int cmd_member(const Context& ctx, const std::string& wp_file, const std::string& nfa_file, const std::string& word) {
  const auto group = load_group(wp_file);
  const Nfa n = nfa_from_json(read_json_file(nfa_file));
  if (!(n.alphabet == group->sigma())) {
    throw Error(ErrorCode::AlphabetMismatch, "the automaton alphabet differs from the group's generators");
  }
  const bool member = rational_member(group->wp_pda(), group->involution(), group->sigma().parse(word), n);
  return yes_no(ctx, member, "member", "not a member");
}

int cmd_gog_check(const Context& ctx, const std::string& file) {
  const GraphOfGroups g = load_gog(file);
  const auto bad = non_reduced_edge(g);
  std::ostringstream text;
  text << "valid: " << g.vertices().size() << " vertices, " << g.edges().size() / 2 << " edges, |Δ|=" << g.delta().size()
       << "\n";
  text << (bad ? "not reduced (edge '" + g.edges()[*bad].id + "')" : std::string("reduced")) << "\n";
  Json doc{{"valid", true},
           {"vertices", g.vertices().size()},
           {"edges", g.edges().size() / 2},
           {"delta", g.delta().names},
           {"reduced", !bad}};
  if (bad) doc["non_reduced_edge"] = g.edges()[*bad].id;
  return emit(ctx, bad ? kExitNo : kExitYes, doc, text.str());
}

int cmd_gog_reduce(const Context& ctx, const std::string& file, const std::string& word) {
  const GraphOfGroups g = load_gog(file);
  const Word r = reduce_word(g, g.delta().parse(word));
  return emit(ctx, kExitYes, {{"reduced", names(g.delta(), r)}}, render_or_epsilon(g.delta(), r));
}

int cmd_gog_wp(const Context& ctx, const std::string& file, const std::string& base, const std::string& word) {
  const GraphOfGroups g = load_gog(file);
  return yes_no(ctx, gog_wp(g, g.vertex_index(base), g.delta().parse(word)), "trivial", "nontrivial");
}

int cmd_verify(const Context& ctx, const std::string& group_file, const std::string& gog_file,
               const std::string& hom_file) {
  const auto group = load_group(group_file);
  const GraphOfGroups g = load_gog(gog_file);
  const GogHom h = resolve_hom(g, *group, hom_from_json(read_json_file(hom_file)));
  const CheckResult r = verify(g, *group, h);
  Json doc{{"ok", r.ok}};
  if (!r.ok) {
    doc["stage"] = r.stage;
    doc["witness"] = r.witness;
  }
  const std::string text =
      r.ok ? "verified: the fundamental group maps isomorphically onto the group"
           : "not an isomorphism: " + r.stage + " check failed: " + r.witness;
  return emit(ctx, r.ok ? kExitYes : kExitNo, doc, text);
}

Json move_json(const GraphOfGroups& g, const SlideMove& m) {
  return {{"x", g.edges()[m.x].id}, {"y", g.edges()[m.y].id}, {"g", m.g}};
}

int cmd_slide_list(const Context& ctx, const std::string& file) {
  const GraphOfGroups g = load_gog(file);
  Json doc = Json::array();
  std::string text;
  for (const auto& m : enumerate_slides(g)) {
    doc.push_back(move_json(g, m));
    text += render_move(g, m) + "\n";
  }
  if (text.empty()) text = "no slides\n";
  return emit(ctx, kExitYes, doc, text);
}

int cmd_slide_apply(const Context& ctx, const std::string& file, const std::string& x, const std::string& y, int elt,
                    const std::string& out_file) {
  const GraphOfGroups g = load_gog(file);
  if (elt < 0) throw Error(ErrorCode::InvalidInput, "--g must be a nonnegative element index");
  const SlideMove m{g.edge_index(x), g.edge_index(y), static_cast<Element>(elt)};
  const Json doc = to_json(apply_slide(g, m).to_raw());
  if (!out_file.empty()) {
    write_json_file(out_file, doc);
    return emit(ctx, kExitYes, {{"written", out_file}}, "wrote " + out_file);
  }
  ctx.out << doc.dump(2) << "\n";
  return kExitYes;
}

int cmd_iso(const Context& ctx, const std::string& f1, const std::string& f2, std::optional<std::size_t> depth) {
  const GraphOfGroups g1 = load_gog(f1);
  const GraphOfGroups g2 = load_gog(f2);
  const IsoVerdict v = iso_decide(g1, g2, depth);
  Json doc{{"reason", v.reason}, {"states", v.states}, {"rejected_moves", v.rejected_moves}};
  std::ostringstream text;
  int code = kExitYes;
  switch (v.kind) {
    case IsoVerdict::Kind::Iso: {
      doc["result"] = "iso";
      Json moves = Json::array();
      GraphOfGroups cur = g1;
      text << "isomorphic: " << v.moves.size() << " slide" << (v.moves.size() == 1 ? "" : "s") << "\n";
      for (const auto& m : v.moves) {
        moves.push_back(move_json(cur, m));
        text << "  " << render_move(cur, m) << "\n";
        cur = apply_slide(cur, m);
      }
      doc["moves"] = moves;
      break;
    }
    case IsoVerdict::Kind::NotIso:
      doc["result"] = "not-iso";
      text << "not isomorphic: " << v.reason << "\n";
      code = kExitNo;
      break;
    case IsoVerdict::Kind::Inconclusive:
      doc["result"] = "inconclusive";
      text << "inconclusive: " << v.reason << " (" << v.states << " states)\n";
      code = kExitInconclusive;
      break;
  }
  return emit(ctx, code, doc, text.str());
}

std::string bound_text(const BoundSet& b) {
  std::ostringstream out;
  for (const auto& [label, value] : b.rows()) {
    const std::string digits = value.str();
    out << label << std::string(label.size() < 10 ? 10 - label.size() : 1, ' ');
    if (digits.size() <= 40) {
      out << digits << "\n";
    } else {
      out << "~2^" << boost::multiprecision::msb(value) << " (" << digits.size() << " digits)\n";
    }
  }
  return out.str();
}

Json bound_json(const BoundSet& b) {
  Json doc{{"source", b.source == BoundSet::Source::Grammar ? "grammar" : "presentation"}};
  for (const auto& [label, value] : b.rows()) doc[label] = value.str();
  return doc;
}

BoundSet bounds_for_file(const std::string& file) {
  const Json doc = read_json_file(file);
  if (is_presentation_document(doc)) return bounds_for_presentation(load_presentation(file));
  return bounds_for_grammar(to_cnf(grammar_from_json(doc).grammar));
}

int cmd_bounds(const Context& ctx, const std::string& file) {
  const BoundSet b = bounds_for_file(file);
  return emit(ctx, kExitYes, bound_json(b), bound_text(b));
}

struct SynthArgs {
  std::string group;
  int vertices = 1, order = 1, edges = 0, image_len = 0;
  std::string catalog, out_gog, out_hom;
};

int cmd_synth(const Context& ctx, const SynthArgs& a) {
  const auto group = load_group(a.group);
  SynthBudget budget;
  budget.max_vertices = a.vertices;
  budget.max_group_order = a.order;
  budget.max_edges = a.edges;
  budget.max_image_length = a.image_len;
  if (!a.catalog.empty()) budget.catalog = catalog_from_json(read_json_file(a.catalog));

  // The worst-case budgets are reported only; they are far beyond desk scale.
  std::string budget_note;
  Json worst_case;
  try {
    const BoundSet b = bounds_for_file(a.group);
    const std::string vertices = BigInt(b.Theta + 1).str();
    worst_case = {{"max_vertices", vertices}, {"max_order", b.Xi.str()}, {"max_image_len", b.phi_len.str()}};
    budget_note = "worst-case budget: vertices <= " + vertices + ", order <= " + b.Xi.str() +
                 ", image length <= " + b.phi_len.str() + " (not used)\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ExplosionGuard) throw;
    worst_case = "too large to write down";
    budget_note = "worst-case budget: too large to write down (not used)\n";
  }

  SynthStats stats;
  const auto found = synthesize(*group, budget, &stats);
  Json doc{{"candidates", stats.candidates}, {"worst_case_budget", worst_case}};
  if (!found) {
    doc["result"] = "budget exhausted";
    return emit(ctx, kExitInconclusive, doc,
                budget_note + "budget exhausted after " + std::to_string(stats.candidates) +
                    " candidates (this does not mean no decomposition exists)");
  }
  const Json gog_doc = to_json(found->gog.to_raw());
  const Json hom_doc = to_json(to_raw(found->gog, *group, found->hom));
  if (!a.out_gog.empty()) write_json_file(a.out_gog, gog_doc);
  if (!a.out_hom.empty()) write_json_file(a.out_hom, hom_doc);
  doc["result"] = "found";
  doc["gog"] = gog_doc;
  doc["hom"] = hom_doc;

  std::ostringstream text;
  text << budget_note << "found after " << stats.candidates << " candidates: " << found->gog.vertices().size()
       << " vertices, " << found->gog.edges().size() / 2 << " edges\n";
  for (const auto& v : found->gog.vertices()) text << "  vertex " << v.id << ": order " << v.group.order() << "\n";
  for (const auto& e : found->gog.edges()) {
    if (e.forward) {
      text << "  edge " << e.id << ": " << found->gog.vertices()[e.src].id << " -> "
           << found->gog.vertices()[e.tgt].id << ", edge group order "
           << found->gog.edge_groups()[e.pair].group.order() << "\n";
    }
  }
  for (int x = 0; x < found->gog.delta().size(); ++x) {
    text << "  phi(" << found->gog.delta().names[x]
         << ") = " << render_or_epsilon(group->sigma(), found->hom.images[x]) << "\n";
  }
  if (a.out_gog.empty() && a.out_hom.empty()) {
    text << "gog: " << gog_doc.dump() << "\nhom: " << hom_doc.dump() << "\n";
  }
  return emit(ctx, kExitYes, doc, text.str());
}

int cmd_ball(const Context& ctx, const std::string& file, int r, const std::string& dot) {
  const VfPresentation p = load_presentation(file);
  const Ball b = build_ball(p, r, ctx.cap);
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + dot + "'");
    f << b.to_dot();
  }
  Json verts = Json::array();
  std::ostringstream text;
  text << b.vertices.size() << " vertices, " << b.undirected_edges() << " undirected edges\n";
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    verts.push_back({{"vertex", p.render(b.vertices[v])}, {"dist", b.dist[v]}});
    text << "  " << b.dist[v] << " " << p.render(b.vertices[v]) << "\n";
  }
  return emit(ctx, kExitYes, {{"radius", r}, {"vertices", verts}, {"undirected_edges", b.undirected_edges()}},
              text.str());
}

int cmd_cut(const Context& ctx, const std::string& file, const std::string& prefix, int r) {
  const VfPresentation p = load_presentation(file);
  const CutBoundary c = cut_boundary(p, p.sigma().parse(prefix), r, ctx.cap);
  Json edges = Json::array();
  std::ostringstream text;
  text << "weight " << c.weight << "\n";
  for (const auto& [g, a] : c.edges) {
    edges.push_back({{"source", p.render(g)}, {"letter", p.sigma().names[a]}});
    text << "  " << p.render(g) << " · " << p.sigma().names[a] << "\n";
  }
  text << "inner boundary " << c.inner.size() << " vertices, vertex boundary " << c.vertex.size()
       << " vertices, diameter " << c.beta_diameter << "\n";
  return emit(ctx, kExitYes,
              {{"weight", c.weight},
               {"edges", edges},
               {"inner", c.inner.size()},
               {"vertex_boundary", c.vertex.size()},
               {"beta_diameter", c.beta_diameter},
               {"radius", c.radius}},
              text.str());
}

int cmd_components(const Context& ctx, const std::string& file, int r, int probe) {
  const VfPresentation p = load_presentation(file);
  const auto comps = component_cuts(p, r, probe, ctx.cap);
  Json list = Json::array();
  std::ostringstream text;
  text << comps.size() << " components outside B(" << r << ")\n";
  for (const auto& c : comps) {
    list.push_back({{"size", c.vertices.size()},
                    {"boundary", c.boundary.size()},
                    {"boundary_diameter", c.boundary_diameter},
                    {"unbounded_candidate", c.unbounded_candidate}});
    text << "  " << c.vertices.size() << " vertices, boundary " << c.boundary.size() << ", diameter "
         << c.boundary_diameter << (c.unbounded_candidate ? ", reaches the probe sphere" : "") << "\n";
  }
  return emit(ctx, kExitYes, {{"components", list}}, text.str());
}

// "1, t t, t u, 1": comma-separated words, "1" or blank for the identity.
std::vector<NormalForm> parse_sequence(const VfPresentation& p, const std::string& text) {
  std::vector<NormalForm> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const std::string word = first == std::string::npos ? "" : item.substr(first);
    out.push_back(word == "1" ? NormalForm{} : p.normal_form(p.sigma().parse(word)));
  }
  return out;
}

int cmd_triangulate(const Context& ctx, const std::string& file, const std::string& seq_text, int k) {
  const VfPresentation p = load_presentation(file);
  const auto seq = parse_sequence(p, seq_text);
  int radius = 0;
  for (const auto& nf : seq) radius = std::max(radius, static_cast<int>(nf.free_part.size()) + (nf.rep ? 1 : 0));
  const Ball b = build_ball(p, radius, ctx.cap);
  const auto chords = triangulate_tree_sequence(b, seq, k);
  const bool ok = check_triangulation(b, seq, chords, k);
  Json list = Json::array();
  std::ostringstream text;
  text << chords.size() << " chords\n";
  for (const auto& [i, j] : chords) {
    list.push_back(Json::array({i, j}));
    text << "  " << i << " - " << j << "\n";
  }
  text << (ok ? "valid" : "invalid") << " " << k << "-triangulation\n";
  return emit(ctx, ok ? kExitYes : kExitNo, {{"chords", list}, {"valid", ok}}, text.str());
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ExplosionGuard:
    case ErrorCode::NotStabilized:
    case ErrorCode::BudgetExhausted:
      return kExitInconclusive;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for virtually free groups", "vfk"};
  app.require_subcommand(1);
  Context ctx{out, err};
  long long seed = 0;
  app.add_flag("--json", ctx.json, "Print a JSON result document");
  app.add_option("--cap", ctx.cap, "Vertex cap for ball constructions");
  app.add_option("--seed", seed, "Accepted and ignored (all algorithms are deterministic)");

  std::function<int()> action;
  std::string file, word, file2, base, x, y, out_file, nfa, gog, hom, dot, seq;
  int elt = 0, radius = 0, probe = 1, k = 1;
  std::optional<std::size_t> depth;
  SynthArgs synth;

  auto sub = [&](CLI::App* parent, const char* name, const char* help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* validate = sub(&app, "validate", "Validate a presentation");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return cmd_validate(ctx, file); }; });

  CLI::App* nf = sub(&app, "nf", "Normal form of a word");
  nf->add_option("file", file)->required();
  nf->add_option("word", word)->required();
  nf->callback([&] { action = [&] { return cmd_nf(ctx, file, word); }; });

  CLI::App* wp = sub(&app, "wp", "Word problem (presentation or grammar)");
  wp->add_option("file", file)->required();
  wp->add_option("word", word)->required();
  wp->callback([&] { action = [&] { return cmd_wp(ctx, file, word); }; });

  CLI::App* size = sub(&app, "size", "Size of a presentation");
  size->add_option("file", file)->required();
  size->callback([&] { action = [&] { return cmd_size(ctx, file); }; });

  CLI::App* grammar = sub(&app, "grammar", "Grammar tools");
  grammar->require_subcommand(1);
  CLI::App* cnf = sub(grammar, "cnf", "Chomsky normal form");
  cnf->add_option("file", file)->required();
  cnf->callback([&] { action = [&] { return cmd_grammar_cnf(ctx, file); }; });
  CLI::App* gmember = sub(grammar, "member", "Grammar membership");
  gmember->add_option("file", file)->required();
  gmember->add_option("word", word)->required();
  gmember->callback([&] { action = [&] { return cmd_grammar_member(ctx, file, word); }; });

  CLI::App* member = sub(&app, "member", "Rational subset membership in the group");
  member->add_option("--wp", file, "Presentation or grammar")->required();
  member->add_option("--nfa", nfa)->required();
  member->add_option("word", word)->required();
  member->callback([&] { action = [&] { return cmd_member(ctx, file, nfa, word); }; });

  CLI::App* gogc = sub(&app, "gog", "Graph of groups tools");
  gogc->require_subcommand(1);
  CLI::App* check = sub(gogc, "check", "Validate and test reducedness");
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_gog_check(ctx, file); }; });
  CLI::App* reduce = sub(gogc, "reduce", "Reduce a word over Δ");
  reduce->add_option("file", file)->required();
  reduce->add_option("word", word)->required();
  reduce->callback([&] { action = [&] { return cmd_gog_reduce(ctx, file, word); }; });
  CLI::App* gwp = sub(gogc, "wp", "Word problem for closed path words");
  gwp->add_option("file", file)->required();
  gwp->add_option("--base", base)->required();
  gwp->add_option("word", word)->required();
  gwp->callback([&] { action = [&] { return cmd_gog_wp(ctx, file, base, word); }; });

  CLI::App* ver = sub(&app, "verify", "Verify a decomposition");
  ver->add_option("--group", file)->required();
  ver->add_option("--gog", gog)->required();
  ver->add_option("--hom", hom)->required();
  ver->callback([&] { action = [&] { return cmd_verify(ctx, file, gog, hom); }; });

  CLI::App* slide = sub(&app, "slide", "Slide moves");
  slide->require_subcommand(1);
  CLI::App* list = sub(slide, "list", "List applicable slides");
  list->add_option("file", file)->required();
  list->callback([&] { action = [&] { return cmd_slide_list(ctx, file); }; });
  CLI::App* apply = sub(slide, "apply", "Apply one slide");
  apply->add_option("file", file)->required();
  apply->add_option("--x", x)->required();
  apply->add_option("--y", y)->required();
  apply->add_option("--g", elt, "Element index in the source vertex group")->required();
  apply->add_option("-o,--out", out_file);
  apply->callback([&] { action = [&] { return cmd_slide_apply(ctx, file, x, y, elt, out_file); }; });

  CLI::App* iso = sub(&app, "iso", "Decide isomorphism by slide search");
  iso->add_option("first", file)->required();
  iso->add_option("second", file2)->required();
  iso->add_option("--max-depth", depth);
  iso->callback([&] { action = [&] { return cmd_iso(ctx, file, file2, depth); }; });

  CLI::App* syn = sub(&app, "synth", "Search for a decomposition within a budget");
  syn->add_option("--group", synth.group)->required();
  syn->add_option("--max-vertices", synth.vertices)->required();
  syn->add_option("--max-order", synth.order)->required();
  syn->add_option("--max-edges", synth.edges)->required();
  syn->add_option("--max-image-len", synth.image_len)->required();
  syn->add_option("--catalog", synth.catalog);
  syn->add_option("--out-gog", synth.out_gog);
  syn->add_option("--out-hom", synth.out_hom);
  syn->callback([&] { action = [&] { return cmd_synth(ctx, synth); }; });

  CLI::App* bounds = sub(&app, "bounds", "Bound constants for an input");
  bounds->add_option("file", file)->required();
  bounds->callback([&] { action = [&] { return cmd_bounds(ctx, file); }; });

  CLI::App* cayley = sub(&app, "cayley", "Cayley graph tools");
  cayley->require_subcommand(1);
  CLI::App* ball = sub(cayley, "ball", "Ball around the identity");
  ball->add_option("file", file)->required();
  ball->add_option("-r,--radius", radius)->required();
  ball->add_option("--dot", dot, "Write the ball in DOT format");
  ball->callback([&] { action = [&] { return cmd_ball(ctx, file, radius, dot); }; });

  CLI::App* cut = sub(&app, "cut", "Boundary of a prefix cut");
  cut->add_option("file", file)->required();
  cut->add_option("--prefix", word)->required();
  cut->add_option("-r,--radius", radius)->required();
  cut->callback([&] { action = [&] { return cmd_cut(ctx, file, word, radius); }; });

  CLI::App* comps = sub(&app, "components", "Components outside a ball");
  comps->add_option("file", file)->required();
  comps->add_option("-r,--radius", radius)->required();
  comps->add_option("--probe", probe)->required();
  comps->callback([&] { action = [&] { return cmd_components(ctx, file, radius, probe); }; });

  CLI::App* tri = sub(&app, "triangulate", "Triangulate a closed sequence in a tree");
  tri->add_option("file", file)->required();
  tri->add_option("--seq", seq, "Comma-separated words, 1 for the identity")->required();
  tri->add_option("-k", k)->required();
  tri->callback([&] { action = [&] { return cmd_triangulate(ctx, file, seq, k); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitInputError;
  }
  if (!action) {
    err << app.help();
    return kExitInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    if (ctx.json) out << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace vfk
