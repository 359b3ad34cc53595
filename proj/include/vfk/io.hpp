#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "vfk/fingroup.hpp"
#include "vfk/gog.hpp"
#include "vfk/langcore.hpp"
#include "vfk/verify.hpp"
#include "vfk/vfpres.hpp"

namespace vfk {

using Json = nlohmann::ordered_json;

/// Throws InvalidInput when the file is missing or not valid JSON.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

RawPresentation presentation_from_json(const Json& doc);
Json to_json(const RawPresentation& p);

struct GrammarFile {
  Grammar grammar;
  std::vector<int> involution;  ///< empty when the file has none
};
GrammarFile grammar_from_json(const Json& doc);
Json to_json(const Grammar& g, const std::vector<int>& involution = {});

/// Transition letters given as null or "" are epsilon moves.
Nfa nfa_from_json(const Json& doc);
Json to_json(const Nfa& n);

RawGog gog_from_json(const Json& doc);
Json to_json(const RawGog& g);

RawGogHom hom_from_json(const Json& doc);
Json to_json(const RawGogHom& h);

/// A list of multiplication tables, each validated.
std::vector<FiniteGroupTable> catalog_from_json(const Json& doc);

/// True for documents with the presentation keys X, S and rules.
bool is_presentation_document(const Json& doc);

/// Loads a presentation or a grammar (with involution) as a word-problem
/// oracle.
std::unique_ptr<GroupOracle> load_group(const std::string& path);

}  // namespace vfk
