#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdl/ast.hpp"
#include "sdl/errors.hpp"
#include "sdl/lexer.hpp"

namespace sdl {

/// Prefix-expansion environment. Starts from builtin_prefixes(); files add
/// or override entries with Prefix: declarations.
class PrefixEnv {
public:
    PrefixEnv();
    void declare(const std::string& prefix, const std::string& iri);

    /// Expands a prefixed-name token ("pfx:local" or ":local").
    /// Throws ParseError on an undeclared prefix.
    std::string expand(const std::string& prefixedName, const SourceLoc& at) const;

    bool has(const std::string& prefix) const { return map_.count(prefix) > 0; }

private:
    std::map<std::string, std::string> map_;
};

/// Parses a whole ontology document (frames, prefixes, imports).
Ontology parse_ontology(const std::string& text, const std::string& file = "<input>");

/// Parses a single class expression, e.g. for CLI --concept flags.
ConceptPtr parse_concept(const std::string& text, const PrefixEnv& env = PrefixEnv(),
                         const std::string& file = "<concept>");

/// Parses one inline class axiom of the form
///   <description> SubClassOf: <description>
///   <description> EquivalentTo: <description>
/// (the entailment-manifest format).
Axiom parse_axiom_line(const std::string& text, const PrefixEnv& env = PrefixEnv(),
                       const std::string& file = "<axiom>");

}  // namespace sdl
