#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdl/knowledge_base.hpp"

namespace sdl {

enum class LintRule { L1, L2, L3, L4, L5 };
enum class LintSeverity { Error, Warning, Info };

const char* to_string(LintRule rule);
const char* to_string(LintSeverity severity);

struct LintFinding {
    LintRule rule = LintRule::L1;
    LintSeverity severity = LintSeverity::Error;
    std::string subject;
    std::string message;
    SourceRef location;
};

enum class SourceCategory { IsoStandard, OtherCanonical, DictionaryOrWikipedia, Unknown };

const char* to_string(SourceCategory category);

/// Categorization is a pure function of the citation text: an ISO/IEC/IEEE
/// identifier prefix wins, then the configured canonical patterns (substring,
/// case-insensitive), then the dictionary/encyclopedia patterns.
SourceCategory categorize_source(const std::string& citation,
                                 const std::vector<std::string>& canonicalPatterns);

struct LintConfig {
    std::string definitionProperty = "skos:definition";  // expanded via builtin prefixes
    std::string sourceProperty = "dc:source";
    std::vector<std::string> canonicalPatterns;  // empty -> defaults
    bool includeImports = false;

    static LintConfig defaults();
    /// {definitionProperty, sourceProperty, canonicalPatterns, includeImports}
    static LintConfig from_json_text(const std::string& text);
    static LintConfig from_file(const std::string& path);
};

/// Authoring-discipline checks over the KB:
///   L1 (error)  every declared class in scope has exactly one definition
///   L2 (error)  every such class cites at least one source; unknown source
///               categories downgrade to warnings
///   L3 (error)  the root ontology declares no object properties, and every
///               role it uses resolves to an import
///   L4 (error)  every used name is declared somewhere in the closure
///   L5 (info)   per-category source counts over the scoped classes
/// Findings are sorted by (file, line, rule, subject).
std::vector<LintFinding> lint(const KnowledgeBase& kb, const LintConfig& config = LintConfig::defaults());

/// Best source category per scoped class (priority ISO > canonical >
/// dictionary), aggregated. Classes with no categorizable source count as
/// Unknown; counts partition the scoped class set.
std::map<SourceCategory, int> provenance_summary(const KnowledgeBase& kb,
                                                 const LintConfig& config = LintConfig::defaults());

/// JSON-lines serialization of findings (one object per line).
std::string findings_to_json_lines(const std::vector<LintFinding>& findings);

/// Human-readable one-line-per-finding report.
std::string findings_to_text(const std::vector<LintFinding>& findings);

}  // namespace sdl
