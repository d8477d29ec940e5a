#include "sdl/lint.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdl/errors.hpp"
#include "sdl/render.hpp"

namespace sdl {

const char* to_string(LintRule rule) {
    switch (rule) {
        case LintRule::L1: return "L1";
        case LintRule::L2: return "L2";
        case LintRule::L3: return "L3";
        case LintRule::L4: return "L4";
        case LintRule::L5: return "L5";
    }
    return "?";
}

const char* to_string(LintSeverity severity) {
    switch (severity) {
        case LintSeverity::Error: return "error";
        case LintSeverity::Warning: return "warning";
        case LintSeverity::Info: return "info";
    }
    return "?";
}

const char* to_string(SourceCategory category) {
    switch (category) {
        case SourceCategory::IsoStandard: return "isoStandard";
        case SourceCategory::OtherCanonical: return "otherCanonical";
        case SourceCategory::DictionaryOrWikipedia: return "dictionaryOrWikipedia";
        case SourceCategory::Unknown: return "unknown";
    }
    return "?";
}

namespace {

const std::vector<std::string>& default_canonical_patterns() {
    static const std::vector<std::string> patterns = {
        "INCOSE Systems Engineering Handbook",
        "INCOSE Needs and Requirements Manual",
        "Guide to Writing Requirements",
        "Systems Engineering Body of Knowledge",
        "SEBoK",
        "NASA Systems Engineering Handbook",
        "Defense Acquisition University",
        "DAU Glossary",
    };
    return patterns;
}

const std::vector<std::string>& dictionary_patterns() {
    static const std::vector<std::string> patterns = {
        "Wikipedia", "Wiktionary", "WordNet", "dictionary", "Dictionary", "encyclopedia",
    };
    return patterns;
}

bool contains_ci(const std::string& haystack, const std::string& needle) {
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(),
                          [](char a, char b) {
                              return std::tolower(static_cast<unsigned char>(a)) ==
                                     std::tolower(static_cast<unsigned char>(b));
                          });
    return it != haystack.end();
}

bool iso_prefixed(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    for (const char* id : {"ISO", "IEC", "IEEE"}) {
        std::size_t len = std::char_traits<char>::length(id);
        if (s.compare(i, len, id) == 0) {
            char next = i + len < s.size() ? s[i + len] : '\0';
            if (!std::isalnum(static_cast<unsigned char>(next))) return true;
        }
    }
    return false;
}

}  // namespace

SourceCategory categorize_source(const std::string& citation,
                                 const std::vector<std::string>& canonicalPatterns) {
    if (iso_prefixed(citation)) return SourceCategory::IsoStandard;
    for (const auto& p : canonicalPatterns)
        if (contains_ci(citation, p)) return SourceCategory::OtherCanonical;
    for (const auto& p : dictionary_patterns())
        if (contains_ci(citation, p)) return SourceCategory::DictionaryOrWikipedia;
    return SourceCategory::Unknown;
}

LintConfig LintConfig::defaults() {
    LintConfig c;
    c.canonicalPatterns = default_canonical_patterns();
    return c;
}

LintConfig LintConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid lint config JSON: ") + e.what());
    }
    LintConfig c = defaults();
    if (j.contains("definitionProperty")) c.definitionProperty = j["definitionProperty"];
    if (j.contains("sourceProperty")) c.sourceProperty = j["sourceProperty"];
    if (j.contains("canonicalPatterns"))
        c.canonicalPatterns = j["canonicalPatterns"].get<std::vector<std::string>>();
    if (j.contains("includeImports")) c.includeImports = j["includeImports"];
    return c;
}

LintConfig LintConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lint config: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str());
}

namespace {

struct ClassAnnotations {
    std::size_t declIndex = 0;  // axiom index of the declaration
    int definitions = 0;
    std::vector<std::pair<std::string, std::size_t>> sources;  // citation, axiom index
};

struct Scope {
    // classes declared in scope, in first-declaration order
    std::vector<std::string> classOrder;
    std::map<std::string, ClassAnnotations> classes;
};

Scope scoped_classes(const KnowledgeBase& kb, const LintConfig& config) {
    std::string defProp = expand_builtin(config.definitionProperty);
    std::string srcProp = expand_builtin(config.sourceProperty);

    Scope scope;
    const auto& axioms = kb.axioms();
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& ax = axioms[i];
        if (!config.includeImports && !kb.is_root_axiom(i)) continue;
        if (ax.kind == AxiomKind::Declaration && ax.declKind == DeclKind::Class) {
            if (!scope.classes.count(ax.names[0])) {
                scope.classOrder.push_back(ax.names[0]);
                scope.classes[ax.names[0]].declIndex = i;
            }
        }
    }
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& ax = axioms[i];
        if (ax.kind != AxiomKind::AnnotationAssertion) continue;
        auto it = scope.classes.find(ax.names[0]);
        if (it == scope.classes.end()) continue;
        if (ax.names[1] == defProp) ++it->second.definitions;
        if (ax.names[1] == srcProp) it->second.sources.emplace_back(ax.value.text, i);
    }
    return scope;
}

}  // namespace

std::vector<LintFinding> lint(const KnowledgeBase& kb, const LintConfig& config) {
    std::vector<LintFinding> findings;
    Scope scope = scoped_classes(kb, config);
    const auto& axioms = kb.axioms();

    auto add = [&](LintRule rule, LintSeverity sev, const std::string& subject,
                   const std::string& message, std::size_t axiomIndex) {
        findings.push_back({rule, sev, subject, message, kb.source_of(axiomIndex)});
    };

    // L1 / L2: definition and source annotations per scoped class
    std::map<SourceCategory, int> categoryCounts = {
        {SourceCategory::IsoStandard, 0},
        {SourceCategory::OtherCanonical, 0},
        {SourceCategory::DictionaryOrWikipedia, 0},
        {SourceCategory::Unknown, 0},
    };
    for (const auto& name : scope.classOrder) {
        const ClassAnnotations& info = scope.classes.at(name);
        if (info.definitions != 1)
            add(LintRule::L1, LintSeverity::Error, name,
                "class must carry exactly one " + config.definitionProperty + " annotation (has " +
                    std::to_string(info.definitions) + ")",
                info.declIndex);
        if (info.sources.empty()) {
            add(LintRule::L2, LintSeverity::Error, name,
                "class has no " + config.sourceProperty + " annotation", info.declIndex);
        } else {
            for (const auto& [citation, axIdx] : info.sources) {
                if (categorize_source(citation, config.canonicalPatterns) ==
                    SourceCategory::Unknown)
                    add(LintRule::L2, LintSeverity::Warning, name,
                        "source \"" + citation + "\" matches no recognized category", axIdx);
            }
        }
        // best category for the L5 summary
        SourceCategory best = SourceCategory::Unknown;
        for (const auto& [citation, axIdx] : info.sources) {
            SourceCategory cat = categorize_source(citation, config.canonicalPatterns);
            if (static_cast<int>(cat) < static_cast<int>(best)) best = cat;
        }
        ++categoryCounts[best];
    }

    // L3: zero new object properties in the root ontology; used roles must
    // resolve to imports
    std::set<std::string> importedRoles, rootDeclaredRoles;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& ax = axioms[i];
        if (ax.kind != AxiomKind::Declaration || ax.declKind != DeclKind::ObjectProperty)
            continue;
        if (kb.is_root_axiom(i))
            rootDeclaredRoles.insert(ax.names[0]);
        else
            importedRoles.insert(ax.names[0]);
    }
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& ax = axioms[i];
        if (!kb.is_root_axiom(i)) continue;
        if (ax.kind == AxiomKind::Declaration && ax.declKind == DeclKind::ObjectProperty) {
            add(LintRule::L3, LintSeverity::Error, ax.names[0],
                "root ontology declares object property '" + render_name(ax.names[0]) +
                    "' (zero-new-object-properties rule)",
                i);
            continue;
        }
        std::set<std::string> used;
        for (const auto& r : ax.roles) used.insert(r.name);
        std::vector<const ConceptExpr*> stack;
        for (const auto& c : ax.concepts) stack.push_back(c.get());
        while (!stack.empty()) {
            const ConceptExpr* c = stack.back();
            stack.pop_back();
            switch (c->kind) {
                case ConceptKind::Some:
                case ConceptKind::Only:
                case ConceptKind::Min:
                case ConceptKind::Max:
                case ConceptKind::Exact:
                case ConceptKind::HasValue:
                    used.insert(c->role.name);
                    break;
                default:
                    break;
            }
            for (const auto& a : c->args) stack.push_back(a.get());
        }
        for (const auto& role : used) {
            if (!importedRoles.count(role))
                add(LintRule::L3, LintSeverity::Error, role,
                    "role '" + render_name(role) + "' does not resolve to an imported namespace",
                    i);
        }
    }

    // L4: used names must be declared somewhere in the closure
    const auto& undeclared = kb.signature().undeclaredUses;
    if (!undeclared.empty()) {
        for (std::size_t i = 0; i < axioms.size(); ++i) {
            const Axiom& ax = axioms[i];
            if (!config.includeImports && !kb.is_root_axiom(i)) continue;
            if (ax.kind == AxiomKind::Declaration || ax.kind == AxiomKind::Import) continue;
            std::set<std::string> used;
            for (const auto& r : ax.roles) used.insert(r.name);
            for (const auto& n : ax.names) used.insert(n);
            if (ax.kind == AxiomKind::AnnotationAssertion) used.insert(ax.names[1]);
            std::vector<const ConceptExpr*> stack;
            for (const auto& c : ax.concepts) stack.push_back(c.get());
            while (!stack.empty()) {
                const ConceptExpr* c = stack.back();
                stack.pop_back();
                if (c->kind == ConceptKind::Named) used.insert(c->name);
                if (c->kind == ConceptKind::Some || c->kind == ConceptKind::Only ||
                    c->kind == ConceptKind::Min || c->kind == ConceptKind::Max ||
                    c->kind == ConceptKind::Exact || c->kind == ConceptKind::HasValue)
                    used.insert(c->role.name);
                for (const auto& i2 : c->individuals) used.insert(i2);
                for (const auto& a : c->args) stack.push_back(a.get());
            }
            for (const auto& n : used)
                if (undeclared.count(n))
                    add(LintRule::L4, LintSeverity::Error, n,
                        "name '" + render_name(n) + "' is used but never declared in the imports closure",
                        i);
        }
    }

    // L5: summary, anchored at the root ontology header
    {
        std::ostringstream msg;
        msg << "source categories: ";
        bool first = true;
        for (const auto& [cat, count] : categoryCounts) {
            if (!first) msg << ", ";
            msg << to_string(cat) << "=" << count;
            first = false;
        }
        LintFinding f;
        f.rule = LintRule::L5;
        f.severity = LintSeverity::Info;
        f.subject = kb.root().iri;
        f.message = msg.str();
        f.location = {kb.root().file, 1};
        findings.push_back(std::move(f));
    }

    std::stable_sort(findings.begin(), findings.end(),
                     [](const LintFinding& a, const LintFinding& b) {
                         if (a.location.file != b.location.file)
                             return a.location.file < b.location.file;
                         if (a.location.line != b.location.line)
                             return a.location.line < b.location.line;
                         if (a.rule != b.rule) return a.rule < b.rule;
                         return a.subject < b.subject;
                     });
    return findings;
}

std::map<SourceCategory, int> provenance_summary(const KnowledgeBase& kb,
                                                 const LintConfig& config) {
    Scope scope = scoped_classes(kb, config);
    std::map<SourceCategory, int> counts = {
        {SourceCategory::IsoStandard, 0},
        {SourceCategory::OtherCanonical, 0},
        {SourceCategory::DictionaryOrWikipedia, 0},
        {SourceCategory::Unknown, 0},
    };
    for (const auto& name : scope.classOrder) {
        SourceCategory best = SourceCategory::Unknown;
        for (const auto& [citation, axIdx] : scope.classes.at(name).sources) {
            SourceCategory cat = categorize_source(citation, config.canonicalPatterns);
            if (static_cast<int>(cat) < static_cast<int>(best)) best = cat;
        }
        ++counts[best];
    }
    return counts;
}

std::string findings_to_json_lines(const std::vector<LintFinding>& findings) {
    std::ostringstream os;
    for (const auto& f : findings) {
        nlohmann::ordered_json j;
        j["rule"] = to_string(f.rule);
        j["severity"] = to_string(f.severity);
        j["subject"] = f.subject;
        j["message"] = f.message;
        j["file"] = f.location.file;
        j["line"] = f.location.line;
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string findings_to_text(const std::vector<LintFinding>& findings) {
    std::ostringstream os;
    for (const auto& f : findings)
        os << f.location.file << ":" << f.location.line << ": " << to_string(f.severity) << " "
           << to_string(f.rule) << ": " << f.message << "\n";
    return os.str();
}

}  // namespace sdl
