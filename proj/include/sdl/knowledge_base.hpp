#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdl/ast.hpp"
#include "sdl/errors.hpp"

namespace sdl {

/// Maps ontology IRIs to files. Loaded from a catalog.json whose relative
/// paths resolve against the catalog file's directory.
class Catalog {
public:
    Catalog() = default;

    static Catalog from_file(const std::string& path);
    static Catalog from_json_text(const std::string& text, const std::string& baseDir);

    void add(const std::string& iri, const std::string& path) { entries_[iri] = path; }
    const std::string* lookup(const std::string& iri) const;
    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;  // IRI -> absolute-ish path
};

struct SourceRef {
    std::string file;
    int line = 0;
};

struct LoadedOntology {
    std::string iri;   // falls back to the file path when the header had none
    std::string file;
    Ontology ast;
};

/// Name sets drawn from declarations and use positions.
struct Signature {
    std::set<std::string> classNames;
    std::set<std::string> roleNames;
    std::set<std::string> annotationPropertyNames;
    std::set<std::string> individualNames;
    /// Used in some axiom but never declared anywhere in the closure.
    std::set<std::string> undeclaredUses;
};

/// Merged view over an imports closure. Immutable once resolved; safe to
/// share across concurrent readers.
class KnowledgeBase {
public:
    /// Loads rootFile plus its transitive imports through the catalog.
    /// Ontologies are ordered so that an import precedes its importers;
    /// diamond imports load once. Throws MissingImport / ImportCycle /
    /// ParseError / LexError.
    static KnowledgeBase resolve_imports(const std::string& rootFile, const Catalog& catalog);

    /// Builds a KB from pre-parsed ontologies (dependency order given).
    static KnowledgeBase from_ontologies(std::vector<LoadedOntology> ontologies);

    const std::vector<LoadedOntology>& ontologies() const { return ontologies_; }
    const std::vector<Axiom>& axioms() const { return axioms_; }
    const Signature& signature() const { return signature_; }

    /// (file, line) of axioms()[index].
    const SourceRef& source_of(std::size_t index) const { return sources_[index]; }

    /// The last-loaded ontology (the root of the import closure).
    const LoadedOntology& root() const { return ontologies_.back(); }

    /// True if axioms()[index] belongs to the root ontology.
    bool is_root_axiom(std::size_t index) const;

    /// Asserted subsumption edges between named classes: A -> B when
    /// SubClassOf(A, B) is asserted or EquivalentClasses pairs them (both
    /// directions). Seeds the classifier's told-subsumer pruning.
    std::map<std::string, std::set<std::string>> told_hierarchy() const;

    /// Extends a KB with extra axioms (appended as a synthetic ontology);
    /// used for what-if probes like unsat injection.
    KnowledgeBase with_extra_axioms(std::vector<Axiom> extra, const std::string& label) const;

private:
    void rebuild_index();

    std::vector<LoadedOntology> ontologies_;
    std::vector<Axiom> axioms_;
    std::vector<SourceRef> sources_;
    std::vector<std::size_t> rootAxiomBegin_{0};  // first axiom index of the root ontology
    Signature signature_;
};

}  // namespace sdl
