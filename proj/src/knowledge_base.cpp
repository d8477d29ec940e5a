#include "sdl/knowledge_base.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdl/parser.hpp"

namespace sdl {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

Catalog Catalog::from_file(const std::string& path) {
    return from_json_text(read_file(path), fs::path(path).parent_path().string());
}

Catalog Catalog::from_json_text(const std::string& text, const std::string& baseDir) {
    Catalog cat;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid catalog JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("catalog JSON must be an object of IRI -> path");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) throw Error("catalog entry for " + it.key() + " must be a path");
        fs::path p = it.value().get<std::string>();
        if (p.is_relative() && !baseDir.empty()) p = fs::path(baseDir) / p;
        cat.add(it.key(), p.string());
    }
    return cat;
}

const std::string* Catalog::lookup(const std::string& iri) const {
    auto it = entries_.find(iri);
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

struct Loader {
    const Catalog& catalog;
    std::vector<LoadedOntology> done;
    std::set<std::string> doneIris;
    std::vector<std::string> stack;  // IRIs currently being loaded

    // Post-order walk puts every import before its importers.
    void load(const std::string& file, const std::string& iriHint) {
        Ontology ast = parse_ontology(read_file(file), file);
        std::string iri = ast.iri.empty() ? (iriHint.empty() ? file : iriHint) : ast.iri;

        if (std::find(stack.begin(), stack.end(), iri) != stack.end()) {
            std::vector<std::string> cycle(stack.begin(), stack.end());
            cycle.push_back(iri);
            // trim the prefix before the cycle entry point
            auto first = std::find(cycle.begin(), cycle.end(), iri);
            throw ImportCycle({first, cycle.end()});
        }
        if (doneIris.count(iri)) return;

        stack.push_back(iri);
        for (const auto& ax : ast.axioms) {
            if (ax.kind != AxiomKind::Import) continue;
            const std::string& target = ax.names[0];
            if (doneIris.count(target)) continue;
            const std::string* path = catalog.lookup(target);
            if (!path) throw MissingImport(target);
            load(*path, target);
        }
        stack.pop_back();
        doneIris.insert(iri);
        done.push_back({iri, file, std::move(ast)});
    }
};

void collect_concept_names(const ConceptExpr& c, Signature& sig) {
    switch (c.kind) {
        case ConceptKind::Named:
            sig.classNames.insert(c.name);
            break;
        case ConceptKind::Some:
        case ConceptKind::Only:
        case ConceptKind::Min:
        case ConceptKind::Max:
        case ConceptKind::Exact:
            sig.roleNames.insert(c.role.name);
            break;
        case ConceptKind::OneOf:
            for (const auto& i : c.individuals) sig.individualNames.insert(i);
            break;
        case ConceptKind::HasValue:
            sig.roleNames.insert(c.role.name);
            sig.individualNames.insert(c.individuals[0]);
            break;
        default:
            break;
    }
    for (const auto& a : c.args) collect_concept_names(*a, sig);
}

}  // namespace

KnowledgeBase KnowledgeBase::resolve_imports(const std::string& rootFile, const Catalog& catalog) {
    Loader loader{catalog};
    loader.load(rootFile, "");
    return from_ontologies(std::move(loader.done));
}

KnowledgeBase KnowledgeBase::from_ontologies(std::vector<LoadedOntology> ontologies) {
    KnowledgeBase kb;
    kb.ontologies_ = std::move(ontologies);
    kb.rebuild_index();
    return kb;
}

void KnowledgeBase::rebuild_index() {
    axioms_.clear();
    sources_.clear();
    rootAxiomBegin_ = {0};
    for (const auto& onto : ontologies_) {
        rootAxiomBegin_[0] = axioms_.size();
        for (const auto& ax : onto.ast.axioms) {
            axioms_.push_back(ax);
            sources_.push_back({onto.file, ax.line});
        }
    }

    Signature sig;
    std::set<std::string> declared;
    for (const auto& ax : axioms_) {
        switch (ax.kind) {
            case AxiomKind::Declaration:
                declared.insert(ax.names[0]);
                switch (ax.declKind) {
                    case DeclKind::Class: sig.classNames.insert(ax.names[0]); break;
                    case DeclKind::ObjectProperty: sig.roleNames.insert(ax.names[0]); break;
                    case DeclKind::AnnotationProperty:
                        sig.annotationPropertyNames.insert(ax.names[0]);
                        break;
                    case DeclKind::NamedIndividual:
                        sig.individualNames.insert(ax.names[0]);
                        break;
                }
                break;
            case AxiomKind::SubClassOf:
            case AxiomKind::EquivalentClasses:
            case AxiomKind::DisjointClasses:
            case AxiomKind::Domain:
            case AxiomKind::Range:
                for (const auto& c : ax.concepts) collect_concept_names(*c, sig);
                for (const auto& r : ax.roles) sig.roleNames.insert(r.name);
                break;
            case AxiomKind::SubPropertyOf:
            case AxiomKind::EquivalentProperties:
            case AxiomKind::InverseProperties:
            case AxiomKind::TransitiveProperty:
                for (const auto& r : ax.roles) sig.roleNames.insert(r.name);
                break;
            case AxiomKind::ClassAssertion:
                sig.individualNames.insert(ax.names[0]);
                collect_concept_names(*ax.concepts[0], sig);
                break;
            case AxiomKind::PropertyAssertion:
                sig.individualNames.insert(ax.names[0]);
                sig.individualNames.insert(ax.names[1]);
                sig.roleNames.insert(ax.roles[0].name);
                break;
            case AxiomKind::AnnotationAssertion:
                sig.annotationPropertyNames.insert(ax.names[1]);
                break;
            case AxiomKind::Import:
                break;
        }
    }
    auto flag_undeclared = [&](const std::set<std::string>& used) {
        for (const auto& n : used)
            if (!declared.count(n)) sig.undeclaredUses.insert(n);
    };
    flag_undeclared(sig.classNames);
    flag_undeclared(sig.roleNames);
    flag_undeclared(sig.annotationPropertyNames);
    flag_undeclared(sig.individualNames);
    signature_ = std::move(sig);
}

bool KnowledgeBase::is_root_axiom(std::size_t index) const {
    return index >= rootAxiomBegin_[0];
}

std::map<std::string, std::set<std::string>> KnowledgeBase::told_hierarchy() const {
    std::map<std::string, std::set<std::string>> edges;
    for (const auto& n : signature_.classNames) edges[n];  // every class is a vertex
    for (const auto& ax : axioms_) {
        if (ax.kind == AxiomKind::SubClassOf) {
            if (ax.concepts[0]->kind == ConceptKind::Named &&
                ax.concepts[1]->kind == ConceptKind::Named)
                edges[ax.concepts[0]->name].insert(ax.concepts[1]->name);
        } else if (ax.kind == AxiomKind::EquivalentClasses) {
            for (std::size_t i = 0; i < ax.concepts.size(); ++i)
                for (std::size_t j = 0; j < ax.concepts.size(); ++j) {
                    if (i == j) continue;
                    if (ax.concepts[i]->kind == ConceptKind::Named &&
                        ax.concepts[j]->kind == ConceptKind::Named)
                        edges[ax.concepts[i]->name].insert(ax.concepts[j]->name);
                }
        }
    }
    return edges;
}

KnowledgeBase KnowledgeBase::with_extra_axioms(std::vector<Axiom> extra,
                                               const std::string& label) const {
    KnowledgeBase kb;
    kb.ontologies_ = ontologies_;
    LoadedOntology synth;
    synth.iri = label;
    synth.file = label;
    synth.ast.iri = label;
    synth.ast.axioms = std::move(extra);
    kb.ontologies_.push_back(std::move(synth));
    kb.rebuild_index();
    return kb;
}

}  // namespace sdl
