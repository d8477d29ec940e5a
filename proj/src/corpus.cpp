#include "sdl/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdl/corpus_location.hpp"
#include "sdl/errors.hpp"
#include "sdl/parser.hpp"

namespace sdl {

std::string default_corpus_dir() {
    if (const char* env = std::getenv("SDL_CORPUS_DIR"); env && *env) return env;
    return kDefaultCorpusDir;
}

namespace {

void validate_names(const ConceptExpr& c, const Signature& sig, const std::string& entry) {
    if (c.kind == ConceptKind::Named && !sig.classNames.count(c.name))
        throw CorpusCorrupt("manifest entry '" + entry + "' references unknown class '" + c.name +
                            "'");
    switch (c.kind) {
        case ConceptKind::Some:
        case ConceptKind::Only:
        case ConceptKind::Min:
        case ConceptKind::Max:
        case ConceptKind::Exact:
        case ConceptKind::HasValue:
            if (!sig.roleNames.count(c.role.name))
                throw CorpusCorrupt("manifest entry '" + entry + "' references unknown role '" +
                                    c.role.name + "'");
            break;
        default:
            break;
    }
    for (const auto& a : c.args) validate_names(*a, sig, entry);
}

}  // namespace

Corpus load_corpus(const std::string& directory) {
    std::string catalogPath = directory + "/catalog.json";
    std::string rootPath = directory + "/sde.omn";
    std::string manifestPath = directory + "/manifest.json";

    Corpus corpus;
    corpus.directory = directory;
    try {
        Catalog catalog = Catalog::from_file(catalogPath);
        corpus.kb = KnowledgeBase::resolve_imports(rootPath, catalog);
    } catch (const CorpusCorrupt&) {
        throw;
    } catch (const Error& e) {
        throw CorpusCorrupt(std::string("corpus failed to load: ") + e.what());
    }

    std::ifstream in(manifestPath);
    if (!in) throw CorpusCorrupt("cannot open corpus manifest: " + manifestPath);
    std::ostringstream os;
    os << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(os.str());
    } catch (const nlohmann::json::exception& e) {
        throw CorpusCorrupt(std::string("corpus manifest is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw CorpusCorrupt("corpus manifest must be an array of entries");

    for (const auto& item : j) {
        ManifestEntry entry;
        try {
            entry.axiomText = item.at("axiom").get<std::string>();
            entry.expected = item.at("expected").get<bool>();
            entry.source = item.at("source").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw CorpusCorrupt(std::string("malformed manifest entry: ") + e.what());
        }
        try {
            entry.axiom = parse_axiom_line(entry.axiomText);
        } catch (const Error& e) {
            throw CorpusCorrupt("manifest axiom '" + entry.axiomText +
                                "' does not parse: " + e.what());
        }
        for (const auto& c : entry.axiom.concepts)
            validate_names(*c, corpus.kb.signature(), entry.axiomText);
        corpus.manifest.entries.push_back(std::move(entry));
    }
    return corpus;
}

}  // namespace sdl
