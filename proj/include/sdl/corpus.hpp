#pragma once

#include <string>
#include <vector>

#include "sdl/ast.hpp"
#include "sdl/knowledge_base.hpp"

namespace sdl {

/// One expected-entailment check: a class axiom in one-line Manchester form,
/// whether the corpus entails it, and the citation it derives from.
struct ManifestEntry {
    std::string axiomText;
    Axiom axiom;
    bool expected = false;
    std::string source;
};

struct EntailmentManifest {
    std::vector<ManifestEntry> entries;
};

struct Corpus {
    KnowledgeBase kb;
    EntailmentManifest manifest;
    std::string directory;
};

/// Directory the bundled corpus is read from: SDL_CORPUS_DIR when set, the
/// build-time default otherwise.
std::string default_corpus_dir();

/// Loads the three-layer corpus (bfo-stub <- cco-stub <- sde) through its
/// catalog plus the entailment manifest. Throws CorpusCorrupt when a file
/// fails to parse or a manifest entry references a name outside the corpus
/// signature.
Corpus load_corpus(const std::string& directory = default_corpus_dir());

}  // namespace sdl
