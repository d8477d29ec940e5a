#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdl/classify.hpp"
#include "sdl/corpus.hpp"
#include "sdl/errors.hpp"
#include "sdl/knowledge_base.hpp"
#include "sdl/lint.hpp"
#include "sdl/parser.hpp"
#include "sdl/reasoner.hpp"
#include "sdl/render.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string rootFile;
    std::string catalogPath;
    std::string format = "text";
    std::size_t maxNodes = 100000;
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdl::Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

sdl::KnowledgeBase load_kb(const CommonOpts& opts) {
    sdl::Catalog catalog;
    if (!opts.catalogPath.empty()) {
        catalog = sdl::Catalog::from_file(opts.catalogPath);
    } else {
        fs::path sibling = fs::path(opts.rootFile).parent_path() / "catalog.json";
        if (fs::exists(sibling)) catalog = sdl::Catalog::from_file(sibling.string());
    }
    return sdl::KnowledgeBase::resolve_imports(opts.rootFile, catalog);
}

std::size_t max_nodes_from_env(std::size_t fallback) {
    if (const char* env = std::getenv("SDL_MAX_NODES"); env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

ordered_json clash_json(const sdl::KnowledgeBase& kb, const sdl::ClashInfo& clash) {
    ordered_json j;
    j["kind"] = sdl::to_string(clash.kind);
    j["detail"] = clash.description;
    ordered_json sources = ordered_json::array();
    for (int idx : clash.axiomIndices) {
        if (idx < 0) {
            sources.push_back("<query>");
        } else {
            const auto& src = kb.source_of(static_cast<std::size_t>(idx));
            sources.push_back(src.file + ":" + std::to_string(src.line));
        }
    }
    j["sources"] = std::move(sources);
    return j;
}

void print_clash(std::ostream& os, const sdl::KnowledgeBase& kb, const sdl::ClashInfo& clash) {
    os << "clash: " << sdl::to_string(clash.kind) << "\n  " << clash.description << "\n";
    for (int idx : clash.axiomIndices) {
        if (idx < 0) {
            os << "  from: <query>\n";
        } else {
            const auto& src = kb.source_of(static_cast<std::size_t>(idx));
            os << "  from: " << src.file << ":" << src.line << "\n";
        }
    }
}

int cmd_parse(const CommonOpts& opts) {
    sdl::Ontology onto = sdl::parse_ontology(read_text_file(opts.rootFile), opts.rootFile);
    if (opts.format == "json") {
        ordered_json j;
        j["iri"] = onto.iri;
        j["prefixes"] = ordered_json::array();
        for (const auto& p : onto.prefixes) j["prefixes"].push_back({p.prefix, p.iri});
        j["axiomCount"] = onto.axioms.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sdl::render(onto);
    }
    return 0;
}

int cmd_check(const CommonOpts& opts) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::Reasoner reasoner(kb, {opts.maxNodes});
    sdl::SatResult res = reasoner.is_consistent();
    if (opts.format == "json") {
        ordered_json j;
        j["consistent"] = res.satisfiable;
        if (res.clash) j["clash"] = clash_json(kb, *res.clash);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (res.satisfiable ? "consistent" : "inconsistent") << "\n";
        if (res.clash) print_clash(std::cout, kb, *res.clash);
    }
    return res.satisfiable ? 0 : 1;
}

int cmd_classify(const CommonOpts& opts) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::Reasoner reasoner(kb, {opts.maxNodes});
    sdl::Taxonomy tax;
    try {
        tax = sdl::classify(reasoner);
    } catch (const sdl::InconsistentKB& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << (opts.format == "json" ? sdl::taxonomy_to_json(tax)
                                        : sdl::taxonomy_to_text(tax));
    return 0;
}

int cmd_sat(const CommonOpts& opts, const std::string& conceptText) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::Reasoner reasoner(kb, {opts.maxNodes});
    sdl::ConceptPtr c = sdl::parse_concept(conceptText);
    sdl::SatResult res = reasoner.is_satisfiable(c);
    if (opts.format == "json") {
        ordered_json j;
        j["concept"] = sdl::render(c);
        j["satisfiable"] = res.satisfiable;
        if (res.clash) j["clash"] = clash_json(kb, *res.clash);
        if (res.witness) j["modelNodes"] = res.witness->nodes.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (res.satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
        if (res.clash) print_clash(std::cout, kb, *res.clash);
    }
    return res.satisfiable ? 0 : 1;
}

int cmd_subsumes(const CommonOpts& opts, const std::string& subText, const std::string& supText) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::Reasoner reasoner(kb, {opts.maxNodes});
    sdl::ConceptPtr sub = sdl::parse_concept(subText);
    sdl::ConceptPtr sup = sdl::parse_concept(supText);
    bool holds = reasoner.subsumes(sub, sup);
    if (opts.format == "json") {
        ordered_json j;
        j["sub"] = sdl::render(sub);
        j["sup"] = sdl::render(sup);
        j["subsumed"] = holds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (holds ? "yes" : "no") << "\n";
    }
    return holds ? 0 : 1;
}

int cmd_unsat_classes(const CommonOpts& opts) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::Reasoner reasoner(kb, {opts.maxNodes});
    auto flagged = sdl::unsatisfiable_classes(reasoner);
    if (opts.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& [name, clash] : flagged) {
            ordered_json e;
            e["class"] = name;
            e["clash"] = clash_json(kb, clash);
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (flagged.empty()) {
            std::cout << "no unsatisfiable classes\n";
        } else {
            for (const auto& [name, clash] : flagged)
                std::cout << sdl::render_name(name) << ": " << sdl::to_string(clash.kind) << "\n";
        }
    }
    return flagged.empty() ? 0 : 1;
}

int cmd_lint(const CommonOpts& opts, const std::string& configPath, bool includeImports) {
    sdl::KnowledgeBase kb = load_kb(opts);
    sdl::LintConfig config = sdl::LintConfig::defaults();
    if (!configPath.empty()) config = sdl::LintConfig::from_file(configPath);
    if (includeImports) config.includeImports = true;
    auto findings = sdl::lint(kb, config);
    std::cout << (opts.format == "json" ? sdl::findings_to_json_lines(findings)
                                        : sdl::findings_to_text(findings));
    for (const auto& f : findings)
        if (f.severity == sdl::LintSeverity::Error) return 1;
    return 0;
}

int cmd_corpus_verify(const CommonOpts& opts, const std::string& corpusDir) {
    std::string dir = corpusDir.empty() ? sdl::default_corpus_dir() : corpusDir;
    sdl::Corpus corpus = sdl::load_corpus(dir);
    sdl::Reasoner reasoner(corpus.kb, {opts.maxNodes});
    bool allOk = true;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok:   " : "FAIL: ") << what << "\n";
        allOk = allOk && ok;
    };

    sdl::SatResult consistent = reasoner.is_consistent();
    report(consistent.satisfiable, "corpus is consistent");

    auto flagged = sdl::unsatisfiable_classes(reasoner);
    report(flagged.empty(),
           "no owl:Nothing inferences (" + std::to_string(flagged.size()) + " flagged)");

    std::size_t matched = 0;
    for (const auto& entry : corpus.manifest.entries) {
        bool holds = sdl::entails(reasoner, entry.axiom);
        if (holds == entry.expected) {
            ++matched;
        } else {
            std::cout << "      manifest mismatch [" << entry.source << "]: " << entry.axiomText
                      << " expected " << (entry.expected ? "entailed" : "not entailed") << "\n";
        }
    }
    report(matched == corpus.manifest.entries.size(),
           "entailment manifest " + std::to_string(matched) + "/" +
               std::to_string(corpus.manifest.entries.size()));

    auto findings = sdl::lint(corpus.kb);
    std::size_t lintErrors = 0;
    for (const auto& f : findings)
        if (f.severity == sdl::LintSeverity::Error) ++lintErrors;
    report(lintErrors == 0, "lint reports zero errors (" + std::to_string(lintErrors) + ")");

    return allOk ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sdl - ontology toolkit: Manchester-syntax parser, description-logic "
                 "reasoner, classifier, and provenance linter"};
    app.require_subcommand(1);

    CommonOpts opts;
    opts.maxNodes = max_nodes_from_env(opts.maxNodes);

    auto add_common = [&](CLI::App* sub, bool needsFile = true) {
        if (needsFile)
            sub->add_option("file", opts.rootFile, "root ontology file (.omn)")->required();
        sub->add_option("--catalog", opts.catalogPath,
                        "catalog.json mapping import IRIs to files (default: sibling of the root file)");
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-nodes", opts.maxNodes,
                        "completion-graph node budget (env SDL_MAX_NODES)");
    };

    CLI::App* parseCmd = app.add_subcommand("parse", "parse a file and re-print it");
    add_common(parseCmd);

    CLI::App* checkCmd = app.add_subcommand("check", "resolve imports and decide KB consistency");
    add_common(checkCmd);

    CLI::App* classifyCmd = app.add_subcommand("classify", "compute the inferred class taxonomy");
    add_common(classifyCmd);

    std::string conceptText;
    CLI::App* satCmd = app.add_subcommand("sat", "decide satisfiability of a class expression");
    add_common(satCmd);
    satCmd->add_option("--concept", conceptText, "class expression (Manchester syntax)")
        ->required();

    std::string subText, supText;
    CLI::App* subsumesCmd = app.add_subcommand("subsumes", "decide a subsumption");
    add_common(subsumesCmd);
    subsumesCmd->add_option("--sub", subText, "subclass expression")->required();
    subsumesCmd->add_option("--sup", supText, "superclass expression")->required();

    CLI::App* unsatCmd =
        app.add_subcommand("unsat-classes", "list classes flagged as owl:Nothing inferences");
    add_common(unsatCmd);

    std::string lintConfigPath;
    bool includeImports = false;
    CLI::App* lintCmd = app.add_subcommand("lint", "run the authoring-discipline checks");
    add_common(lintCmd);
    lintCmd->add_option("--config", lintConfigPath, "lint.json configuration");
    lintCmd->add_flag("--include-imports", includeImports, "lint imported ontologies too");

    std::string corpusDir;
    CLI::App* corpusCmd = app.add_subcommand(
        "corpus-verify", "load the bundled corpus and run its full verification suite");
    add_common(corpusCmd, false);
    corpusCmd->add_option("--corpus-dir", corpusDir,
                          "corpus directory (default: built-in, env SDL_CORPUS_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parseCmd->parsed()) return cmd_parse(opts);
        if (checkCmd->parsed()) return cmd_check(opts);
        if (classifyCmd->parsed()) return cmd_classify(opts);
        if (satCmd->parsed()) return cmd_sat(opts, conceptText);
        if (subsumesCmd->parsed()) return cmd_subsumes(opts, subText, supText);
        if (unsatCmd->parsed()) return cmd_unsat_classes(opts);
        if (lintCmd->parsed()) return cmd_lint(opts, lintConfigPath, includeImports);
        if (corpusCmd->parsed()) return cmd_corpus_verify(opts, corpusDir);
    } catch (const sdl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
