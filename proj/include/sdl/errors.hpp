#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdl {

/// Source position, 1-based. Column counts bytes, not code points.
struct SourceLoc {
    std::string file;
    int line = 0;
    int column = 0;

    std::string to_string() const;
};

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unterminated quoted name / string literal, stray byte, etc.
class LexError : public Error {
public:
    LexError(std::string msg, SourceLoc loc);
    const SourceLoc& where() const { return loc_; }

private:
    SourceLoc loc_;
};

/// Syntax error. Carries the set of token spellings that would have been accepted.
class ParseError : public Error {
public:
    ParseError(std::string msg, SourceLoc loc, std::vector<std::string> expected = {});
    const SourceLoc& where() const { return loc_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourceLoc loc_;
    std::vector<std::string> expected_;
};

/// Import IRI has no catalog entry.
class MissingImport : public Error {
public:
    explicit MissingImport(const std::string& iri);
    const std::string& iri() const { return iri_; }

private:
    std::string iri_;
};

/// Import graph has a cycle; `path` lists the offending IRI chain, first == last.
class ImportCycle : public Error {
public:
    explicit ImportCycle(std::vector<std::string> path);
    const std::vector<std::string>& path() const { return path_; }

private:
    std::vector<std::string> path_;
};

/// Construct outside the supported reasoning tier (nominals, datatypes,
/// cardinality over non-simple roles).
class UnsupportedFeature : public Error {
public:
    explicit UnsupportedFeature(const std::string& msg) : Error(msg) {}
};

/// Node budget or enumeration budget exceeded.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

/// Classification requested on an inconsistent knowledge base.
class InconsistentKB : public Error {
public:
    explicit InconsistentKB(const std::string& msg) : Error(msg) {}
};

/// Bundled corpus failed to load or its manifest references unknown names.
class CorpusCorrupt : public Error {
public:
    explicit CorpusCorrupt(const std::string& msg) : Error(msg) {}
};

}  // namespace sdl
