#include "sdl/errors.hpp"

#include <sstream>

namespace sdl {

std::string SourceLoc::to_string() const {
    std::ostringstream os;
    os << (file.empty() ? "<input>" : file) << ":" << line << ":" << column;
    return os.str();
}

namespace {
std::string with_loc(const std::string& msg, const SourceLoc& loc) {
    return loc.to_string() + ": " + msg;
}
}  // namespace

LexError::LexError(std::string msg, SourceLoc loc)
    : Error(with_loc(msg, loc)), loc_(std::move(loc)) {}

ParseError::ParseError(std::string msg, SourceLoc loc, std::vector<std::string> expected)
    : Error(with_loc(msg, loc)), loc_(std::move(loc)), expected_(std::move(expected)) {}

MissingImport::MissingImport(const std::string& iri)
    : Error("no catalog entry for import <" + iri + ">"), iri_(iri) {}

namespace {
std::string cycle_msg(const std::vector<std::string>& path) {
    std::string s = "import cycle: ";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += " -> ";
        s += path[i];
    }
    return s;
}
}  // namespace

ImportCycle::ImportCycle(std::vector<std::string> path)
    : Error(cycle_msg(path)), path_(std::move(path)) {}

}  // namespace sdl
