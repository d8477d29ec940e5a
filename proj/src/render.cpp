#include "sdl/render.hpp"

#include <cctype>
#include <sstream>

#include "sdl/errors.hpp"
#include "sdl/lexer.hpp"

namespace sdl {

namespace {

bool valid_local_part(const std::string& s) {
    if (s.empty()) return false;
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(first) || first == '_' || first >= 0x80)) return false;
    for (unsigned char c : s)
        if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80)) return false;
    return true;
}

bool bare_renderable(const std::string& s) {
    return valid_local_part(s) && !is_reserved_word(s) && s.find(':') == std::string::npos;
}

bool iri_renderable(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (c == '<' || c == '>' || std::isspace(c)) return false;
    return true;
}

bool iri_like(const std::string& s) {
    // scheme ':' rest
    std::size_t colon = s.find(':');
    if (colon == std::string::npos || colon == 0) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (!(std::isalnum(c) || c == '+' || c == '.' || c == '-')) return false;
    }
    return iri_renderable(s);
}

}  // namespace

std::string render_name(const std::string& name) {
    for (const auto& [pfx, ns] : builtin_prefixes()) {
        if (name.size() > ns.size() && name.compare(0, ns.size(), ns) == 0) {
            std::string local = name.substr(ns.size());
            if (valid_local_part(local)) return pfx + ":" + local;
        }
    }
    if (bare_renderable(name)) return name;
    if (iri_like(name)) return "<" + name + ">";
    if (name.find('\'') == std::string::npos) return "'" + name + "'";
    // quote-bearing names can only have come from an IRI reference
    return "<" + name + ">";
}

std::string render_role(const RoleExpr& role) {
    std::string n = render_name(role.name);
    return role.inverted ? "inverse " + n : n;
}

namespace {

bool atomic_form(const ConceptExpr& c) {
    switch (c.kind) {
        case ConceptKind::Named:
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::OneOf:
            return true;
        default:
            return false;
    }
}

std::string sub(const ConceptExpr& c) {
    std::string s = render(c);
    return atomic_form(c) ? s : "(" + s + ")";
}

std::string escape_string(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render_value(const AnnotationValue& v) {
    switch (v.kind) {
        case AnnotationValue::Kind::StringLiteral: return "\"" + escape_string(v.text) + "\"";
        case AnnotationValue::Kind::Integer: return v.text;
        case AnnotationValue::Kind::Name: return render_name(v.text);
    }
    return {};
}

}  // namespace

std::string render(const ConceptExpr& c) {
    switch (c.kind) {
        case ConceptKind::Named: return render_name(c.name);
        case ConceptKind::Top: return "owl:Thing";
        case ConceptKind::Bottom: return "owl:Nothing";
        case ConceptKind::And:
        case ConceptKind::Or: {
            const char* op = c.kind == ConceptKind::And ? " and " : " or ";
            std::string s;
            for (std::size_t i = 0; i < c.args.size(); ++i) {
                if (i) s += op;
                s += sub(*c.args[i]);
            }
            return s;
        }
        case ConceptKind::Not: return "not " + sub(*c.args[0]);
        case ConceptKind::Some: return render_role(c.role) + " some " + sub(*c.args[0]);
        case ConceptKind::Only: return render_role(c.role) + " only " + sub(*c.args[0]);
        case ConceptKind::Min: return render_role(c.role) + " min " + std::to_string(c.number);
        case ConceptKind::Max: return render_role(c.role) + " max " + std::to_string(c.number);
        case ConceptKind::Exact:
            return render_role(c.role) + " exactly " + std::to_string(c.number);
        case ConceptKind::OneOf: {
            std::string s = "{";
            for (std::size_t i = 0; i < c.individuals.size(); ++i) {
                if (i) s += ", ";
                s += render_name(c.individuals[i]);
            }
            return s + "}";
        }
        case ConceptKind::HasValue:
            return render_role(c.role) + " value " + render_name(c.individuals[0]);
    }
    return {};
}

std::string render_axiom(const Axiom& ax) {
    switch (ax.kind) {
        case AxiomKind::SubClassOf:
            return render(*ax.concepts[0]) + " SubClassOf: " + render(*ax.concepts[1]);
        case AxiomKind::EquivalentClasses:
            if (ax.concepts.size() == 2)
                return render(*ax.concepts[0]) + " EquivalentTo: " + render(*ax.concepts[1]);
            break;
        default:
            break;
    }
    throw Error("axiom kind has no one-line rendering");
}

namespace {

class FrameWriter {
public:
    explicit FrameWriter(std::ostringstream& os) : os_(os) {}

    void write(const Ontology& onto) {
        for (const auto& p : onto.prefixes)
            os_ << "Prefix: " << p.prefix << ": <" << p.iri << ">\n";
        if (!onto.prefixes.empty()) os_ << "\n";
        if (!onto.iri.empty() || !onto.annotations.empty()) {
            os_ << "Ontology:";
            if (!onto.iri.empty()) os_ << " <" << onto.iri << ">";
            os_ << "\n";
            if (!onto.annotations.empty()) {
                os_ << "Annotations:";
                for (std::size_t i = 0; i < onto.annotations.size(); ++i) {
                    if (i) os_ << ",";
                    os_ << " " << render_name(onto.annotations[i].property) << " "
                        << render_value(onto.annotations[i].value);
                }
                os_ << "\n";
            }
            os_ << "\n";
        }
        for (const auto& ax : onto.axioms) emit(ax);
    }

private:
    void open_frame(DeclKind kind, const std::string& name) {
        static const char* headers[] = {"Class:", "ObjectProperty:", "AnnotationProperty:",
                                        "Individual:"};
        os_ << "\n" << headers[static_cast<int>(kind)] << " " << render_name(name) << "\n";
        frameKind_ = kind;
        frameSubject_ = name;
        open_ = true;
    }

    void require_frame(DeclKind kind, const std::string& subject, const char* what) {
        if (!open_ || frameKind_ != kind || frameSubject_ != subject)
            throw Error(std::string("cannot render ") + what + " outside a frame for its subject");
    }

    void emit(const Axiom& ax) {
        switch (ax.kind) {
            case AxiomKind::Declaration:
                open_frame(ax.declKind, ax.names[0]);
                return;
            case AxiomKind::Import:
                os_ << "Import: <" << ax.names[0] << ">\n";
                open_ = false;
                return;
            case AxiomKind::SubClassOf:
                emit_class_clause(ax, "SubClassOf:", "a SubClassOf axiom");
                return;
            case AxiomKind::EquivalentClasses:
                emit_class_clause(ax, "EquivalentTo:", "an EquivalentClasses axiom");
                return;
            case AxiomKind::DisjointClasses:
                emit_class_clause(ax, "DisjointWith:", "a DisjointClasses axiom");
                return;
            case AxiomKind::SubPropertyOf:
                emit_role_clause(ax, "SubPropertyOf:");
                return;
            case AxiomKind::EquivalentProperties:
                emit_role_clause(ax, "EquivalentTo:");
                return;
            case AxiomKind::InverseProperties:
                emit_role_clause(ax, "InverseOf:");
                return;
            case AxiomKind::TransitiveProperty:
                require_frame(DeclKind::ObjectProperty, ax.roles[0].name, "a characteristic");
                os_ << "  Characteristics: Transitive\n";
                return;
            case AxiomKind::Domain:
            case AxiomKind::Range:
                require_frame(DeclKind::ObjectProperty, ax.roles[0].name, "a domain/range axiom");
                os_ << "  " << (ax.kind == AxiomKind::Domain ? "Domain:" : "Range:") << " "
                    << render(*ax.concepts[0]) << "\n";
                return;
            case AxiomKind::ClassAssertion:
                require_frame(DeclKind::NamedIndividual, ax.names[0], "a class assertion");
                os_ << "  Types: " << render(*ax.concepts[0]) << "\n";
                return;
            case AxiomKind::PropertyAssertion:
                require_frame(DeclKind::NamedIndividual, ax.names[0], "a property assertion");
                os_ << "  Facts: " << render_role(ax.roles[0]) << " " << render_name(ax.names[1])
                    << "\n";
                return;
            case AxiomKind::AnnotationAssertion:
                if (!open_ || frameSubject_ != ax.names[0])
                    throw Error("cannot render an annotation outside a frame for its subject");
                os_ << "  Annotations: " << render_name(ax.names[1]) << " "
                    << render_value(ax.value) << "\n";
                return;
        }
    }

    void emit_class_clause(const Axiom& ax, const char* clause, const char* what) {
        if (ax.concepts.size() != 2 || ax.concepts[0]->kind != ConceptKind::Named)
            throw Error(std::string(what) + " is not frame-shaped (named first member required)");
        require_frame(DeclKind::Class, ax.concepts[0]->name, what);
        os_ << "  " << clause << " " << render(*ax.concepts[1]) << "\n";
    }

    void emit_role_clause(const Axiom& ax, const char* clause) {
        if (ax.roles.size() != 2 || ax.roles[0].inverted)
            throw Error("role axiom is not frame-shaped");
        require_frame(DeclKind::ObjectProperty, ax.roles[0].name, "a role axiom");
        os_ << "  " << clause << " " << render_role(ax.roles[1]) << "\n";
    }

    std::ostringstream& os_;
    DeclKind frameKind_ = DeclKind::Class;
    std::string frameSubject_;
    bool open_ = false;
};

}  // namespace

std::string render(const Ontology& onto) {
    std::ostringstream os;
    FrameWriter(os).write(onto);
    return os.str();
}

}  // namespace sdl
