#include "ontolith/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

namespace ontolith::onto {

namespace {

const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const std::string kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
const std::string kOwlNs = "http://www.w3.org/2002/07/owl#";
const std::string kXsdNs = "http://www.w3.org/2001/XMLSchema#";

const std::string kType = kRdfNs + "type";
const std::string kLabel = kRdfsNs + "label";
const std::string kComment = kRdfsNs + "comment";
const std::string kSubClassOf = kRdfsNs + "subClassOf";
const std::string kDomain = kRdfsNs + "domain";
const std::string kRange = kRdfsNs + "range";
const std::string kEquivalentClass = kOwlNs + "equivalentClass";
const std::string kDisjointWith = kOwlNs + "disjointWith";
const std::string kOwlClass = kOwlNs + "Class";
const std::string kObjectProperty = kOwlNs + "ObjectProperty";
const std::string kDatatypeProperty = kOwlNs + "DatatypeProperty";

struct Literal {
    std::string value;
    std::string lang;     // without '@'
    std::string datatype; // full IRI
};

using ObjectTerm = std::variant<std::string, Literal>; // IRI or literal

struct RawTriple {
    std::string subject;
    std::string predicate;
    ObjectTerm object;
};

// ---------------------------------------------------------------- lexer

enum class TokKind { Iri, Pname, String, AtName, HatHat, A, Dot, Semi, Comma, Number, End };

struct Token {
    TokKind kind;
    std::string text;   // iri body / pname / string value / at-name / number
    int line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    [[noreturn]] void fail(int line, int col, const std::string& msg) const {
        std::ostringstream os;
        os << "line " << line << ", col " << col << ": " << msg;
        throw Error(ErrorCode::SyntaxError, os.str());
    }

    Token next() {
        skip_ws_and_comments();
        int line = line_, col = col_;
        if (eof()) return {TokKind::End, "", line, col};
        char c = peek();
        if (c == '<') return lex_iri();
        if (c == '"') return lex_string();
        if (c == '@') {
            get();
            std::string name;
            while (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '-')) {
                name += get();
            }
            if (name.empty()) fail(line, col, "expected name after '@'");
            return {TokKind::AtName, name, line, col};
        }
        if (c == '^') {
            get();
            if (eof() || peek() != '^') fail(line, col, "expected '^^'");
            get();
            return {TokKind::HatHat, "^^", line, col};
        }
        if (c == '.') { get(); return {TokKind::Dot, ".", line, col}; }
        if (c == ';') { get(); return {TokKind::Semi, ";", line, col}; }
        if (c == ',') { get(); return {TokKind::Comma, ",", line, col}; }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
            return lex_number();
        }
        if (is_pname_char(c) || c == ':') return lex_pname();
        fail(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() {
        char c = text_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    static bool is_pname_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    Token lex_iri() {
        int line = line_, col = col_;
        get(); // <
        std::string body;
        while (!eof() && peek() != '>') {
            char c = get();
            if (c == '\n') fail(line, col, "unterminated IRI");
            body += c;
        }
        if (eof()) fail(line, col, "unterminated IRI");
        get(); // >
        return {TokKind::Iri, body, line, col};
    }

    Token lex_string() {
        int line = line_, col = col_;
        get(); // "
        std::string value;
        while (true) {
            if (eof()) fail(line, col, "unterminated string literal");
            char c = get();
            if (c == '"') break;
            if (c == '\n') fail(line, col, "newline inside string literal");
            if (c == '\\') {
                if (eof()) fail(line, col, "dangling escape");
                char e = get();
                switch (e) {
                case 'n': value += '\n'; break;
                case 'r': value += '\r'; break;
                case 't': value += '\t'; break;
                case '\\': value += '\\'; break;
                case '"': value += '"'; break;
                case 'u': {
                    unsigned code = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (eof()) fail(line, col, "truncated \\u escape");
                        char h = get();
                        code <<= 4;
                        if (h >= '0' && h <= '9') code += static_cast<unsigned>(h - '0');
                        else if (h >= 'a' && h <= 'f') code += static_cast<unsigned>(h - 'a' + 10);
                        else if (h >= 'A' && h <= 'F') code += static_cast<unsigned>(h - 'A' + 10);
                        else fail(line_, col_, "invalid \\u escape digit");
                    }
                    // UTF-8 encode the code point (BMP only).
                    if (code < 0x80) {
                        value += static_cast<char>(code);
                    } else if (code < 0x800) {
                        value += static_cast<char>(0xC0 | (code >> 6));
                        value += static_cast<char>(0x80 | (code & 0x3F));
                    } else {
                        value += static_cast<char>(0xE0 | (code >> 12));
                        value += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                        value += static_cast<char>(0x80 | (code & 0x3F));
                    }
                    break;
                }
                default: fail(line_, col_, std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                value += c;
            }
        }
        return {TokKind::String, value, line, col};
    }

    Token lex_number() {
        int line = line_, col = col_;
        std::string body;
        if (peek() == '+' || peek() == '-') body += get();
        bool saw_dot = false;
        while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                          (peek() == '.' && !saw_dot))) {
            if (peek() == '.') {
                // A dot not followed by a digit terminates the statement.
                if (pos_ + 1 >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                    break;
                }
                saw_dot = true;
            }
            body += get();
        }
        if (body.empty() || body == "+" || body == "-") fail(line, col, "malformed number");
        return {TokKind::Number, body, line, col};
    }

    Token lex_pname() {
        int line = line_, col = col_;
        std::string body;
        while (!eof() && (is_pname_char(peek()) || peek() == ':')) {
            body += get();
        }
        // A trailing dot belongs to the statement, not the name.
        while (!body.empty() && body.back() == '.') {
            body.pop_back();
            --pos_;
            --col_;
        }
        if (body == "a") return {TokKind::A, body, line, col};
        if (body.find(':') == std::string::npos) {
            fail(line, col, "expected prefixed name, found '" + body + "'");
        }
        return {TokKind::Pname, body, line, col};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    void run() {
        while (tok_.kind != TokKind::End) {
            if (tok_.kind == TokKind::AtName) {
                directive();
            } else {
                triples();
            }
        }
    }

    std::vector<RawTriple> triples_out;
    std::map<std::string, std::string> prefixes;
    std::string base_iri;

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(TokKind k, const char* what) {
        if (tok_.kind != k) {
            lexer_.fail(tok_.line, tok_.col, std::string("expected ") + what);
        }
    }

    std::string resolve_pname(const Token& t) {
        auto colon = t.text.find(':');
        std::string prefix = t.text.substr(0, colon);
        std::string local = t.text.substr(colon + 1);
        auto it = prefixes.find(prefix);
        if (it == prefixes.end()) {
            std::ostringstream os;
            os << "line " << t.line << ": prefix '" << prefix << "' is not declared";
            throw Error(ErrorCode::UnresolvedPrefix, os.str());
        }
        return it->second + local;
    }

    std::string iri_term(const char* what) {
        if (tok_.kind == TokKind::Iri) {
            std::string iri = tok_.text;
            advance();
            return iri;
        }
        if (tok_.kind == TokKind::Pname) {
            std::string iri = resolve_pname(tok_);
            advance();
            return iri;
        }
        lexer_.fail(tok_.line, tok_.col, std::string("expected IRI as ") + what);
    }

    void directive() {
        if (tok_.text == "prefix") {
            advance();
            expect(TokKind::Pname, "prefix name");
            std::string name = tok_.text;
            if (name.back() != ':') {
                lexer_.fail(tok_.line, tok_.col, "prefix declaration must end with ':'");
            }
            name.pop_back();
            advance();
            expect(TokKind::Iri, "namespace IRI");
            prefixes[name] = tok_.text;
            if (name.empty() && base_iri.empty()) base_iri = tok_.text;
            advance();
            expect(TokKind::Dot, "'.' after @prefix");
            advance();
        } else if (tok_.text == "base") {
            advance();
            expect(TokKind::Iri, "base IRI");
            base_iri = tok_.text;
            advance();
            expect(TokKind::Dot, "'.' after @base");
            advance();
        } else {
            lexer_.fail(tok_.line, tok_.col, "unknown directive '@" + tok_.text + "'");
        }
    }

    ObjectTerm object_term() {
        if (tok_.kind == TokKind::Iri || tok_.kind == TokKind::Pname) {
            return iri_term("object");
        }
        if (tok_.kind == TokKind::String) {
            Literal lit;
            lit.value = tok_.text;
            advance();
            if (tok_.kind == TokKind::AtName) {
                lit.lang = tok_.text;
                advance();
            } else if (tok_.kind == TokKind::HatHat) {
                advance();
                lit.datatype = iri_term("datatype");
            }
            return lit;
        }
        if (tok_.kind == TokKind::Number) {
            Literal lit;
            lit.value = tok_.text;
            lit.datatype = tok_.text.find('.') == std::string::npos ? kXsdNs + "integer"
                                                                    : kXsdNs + "decimal";
            advance();
            return lit;
        }
        lexer_.fail(tok_.line, tok_.col, "expected IRI or literal object");
    }

    void triples() {
        std::string subject = iri_term("subject");
        while (true) {
            std::string predicate;
            if (tok_.kind == TokKind::A) {
                predicate = kType;
                advance();
            } else {
                predicate = iri_term("predicate");
            }
            while (true) {
                triples_out.push_back({subject, predicate, object_term()});
                if (tok_.kind == TokKind::Comma) {
                    advance();
                    continue;
                }
                break;
            }
            if (tok_.kind == TokKind::Semi) {
                advance();
                // A dangling ';' before '.' is legal Turtle.
                if (tok_.kind == TokKind::Dot) break;
                continue;
            }
            break;
        }
        expect(TokKind::Dot, "'.' at end of statement");
        advance();
    }

    Lexer lexer_;
    Token tok_;
};

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

std::string render_object(const ObjectTerm& term) {
    if (std::holds_alternative<std::string>(term)) {
        return "<" + std::get<std::string>(term) + ">";
    }
    const Literal& lit = std::get<Literal>(term);
    std::string out = "\"" + escape_literal(lit.value) + "\"";
    if (!lit.lang.empty()) out += "@" + lit.lang;
    else if (!lit.datatype.empty()) out += "^^<" + lit.datatype + ">";
    return out;
}

bool plain(const Literal& lit) { return lit.lang.empty() && lit.datatype.empty(); }

} // namespace

Ontology parse_turtle(const std::string& text) {
    Parser parser(text);
    parser.run();

    Ontology o;
    o.set_base_iri(parser.base_iri);

    std::vector<const RawTriple*> deferred;

    // Stage 1: explicit type declarations.
    for (const auto& t : parser.triples_out) {
        if (t.predicate != kType || !std::holds_alternative<std::string>(t.object)) {
            deferred.push_back(&t);
            continue;
        }
        const std::string& type = std::get<std::string>(t.object);
        if (type == kOwlClass) {
            o.add_class({t.subject, "", ""});
        } else if (type == kObjectProperty) {
            o.add_property({t.subject, PropertyKind::Object, "", "", "", ""});
        } else if (type == kDatatypeProperty) {
            o.add_property({t.subject, PropertyKind::Data, "", "", "", ""});
        } else {
            o.add_passthrough({t.subject, t.predicate, render_object(t.object)});
        }
    }

    // Stage 2: axioms; endpoints become classes implicitly.
    std::vector<const RawTriple*> rest;
    for (const auto* t : deferred) {
        std::optional<AxiomKind> kind;
        if (t->predicate == kSubClassOf) kind = AxiomKind::SubClassOf;
        else if (t->predicate == kEquivalentClass) kind = AxiomKind::EquivalentClass;
        else if (t->predicate == kDisjointWith) kind = AxiomKind::DisjointWith;
        if (kind && std::holds_alternative<std::string>(t->object)) {
            const std::string& obj = std::get<std::string>(t->object);
            if (!o.has_class(t->subject) && !o.has_property(t->subject)) o.add_class({t->subject, "", ""});
            if (!o.has_class(obj) && !o.has_property(obj)) o.add_class({obj, "", ""});
            o.add_axiom({*kind, t->subject, obj});
        } else {
            rest.push_back(t);
        }
    }

    // Stage 3: domain/range; subjects become properties implicitly.
    deferred.clear();
    for (const auto* t : rest) {
        bool is_domain = t->predicate == kDomain;
        bool is_range = t->predicate == kRange;
        if ((is_domain || is_range) && std::holds_alternative<std::string>(t->object) &&
            !o.has_class(t->subject)) {
            const std::string& obj = std::get<std::string>(t->object);
            if (!o.has_property(t->subject)) {
                PropertyKind kind = is_range && obj.rfind(kXsdNs, 0) != 0 ? PropertyKind::Object
                                                                         : PropertyKind::Data;
                o.add_property({t->subject, kind, "", "", "", ""});
            }
            OntProperty patch{t->subject, o.properties().at(t->subject).kind, "", "", "", ""};
            if (is_domain) patch.domain = obj;
            else patch.range = obj;
            if ((is_domain && !o.properties().at(t->subject).domain.empty()) ||
                (is_range && !o.properties().at(t->subject).range.empty())) {
                // A second domain/range is outside the subset; keep it verbatim.
                o.add_passthrough({t->subject, t->predicate, render_object(t->object)});
            } else {
                o.add_property(std::move(patch));
            }
        } else {
            deferred.push_back(t);
        }
    }

    // Stage 4: labels and comments (plain literals only).
    for (const auto* t : deferred) {
        bool is_label = t->predicate == kLabel;
        bool is_comment = t->predicate == kComment;
        if ((is_label || is_comment) && std::holds_alternative<Literal>(t->object) &&
            plain(std::get<Literal>(t->object))) {
            const std::string& value = std::get<Literal>(t->object).value;
            if (o.has_property(t->subject)) {
                const OntProperty& existing = o.properties().at(t->subject);
                if ((is_label && existing.label.empty()) || (is_comment && existing.comment.empty())) {
                    OntProperty patch{t->subject, existing.kind, "", "", "", ""};
                    (is_label ? patch.label : patch.comment) = value;
                    o.add_property(std::move(patch));
                } else {
                    o.add_passthrough({t->subject, t->predicate, render_object(t->object)});
                }
                continue;
            }
            if (!o.has_class(t->subject)) o.add_class({t->subject, "", ""});
            const OntClass& existing = o.classes().at(t->subject);
            if ((is_label && existing.label.empty()) || (is_comment && existing.comment.empty())) {
                OntClass patch{t->subject, "", ""};
                (is_label ? patch.label : patch.comment) = value;
                o.add_class(std::move(patch));
            } else {
                o.add_passthrough({t->subject, t->predicate, render_object(t->object)});
            }
        } else {
            o.add_passthrough({t->subject, t->predicate, render_object(t->object)});
        }
    }

    return o;
}

namespace {

struct PrefixTable {
    std::vector<std::pair<std::string, std::string>> entries; // prefix -> namespace

    static bool local_ok(const std::string& s) {
        if (s.empty()) return true;
        if (s.front() == '-' || s.front() == '.' || s.back() == '.') return false;
        return std::all_of(s.begin(), s.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
    }

    std::string compact(const std::string& iri) const {
        for (const auto& [prefix, ns] : entries) {
            if (!ns.empty() && iri.rfind(ns, 0) == 0) {
                std::string local = iri.substr(ns.size());
                if (local_ok(local)) return prefix + ":" + local;
            }
        }
        return "<" + iri + ">";
    }
};

} // namespace

std::string serialize_turtle(const Ontology& o) {
    PrefixTable table;
    if (!o.base_iri().empty()) table.entries.push_back({"", o.base_iri()});
    table.entries.push_back({"owl", kOwlNs});
    table.entries.push_back({"rdf", kRdfNs});
    table.entries.push_back({"rdfs", kRdfsNs});
    table.entries.push_back({"xsd", kXsdNs});

    std::ostringstream out;
    for (const auto& [prefix, ns] : table.entries) {
        out << "@prefix " << prefix << ": <" << ns << "> .\n";
    }

    // Gather per-subject axiom lists (normalized subjects only).
    std::map<std::string, std::vector<std::string>> subclass_of, equivalent, disjoint;
    for (const auto& a : o.axioms()) {
        switch (a.kind) {
        case AxiomKind::SubClassOf: subclass_of[a.subject].push_back(a.object); break;
        case AxiomKind::EquivalentClass: equivalent[a.subject].push_back(a.object); break;
        case AxiomKind::DisjointWith: disjoint[a.subject].push_back(a.object); break;
        }
    }

    std::set<std::string> subjects;
    for (const auto& [iri, c] : o.classes()) subjects.insert(iri);
    for (const auto& [iri, p] : o.properties()) subjects.insert(iri);
    for (const auto& m : {subclass_of, equivalent, disjoint}) {
        for (const auto& [iri, objs] : m) subjects.insert(iri);
    }

    for (const auto& subject : subjects) {
        std::vector<std::string> lines;
        auto emit = [&](const std::string& predicate, const std::string& object) {
            lines.push_back(predicate + " " + object);
        };
        if (o.has_class(subject)) {
            const OntClass& c = o.classes().at(subject);
            emit("a", "owl:Class");
            if (!c.label.empty()) emit("rdfs:label", "\"" + escape_literal(c.label) + "\"");
            if (!c.comment.empty()) emit("rdfs:comment", "\"" + escape_literal(c.comment) + "\"");
        } else if (o.has_property(subject)) {
            const OntProperty& p = o.properties().at(subject);
            emit("a", p.kind == PropertyKind::Object ? "owl:ObjectProperty" : "owl:DatatypeProperty");
            if (!p.label.empty()) emit("rdfs:label", "\"" + escape_literal(p.label) + "\"");
            if (!p.comment.empty()) emit("rdfs:comment", "\"" + escape_literal(p.comment) + "\"");
        }
        auto emit_axioms = [&](const char* predicate,
                               const std::map<std::string, std::vector<std::string>>& m) {
            auto it = m.find(subject);
            if (it == m.end()) return;
            std::vector<std::string> objs = it->second;
            std::sort(objs.begin(), objs.end());
            std::string joined;
            for (std::size_t i = 0; i < objs.size(); ++i) {
                if (i) joined += ", ";
                joined += table.compact(objs[i]);
            }
            emit(predicate, joined);
        };
        emit_axioms("rdfs:subClassOf", subclass_of);
        emit_axioms("owl:equivalentClass", equivalent);
        emit_axioms("owl:disjointWith", disjoint);
        if (o.has_property(subject)) {
            const OntProperty& p = o.properties().at(subject);
            if (!p.domain.empty()) emit("rdfs:domain", table.compact(p.domain));
            if (!p.range.empty()) emit("rdfs:range", table.compact(p.range));
        }
        if (lines.empty()) continue;
        out << "\n" << table.compact(subject);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            out << (i == 0 ? " " : "    ") << lines[i] << (i + 1 < lines.size() ? " ;\n" : " .\n");
        }
    }

    if (!o.passthrough().empty()) {
        out << "\n";
        for (const auto& t : o.passthrough()) {
            out << "<" << t.subject << "> <" << t.predicate << "> " << t.object << " .\n";
        }
    }
    return out.str();
}

} // namespace ontolith::onto
