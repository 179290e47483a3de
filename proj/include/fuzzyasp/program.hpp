#pragma once

// Weighted rule programs: abstract syntax, text parser, renderer and a
// naive Herbrand grounder.
//
//   program   := statement*
//   statement := [name ':'] literal ['<-' item (',' item)*] '.' ['[' fuzzy ']']
//   item      := 'not' literal | fuzzy | literal
//   literal   := '-'* atom
//   atom      := name ['(' term (',' term)* ')']
//   term      := Variable | name | number | fuzzy
//   fuzzy     := 'ifn' '(' num ',' num ')' | 'tfn' '(' num ',' num ',' num ')'
//              | 'trfn' '(' num ',' num ',' num ',' num ')'
//   num       := ['-'] decimal ['/' decimal]
//
// Names start with a lowercase letter, variables with an uppercase letter or
// '_'.  '%' starts a comment that runs to the end of the line.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "connectives.hpp"
#include "format.hpp"

namespace fuzzyasp {

struct Term {
    enum class Kind { variable, constant };
    Kind kind = Kind::constant;
    std::string text; // fuzzy-literal constants hold their rendered form

    bool is_variable() const noexcept { return kind == Kind::variable; }
    friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const {
        return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
    }
    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
    Atom atom;
    bool negated = false; // classical negation

    friend bool operator==(const Literal&, const Literal&) = default;
};

using BodyItem = std::variant<Literal, FuzzyTruth>;

struct Rule {
    Literal head;
    std::vector<BodyItem> positive_body;
    std::vector<Literal> naf_body;
    FuzzyTruth weight = certainly_true();
    std::optional<std::string> label;

    /// Body made only of fuzzy constants (an empty body included).
    bool is_fact() const {
        return naf_body.empty() &&
               std::all_of(positive_body.begin(), positive_body.end(),
                           [](const BodyItem& b) { return std::holds_alternative<FuzzyTruth>(b); });
    }
};

struct Program {
    std::vector<Rule> rules;
};

// ---------------------------------------------------------------------------
// Rendering

inline std::string render(const Atom& atom) {
    std::string out = atom.predicate;
    if (!atom.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < atom.args.size(); ++i) {
            if (i) out += ',';
            out += atom.args[i].text;
        }
        out += ')';
    }
    return out;
}

inline std::string render(const Literal& lit) { return (lit.negated ? "-" : "") + render(lit.atom); }

inline std::string render(const Rule& rule) {
    std::string out;
    if (rule.label) out += *rule.label + ": ";
    out += render(rule.head);
    std::vector<std::string> items;
    for (const auto& item : rule.positive_body) {
        if (const auto* lit = std::get_if<Literal>(&item)) items.push_back(render(*lit));
        else items.push_back(render(std::get<FuzzyTruth>(item)));
    }
    for (const auto& lit : rule.naf_body) items.push_back("not " + render(lit));
    if (!items.empty()) {
        out += " <- ";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ", ";
            out += items[i];
        }
    }
    out += '.';
    if (!(rule.weight == certainly_true())) out += " [" + render(rule.weight) + "]";
    return out;
}

inline std::string render(const Program& program) {
    std::string out;
    for (const auto& rule : program.rules) out += render(rule) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace detail {

struct Token {
    enum class Kind { name, variable, number, punct, arrow, end };
    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> tokenize() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token tok;
            tok.line = line_;
            tok.column = column_;
            if (pos_ >= src_.size()) {
                out.push_back(tok);
                return out;
            }
            const char ch = src_[pos_];
            if (std::islower(static_cast<unsigned char>(ch))) {
                tok.kind = Token::Kind::name;
                tok.text = take_word();
            } else if (std::isupper(static_cast<unsigned char>(ch)) || ch == '_') {
                tok.kind = Token::Kind::variable;
                tok.text = take_word();
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                tok.kind = Token::Kind::number;
                tok.text = take_number();
            } else if (ch == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                tok.kind = Token::Kind::arrow;
                tok.text = "<-";
                advance(2);
            } else if (std::string_view("(),.[]:-/!&|").find(ch) != std::string_view::npos) {
                tok.kind = Token::Kind::punct;
                tok.text = std::string(1, ch);
                advance(1);
            } else {
                throw SyntaxError(std::string("unexpected character '") + ch + "'", line_, column_);
            }
            out.push_back(std::move(tok));
        }
    }

private:
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance(1);
            } else {
                break;
            }
        }
    }

    std::string take_word() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            advance(1);
        return std::string(src_.substr(start, pos_ - start));
    }

    bool digit_at(std::size_t i) const {
        return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
    }

    std::string take_number() {
        const std::size_t start = pos_;
        while (digit_at(pos_)) advance(1);
        // a '.' belongs to the number only when a digit follows; otherwise it ends a rule
        if (pos_ < src_.size() && src_[pos_] == '.' && digit_at(pos_ + 1)) {
            advance(1);
            while (digit_at(pos_)) advance(1);
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
            if (digit_at(look)) {
                advance(look - pos_);
                while (digit_at(pos_)) advance(1);
            }
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

inline bool is_fuzzy_keyword(std::string_view s) { return s == "ifn" || s == "tfn" || s == "trfn"; }

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(Lexer(src).tokenize()) {}

    Program parse_program() {
        Program program;
        while (!at_end()) program.rules.push_back(parse_statement());
        return program;
    }

    FuzzyTruth parse_single_fuzzy() {
        FuzzyTruth value = parse_fuzzy();
        if (!at_end()) fail("unexpected '" + peek().text + "' after fuzzy literal");
        return value;
    }

    // Expression support for the eval command shares the token stream.
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    Token take() {
        Token t = peek();
        if (!at_end()) ++pos_;
        return t;
    }
    bool accept_punct(std::string_view p) {
        if (peek().kind == Token::Kind::punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail("expected '" + std::string(p) + "'" + found());
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, peek().line, peek().column);
    }
    std::string found() const {
        return at_end() ? " but reached end of input" : " but found '" + peek().text + "'";
    }

    bool at_fuzzy() const {
        return peek().kind == Token::Kind::name && is_fuzzy_keyword(peek().text) &&
               peek(1).kind == Token::Kind::punct && peek(1).text == "(";
    }

    FuzzyTruth parse_fuzzy() {
        const Token kw = take();
        if (kw.kind != Token::Kind::name || !is_fuzzy_keyword(kw.text))
            throw SyntaxError("expected ifn, tfn or trfn", kw.line, kw.column);
        expect_punct("(");
        std::vector<double> params{parse_real()};
        while (accept_punct(",")) params.push_back(parse_real());
        expect_punct(")");
        const std::size_t arity = kw.text == "ifn" ? 2 : kw.text == "tfn" ? 3 : 4;
        if (params.size() != arity) {
            throw SyntaxError(kw.text + " takes " + std::to_string(arity) + " parameters, got " +
                                  std::to_string(params.size()),
                              kw.line, kw.column);
        }
        try {
            if (arity == 2) return ifn(params[0], params[1]);
            if (arity == 3) return tfn(params[0], params[1], params[2]);
            return trfn(params[0], params[1], params[2], params[3]);
        } catch (const Error& e) {
            throw DomainError(e.what(), kw.line, kw.column);
        }
    }

private:
    double parse_unsigned() {
        const Token t = take();
        if (t.kind != Token::Kind::number)
            throw SyntaxError("expected a number", t.line, t.column);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw SyntaxError("malformed number '" + t.text + "'", t.line, t.column);
        return v;
    }

    double parse_real() {
        const bool negative = accept_punct("-");
        const Token& start = peek();
        double v = parse_unsigned();
        if (accept_punct("/")) {
            const double den = parse_unsigned();
            if (den == 0.0) throw DomainError("division by zero in fraction", start.line, start.column);
            v /= den;
        }
        return negative ? -v : v;
    }

    Rule parse_statement() {
        Rule rule;
        if (peek().kind == Token::Kind::name && peek(1).kind == Token::Kind::punct &&
            peek(1).text == ":") {
            rule.label = take().text;
            take();
        }
        rule.head = parse_literal();
        if (peek().kind == Token::Kind::arrow) {
            take();
            do {
                parse_item(rule);
            } while (accept_punct(","));
        }
        expect_punct(".");
        if (accept_punct("[")) {
            rule.weight = parse_fuzzy();
            expect_punct("]");
        }
        return rule;
    }

    void parse_item(Rule& rule) {
        if (peek().kind == Token::Kind::name && peek().text == "not") {
            take();
            rule.naf_body.push_back(parse_literal());
        } else if (at_fuzzy()) {
            rule.positive_body.emplace_back(parse_fuzzy());
        } else {
            rule.positive_body.emplace_back(parse_literal());
        }
    }

    Literal parse_literal() {
        Literal lit;
        while (accept_punct("-")) lit.negated = !lit.negated;
        lit.atom = parse_atom();
        return lit;
    }

    Atom parse_atom() {
        const Token t = peek();
        if (t.kind != Token::Kind::name) fail("expected an atom" + found());
        if (t.text == "not" || is_fuzzy_keyword(t.text))
            fail("'" + t.text + "' is reserved and cannot name a predicate");
        take();
        Atom atom{t.text, {}};
        if (accept_punct("(")) {
            atom.args.push_back(parse_term());
            while (accept_punct(",")) atom.args.push_back(parse_term());
            expect_punct(")");
        }
        return atom;
    }

    Term parse_term() {
        const Token t = peek();
        switch (t.kind) {
        case Token::Kind::variable:
            take();
            return {Term::Kind::variable, t.text};
        case Token::Kind::number:
            take();
            return {Term::Kind::constant, t.text};
        case Token::Kind::name:
            if (at_fuzzy()) return {Term::Kind::constant, render(parse_fuzzy())};
            take();
            if (peek().kind == Token::Kind::punct && peek().text == "(")
                throw SyntaxError("function symbols are not allowed ('" + t.text + "(...)')", t.line,
                                  t.column);
            return {Term::Kind::constant, t.text};
        default:
            fail("expected a term" + found());
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Program parse(std::string_view source) { return detail::Parser(source).parse_program(); }

/// Parses a standalone fuzzy literal such as "tfn(0,1/3,1)".
inline FuzzyTruth parse_fuzzy(std::string_view text) { return detail::Parser(text).parse_single_fuzzy(); }

// ---------------------------------------------------------------------------
// Ground programs

using LiteralId = std::size_t;

struct GroundRule {
    using Item = std::variant<LiteralId, FuzzyTruth>;

    LiteralId head = 0;
    std::vector<Item> positive_body;
    std::vector<LiteralId> naf_body;
    FuzzyTruth weight = certainly_true();
    std::optional<std::string> label;
};

/// Ground rules over an interned literal table, with a head index.
class GroundProgram {
public:
    LiteralId intern(const std::string& name) {
        if (auto it = ids_.find(name); it != ids_.end()) return it->second;
        const LiteralId id = names_.size();
        names_.push_back(name);
        ids_.emplace(name, id);
        heads_.emplace_back();
        return id;
    }

    std::optional<LiteralId> find(std::string_view name) const {
        if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
        return std::nullopt;
    }

    std::size_t literal_count() const noexcept { return names_.size(); }
    const std::string& name(LiteralId id) const { return names_.at(id); }
    bool negated(LiteralId id) const { return names_.at(id).starts_with('-'); }

    /// The classically negated counterpart, when it occurs in the program.
    std::optional<LiteralId> complement(LiteralId id) const {
        const std::string& n = names_.at(id);
        return find(n.starts_with('-') ? n.substr(1) : "-" + n);
    }

    void add_rule(GroundRule rule) {
        heads_.at(rule.head).push_back(rules_.size());
        rules_.push_back(std::move(rule));
    }

    const std::vector<GroundRule>& rules() const noexcept { return rules_; }

    /// Indices of the rules whose head is `id`, in program order.
    std::span<const std::size_t> rules_for(LiteralId id) const { return heads_.at(id); }

    bool has_rules(LiteralId id) const { return !heads_.at(id).empty(); }

    bool has_naf() const {
        return std::any_of(rules_.begin(), rules_.end(), [](const GroundRule& r) { return !r.naf_body.empty(); });
    }

    /// Same literal table, different rules.
    GroundProgram with_rules(std::vector<GroundRule> rules) const {
        GroundProgram out;
        out.names_ = names_;
        out.ids_ = ids_;
        out.heads_.assign(names_.size(), {});
        for (auto& r : rules) out.add_rule(std::move(r));
        return out;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, LiteralId> ids_;
    std::vector<GroundRule> rules_;
    std::vector<std::vector<std::size_t>> heads_;
};

inline std::string render(const GroundProgram& program, const GroundRule& rule) {
    std::string out;
    if (rule.label) out += *rule.label + ": ";
    out += program.name(rule.head);
    std::vector<std::string> items;
    for (const auto& item : rule.positive_body) {
        if (const auto* id = std::get_if<LiteralId>(&item)) items.push_back(program.name(*id));
        else items.push_back(render(std::get<FuzzyTruth>(item)));
    }
    for (LiteralId id : rule.naf_body) items.push_back("not " + program.name(id));
    if (!items.empty()) {
        out += " <- ";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ", ";
            out += items[i];
        }
    }
    out += '.';
    if (!(rule.weight == certainly_true())) out += " [" + render(rule.weight) + "]";
    return out;
}

inline std::string render(const GroundProgram& program) {
    std::string out;
    for (const auto& rule : program.rules()) out += render(program, rule) + "\n";
    return out;
}

namespace detail {

inline void collect_variables(const Atom& atom, std::vector<std::string>& vars) {
    for (const auto& t : atom.args)
        if (t.is_variable() && std::find(vars.begin(), vars.end(), t.text) == vars.end())
            vars.push_back(t.text);
}

inline std::string ground_name(const Literal& lit, const std::vector<std::string>& vars,
                               const std::vector<const std::string*>& values) {
    Literal g = lit;
    for (auto& t : g.atom.args) {
        if (!t.is_variable()) continue;
        const auto pos = std::find(vars.begin(), vars.end(), t.text) - vars.begin();
        t = {Term::Kind::constant, *values[pos]};
    }
    return render(g);
}

} // namespace detail

/// Herbrand grounding over the constants occurring in the program.
///
/// Every variable of a rule must occur in a positive body literal; otherwise
/// UnsafeRule is thrown naming the variable.
inline GroundProgram ground(const Program& program) {
    std::vector<std::string> constants;
    auto note_constants = [&](const Atom& atom) {
        for (const auto& t : atom.args)
            if (!t.is_variable() && std::find(constants.begin(), constants.end(), t.text) == constants.end())
                constants.push_back(t.text);
    };
    for (const auto& rule : program.rules) {
        note_constants(rule.head.atom);
        for (const auto& item : rule.positive_body)
            if (const auto* lit = std::get_if<Literal>(&item)) note_constants(lit->atom);
        for (const auto& lit : rule.naf_body) note_constants(lit.atom);
    }

    GroundProgram out;
    for (std::size_t index = 0; index < program.rules.size(); ++index) {
        const Rule& rule = program.rules[index];

        std::vector<std::string> bound;
        for (const auto& item : rule.positive_body)
            if (const auto* lit = std::get_if<Literal>(&item)) detail::collect_variables(lit->atom, bound);
        std::vector<std::string> vars = bound;
        detail::collect_variables(rule.head.atom, vars);
        for (const auto& lit : rule.naf_body) detail::collect_variables(lit.atom, vars);
        if (vars.size() > bound.size()) {
            const std::string& v = vars[bound.size()];
            throw UnsafeRule("unsafe rule " + std::to_string(index + 1) + " '" + render(rule) +
                                 "': variable " + v + " does not occur in a positive body literal",
                             v);
        }

        if (!vars.empty() && constants.empty()) continue;
        std::vector<std::size_t> odometer(vars.size(), 0);
        std::vector<const std::string*> values(vars.size());
        for (;;) {
            for (std::size_t i = 0; i < vars.size(); ++i) values[i] = &constants[odometer[i]];

            GroundRule g;
            g.head = out.intern(detail::ground_name(rule.head, vars, values));
            for (const auto& item : rule.positive_body) {
                if (const auto* lit = std::get_if<Literal>(&item))
                    g.positive_body.emplace_back(out.intern(detail::ground_name(*lit, vars, values)));
                else
                    g.positive_body.emplace_back(std::get<FuzzyTruth>(item));
            }
            for (const auto& lit : rule.naf_body)
                g.naf_body.push_back(out.intern(detail::ground_name(lit, vars, values)));
            g.weight = rule.weight;
            g.label = rule.label;
            out.add_rule(std::move(g));

            std::size_t i = 0;
            while (i < odometer.size() && ++odometer[i] == constants.size()) odometer[i++] = 0;
            if (i == odometer.size()) break;
        }
    }
    return out;
}

} // namespace fuzzyasp
