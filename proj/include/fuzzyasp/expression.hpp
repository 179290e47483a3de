#pragma once

// Connective expressions over fuzzy literals, e.g. "!tfn(0.2,0.6,0.7) & (ifn(0.5,1) | not ifn(0,1))".
//
//   expr    := conj ('|' conj)*
//   conj    := agg ('&' agg)*
//   agg     := unary ('agg' unary)*
//   unary   := '!' unary | 'not' unary | primary
//   primary := fuzzy | '(' expr ')'

#include <string_view>

#include "connectives.hpp"
#include "program.hpp"

namespace fuzzyasp {

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, double tol) : parser_(text), tol_(tol) {}

    FuzzyTruth parse() {
        FuzzyTruth v = disjunction();
        if (!parser_.at_end()) parser_.fail("unexpected '" + parser_.peek().text + "'");
        return v;
    }

private:
    FuzzyTruth disjunction() {
        FuzzyTruth v = conjunction();
        while (parser_.accept_punct("|")) v = disj(v, conjunction());
        return v;
    }

    FuzzyTruth conjunction() {
        FuzzyTruth v = aggregation();
        while (parser_.accept_punct("&")) v = conj(v, aggregation());
        return v;
    }

    FuzzyTruth aggregation() {
        FuzzyTruth v = unary();
        while (parser_.peek().kind == Token::Kind::name && parser_.peek().text == "agg") {
            parser_.take();
            v = kagg(v, unary(), tol_);
        }
        return v;
    }

    FuzzyTruth unary() {
        if (parser_.accept_punct("!")) return negate(unary());
        if (parser_.peek().kind == Token::Kind::name && parser_.peek().text == "not") {
            parser_.take();
            return naf(unary());
        }
        if (parser_.accept_punct("(")) {
            FuzzyTruth v = disjunction();
            parser_.expect_punct(")");
            return v;
        }
        if (!parser_.at_fuzzy()) parser_.fail("expected a fuzzy literal" + parser_.found());
        return parser_.parse_fuzzy();
    }

    Parser parser_;
    double tol_;
};

} // namespace detail

/// Evaluates a connective expression.  Throws SyntaxError, DomainError or AggregationTie.
inline FuzzyTruth evaluate(std::string_view expression, double tol = default_tolerance) {
    return detail::ExpressionParser(expression, tol).parse();
}

} // namespace fuzzyasp
