#pragma once

// Declarative semantics over ground programs: consistency, rule
// satisfaction, supportedness, reduct, the k-minimal supported model of a
// positive program, and answer-set search and verification.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "closure.hpp"
#include "connectives.hpp"
#include "program.hpp"

namespace fuzzyasp {

/// Assignment of a value to every literal of a ground program, indexed by LiteralId.
class Interpretation {
public:
    Interpretation() = default;
    /// All literals at full ignorance, IFN(0, 1).
    explicit Interpretation(std::size_t literal_count) : values_(literal_count) {}

    std::size_t size() const noexcept { return values_.size(); }
    const FuzzyTruth& operator[](LiteralId id) const { return values_.at(id); }
    FuzzyTruth& operator[](LiteralId id) { return values_.at(id); }
    const std::vector<FuzzyTruth>& values() const noexcept { return values_; }

private:
    std::vector<FuzzyTruth> values_;
};

inline bool approx_equal(const Interpretation& x, const Interpretation& y, double tol = default_tolerance) {
    if (x.size() != y.size()) return false;
    for (LiteralId id = 0; id < x.size(); ++id)
        if (!equal(x[id], y[id], tol)) return false;
    return true;
}

struct SolverOptions {
    double tolerance = default_tolerance;
    std::size_t max_iterations = 10000;
    bool trace = false;
    bool check_monotone = true;
    /// Cap on naf-value guesses tried by solve().
    std::size_t max_guesses = 100000;
    std::size_t max_rounds = 64;
    /// Operator depth of the closure whose values seed the naf-value guesses.
    std::size_t guess_depth = 3;
    std::size_t max_closure = 5000;
};

enum class Status { answer_set, not_supported, not_model, not_minimal, inconsistent, non_convergent, non_monotone };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::answer_set: return "AnswerSet";
    case Status::not_supported: return "NotSupported";
    case Status::not_model: return "NotModel";
    case Status::not_minimal: return "NotMinimal";
    case Status::inconsistent: return "Inconsistent";
    case Status::non_convergent: return "NonConvergent";
    case Status::non_monotone: return "NonMonotone";
    }
    return "?";
}

struct Diagnosis {
    Status status = Status::answer_set;
    std::optional<std::size_t> rule;
    std::optional<LiteralId> literal;
    std::string detail;

    bool ok() const noexcept { return status == Status::answer_set; }
};

/// Name of the positive atom of a literal ("-p(a)" -> "p(a)").
inline std::string atom_name(const GroundProgram& p, LiteralId id) {
    const std::string& n = p.name(id);
    return n.starts_with('-') ? n.substr(1) : n;
}

/// First atom a whose literals a and -a carry equal uncertainty but
/// non-complementary truth degrees.
inline std::optional<LiteralId> is_inconsistent(const GroundProgram& p, const Interpretation& i,
                                                double tol = default_tolerance) {
    for (LiteralId id = 0; id < p.literal_count(); ++id) {
        if (p.negated(id)) continue;
        const auto neg = p.complement(id);
        if (!neg) continue;
        const Measure pos_m = measure(i[id]);
        const Measure neg_m = measure(i[*neg]);
        if (std::abs(pos_m.k - neg_m.k) <= tol && std::abs(pos_m.t - (1.0 - neg_m.t)) > tol) return id;
    }
    return std::nullopt;
}

/// Left-to-right product of the body (naf-literals after positive items), then the rule weight.
inline FuzzyTruth eval_body(const Interpretation& i, const GroundRule& r) {
    FuzzyTruth value = certainly_true();
    for (const auto& item : r.positive_body) {
        if (const auto* id = std::get_if<LiteralId>(&item)) value = conj(value, i[*id]);
        else value = conj(value, std::get<FuzzyTruth>(item));
    }
    for (LiteralId id : r.naf_body) value = conj(value, naf(i[id]));
    return conj(value, r.weight);
}

/// Head equal to the body value, or strictly above it in knowledge or in truth.
inline bool satisfies(const FuzzyTruth& head, const FuzzyTruth& body, double tol = default_tolerance) {
    if (equal(head, body, tol)) return true;
    const Measure h = measure(head), b = measure(body);
    return h.k < b.k - tol || h.t > b.t + tol;
}

inline bool satisfies(const Interpretation& i, const GroundRule& r, double tol = default_tolerance) {
    return satisfies(i[r.head], eval_body(i, r), tol);
}

inline std::optional<Diagnosis> find_unsatisfied(const GroundProgram& p, const Interpretation& i,
                                                 double tol = default_tolerance) {
    for (std::size_t r = 0; r < p.rules().size(); ++r) {
        if (!satisfies(i, p.rules()[r], tol)) {
            return Diagnosis{Status::not_model, r, p.rules()[r].head,
                             "rule '" + render(p, p.rules()[r]) + "' is not satisfied"};
        }
    }
    return std::nullopt;
}

namespace detail {

// Disjunction of the body values of every rule for `head`, in program order.
inline FuzzyTruth combined_support(const GroundProgram& p, const Interpretation& i, LiteralId head) {
    const auto rules = p.rules_for(head);
    FuzzyTruth value = eval_body(i, p.rules()[rules.front()]);
    for (std::size_t n = 1; n < rules.size(); ++n) value = disj(value, eval_body(i, p.rules()[rules[n]]));
    return value;
}

struct StepResult {
    Interpretation next;
    std::optional<LiteralId> tie;
};

// One simultaneous pass recomputing every head literal from `i`.  When both
// l and -l have rules, l takes the knowledge aggregation of its own support
// against the negated support of -l.  Literals without rules keep their value.
inline StepResult step(const GroundProgram& p, const Interpretation& i, double tol) {
    const std::size_t n = p.literal_count();
    std::vector<std::optional<FuzzyTruth>> support(n);
    for (LiteralId id = 0; id < n; ++id)
        if (p.has_rules(id)) support[id] = combined_support(p, i, id);

    StepResult out{i, std::nullopt};
    for (LiteralId id = 0; id < n; ++id) {
        if (!support[id]) continue;
        const auto other = p.complement(id);
        if (other && support[*other]) {
            auto agg = try_kagg(*support[id], negate(*support[*other]), tol);
            if (!agg) {
                out.tie = p.negated(id) ? *other : id;
                return out;
            }
            out.next[id] = *agg;
        } else {
            out.next[id] = *support[id];
        }
    }
    return out;
}

} // namespace detail

/// Checks that every head literal carries exactly the value its rules support:
/// a lone rule's body value, the disjunction over several rules, and the
/// knowledge aggregation against the complementary literal when both have rules.
inline std::optional<Diagnosis> is_supported(const GroundProgram& p, const Interpretation& i,
                                             double tol = default_tolerance) {
    for (LiteralId id = 0; id < p.literal_count(); ++id) {
        if (!p.has_rules(id)) continue;
        const auto rules = p.rules_for(id);
        const FuzzyTruth own = detail::combined_support(p, i, id);
        FuzzyTruth expected = own;
        std::string how = rules.size() == 1 ? "its rule body" : "the disjunction of its rule bodies";
        if (const auto other = p.complement(id); other && p.has_rules(*other)) {
            const auto agg = try_kagg(own, negate(detail::combined_support(p, i, *other)), tol);
            if (!agg) {
                return Diagnosis{Status::not_supported, rules.front(), id,
                                 "knowledge aggregation for " + atom_name(p, id) + " has no result"};
            }
            expected = *agg;
            how = "the knowledge aggregation with " + p.name(*other);
        }
        if (!equal(i[id], expected, tol)) {
            return Diagnosis{Status::not_supported, rules.front(), id,
                             p.name(id) + " is " + render(i[id]) + " but " + how + " gives " + render(expected)};
        }
    }
    return std::nullopt;
}

/// Replaces every naf-literal `not b` by the constant naf(I(b)); the literal table is kept.
inline GroundProgram reduct(const GroundProgram& p, const Interpretation& i) {
    std::vector<GroundRule> rules = p.rules();
    for (auto& r : rules) {
        for (LiteralId id : r.naf_body) r.positive_body.emplace_back(naf(i[id]));
        r.naf_body.clear();
    }
    return p.with_rules(std::move(rules));
}

enum class FixpointStatus { converged, non_convergent, inconsistent, non_monotone };

struct Fixpoint {
    FixpointStatus status = FixpointStatus::converged;
    Interpretation model;
    std::size_t iterations = 0;
    std::optional<LiteralId> literal;
    std::string detail;
    std::vector<Interpretation> trace;

    bool converged() const noexcept { return status == FixpointStatus::converged; }
};

namespace detail {

inline Fixpoint iterate(const GroundProgram& p, const SolverOptions& opts, bool check_monotone) {
    Fixpoint out;
    constexpr std::size_t polish_passes = 64;
    std::size_t settled = 0;
    Interpretation current(p.literal_count());
    if (opts.trace) out.trace.push_back(current);
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        out.iterations = it;
        StepResult s = step(p, current, opts.tolerance);
        if (s.tie) {
            out.status = FixpointStatus::inconsistent;
            out.literal = s.tie;
            out.detail = "contradictory evidence for " + p.name(*s.tie) + " with equal uncertainty";
            out.model = std::move(current);
            return out;
        }
        if (check_monotone) {
            for (LiteralId id = 0; id < p.literal_count(); ++id) {
                if (uncertainty_degree(s.next[id]) > uncertainty_degree(current[id]) + opts.tolerance) {
                    out.status = FixpointStatus::non_monotone;
                    out.literal = id;
                    out.detail = "uncertainty of " + p.name(id) + " increased at pass " + std::to_string(it);
                    out.model = std::move(s.next);
                    return out;
                }
            }
        }
        if (opts.trace) out.trace.push_back(s.next);
        // once within tolerance, keep going for a few passes to reach the exact limit
        if (approx_equal(s.next, current, opts.tolerance)) ++settled;
        const bool done = approx_equal(s.next, current, 0.0) || settled > polish_passes;
        current = std::move(s.next);
        if (done) {
            out.model = std::move(current);
            if (auto bad = is_inconsistent(p, out.model, opts.tolerance)) {
                out.status = FixpointStatus::inconsistent;
                out.literal = bad;
                out.detail = "inconsistent at " + p.name(*bad);
            }
            return out;
        }
    }
    out.status = FixpointStatus::non_convergent;
    out.detail = "no fixpoint within " + std::to_string(opts.max_iterations) + " passes";
    out.model = std::move(current);
    return out;
}

} // namespace detail

/// Fixpoint of the support operator of a positive program, iterated from full ignorance.
inline Fixpoint kmin_supported_model(const GroundProgram& p, const SolverOptions& opts = {}) {
    if (p.has_naf()) throw Error("kmin_supported_model requires a program without naf-literals");
    return detail::iterate(p, opts, opts.check_monotone);
}

/// Answer-set check: consistent supported model of p that reproduces itself as
/// the k-minimal supported model of its reduct.
inline Diagnosis verify_answer_set(const GroundProgram& p, const Interpretation& i, const SolverOptions& opts = {}) {
    if (i.size() != p.literal_count()) throw Error("interpretation does not match the program's literals");
    const double tol = opts.tolerance;
    if (auto d = is_supported(p, i, tol)) return *d;
    if (auto d = find_unsatisfied(p, i, tol)) return *d;
    if (auto bad = is_inconsistent(p, i, tol))
        return {Status::inconsistent, std::nullopt, bad, "inconsistent at " + p.name(*bad)};

    SolverOptions inner = opts;
    inner.trace = false;
    const Fixpoint fx = kmin_supported_model(reduct(p, i), inner);
    switch (fx.status) {
    case FixpointStatus::converged: break;
    case FixpointStatus::non_convergent: return {Status::non_convergent, std::nullopt, std::nullopt, fx.detail};
    case FixpointStatus::inconsistent: return {Status::inconsistent, std::nullopt, fx.literal, fx.detail};
    case FixpointStatus::non_monotone: return {Status::non_monotone, std::nullopt, fx.literal, fx.detail};
    }
    for (LiteralId id = 0; id < p.literal_count(); ++id) {
        if (!equal(fx.model[id], i[id], tol)) {
            return {Status::not_minimal, std::nullopt, id,
                    "reduct fixpoint gives " + p.name(id) + " = " + render(fx.model[id]) + ", not " +
                        render(i[id])};
        }
    }
    return {};
}

struct Candidate {
    std::optional<Interpretation> interpretation;
    Diagnosis diagnosis;
    std::size_t iterations = 0;
    std::string origin;
};

struct SolveReport {
    GroundProgram program;
    std::vector<Interpretation> answer_sets;
    std::vector<Candidate> candidates;
    std::size_t iterations = 0;
    /// False when the naf-value search hit a cap before closing.
    bool search_complete = true;
    std::vector<Interpretation> trace;
};

namespace detail {

inline Diagnosis diagnosis_of(const Fixpoint& fx) {
    switch (fx.status) {
    case FixpointStatus::converged: return {};
    case FixpointStatus::non_convergent: return {Status::non_convergent, std::nullopt, fx.literal, fx.detail};
    case FixpointStatus::inconsistent: return {Status::inconsistent, std::nullopt, fx.literal, fx.detail};
    case FixpointStatus::non_monotone: return {Status::non_monotone, std::nullopt, fx.literal, fx.detail};
    }
    return {};
}

class CandidateSet {
public:
    CandidateSet(const GroundProgram& p, const SolverOptions& opts, SolveReport& report)
        : program_(p), opts_(opts), report_(report) {}

    void add(const Fixpoint& fx, const std::string& origin) {
        report_.iterations += fx.iterations;
        if (!fx.converged()) {
            const Diagnosis d = diagnosis_of(fx);
            for (const auto& c : report_.candidates)
                if (!c.interpretation && c.diagnosis.status == d.status && c.diagnosis.literal == d.literal) return;
            report_.candidates.push_back({std::nullopt, d, fx.iterations, origin});
            return;
        }
        for (const auto& c : report_.candidates)
            if (c.interpretation && approx_equal(*c.interpretation, fx.model, opts_.tolerance)) return;
        Diagnosis d = verify_answer_set(program_, fx.model, opts_);
        if (d.ok()) report_.answer_sets.push_back(fx.model);
        report_.candidates.push_back({fx.model, std::move(d), fx.iterations, origin});
    }

private:
    const GroundProgram& program_;
    const SolverOptions& opts_;
    SolveReport& report_;
};

// Answer sets depend on the interpretation only through the naf values of
// literals that occur under `not`, and naf reads a single parameter b.
// Guesses for those parameters start from the point values of the operator
// closure of the program's constants, and from `start` when given.  From each guess the map
// "b values of the k-minimal model of the reduct" is followed until it
// repeats exactly; its fixed points are the candidates.  Parameters of new
// fixed points are fed back into the guesses.
inline std::vector<double> guess_seeds(const GroundProgram& p, const SolverOptions& opts, bool& complete) {
    std::vector<FuzzyTruth> constants{unknown(), certainly_true()};
    for (const auto& r : p.rules()) {
        constants.push_back(r.weight);
        for (const auto& item : r.positive_body)
            if (const auto* v = std::get_if<FuzzyTruth>(&item)) constants.push_back(*v);
    }
    std::vector<FuzzyTruth> values;
    for (std::size_t depth = opts.guess_depth;; --depth) {
        try {
            values = closure_enumerate(constants, depth, opts.max_closure, opts.tolerance);
            break;
        } catch (const ClosureTooLarge&) {
            complete = false;
            if (depth == 0) throw;
        }
    }
    // a guess b gives the reduct the constant naf = IFN(1-b, 1-b); those are
    // taken from the points of the closure
    std::vector<double> seeds{0.0, 1.0};
    for (const auto& v : values)
        if (v.is_point()) seeds.push_back(1.0 - v.b());
    std::sort(seeds.begin(), seeds.end());
    std::vector<double> out;
    for (double s : seeds)
        if (out.empty() || s - out.back() > opts.tolerance) out.push_back(s);
    return out;
}

inline void search_naf_guesses(const GroundProgram& p, const SolverOptions& opts, SolveReport& report,
                               CandidateSet& candidates, const std::optional<Interpretation>& start) {
    std::vector<LiteralId> targets;
    for (const auto& r : p.rules())
        for (LiteralId id : r.naf_body)
            if (p.has_rules(id) && std::find(targets.begin(), targets.end(), id) == targets.end())
                targets.push_back(id);

    std::vector<std::vector<double>> pools;
    if (!targets.empty()) pools.assign(targets.size(), guess_seeds(p, opts, report.search_complete));
    std::set<std::vector<std::size_t>> explored;
    std::set<std::vector<double>> visited;
    SolverOptions inner = opts;
    inner.trace = false;
    bool grew = false;

    auto params = [&](const Interpretation& m) {
        std::vector<double> out;
        for (LiteralId id : targets) out.push_back(m[id].b());
        return out;
    };
    auto close_to = [&](const std::vector<double>& x, const std::vector<double>& y) {
        for (std::size_t t = 0; t < x.size(); ++t)
            if (std::abs(x[t] - y[t]) > opts.tolerance) return false;
        return true;
    };
    auto feed = [&](const std::vector<double>& beta) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            auto& pool = pools[t];
            const bool known =
                std::any_of(pool.begin(), pool.end(), [&](double v) { return std::abs(v - beta[t]) <= opts.tolerance; });
            if (!known) {
                pool.push_back(beta[t]);
                grew = true;
            }
        }
    };
    auto follow = [&](std::vector<double> beta) {
        for (std::size_t n = 0; n < opts.max_iterations; ++n) {
            if (!visited.insert(beta).second) return;
            Interpretation guess(p.literal_count());
            for (std::size_t t = 0; t < targets.size(); ++t) guess[targets[t]] = ifn(beta[t], beta[t]);
            const Fixpoint fx = kmin_supported_model(reduct(p, guess), inner);
            if (!fx.converged()) {
                candidates.add(fx, "naf guess");
                return;
            }
            std::vector<double> next = params(fx.model);
            if (next == beta || (visited.count(next) && close_to(next, beta))) {
                candidates.add(fx, "naf guess");
                feed(next);
                return;
            }
            beta = std::move(next);
        }
        report.search_complete = false;
    };

    if (start) follow(params(*start));
    for (std::size_t round = 0;; ++round) {
        if (round == opts.max_rounds) {
            report.search_complete = false;
            return;
        }
        std::vector<std::size_t> sizes;
        for (const auto& pool : pools) sizes.push_back(pool.size());
        grew = false;

        std::vector<std::size_t> odometer(targets.size(), 0);
        for (;;) {
            if (explored.insert(odometer).second) {
                if (explored.size() > opts.max_guesses) {
                    report.search_complete = false;
                    return;
                }
                std::vector<double> beta;
                for (std::size_t t = 0; t < targets.size(); ++t) beta.push_back(pools[t][odometer[t]]);
                follow(std::move(beta));
            }
            std::size_t i = 0;
            while (i < odometer.size() && ++odometer[i] == sizes[i]) odometer[i++] = 0;
            if (i == odometer.size()) break;
        }
        if (!grew) return;
    }
}

} // namespace detail

/// Computes and verifies the answer sets of a ground program.
///
/// Positive programs have a single candidate, their k-minimal supported
/// model.  Otherwise the support operator is iterated with naf evaluated on
/// the evolving interpretation, and its limit (when there is one) joins the
/// starting points of the naf-value search.  Every distinct candidate is
/// verified and reported.
inline SolveReport solve(const GroundProgram& p, const SolverOptions& opts = {}) {
    SolveReport report;
    report.program = p;
    detail::CandidateSet candidates(report.program, opts, report);
    if (!p.has_naf()) {
        Fixpoint fx = kmin_supported_model(p, opts);
        report.trace = std::move(fx.trace);
        candidates.add(fx, "k-minimal model");
        return report;
    }
    Fixpoint fx = detail::iterate(p, opts, false);
    report.trace = std::move(fx.trace);
    report.iterations += fx.iterations;
    std::optional<Interpretation> start;
    if (fx.converged()) start = fx.model;
    else candidates.add(fx, "operator iteration");
    detail::search_naf_guesses(report.program, opts, report, candidates, start);
    return report;
}

inline SolveReport solve(const Program& program, const SolverOptions& opts = {}) {
    return solve(ground(program), opts);
}

} // namespace fuzzyasp
