#pragma once

/**
 * @file cli.hpp
 * @brief The subcommands of the command-line tool as functions from input text to a report
 * and an exit code, so that they can be tested without a process boundary.
 */

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pointed/datum.hpp"
#include "pointed/datum_io.hpp"
#include "pointed/error.hpp"
#include "pointed/freealg.hpp"
#include "pointed/linking.hpp"
#include "pointed/nichols.hpp"
#include "pointed/parallel.hpp"
#include "pointed/report.hpp"

namespace pointed {

struct CliOptions {
    ExecutionOptions exec;
    std::optional<std::size_t> max_degree;
    std::optional<int64_t> p;
    std::size_t s = 1;
    std::size_t theta_max = 1;
    std::vector<std::string> types;
    bool links = false;
};

struct CommandResult {
    Report report;
    int exit_code = 0;
};

namespace detail {

inline std::string join_strings(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

inline std::string join_dims(const std::vector<int64_t>& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(std::to_string(x));
    return join_strings(parts);
}

inline std::string roots_string(const std::vector<Root>& roots) {
    std::vector<std::string> parts;
    for (const auto& r : roots) parts.push_back(to_string(r));
    return join_strings(parts);
}

inline std::string pair_list(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) return "none";
    std::vector<std::string> parts;
    for (const auto& [i, j] : pairs) parts.push_back(std::to_string(i + 1) + "-" + std::to_string(j + 1));
    return join_strings(parts);
}

/// Re-parseable echo of the input under datum.* keys.
inline void echo_datum(Report& r, const Datum& d, const LinkingDatum& ld) {
    r.add("datum.orders", join_integers(d.group.orders()));
    for (std::size_t i = 0; i < d.theta(); ++i) {
        r.add("datum.vertex." + std::to_string(i + 1) + ".g", join_integers(d.g[i].exponents()));
        r.add("datum.vertex." + std::to_string(i + 1) + ".chi", join_integers(d.chi[i].exponents()));
    }
    std::size_t k = 0;
    for (const auto& [ij, v] : ld.lambda) {
        const std::string key = "datum.link." + std::to_string(++k);
        r.add(key + ".i", ij.first + 1);
        r.add(key + ".j", ij.second + 1);
        r.add(key + ".lambda", v ? v->to_string() : "symbolic");
    }
}

inline void describe_structure(Report& r, const Datum& d) {
    const int64_t L = d.conductor();
    r.add("theta", d.theta());
    r.add("group.order", d.group.order());
    r.add("conductor", L);
    for (std::size_t i = 0; i < d.theta(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < d.theta(); ++j) row.push_back(d.braiding(i, j).to_string(L));
        r.add("braiding.row." + std::to_string(i + 1), join_strings(row));
    }
    r.add("cartan", to_string(d.cartan));
    r.add("dynkin.type", d.roots.classification.type_label());
    const auto& comps = d.roots.classification.components;
    r.add("components.count", comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string key = "component." + std::to_string(c + 1);
        std::vector<std::string> vs;
        for (int v : comps[c].vertices) vs.push_back(std::to_string(v + 1));
        r.add(key + ".vertices", join_strings(vs));
        r.add(key + ".type", comps[c].type.label());
        r.add(key + ".N", d.components.N[c]);
        r.add(key + ".positive_roots", d.roots.component_size(c));
    }
    r.add("positive_roots.count", d.roots.size());
    r.add("positive_roots", roots_string(d.roots.positive_roots));
    std::vector<std::string> word;
    for (int i : d.roots.reduced_word) word.push_back(std::to_string(i + 1));
    r.add("reduced_word", join_strings(word));
    r.add("convex_order", roots_string(d.roots.convex_order));
}

inline DatumFile read_input(const std::string& text, const std::string& source) { return parse_datum_file(text, source); }

}  // namespace detail

/// Runs body; errors become a report with error.kind and error.message and their exit code.
inline CommandResult run_command(const std::string& name, const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        CommandResult out;
        out.report.add("command", name);
        out.report.add("status", "error");
        out.report.add("error.kind", to_string(e.kind()));
        out.report.add("error.message", e.what());
        out.exit_code = exit_code(e.kind());
        return out;
    }
}

/// Parse, validate, classify.
inline CommandResult cmd_check(const std::string& text, const std::string& source, const CliOptions& = {}) {
    return run_command("check", [&] {
        const auto f = detail::read_input(text, source);
        const Datum d = datum_from_file(f);
        const LinkingDatum ld = linking_from_file(f, d);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "check");
        detail::echo_datum(r, d, ld);
        detail::describe_structure(r, d);
        r.add("linkable_pairs", detail::pair_list(linkable_pairs(d)));
        r.add("odd_orders", d.odd_orders);
        r.add("g2_not_divisible_by_3", d.g2_not_divisible_by_3);
        r.add("expected_dimension", d.expected_dimension());
        r.add("status", "valid");
        return out;
    });
}

/**
 * Graded dimensions of the Nichols algebra from symmetrizer ranks against the PBW Hilbert
 * series. Degrees default to the top PBW degree plus one, which also witnesses vanishing.
 */
inline CommandResult cmd_nichols(const std::string& text, const std::string& source, const CliOptions& opt = {}) {
    return run_command("nichols", [&] {
        const auto f = detail::read_input(text, source);
        const Datum d = datum_from_file(f);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "nichols");
        detail::echo_datum(r, d, {});
        r.add("dynkin.type", d.roots.classification.type_label());
        const int64_t top = top_pbw_degree(d.roots, d.components.N);
        const std::size_t n_max = opt.max_degree.value_or(static_cast<std::size_t>(top) + 1);
        r.add("max_degree", n_max);
        const auto nd = nichols_dims(d.braiding, n_max, opt.exec);
        const auto pbw = pbw_hilbert_series(d.roots, d.components.N, top);
        const std::size_t computed = nd.dims.size() - 1;
        // degrees known exactly: up to the last computed one, or all when vanishing was reached
        const std::size_t known = nd.truncated ? computed : std::max<std::size_t>(computed, static_cast<std::size_t>(top)) + 1;
        const bool budget_truncated = !nd.stop_reason.empty();
        bool mismatch = false;
        for (std::size_t n = 0; n <= std::min<std::size_t>(known, n_max); ++n) {
            const int64_t a = n < nd.dims.size() ? nd.dims[n] : 0;
            const int64_t b = n < pbw.dims.size() ? pbw.dims[n] : 0;
            const bool eq = a == b;
            mismatch = mismatch || !eq;
            r.add("degree." + std::to_string(n), std::to_string(a) + " " + std::to_string(b) + " " + (eq ? "MATCH" : "MISMATCH"));
        }
        r.add("nichols.dims", detail::join_dims(nd.dims));
        r.add("nichols.total", nd.total);
        r.add("nichols.truncated", nd.truncated);
        r.add("pbw.dims", detail::join_dims(pbw.dims));
        r.add("pbw.total", pbw.total);
        r.add("pbw.top_degree", top);
        r.add("palindromic", nd.palindromic());
        const bool complete = !nd.truncated;
        if (mismatch || (complete && nd.total != pbw.total)) {
            r.add("verdict", "MISMATCH");
            out.exit_code = 1;
        } else if (budget_truncated) {
            r.add("verdict", "TRUNCATED");
            r.add("truncated", nd.stop_reason);
            out.exit_code = 4;
        } else {
            r.add("verdict", "MATCH");
            r.add("complete", complete);
        }
        return out;
    });
}

/**
 * Dimensions of the lifted algebra truncated at a-degree D for D = 1 .. cap, compared with
 * |Gamma| prod_I N_I^{|Phi_I^+|}; VERIFIED when the answer at the cap is stable and equal.
 */
inline CommandResult cmd_lift(const std::string& text, const std::string& source, const CliOptions& opt = {}) {
    return run_command("lift", [&] {
        const auto f = detail::read_input(text, source);
        const Datum d = datum_from_file(f);
        const LinkingDatum ld = linking_from_file(f, d);
        const SmashAlgebra A(d);
        const RelationSet rels = lifted_relations(A, ld);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "lift");
        detail::echo_datum(r, d, ld);
        r.add("dynkin.type", d.roots.classification.type_label());
        r.add("linked_pairs", detail::pair_list(ld.support()));
        for (std::size_t k = 0; k < rels.size(); ++k)
            r.add("relation." + std::to_string(k + 1), std::string(to_string(rels[k].kind)) + ": " + rels[k].to_string());
        const int64_t top = top_pbw_degree(d.roots, d.components.N);
        const std::size_t cap = std::max<std::size_t>(opt.max_degree.value_or(static_cast<std::size_t>(top) + 2), 1);
        const int64_t formula = d.expected_dimension();
        r.add("pbw.top_degree", top);
        r.add("degree_cap", cap);
        r.add("formula", formula);
        std::vector<std::vector<int64_t>> per_cap;
        for (std::size_t D = 1; D <= cap; ++D) {
            try {
                per_cap.push_back(quotient_dims_at(A, rels, D, opt.exec));
            } catch (const BudgetExceeded& e) {
                r.add("truncated", std::string(e.what()));
                r.add("verdict", "TRUNCATED");
                out.exit_code = 4;
                return out;
            }
            int64_t total = 0;
            for (auto x : per_cap.back()) total += x;
            r.add("lift.D." + std::to_string(D) + ".dims", detail::join_dims(per_cap.back()));
            r.add("lift.D." + std::to_string(D) + ".total", total);
        }
        const auto& last = per_cap.back();
        int64_t total = 0;
        for (auto x : last) total += x;
        bool stabilized = static_cast<int64_t>(cap) > top;
        if (cap >= 2) {
            const auto& prev = per_cap[cap - 2];
            stabilized = stabilized && std::equal(prev.begin(), prev.end(), last.begin());
        }
        r.add("total", total);
        r.add("stabilized", stabilized);
        if (stabilized && total == formula) {
            r.add("verdict", "VERIFIED");
        } else if (stabilized) {
            r.add("verdict", "MISMATCH");
            out.exit_code = 1;
        } else {
            r.add("verdict", "NOT_STABILIZED");
            out.exit_code = 1;
        }
        return out;
    });
}

/// Rows of data over (Z/p)^s, optionally with their numbers of linking data.
inline CommandResult cmd_enumerate(const CliOptions& opt) {
    return run_command("enumerate", [&] {
        detail::require(opt.p.has_value(), ErrorKind::Malformed, "enumerate needs --p");
        EnumerationOptions eo;
        eo.p = *opt.p;
        eo.s = opt.s;
        eo.theta_max = opt.theta_max;
        eo.types = opt.types;
        const auto res = enumerate_data(eo, opt.exec);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "enumerate");
        r.add("p", eo.p);
        r.add("s", eo.s);
        r.add("theta_max", eo.theta_max);
        r.add("types", eo.types.empty() ? std::string("all") : detail::join_strings(eo.types, ","));
        std::size_t total_linkings = 0;
        for (std::size_t k = 0; k < res.data.size(); ++k) {
            const Datum& d = res.data[k];
            std::vector<std::string> g, chi;
            for (std::size_t i = 0; i < d.theta(); ++i) {
                g.push_back(d.g[i].to_string());
                chi.push_back(d.chi[i].to_string());
            }
            std::string row = "theta=" + std::to_string(d.theta()) + " type=" + d.roots.classification.type_label() + " g=" + detail::join_strings(g, ",") +
                              " chi=" + detail::join_strings(chi, ",");
            if (opt.links) {
                const auto n = enumerate_linkings(d).size();
                total_linkings += n;
                row += " linkable=" + detail::pair_list(linkable_pairs(d)) + " linkings=" + std::to_string(n);
            }
            r.add("row." + std::to_string(k + 1), row);
        }
        for (std::size_t t = 1; t < res.count_by_theta.size(); ++t)
            if (t <= res.theta_searched) r.add("count.theta." + std::to_string(t), res.count_by_theta[t]);
        r.add("total", res.data.size());
        if (opt.links) r.add("total_linkings", total_linkings);
        std::ostringstream bound;
        bound << theta_bound(eo.p, eo.s);
        r.add("theta_bound", bound.str());
        r.add("bound_capped", res.bound_capped);
        if (res.bound_capped) r.add("bound_capped_at", "theta <= " + std::to_string(res.max_theta));
        return out;
    });
}

/// Which hypotheses of the classification and lifting results hold for the datum.
inline CommandResult cmd_hypotheses(const std::string& text, const std::string& source, const CliOptions& opt = {}) {
    return run_command("hypotheses", [&] {
        const auto f = detail::read_input(text, source);
        const Datum d = datum_from_file(f);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "hypotheses");
        detail::echo_datum(r, d, {});
        r.add("dynkin.type", d.roots.classification.type_label());
        if (opt.p) r.add("p", *opt.p);
        const auto rep = check_hypotheses(d, opt.p);
        for (const auto& flag : rep.flags) {
            r.add("hypothesis." + flag.name, flag.ok);
            for (std::size_t k = 0; k < flag.reasons.size(); ++k)
                r.add("hypothesis." + flag.name + ".reason." + std::to_string(k + 1), flag.reasons[k]);
        }
        return out;
    });
}

/// Linkability of every pair, validity of the file's linking and all normalized linkings.
inline CommandResult cmd_link(const std::string& text, const std::string& source, const CliOptions& = {}) {
    return run_command("link", [&] {
        const auto f = detail::read_input(text, source);
        const Datum d = datum_from_file(f);
        const LinkingDatum ld = linking_from_file(f, d);
        CommandResult out;
        Report& r = out.report;
        r.add("command", "link");
        detail::echo_datum(r, d, ld);
        r.add("dynkin.type", d.roots.classification.type_label());
        const auto n = static_cast<int>(d.theta());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto c = linkable(d, i, j);
                r.add("pair." + std::to_string(i + 1) + "." + std::to_string(j + 1), c.linkable() ? std::string("linkable") : "not linkable: " + c.failures());
            }
        r.add("linkable_pairs", detail::pair_list(linkable_pairs(d)));
        validate_linking(d, ld);
        r.add("linking.valid", true);
        r.add("linked_pairs", detail::pair_list(ld.support()));
        const auto all = enumerate_linkings(d);
        r.add("linkings.count", all.size());
        for (std::size_t k = 0; k < all.size(); ++k) r.add("linking." + std::to_string(k + 1), detail::pair_list(all[k].support()));
        return out;
    });
}

/// Datum file text rebuilt from the datum.* keys of a report.
inline std::string datum_text_from_report(const Report& r) {
    std::ostringstream os;
    os << "[group]\norders = " << r.get("datum.orders") << "\n";
    for (std::size_t i = 1; r.has("datum.vertex." + std::to_string(i) + ".g"); ++i) {
        const std::string key = "datum.vertex." + std::to_string(i);
        os << "\n[vertex]\ng = " << r.get(key + ".g") << "\nchi = " << r.get(key + ".chi") << "\n";
    }
    for (std::size_t k = 1; r.has("datum.link." + std::to_string(k) + ".i"); ++k) {
        const std::string key = "datum.link." + std::to_string(k);
        os << "\n[link]\ni = " << r.get(key + ".i") << "\nj = " << r.get(key + ".j") << "\nlambda = " << r.get(key + ".lambda") << "\n";
    }
    return os.str();
}

}  // namespace pointed
