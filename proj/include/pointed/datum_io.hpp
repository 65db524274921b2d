#pragma once

/**
 * @file datum_io.hpp
 * @brief Reading and writing datum files.
 *
 * A datum file is line oriented:
 *
 *     # comment
 *     [group]
 *     orders = 3 3
 *     [vertex]
 *     g = 1 0
 *     chi = 1 0
 *     [cartan]          (optional; checked against the braiding)
 *     row = 2
 *     [link]            (optional, repeatable; 1-based vertices)
 *     i = 1
 *     j = 2
 *     lambda = 1 - 1/2*z^1
 *
 * lambda is a rational combination of powers z^k of zeta_L, L the lcm of the orders of the g_i.
 * Every syntax error is reported as "source:line:column: message".
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pointed/datum.hpp"
#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/linking.hpp"

namespace pointed {

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct DatumFile {
    struct Vertex {
        std::vector<int64_t> g, chi;
        SourcePos at, g_at, chi_at;
    };
    struct Link {
        int i = 0, j = 0;  ///< 1-based
        std::string lambda;
        SourcePos at, lambda_at;
    };
    std::string source;
    std::vector<int64_t> orders;
    SourcePos orders_at;
    std::vector<Vertex> vertices;
    std::optional<std::vector<std::vector<int>>> cartan;
    SourcePos cartan_at;
    std::vector<Link> links;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& source, SourcePos p, const std::string& what) {
    fail(ErrorKind::Parse, source + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + what);
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Whitespace separated integers; positions are reported per token.
inline std::vector<int64_t> parse_integers(const std::string& source, const std::string& text, SourcePos at) {
    std::vector<int64_t> out;
    std::size_t k = 0;
    while (k < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[k]))) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        const std::string tok = text.substr(start, k - start);
        const SourcePos p{at.line, at.column + static_cast<int>(start)};
        std::size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty()) parse_fail(source, p, "expected an integer, found '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline int parse_vertex_index(const std::string& source, const std::string& text, SourcePos at) {
    const auto v = parse_integers(source, text, at);
    if (v.size() != 1) parse_fail(source, at, "expected a single vertex index");
    if (v[0] < 1 || v[0] > 1'000'000) parse_fail(source, at, "vertex index " + std::to_string(v[0]) + " out of range");
    return static_cast<int>(v[0]);
}

}  // namespace detail

/// Parses the text of a datum file; checks structure and vector lengths, not the datum axioms.
inline DatumFile parse_datum_file(const std::string& text, const std::string& source = "<input>") {
    DatumFile f;
    f.source = source;
    enum class Section { None, Group, Vertex, Cartan, Link } section = Section::None;
    bool have_group = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::map<std::string, SourcePos> seen;  // keys of the current section
    auto finish_section = [&](SourcePos where) {
        if (section == Section::Group && f.orders.empty()) detail::parse_fail(source, where, "[group] needs 'orders'");
        if (section == Section::Vertex) {
            const auto& v = f.vertices.back();
            if (!seen.count("g")) detail::parse_fail(source, v.at, "[vertex] " + std::to_string(f.vertices.size()) + " needs 'g'");
            if (!seen.count("chi")) detail::parse_fail(source, v.at, "[vertex] " + std::to_string(f.vertices.size()) + " needs 'chi'");
        }
        if (section == Section::Link) {
            const auto& l = f.links.back();
            for (const char* k : {"i", "j", "lambda"})
                if (!seen.count(k)) detail::parse_fail(source, l.at, std::string("[link] needs '") + k + "'");
        }
        seen.clear();
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        const int indent = static_cast<int>(line.find_first_not_of(" \t"));
        const SourcePos here{line_no, indent + 1};
        if (t.front() == '[') {
            if (t.back() != ']') detail::parse_fail(source, here, "unterminated section header");
            finish_section(here);
            const std::string name = detail::trim(t.substr(1, t.size() - 2));
            if (name == "group") {
                if (have_group) detail::parse_fail(source, here, "duplicate [group] section");
                have_group = true;
                section = Section::Group;
                f.orders_at = here;
            } else if (name == "vertex") {
                if (!have_group) detail::parse_fail(source, here, "[vertex] before [group]");
                section = Section::Vertex;
                f.vertices.push_back({});
                f.vertices.back().at = here;
            } else if (name == "cartan") {
                if (f.cartan) detail::parse_fail(source, here, "duplicate [cartan] section");
                section = Section::Cartan;
                f.cartan.emplace();
                f.cartan_at = here;
            } else if (name == "link") {
                section = Section::Link;
                f.links.push_back({});
                f.links.back().at = here;
            } else {
                detail::parse_fail(source, here, "unknown section [" + name + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) detail::parse_fail(source, here, "expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);
        const SourcePos vpos{line_no, static_cast<int>(eq) + 2};
        if (section == Section::None) detail::parse_fail(source, here, "'" + key + "' outside of any section");
        if (section != Section::Cartan) {
            if (seen.count(key)) detail::parse_fail(source, here, "duplicate key '" + key + "'");
            seen[key] = here;
        }
        const std::size_t s = f.orders.size();
        switch (section) {
            case Section::Group:
                if (key != "orders") detail::parse_fail(source, here, "unknown key '" + key + "' in [group]");
                f.orders = detail::parse_integers(source, value, vpos);
                if (f.orders.empty()) detail::parse_fail(source, vpos, "'orders' needs at least one cyclic factor");
                for (auto m : f.orders)
                    if (m < 2) detail::parse_fail(source, vpos, "cyclic factor orders must be >= 2, got " + std::to_string(m));
                break;
            case Section::Vertex: {
                auto& v = f.vertices.back();
                if (key != "g" && key != "chi") detail::parse_fail(source, here, "unknown key '" + key + "' in [vertex]");
                auto vec = detail::parse_integers(source, value, vpos);
                if (vec.size() != s)
                    detail::parse_fail(source, vpos,
                                       "'" + key + "' of vertex " + std::to_string(f.vertices.size()) + " has length " + std::to_string(vec.size()) +
                                           ", the group has " + std::to_string(s) + " cyclic factors");
                (key == "g" ? v.g : v.chi) = std::move(vec);
                (key == "g" ? v.g_at : v.chi_at) = vpos;
                break;
            }
            case Section::Cartan: {
                if (key != "row") detail::parse_fail(source, here, "unknown key '" + key + "' in [cartan]");
                std::vector<int> row;
                for (auto x : detail::parse_integers(source, value, vpos)) row.push_back(static_cast<int>(x));
                f.cartan->push_back(std::move(row));
                break;
            }
            case Section::Link: {
                auto& l = f.links.back();
                if (key == "i")
                    l.i = detail::parse_vertex_index(source, value, vpos);
                else if (key == "j")
                    l.j = detail::parse_vertex_index(source, value, vpos);
                else if (key == "lambda") {
                    l.lambda = detail::trim(value);
                    l.lambda_at = vpos;
                } else
                    detail::parse_fail(source, here, "unknown key '" + key + "' in [link]");
                break;
            }
            case Section::None: break;
        }
    }
    finish_section({line_no + 1, 1});
    if (!have_group) detail::parse_fail(source, {1, 1}, "missing [group] section");
    if (f.vertices.empty()) detail::parse_fail(source, {line_no + 1, 1}, "no [vertex] sections");
    if (f.cartan) {
        const std::size_t n = f.vertices.size();
        if (f.cartan->size() != n)
            detail::parse_fail(source, f.cartan_at, "[cartan] has " + std::to_string(f.cartan->size()) + " rows, expected " + std::to_string(n));
        for (const auto& row : *f.cartan)
            if (row.size() != n) detail::parse_fail(source, f.cartan_at, "[cartan] rows must have " + std::to_string(n) + " entries");
    }
    for (const auto& l : f.links) {
        const int n = static_cast<int>(f.vertices.size());
        if (l.i > n || l.j > n) detail::parse_fail(source, l.at, "[link] vertex out of range 1.." + std::to_string(n));
        if (l.i == l.j) detail::parse_fail(source, l.at, "[link] needs two distinct vertices");
    }
    return f;
}

/**
 * Parses sum of terms [+|-] [p[/q]] [*] z^k, or a bare rational, into Q(zeta_L). The column
 * of the first offending character is reported.
 */
inline CycloNum parse_cyclo(const std::string& text, int64_t L, const std::string& source = "<input>", SourcePos at = {1, 1}) {
    std::size_t k = 0;
    auto pos = [&](std::size_t c) { return SourcePos{at.line, at.column + static_cast<int>(c)}; };
    auto skip = [&] {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    };
    auto number = [&]() -> std::optional<mpz_class> {
        const std::size_t b = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (b == k) return std::nullopt;
        return mpz_class(text.substr(b, k - b));
    };
    CycloNum sum = CycloNum::zero(L);
    bool first = true;
    skip();
    if (k == text.size()) detail::parse_fail(source, pos(0), "empty scalar");
    while (true) {
        skip();
        if (k == text.size()) break;
        int sign = 1;
        if (text[k] == '+' || text[k] == '-') {
            sign = text[k] == '-' ? -1 : 1;
            ++k;
            skip();
        } else if (!first) {
            detail::parse_fail(source, pos(k), "expected '+' or '-'");
        }
        first = false;
        Rational coeff = 1;
        bool have_coeff = false;
        if (auto num = number()) {
            have_coeff = true;
            coeff = Rational(*num);
            if (k < text.size() && text[k] == '/') {
                ++k;
                auto den = number();
                if (!den || *den == 0) detail::parse_fail(source, pos(k), "expected a nonzero denominator");
                coeff = Rational(*num, *den);
                coeff.canonicalize();
            }
            skip();
            if (k < text.size() && text[k] == '*') {
                ++k;
                skip();
                if (k == text.size() || text[k] != 'z') detail::parse_fail(source, pos(k), "expected 'z^k' after '*'");
            }
        }
        int64_t e = 0;
        if (k < text.size() && text[k] == 'z') {
            ++k;
            if (k < text.size() && text[k] == '^') {
                ++k;
                bool neg = false;
                if (k < text.size() && text[k] == '-') {
                    neg = true;
                    ++k;
                }
                auto ex = number();
                if (!ex) detail::parse_fail(source, pos(k), "expected an exponent after 'z^'");
                if (!ex->fits_slong_p()) detail::parse_fail(source, pos(k), "exponent too large");
                e = ex->get_si() * (neg ? -1 : 1);
            } else {
                e = 1;
            }
        } else if (!have_coeff) {
            detail::parse_fail(source, pos(k), "expected a rational or 'z^k'");
        }
        sum = sum + CycloNum::root_power(L, e) * Rational(coeff * sign);
    }
    return sum;
}

/// The group and vertices of a parsed file, unvalidated.
inline RawDatum raw_datum(const DatumFile& f) {
    RawDatum raw{AbelianGroup(f.orders), {}, {}, std::nullopt};
    for (const auto& v : f.vertices) {
        raw.g.push_back(raw.group.element(v.g));
        raw.chi.push_back(raw.group.character(v.chi));
    }
    if (f.cartan) {
        const std::size_t n = f.vertices.size();
        IntMatrix a(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = (*f.cartan)[i][j];
        raw.cartan = a;
    }
    return raw;
}

/// Validated datum; validation messages are prefixed with the source name.
inline Datum datum_from_file(const DatumFile& f) {
    try {
        return validate_datum(raw_datum(f));
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        throw Error(e.kind(), f.source + ": " + e.what());
    }
}

/// Linking parameters of the file, scalars in Q(zeta_L) with L the conductor of d.
inline LinkingDatum linking_from_file(const DatumFile& f, const Datum& d) {
    LinkingDatum ld;
    for (const auto& l : f.links) {
        const int i = std::min(l.i, l.j) - 1, j = std::max(l.i, l.j) - 1;
        if (ld.lambda.count({i, j})) detail::parse_fail(f.source, l.at, "duplicate [link] for vertices " + detail::vertex_pair(i, j));
        ld.lambda[{i, j}] = parse_cyclo(l.lambda, d.conductor(), f.source, l.lambda_at);
    }
    return ld;
}

namespace detail {
inline std::string join_integers(const std::vector<int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}
}  // namespace detail

/// Datum file text for d and the nonzero parameters of ld; parse_datum_file reads it back.
inline std::string write_datum_file(const Datum& d, const LinkingDatum& ld = {}) {
    std::ostringstream os;
    os << "[group]\norders = " << detail::join_integers(d.group.orders()) << "\n";
    for (std::size_t i = 0; i < d.theta(); ++i)
        os << "\n[vertex]\ng = " << detail::join_integers(d.g[i].exponents()) << "\nchi = " << detail::join_integers(d.chi[i].exponents()) << "\n";
    for (const auto& [ij, v] : ld.lambda) {
        if (!v || v->is_zero()) continue;
        os << "\n[link]\ni = " << ij.first + 1 << "\nj = " << ij.second + 1 << "\nlambda = " << v->lift(std::lcm(d.conductor(), v->conductor())).to_string()
           << "\n";
    }
    return os.str();
}

}  // namespace pointed
