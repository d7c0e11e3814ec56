#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Graph families named on the command line:
///   P<k>  path with k edges        C<k>  cycle on k vertices
///   K<n>  complete graph           DS <r> <s>  double star
///   B <k> <r>  broom (k spine vertices, r leaves at the end)
///   CAT <c1,...,ck>  caterpillar   T <k> <d>  perfect k-ary tree
enum class Family { path, cycle, complete, double_star, broom, caterpillar, kary };

class FamilySpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;

    Graph build(std::size_t cap = kDefaultVertexCap) const
    {
        switch (family) {
        case Family::path: return make_path(params[0], cap);
        case Family::cycle: return make_cycle(params[0], cap);
        case Family::complete: return make_complete(params[0], cap);
        case Family::double_star: return make_double_star(params[0], params[1], cap);
        case Family::broom: return make_broom(params[0], params[1], cap);
        case Family::caterpillar: return make_caterpillar(params, cap);
        case Family::kary: return make_perfect_kary(params[0], params[1], cap);
        }
        throw FamilySpecError("unknown family");
    }

    std::string to_string() const
    {
        auto join = [&](char sep) {
            std::string s;
            for (std::size_t i = 0; i < params.size(); ++i)
                s += (i ? std::string(1, sep) : "") + std::to_string(params[i]);
            return s;
        };
        switch (family) {
        case Family::path: return "P" + join(' ');
        case Family::cycle: return "C" + join(' ');
        case Family::complete: return "K" + join(' ');
        case Family::double_star: return "DS " + join(' ');
        case Family::broom: return "B " + join(' ');
        case Family::caterpillar: return "CAT " + join(',');
        case Family::kary: return "T " + join(' ');
        }
        return "?";
    }
};

namespace detail {

inline int parse_int(const std::string& s, const std::string& what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw FamilySpecError("family spec: " + what + " '" + s + "' is not an integer");
    if (v < 0)
        throw FamilySpecError("family spec: " + what + " must be non-negative");
    return v;
}

} // namespace detail

/// Parses whitespace-separated tokens, e.g. {"DS", "2", "2"} or {"C5"}.
inline FamilySpec parse_family_spec(const std::vector<std::string>& raw)
{
    std::vector<std::string> tok;
    for (const auto& r : raw) {
        std::istringstream in(r);
        for (std::string t; in >> t;)
            tok.push_back(t);
    }
    if (tok.empty())
        throw FamilySpecError("family spec: empty");
    const std::string head = tok[0];
    auto expect_args = [&](std::size_t n) {
        if (tok.size() != n + 1)
            throw FamilySpecError("family spec: " + head + " takes " + std::to_string(n) + " argument(s)");
    };

    FamilySpec spec;
    if (head == "DS" || head == "B" || head == "T") {
        expect_args(2);
        spec.family = head == "DS" ? Family::double_star : head == "B" ? Family::broom : Family::kary;
        spec.params = {detail::parse_int(tok[1], head), detail::parse_int(tok[2], head)};
        if (spec.family == Family::double_star && spec.params[0] > spec.params[1])
            std::swap(spec.params[0], spec.params[1]);
        return spec;
    }
    if (head == "CAT") {
        expect_args(1);
        std::istringstream in(tok[1]);
        for (std::string part; std::getline(in, part, ',');)
            spec.params.push_back(detail::parse_int(part, "CAT"));
        if (spec.params.empty())
            throw FamilySpecError("family spec: CAT needs pendant counts");
        spec.family = Family::caterpillar;
        return spec;
    }
    if (head.size() >= 2 && (head[0] == 'P' || head[0] == 'C' || head[0] == 'K')) {
        expect_args(0);
        spec.family = head[0] == 'P' ? Family::path : head[0] == 'C' ? Family::cycle : Family::complete;
        spec.params = {detail::parse_int(head.substr(1), std::string(1, head[0]))};
        return spec;
    }
    throw FamilySpecError("family spec: unknown family '" + head + "'");
}

inline FamilySpec parse_family_spec(const std::string& s) { return parse_family_spec(std::vector<std::string>{s}); }

} // namespace rainbow
