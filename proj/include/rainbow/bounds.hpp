#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/serialize.hpp"

namespace rainbow {

/// Exact rational; every bound is a coefficient of n.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class BoundFamily {
    erdos_sos,
    ds_k_unique_lower,
    ds_k_unique_upper,
    ds_rainbow_lower,
    ds_rainbow_upper,
    ds22_lower,
    ds12s1_exact,
    caterpillar_upper_literal,
    caterpillar_upper_constructive,
    binary_upper_literal,
    binary_upper_proof_form,
    binary_upper_constructive,
    kary_upper_literal,
    kary_upper_constructive,
};

NLOHMANN_JSON_SERIALIZE_ENUM(BoundFamily, {{BoundFamily::erdos_sos, "erdos_sos"},
                                           {BoundFamily::ds_k_unique_lower, "ds_k_unique_lower"},
                                           {BoundFamily::ds_k_unique_upper, "ds_k_unique_upper"},
                                           {BoundFamily::ds_rainbow_lower, "ds_rainbow_lower"},
                                           {BoundFamily::ds_rainbow_upper, "ds_rainbow_upper"},
                                           {BoundFamily::ds22_lower, "ds22_lower"},
                                           {BoundFamily::ds12s1_exact, "ds12s1_exact"},
                                           {BoundFamily::caterpillar_upper_literal, "caterpillar_upper_literal"},
                                           {BoundFamily::caterpillar_upper_constructive,
                                            "caterpillar_upper_constructive"},
                                           {BoundFamily::binary_upper_literal, "binary_upper_literal"},
                                           {BoundFamily::binary_upper_proof_form, "binary_upper_proof_form"},
                                           {BoundFamily::binary_upper_constructive, "binary_upper_constructive"},
                                           {BoundFamily::kary_upper_literal, "kary_upper_literal"},
                                           {BoundFamily::kary_upper_constructive, "kary_upper_constructive"}})

enum class Assumption { erdos_sos_conjecture, mclennan_diam4 };

NLOHMANN_JSON_SERIALIZE_ENUM(Assumption, {{Assumption::erdos_sos_conjecture, "erdos_sos_conjecture"},
                                          {Assumption::mclennan_diam4, "mclennan_diam4"}})

enum class BoundSide { lower, upper, exact };

NLOHMANN_JSON_SERIALIZE_ENUM(BoundSide,
                             {{BoundSide::lower, "lower"}, {BoundSide::upper, "upper"}, {BoundSide::exact, "exact"}})

struct ConstructionStep {
    std::string description;
    std::size_t edges_added = 0;
};

struct BoundReport {
    BoundFamily family = BoundFamily::erdos_sos;
    BoundSide side = BoundSide::upper;
    std::map<std::string, long long> params;
    Rational coefficient;
    std::vector<Assumption> assumptions;
    /// "", "o(n)" or "o(1)": carried symbolically, never evaluated.
    std::string error_term;
    std::vector<std::string> notes;
    std::vector<ConstructionStep> construction_log;
};

// ---------------------------------------------------------------------------
// Erdős–Sós

/// (t-1)/2: coefficient of n in the conjectured ex(n, T) for a t-edge tree.
inline Rational erdos_sos_coefficient(long long t)
{
    if (t < 1)
        throw std::invalid_argument("erdos_sos_coefficient: a tree needs at least one edge");
    return Rational(t - 1, 2);
}

/// Trees of diameter at most 4 are covered by a published proof; anything
/// else leans on the conjecture.
inline Assumption erdos_sos_assumption(int tree_diameter)
{
    return tree_diameter >= 0 && tree_diameter <= 4 ? Assumption::mclennan_diam4 : Assumption::erdos_sos_conjecture;
}

inline BoundReport erdos_sos_report(const Graph& tree)
{
    if (!is_tree(tree))
        throw std::invalid_argument("erdos_sos_report: graph is not a tree");
    BoundReport r;
    r.family = BoundFamily::erdos_sos;
    r.side = BoundSide::upper;
    r.params["edges"] = static_cast<long long>(tree.size());
    r.coefficient = erdos_sos_coefficient(static_cast<long long>(tree.size()));
    r.assumptions = {erdos_sos_assumption(diameter(tree))};
    return r;
}

// ---------------------------------------------------------------------------
// Double stars

struct BoundPair {
    BoundReport lower;
    BoundReport upper;
};

/// Bounds on ex_{j+2l}(n, DS_{r,s}): lower (s+l-1)/2 from an (s+l-1)-regular
/// host colored with s+l colors, upper (r+s+l)/2 from Erdős–Sós on DS_{r,s+l}.
struct KUniqueBounds {
    int k = 0;
    BoundReport lower;
    BoundReport upper;
};

inline KUniqueBounds ds_k_unique_bounds(int r, int s, int l)
{
    if (r < 0 || s < r)
        throw std::invalid_argument("ds_k_unique_bounds: need 0 <= r <= s");
    if (l < 0 || l > r)
        throw std::invalid_argument("ds_k_unique_bounds: need 0 <= l <= r");
    KUniqueBounds b;
    b.k = s - r + 1 + 2 * l;
    std::map<std::string, long long> params{{"r", r}, {"s", s}, {"l", l}, {"k", b.k}};

    b.lower.family = BoundFamily::ds_k_unique_lower;
    b.lower.side = BoundSide::lower;
    b.lower.params = params;
    b.lower.coefficient = Rational(std::max(0, s + l - 1), 2);
    b.lower.error_term = "o(n)";
    b.lower.notes.push_back("witness host is (s+l-1)-regular; the text's (s+r-1)-regular reading is not used");

    b.upper.family = BoundFamily::ds_k_unique_upper;
    b.upper.side = BoundSide::upper;
    b.upper.params = params;
    b.upper.coefficient = erdos_sos_coefficient(r + s + l + 1);
    // DS_{r,s+l} has diameter 3 (2 when r = 0)
    b.upper.assumptions = {Assumption::mclennan_diam4};
    return b;
}

inline BoundPair ds_rainbow_bounds(int r, int s)
{
    if (r < 0 || s < r)
        throw std::invalid_argument("ds_rainbow_bounds: need 0 <= r <= s");
    BoundPair b;
    b.lower.family = BoundFamily::ds_rainbow_lower;
    b.lower.side = BoundSide::lower;
    b.lower.params = {{"r", r}, {"s", s}};
    b.lower.coefficient = Rational(s + r - 1, 2);
    b.lower.error_term = "o(1)";

    b.upper.family = BoundFamily::ds_rainbow_upper;
    b.upper.side = BoundSide::upper;
    b.upper.params = {{"r", r}, {"s", s}};
    b.upper.coefficient = erdos_sos_coefficient(s + 2 * r + 1); // DS_{r,s+r}
    b.upper.assumptions = {Assumption::mclennan_diam4};
    return b;
}

/// 5/2 from disjoint copies of K_6 with a 1-factorization; 3 from the generic
/// double-star upper bound.
inline BoundPair ds22_bounds()
{
    BoundPair b;
    b.lower.family = BoundFamily::ds22_lower;
    b.lower.side = BoundSide::lower;
    b.lower.params = {{"r", 2}, {"s", 2}};
    b.lower.coefficient = Rational(5, 2);
    b.lower.notes.push_back("disjoint union of K_6 colored by a 1-factorization");
    b.upper = ds_rainbow_bounds(2, 2).upper;
    return b;
}

/// ex*(n, DS_{1,2s+1}) = (2s+3)n/2 + o(1).
inline BoundReport ds_1_odd_exact(int s)
{
    if (s < 0)
        throw std::invalid_argument("ds_1_odd_exact: s must be non-negative");
    BoundReport b;
    b.family = BoundFamily::ds12s1_exact;
    b.side = BoundSide::exact;
    b.params = {{"s", s}, {"r", 1}, {"leaves", 2LL * s + 1}};
    b.coefficient = Rational(2LL * s + 3, 2);
    b.error_term = "o(1)";
    b.assumptions = {Assumption::mclennan_diam4};
    b.notes.push_back("lower bound from K_{2s+4} with a 1-factorization");
    return b;
}

// ---------------------------------------------------------------------------
// Literal formulas as displayed, evaluated exactly

/// Caterpillar bound as displayed:
///   [3c_1 + 2c_2 + c_3 + 3 + sum_{j=3}^{k} P_j (L_j + 1)] / 2
/// with L_j = j - 1 + sum_{i<=j} c_i, P_2 = 1 and
/// P_j = P_{j-1} * sum_{i=4}^{j-2} (c_i + 1), where an empty range counts as 1.
inline Rational caterpillar_coefficient_literal(std::span<const int> c)
{
    const auto k = static_cast<long long>(c.size());
    if (k < 3)
        throw std::invalid_argument("caterpillar literal: need at least 3 spine vertices");
    auto ci = [&](long long i) { return static_cast<long long>(c[static_cast<std::size_t>(i - 1)]); };
    Integer total = 3 * ci(1) + 2 * ci(2) + ci(3) + 3;
    Integer p = 1; // P_2
    long long prefix = ci(1) + ci(2);
    for (long long j = 3; j <= k; ++j) {
        prefix += ci(j);
        Integer range = 0;
        bool empty = true;
        for (long long i = 4; i <= j - 2; ++i) {
            range += ci(i) + 1;
            empty = false;
        }
        p *= empty ? Integer(1) : range;
        const long long lj = j - 1 + prefix;
        total += p * (lj + 1);
    }
    return Rational(total, 2);
}

/// Binary-tree bound as displayed: (sum_{j=2}^{d} [2 prod_{i=2}^{j} (2^i - 3)] + 1) / 2.
inline Rational binary_coefficient_literal(int d)
{
    if (d < 2)
        throw std::invalid_argument("binary literal: depth must be at least 2");
    Integer sum = 0, prod = 1;
    for (int j = 2; j <= d; ++j) {
        prod *= (Integer(1) << j) - 3;
        sum += 2 * prod;
    }
    return Rational(sum + 1, 2);
}

/// The closed form quoted for the depth-2 argument, (2(2^{d+1} - 3)) / 2.
inline Rational binary_coefficient_proof_form(int d)
{
    if (d < 2)
        throw std::invalid_argument("binary proof form: depth must be at least 2");
    return Rational(2 * ((Integer(1) << (d + 1)) - 3), 2);
}

/// Leaves added under each parent at depth j - 1: k^j + (k^j - 1)/(k - 1) - 2.
inline Integer kary_leaves_per_parent(int k, int j)
{
    if (k < 2 || j < 1)
        throw std::invalid_argument("kary leaves: need k >= 2 and j >= 1");
    Integer kj = boost::multiprecision::pow(Integer(k), static_cast<unsigned>(j));
    return kj + (kj - 1) / (k - 1) - 2;
}

/// k-ary bound as displayed: (k - 1 + sum_{j=2}^{d} [k prod_{i=2}^{j} (k^i + (k^i-1)/(k-1) - 2)]) / 2.
inline Rational kary_coefficient_literal(int k, int d)
{
    if (k < 2 || d < 2)
        throw std::invalid_argument("kary literal: need k >= 2 and d >= 2");
    Integer sum = 0, prod = 1;
    for (int j = 2; j <= d; ++j) {
        prod *= kary_leaves_per_parent(k, j);
        sum += k * prod;
    }
    return Rational(k - 1 + sum, 2);
}

// ---------------------------------------------------------------------------
// JSON

inline json rational_to_json(const Rational& q)
{
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    auto as_json = [](const Integer& v) -> json {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return v.convert_to<long long>();
        return v.str();
    };
    return {{"num", as_json(num)}, {"den", as_json(den)}};
}

inline std::string rational_to_string(const Rational& q)
{
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline json bound_to_json(const BoundReport& b)
{
    json log = json::array();
    for (const auto& s : b.construction_log)
        log.push_back({{"step", s.description}, {"edges_added", s.edges_added}});
    json j{{"family", b.family},       {"side", b.side},   {"params", b.params},
           {"coefficient", rational_to_json(b.coefficient)},
           {"assumptions", b.assumptions}, {"error_term", b.error_term}, {"notes", b.notes}};
    if (!b.construction_log.empty())
        j["construction_log"] = std::move(log);
    return j;
}

} // namespace rainbow
