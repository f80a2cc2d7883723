#pragma once

#include "diosys/numeric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <vector>

namespace diosys {

/// One residue rule for the quadratic-form family generator. The rule fixes
///   b1 = 2c + b1_shift,  b = (b1(b1 + a + j) + bc) / d
/// with (j, bc, d) determined by the Pell level and shift:
///   level 1, shift -3:  j =  7, bc =  12, d = 5   (z = 2c(2c+a+1),   p = 2c)
///   level 1, shift +3:  j = -7, bc =  12, d = 5   (z = (2c-1)(2c+a), p = 2c-1)
///   level 2, shift -20: j = 41, bc = 420, d = 29  (z = 2c(2c+a+1),   p = 2c)
/// c runs through c_offset + c_modulus * t for each stored offset.
struct ResidueRule {
    int pell_level = 1;
    Integer a_residue;
    Integer a_modulus;
    std::vector<Integer> c_offsets;
    Integer c_modulus;
    Integer b1_shift;
    std::vector<Integer> b1_residues;  // admissible b1 classes mod divisor()

    Integer divisor() const { return pell_level == 1 ? 5 : 29; }
    Integer b_shift() const { return pell_level == 1 ? (b1_shift < 0 ? 7 : -7) : 41; }
    Integer b_constant() const { return pell_level == 1 ? 12 : 420; }
};

struct ResidueTable {
    std::vector<ResidueRule> rules;  // level-1 built-ins followed by the file rows
};

namespace detail {

/// Re-solves the integrality congruence for a rule and cross-checks every
/// stored class; any transcription slip fails fast here.
inline void validate_rule(const ResidueRule& r) {
    const Integer d = r.divisor();
    const Integer j = r.b_shift();
    const Integer bc = r.b_constant();
    const Integer a = r.a_residue;

    std::set<Integer> expected;
    for (Integer b1 = 0; b1 < d; ++b1)
        if (floor_mod(b1 * (b1 + a + j) + bc, d) == 0) expected.insert(b1);
    const std::set<Integer> stored(r.b1_residues.begin(), r.b1_residues.end());
    if (expected != stored)
        throw table_error("rule a=" + a.str() + " (mod " + r.a_modulus.str() +
                          "): stored b1 classes disagree with the solved congruence");

    for (const Integer& c : r.c_offsets) {
        if (floor_mod(c, 2) != floor_mod(a, 2))
            throw table_error("rule a=" + a.str() + ": offset c=" + c.str() +
                              " has the wrong parity");
        if (!stored.count(floor_mod(2 * c + r.b1_shift, d)))
            throw table_error("rule a=" + a.str() + ": offset c=" + c.str() +
                              " does not hit an admissible b1 class");
        // numerator of the x,y formulas must vanish mod d
        const Integer sgn = (r.pell_level == 1 && r.b1_shift > 0) ? -1 : 1;
        const Integer scale = r.pell_level == 1 ? 3 : 20;
        const Integer num = 4 * c * c + 2 * a * c + sgn * (2 * c - scale * a);
        if (floor_mod(num, d) != 0)
            throw table_error("rule a=" + a.str() + ": offset c=" + c.str() +
                              " fails the divisibility congruence");
    }
}

inline std::vector<ResidueRule> builtin_level1_rules() {
    auto rule = [](Integer a_res, std::vector<Integer> offs, Integer shift,
                   std::vector<Integer> b1s) {
        return ResidueRule{1, std::move(a_res), 10, std::move(offs), 10, std::move(shift),
                           std::move(b1s)};
    };
    return {
        rule(0, {0, 2}, -3, {1, 2}), rule(5, {5, 7}, -3, {1, 2}),
        rule(1, {1, 3}, -3, {3, 4}), rule(6, {6, 8}, -3, {3, 4}),
        rule(4, {2, 4}, +3, {1, 2}), rule(9, {7, 9}, +3, {1, 2}),
    };
}

}  // namespace detail

/// Loads the level-2 residue table from `path`, prepends the built-in level-1
/// rules, and validates every row. Throws table_error on any inconsistency.
inline ResidueTable load_residue_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw table_error("cannot open residue table '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw table_error("residue table '" + path + "' is not valid JSON: " + e.what());
    }

    ResidueTable table{detail::builtin_level1_rules()};
    try {
        const Integer a_mod = Integer(doc.at("a_modulus").get<long>());
        const Integer c_mod = Integer(doc.at("c_modulus").get<long>());
        if (a_mod != 58 || c_mod != 58 || doc.at("b1_modulus").get<long>() != 29)
            throw table_error("unexpected moduli in residue table");
        for (const auto& row : doc.at("rows")) {
            ResidueRule r;
            r.pell_level = 2;
            r.a_modulus = a_mod;
            r.c_modulus = c_mod;
            r.b1_shift = -20;
            const auto& a_list = row.at("a");
            if (a_list.size() != 1) throw table_error("each row must have one a class");
            r.a_residue = Integer(a_list[0].get<long>());
            for (const auto& v : row.at("b1")) r.b1_residues.emplace_back(v.get<long>());
            for (const auto& v : row.at("c")) r.c_offsets.emplace_back(v.get<long>());
            table.rules.push_back(std::move(r));
        }
    } catch (const table_error&) {
        throw;
    } catch (const std::exception& e) {
        throw table_error("residue table '" + path + "' is malformed: " + e.what());
    }

    const std::size_t level2 = table.rules.size() - detail::builtin_level1_rules().size();
    if (level2 != 28)
        throw table_error("expected 28 level-2 rows, found " + std::to_string(level2));
    for (const auto& r : table.rules) detail::validate_rule(r);
    return table;
}

/// Table path resolution: DIOSYS_RESIDUE_TABLE env var wins, then the
/// compile-time data directory.
inline std::string default_residue_table_path() {
    if (const char* env = std::getenv("DIOSYS_RESIDUE_TABLE")) return env;
#ifdef DIOSYS_DATA_DIR
    return std::string(DIOSYS_DATA_DIR) + "/pell_m2_residue_table.json";
#else
    return "data/pell_m2_residue_table.json";
#endif
}

/// All rules whose a-class contains a. Both levels may match; families built
/// from them are distinct constructions and are all returned.
inline std::vector<ResidueRule> rules_for(const Integer& a, const ResidueTable& table) {
    if (a == 0) throw construction_error("a must be nonzero");
    std::vector<ResidueRule> out;
    for (const auto& r : table.rules)
        if (floor_mod(a, r.a_modulus) == r.a_residue) out.push_back(r);
    return out;
}

/// Fully covered residue classes: modulus 5 (level-1 construction), 58
/// (level-2 a classes), or 145 (CRT merge extending coverage to some
/// a = 2,3 mod 5).
inline std::vector<Integer> covered_classes(int modulus, const ResidueTable& table) {
    std::set<Integer> out;
    if (modulus == 5) {
        for (const auto& r : table.rules)
            if (r.pell_level == 1) out.insert(floor_mod(r.a_residue, 5));
    } else if (modulus == 58) {
        for (const auto& r : table.rules)
            if (r.pell_level == 2) out.insert(r.a_residue);
    } else if (modulus == 145) {
        std::set<Integer> mod29;
        for (const auto& r : table.rules)
            if (r.pell_level == 2) mod29.insert(floor_mod(r.a_residue, 29));
        for (Integer a = 0; a < 145; ++a)
            if ((floor_mod(a, 5) == 2 || floor_mod(a, 5) == 3) && mod29.count(floor_mod(a, 29)))
                out.insert(a);
    } else {
        throw unsupported_error("covered_classes supports moduli 5, 58, 145");
    }
    return {out.begin(), out.end()};
}

}  // namespace diosys
