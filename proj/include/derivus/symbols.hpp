#pragma once

#include <string>
#include <vector>

namespace derivus {

// ---------- Alphabets ----------
//
// Constant symbols and predicate symbols are disjoint, ordered, and
// kept apart from the variables.  Positions are 1-based where encoding
// cares about them.

struct SymbolTable {
    std::vector<std::string> constants;
    std::vector<std::string> predicates;

    bool has_constant(const std::string& s) const;
    bool has_predicate(const std::string& s) const;
    int constant_index(const std::string& s) const;   // 1-based, 0 if absent
    int predicate_index(const std::string& s) const;  // 1-based, 0 if absent

    // Validates the name and disjointness.  Throws std::invalid_argument.
    void add_constant(const std::string& s);
    void add_predicate(const std::string& s);

    // Does `other` extend this table (same symbols in the same order,
    // possibly followed by new ones)?
    bool extended_by(const SymbolTable& other) const;
};

} // namespace derivus
