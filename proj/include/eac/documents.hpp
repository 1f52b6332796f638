// Input documents for the CLI: a pair description (ambient dimension,
// V/W polynomial blocks, optional removal blocks, options) and a
// configuration description (generators, loci, linear relations, kernel
// markers). Documents print to canonical text that parses back equal.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eac/pairs.hpp"
#include "eac/predim.hpp"

namespace eac {

enum class IrreducibleOpt { None, V, W, Both };

std::string irreducible_name(IrreducibleOpt o);

struct PairDocument {
    int n = 0;
    RingPtr ring_x, ring_y;
    std::vector<Polynomial> v_polys, w_polys;
    std::optional<std::vector<Polynomial>> v_prime, w_prime;
    IrreducibleOpt irreducible = IrreducibleOpt::Both;
    std::optional<int> height, kcap;
    std::optional<long> seed;

    VarietyPair to_pair() const;
    std::optional<Ideal> x_removal() const;
    std::optional<Ideal> y_removal() const;

    std::string print() const;
    bool operator==(const PairDocument& other) const;
};

struct ConfigDocument {
    int n = 0;
    RingPtr ring_x, ring_y;
    std::vector<std::string> gen_names; ///< empty: anonymous generators
    std::vector<Polynomial> x_polys, y_polys;
    IntMatrix lin;            ///< 0 x n when absent
    std::vector<int> kernel;  ///< 0-based generator indices
    std::optional<int> height;

    Configuration to_configuration(int default_height) const;

    std::string print() const;
    bool operator==(const ConfigDocument& other) const;
};

using Document = std::variant<PairDocument, ConfigDocument>;

std::string print_document(const Document& doc);

/// Canonical pair document for an existing pair (used by commands that
/// output transformed pairs).
PairDocument document_of_pair(const VarietyPair& pair);

} // namespace eac
