#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwzero/fourmanifold.hpp"

namespace gwzero {

enum class Verdict { Distinguished, Indistinguishable, HypothesesNotMet, NotDetermined };

const char* to_string(Verdict v);

struct HypothesisFlag {
    std::string name;
    bool holds = false;

    friend bool operator==(const HypothesisFlag&, const HypothesisFlag&) = default;
};

/// Result of the Freedman-style comparison: homeomorphic is empty when one
/// side is not simply connected and the criterion does not apply.
struct HomeoComparison {
    std::optional<bool> homeomorphic;
    std::string note;
    std::optional<HomeoInvariants> first;
    std::optional<HomeoInvariants> second;
};

HomeoComparison check_homeomorphic(const Manifold4& x1, const Manifold4& x2);

/// The explicit invariant separating the two stabilizations: a nonvanishing
/// query on the blown-up side against the vanishing statement on the
/// minimal side.
struct Witness {
    std::string nonminimal_space;   // "<name> x S2"
    std::string query;              // the Lemma 3.2 query on that space
    Z value;                        // -1
    std::vector<std::string> confirmations;
    std::string minimal_space;
    std::string vanishing_statement;
    Z vanishing_value;              // 0
};

struct DistinguishReport {
    std::string first_name;
    std::string second_name;
    HomeoComparison homeo;
    std::vector<HypothesisFlag> hypotheses;
    Verdict verdict = Verdict::NotDetermined;
    std::string detail;
    std::optional<Witness> witness;
    std::vector<std::string> citations;
};

/// Corollary 3.8 pipeline. Detects which factor is minimal, so the verdict
/// is symmetric in the arguments: swapping them exchanges the roles but not
/// the conclusion.
DistinguishReport distinguish_stabilized(const Manifold4& x1, const Manifold4& x2);

std::string to_text(const DistinguishReport& r);

/// Canonical JSON rendering (sorted keys, stable across runs).
std::string to_json(const DistinguishReport& r);

}  // namespace gwzero
