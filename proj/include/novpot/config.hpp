#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novpot/classes.hpp"
#include "novpot/potential.hpp"
#include "novpot/qh.hpp"

namespace novpot {

struct IndexCheckConfig {
    std::string name;
    Int n = 2;
    Int genus = 0;
    Int chi = 0;
    Int c1 = 0;
    Int gamma0 = 0;
    Int boundary_components = 0;
    Int z_du = 0;
    std::vector<IndexPuncture> punctures;
};

enum class QHRootMode { none, binomial, given };

// Parsed, cross-checked form of one configuration document.
struct DocumentConfig {
    std::string name;
    unsigned cyclotomic_order = 1;
    unsigned fiber_dimension = 0;
    MomentPolytope polytope;
    std::vector<Int> toric_counts;          // empty = all 1
    std::vector<PotentialTerm> extra_terms;
    std::vector<std::string> extra_term_names;
    std::optional<FiberPoint> fiber_point;
    LatticeSet lattices;
    std::vector<GluingRule> gluing_rules;
    std::vector<IndexCheckConfig> index_checks;
    std::optional<QHRing> qh_ring;
    QHRootMode qh_root_mode = QHRootMode::none;
    std::vector<Novikov> qh_roots;  // parsed when qh_root_mode == given

    PotentialFunction build() const {
        return build_potential(polytope, cyclotomic_order, toric_counts, extra_terms);
    }
    // Roots of the quotient polynomial per the configured mode; for the
    // binomial mode they are extracted from z^d = -f[0].
    std::vector<Novikov> resolve_qh_roots() const;
};

// Throws config_error with a line-anchored message on parse failures and a
// path-anchored message on schema violations.
DocumentConfig parse_config(const std::string& text, const std::string& source_name);
DocumentConfig load_config(const std::string& path);

}  // namespace novpot
