#pragma once

#include "quivstab/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace quivstab {

struct Arrow {
    std::string name;
    int src;
    int tgt;
};

// One term of a relation: coeff * path. Paths are arrow-id sequences in
// composition order: {f, g} denotes f∘g (g applied first), so the path's
// source is src(back()) and its target is tgt(front()).
struct RelationTerm {
    Rational coeff;
    std::vector<int> path;
};

struct PathRelation {
    std::vector<RelationTerm> terms;
};

// Rewriting system and irreducible-path basis of the bound path algebra,
// computed up to a length bound. Existence of the structure certifies the
// algebra is finite dimensional with top path length < bound.
struct PathStructure {
    struct Rule {
        std::vector<int> lhs;
        std::vector<std::pair<Rational, std::vector<int>>> rhs;
    };
    int bound = 0;
    std::vector<Rule> rules;
    // basis[src][tgt] = irreducible paths src->tgt, sorted by (length, lex).
    // Length-0 paths are represented by the empty vector (only when src==tgt).
    std::vector<std::vector<std::vector<std::vector<int>>>> basis;

    using Combo = std::map<std::vector<int>, Rational>;
    Combo normalize(const Combo& c) const;
    Combo normalize_path(const std::vector<int>& path) const;
};

class Quiver {
  public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           std::vector<PathRelation> relations);

    int num_vertices() const { return int(vertices_.size()); }
    int num_arrows() const { return int(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<PathRelation>& relations() const { return relations_; }
    bool hereditary() const { return relations_.empty(); }

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;

    int path_source(const std::vector<int>& path) const;
    int path_target(const std::vector<int>& path) const;

    // Computed on first use; throws BudgetError if an irreducible path reaches
    // the bound (finite dimensionality cannot be certified).
    const PathStructure& paths(int bound = 0) const;

    bool same_as(const Quiver& o) const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<PathRelation> relations_;
    mutable std::shared_ptr<const PathStructure> paths_cache_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Built-in families.
QuiverPtr make_pn(int n);  // two vertices, n parallel arrows
QuiverPtr make_tn(int N);  // Beilinson-type quiver with commutation relations

// Structured text format: [vertices] / [arrows] / [relations] sections.
QuiverPtr parse_quiver(const std::string& spec_text);
std::string quiver_to_text(const Quiver& q);

int default_path_bound();
std::int64_t default_prime();
long long default_subrep_budget();

}  // namespace quivstab
