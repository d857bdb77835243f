#pragma once

#include "fixcheck/fixpoint.hpp"

namespace fixcheck {

/// A parsed model file: one algebra declaration plus named sets, maps,
/// relations, distributions, blocks, diagrams and valuations.
struct Model {
  MVAlgebra algebra;

  struct MapDecl {
    std::string domain, codomain;  // codomain == "M" for valuations into the algebra
    bool into_algebra = false;
    std::map<Element, Element> elem_map;  // total when into a set
    Valuation valuation;                  // missing entries default to 0
  };
  struct RelDecl {
    std::string domain, codomain;
    std::set<std::pair<Element, Element>> pairs;
  };
  struct DistDecl {
    std::string base;
    Weights weights;
  };
  struct SetDecl {
    FiniteSet set;
    bool is_dists = false;  // declared via `dists { ... }`
  };
  struct ValDecl {
    std::string set;
    Valuation valuation;
  };
  struct BlockDecl {
    std::string kind, param;  // e.g. kind "minrel", param "R"
    Block block;
  };
  struct DiagramDecl {
    std::string expr;  // canonical source expression
    DiagramPtr diagram;
  };

  std::map<std::string, SetDecl> sets;
  std::map<std::string, MapDecl> maps;
  std::map<std::string, RelDecl> rels;
  std::map<std::string, DistDecl> dists;
  std::map<std::string, BlockDecl> blocks;
  std::map<std::string, DiagramDecl> diagrams;
  std::map<std::string, ValDecl> valuations;
  std::vector<std::pair<std::string, std::string>> decl_order;  // (kind, name)
};

/// Parses the line-oriented model language. Errors carry file:line.
Model parse_model(const std::string& text, const std::string& filename = "<input>");

/// Canonical text form; parse(print(m)) prints identically.
std::string print_model(const Model& m);

}  // namespace fixcheck
