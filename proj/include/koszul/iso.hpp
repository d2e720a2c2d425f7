#pragma once

#include <cstdint>
#include <optional>

#include "koszul/module.hpp"

namespace koszul {

// Basis of the degree-preserving homomorphisms M -> N, computed in the degrees
// both modules know.
std::vector<ModuleMap> hom_space(const GradedModule& m, const GradedModule& n);

bool is_isomorphism(const GradedModule& m, const GradedModule& n, const ModuleMap& f);

struct IsoResult {
  Verdict verdict;
  std::optional<ModuleMap> iso;
};

struct IsoOptions {
  // Exhaustive search over GF(p) is used when dim Hom <= this and p^dim is small.
  size_t exhaustive_dim = 4;
  size_t exhaustive_budget = 200000;
  size_t random_tries = 64;
  uint64_t seed = 1;
};

// Decides M = N as graded modules. Fails is only returned with a proof: wrong
// dimensions, mismatched Hom dimensions, or an exhausted search.
IsoResult graded_iso(const GradedModule& m, const GradedModule& n, const IsoOptions& opts = {});

}  // namespace koszul
