#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/permutation.hpp"
#include "fgt/subgroup.hpp"

namespace testutil {

/// Element with the given label; permutation labels are normalized so
/// "(1 2)" and "(1,2)" both work.
inline fgt::Elem elem(const fgt::Group& g, const std::string& label) {
  std::string wanted = label;
  if (!label.empty() && label[0] == '(') wanted = fgt::parse_cycles(label).to_cycles();
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.label(static_cast<fgt::Elem>(i)) == wanted) return static_cast<fgt::Elem>(i);
  throw std::runtime_error("no element labelled " + label);
}

inline fgt::Subgroup gen(const fgt::Group& g, std::initializer_list<const char*> labels) {
  std::vector<fgt::Elem> seed;
  for (const char* l : labels) seed.push_back(elem(g, l));
  return fgt::generated_subgroup(g, seed);
}

}  // namespace testutil
