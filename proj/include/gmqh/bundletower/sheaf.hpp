#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gmqh::tower {

// Expression tree for (virtual) bundles on a tower. Atoms refer to tower
// generators and stages by name/index; evaluation needs a TowerSpace.
struct SheafNode;
using Sheaf = std::shared_ptr<const SheafNode>;

struct SheafNode {
  enum class Kind { Trivial, Line, TautSub, TautQuotient, Dual, Sum, Difference, Tensor, Sym2, Wedge2 };
  Kind kind;
  int rank = 0;                // Trivial
  std::string generator;       // Line
  int multiple = 0;            // Line: O(multiple * generator)
  int stage = -1;              // TautSub / TautQuotient
  std::vector<Sheaf> children;
};

Sheaf trivial(int rank);
Sheaf line(const std::string& generator, int multiple);
Sheaf taut_sub(int stage);
Sheaf taut_quotient(int stage);
Sheaf dual(Sheaf e);
Sheaf sum(Sheaf a, Sheaf b);
Sheaf sum(const std::vector<Sheaf>& parts);
Sheaf difference(Sheaf a, Sheaf b);
Sheaf tensor(Sheaf a, Sheaf b);
Sheaf sym2(Sheaf e);
Sheaf wedge2(Sheaf e);

std::string to_string(const Sheaf& e);

}  // namespace gmqh::tower
