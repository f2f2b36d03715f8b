#include "gmqh/bundletower/sheaf.hpp"

#include <stdexcept>

namespace gmqh::tower {

namespace {

Sheaf make(SheafNode node) { return std::make_shared<const SheafNode>(std::move(node)); }

Sheaf unary(SheafNode::Kind k, Sheaf e) {
  if (!e) throw std::invalid_argument("null sheaf expression");
  SheafNode n{k};
  n.children = {std::move(e)};
  return make(std::move(n));
}

Sheaf binary(SheafNode::Kind k, Sheaf a, Sheaf b) {
  if (!a || !b) throw std::invalid_argument("null sheaf expression");
  SheafNode n{k};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

}  // namespace

Sheaf trivial(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  SheafNode n{SheafNode::Kind::Trivial};
  n.rank = rank;
  return make(std::move(n));
}

Sheaf line(const std::string& generator, int multiple) {
  SheafNode n{SheafNode::Kind::Line};
  n.generator = generator;
  n.multiple = multiple;
  return make(std::move(n));
}

Sheaf taut_sub(int stage) {
  SheafNode n{SheafNode::Kind::TautSub};
  n.stage = stage;
  return make(std::move(n));
}

Sheaf taut_quotient(int stage) {
  SheafNode n{SheafNode::Kind::TautQuotient};
  n.stage = stage;
  return make(std::move(n));
}

Sheaf dual(Sheaf e) { return unary(SheafNode::Kind::Dual, std::move(e)); }
Sheaf sum(Sheaf a, Sheaf b) { return binary(SheafNode::Kind::Sum, std::move(a), std::move(b)); }
Sheaf sum(const std::vector<Sheaf>& parts) {
  if (parts.empty()) return trivial(0);
  Sheaf acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = sum(acc, parts[i]);
  return acc;
}
Sheaf difference(Sheaf a, Sheaf b) { return binary(SheafNode::Kind::Difference, std::move(a), std::move(b)); }
Sheaf tensor(Sheaf a, Sheaf b) { return binary(SheafNode::Kind::Tensor, std::move(a), std::move(b)); }
Sheaf sym2(Sheaf e) { return unary(SheafNode::Kind::Sym2, std::move(e)); }
Sheaf wedge2(Sheaf e) { return unary(SheafNode::Kind::Wedge2, std::move(e)); }

std::string to_string(const Sheaf& e) {
  using K = SheafNode::Kind;
  switch (e->kind) {
    case K::Trivial: return "O^" + std::to_string(e->rank);
    case K::Line: return "O(" + std::to_string(e->multiple) + e->generator + ")";
    case K::TautSub: return "S[" + std::to_string(e->stage) + "]";
    case K::TautQuotient: return "Q[" + std::to_string(e->stage) + "]";
    case K::Dual: return "dual(" + to_string(e->children[0]) + ")";
    case K::Sum: return "(" + to_string(e->children[0]) + " + " + to_string(e->children[1]) + ")";
    case K::Difference: return "(" + to_string(e->children[0]) + " - " + to_string(e->children[1]) + ")";
    case K::Tensor: return "(" + to_string(e->children[0]) + " x " + to_string(e->children[1]) + ")";
    case K::Sym2: return "Sym2(" + to_string(e->children[0]) + ")";
    case K::Wedge2: return "Wedge2(" + to_string(e->children[0]) + ")";
  }
  return "?";
}

}  // namespace gmqh::tower
