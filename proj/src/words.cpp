#include "tetrasym/words.hpp"

#include <stdexcept>

namespace tetrasym {

std::shared_ptr<const Word::Node> Word::unit_node() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Unit, -1, {}, {}});
  return n;
}

Word Word::unit() { return Word(); }

Word Word::leaf(int label) {
  return Word(std::make_shared<const Node>(Node{Kind::Leaf, label, {}, {}}));
}

Word Word::tensor(const Word& left, const Word& right) {
  return Word(
      std::make_shared<const Node>(Node{Kind::Tensor, -1, left.node_, right.node_}));
}

Word Word::chain(const std::vector<int>& labels) {
  if (labels.empty()) return unit();
  Word w = leaf(labels.front());
  for (std::size_t i = 1; i < labels.size(); ++i)
    w = tensor(w, leaf(labels[i]));
  return w;
}

bool Word::is_unit() const { return node_->kind == Kind::Unit; }
bool Word::is_leaf() const { return node_->kind == Kind::Leaf; }
bool Word::is_tensor() const { return node_->kind == Kind::Tensor; }

int Word::label() const {
  if (!is_leaf()) throw std::logic_error("Word::label on non-leaf");
  return node_->label;
}

Word Word::left() const {
  if (!is_tensor()) throw std::logic_error("Word::left on non-tensor");
  return Word(node_->l);
}

Word Word::right() const {
  if (!is_tensor()) throw std::logic_error("Word::right on non-tensor");
  return Word(node_->r);
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  struct Rec {
    static void visit(const Node* n, std::vector<int>& out) {
      switch (n->kind) {
        case Kind::Unit: return;
        case Kind::Leaf: out.push_back(n->label); return;
        case Kind::Tensor:
          visit(n->l.get(), out);
          visit(n->r.get(), out);
          return;
      }
    }
  };
  Rec::visit(node_.get(), out);
  return out;
}

// The printed form encodes the full structure, so string comparison is
// structural comparison. Words here never exceed a handful of letters.
bool Word::operator==(const Word& other) const {
  if (node_ == other.node_) return true;
  return str() == other.str();
}

bool Word::operator<(const Word& other) const { return str() < other.str(); }

std::string Word::str() const {
  switch (node_->kind) {
    case Kind::Unit: return "1";
    case Kind::Leaf: return "#" + std::to_string(node_->label);
    case Kind::Tensor:
      return "(" + Word(node_->l).str() + "*" + Word(node_->r).str() + ")";
  }
  return {};
}

}  // namespace tetrasym
