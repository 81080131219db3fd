#pragma once

// Object words: tensor words of irreducible labels with explicit bracketing.
// The monoidal unit is the empty word; a (x) 1 and a are *different* words,
// related by the unitor arrows. Arrows compose only between equal words
// (letters and bracketing both).

#include <memory>
#include <string>
#include <vector>

namespace tetrasym {

class Word {
 public:
  Word() : node_(unit_node()) {}  // the monoidal unit

  static Word unit();
  static Word leaf(int label);
  static Word tensor(const Word& left, const Word& right);
  // Left-comb word ((l0 (x) l1) (x) l2) ...; unit for an empty list.
  static Word chain(const std::vector<int>& labels);

  bool is_unit() const;
  bool is_leaf() const;
  bool is_tensor() const;
  int label() const;   // leaf only
  Word left() const;   // tensor only
  Word right() const;  // tensor only

  std::vector<int> letters() const;
  std::size_t length() const { return letters().size(); }

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }
  bool operator<(const Word& other) const;  // structural order, for map keys

  std::string str() const;

  // Conjugate word: hat(unit)=unit, hat(p)=p-hat, hat(l(x)r)=hat(r)(x)hat(l).
  // Involutive whenever conj is a label involution.
  template <typename ConjFn>
  Word hat(ConjFn conj) const {
    if (is_unit()) return *this;
    if (is_leaf()) return leaf(conj(label()));
    return tensor(right().hat(conj), left().hat(conj));
  }

 private:
  enum class Kind { Unit, Leaf, Tensor };
  struct Node {
    Kind kind;
    int label = -1;
    std::shared_ptr<const Node> l, r;
  };
  static std::shared_ptr<const Node> unit_node();
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace tetrasym
