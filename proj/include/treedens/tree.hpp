#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treedens/errors.hpp"

namespace treedens {

// An unlabeled rooted tree shape. An empty child list makes a leaf; the
// single-vertex tree is both leaf and root. Internal vertices always have
// at least two children.
//
// Values are immutable: leaf count, height (edges on the longest
// root-to-leaf path) and the canonical code are computed once at
// construction, bottom-up. Children keep their construction order, so a
// parsed tree serializes back byte-identically; the canonical code is the
// serialization with children recursively sorted by (leaf count, code) and
// is equal exactly for isomorphic shapes.
class Tree {
 public:
  // The single leaf.
  Tree() : leaf_count_(1), height_(0), canonical_code_("*") {}

  explicit Tree(std::vector<Tree> children) : children_(std::move(children)) {
    if (children_.size() == 1)
      throw DomainError("an internal vertex must have at least 2 children");
    if (children_.empty()) {
      leaf_count_ = 1;
      height_ = 0;
      canonical_code_ = "*";
      return;
    }
    leaf_count_ = 0;
    height_ = 0;
    std::vector<std::pair<std::size_t, const std::string*>> keys;
    keys.reserve(children_.size());
    for (const Tree& child : children_) {
      leaf_count_ += child.leaf_count_;
      height_ = std::max(height_, child.height_ + 1);
      keys.emplace_back(child.leaf_count_, &child.canonical_code_);
    }
    std::sort(keys.begin(), keys.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first < b.first
                                          : *a.second < *b.second;
              });
    canonical_code_.push_back('(');
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i > 0) canonical_code_.push_back(',');
      canonical_code_.append(*keys[i].second);
    }
    canonical_code_.push_back(')');
  }

  static Tree leaf() { return Tree(); }

  bool is_leaf() const { return children_.empty(); }
  const std::vector<Tree>& children() const { return children_; }
  std::size_t leaf_count() const { return leaf_count_; }
  std::size_t height() const { return height_; }
  const std::string& canonical_code() const { return canonical_code_; }

  // Structural equality, child order included.
  friend bool operator==(const Tree& a, const Tree& b) {
    return a.canonical_code_ == b.canonical_code_ && a.children_ == b.children_;
  }

 private:
  std::vector<Tree> children_;
  std::size_t leaf_count_;
  std::size_t height_;
  std::string canonical_code_;
};

// The one total order on shapes used throughout: leaf count ascending,
// then canonical code ascending.
inline bool canonical_less(const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
  return a.canonical_code() < b.canonical_code();
}

// True iff a and b are isomorphic as rooted trees.
inline bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.canonical_code() == b.canonical_code();
}

inline bool valid_for(const Tree& t, int d) {
  if (t.children().size() > static_cast<std::size_t>(d)) return false;
  for (const Tree& child : t.children())
    if (!valid_for(child, d)) return false;
  return true;
}

inline bool strict_for(const Tree& t, int d) {
  if (t.is_leaf()) return true;
  if (t.children().size() != static_cast<std::size_t>(d)) return false;
  for (const Tree& child : t.children())
    if (!strict_for(child, d)) return false;
  return true;
}

inline std::size_t internal_count(const Tree& t) {
  if (t.is_leaf()) return 0;
  std::size_t count = 1;
  for (const Tree& child : t.children()) count += internal_count(child);
  return count;
}

// Emits the tree in stored child order; inverse of parse.
inline std::string serialize(const Tree& t) {
  if (t.is_leaf()) return "*";
  std::string out;
  out.push_back('(');
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i > 0) out.push_back(',');
    out.append(serialize(t.children()[i]));
  }
  out.push_back(')');
  return out;
}

// Isomorphic copy with children recursively sorted into canonical order;
// idempotent, and serialize(canonicalize(t)) == t.canonical_code().
inline Tree canonicalize(const Tree& t) {
  if (t.is_leaf()) return t;
  std::vector<Tree> children;
  children.reserve(t.children().size());
  for (const Tree& child : t.children()) children.push_back(canonicalize(child));
  std::sort(children.begin(), children.end(), canonical_less);
  return Tree(std::move(children));
}

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, std::optional<int> degree_bound)
      : text_(text), bound_(degree_bound) {}

  Tree run() {
    Tree result = parse_tree();
    skip_whitespace();
    if (pos_ != text_.size())
      throw ParseError("trailing characters after tree", pos_);
    return result;
  }

 private:
  Tree parse_tree() {
    skip_whitespace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '*') {
      ++pos_;
      return Tree::leaf();
    }
    if (text_[pos_] != '(')
      throw ParseError(std::string("expected '*' or '(', got '") +
                           text_[pos_] + "'",
                       pos_);
    const std::size_t vertex_offset = pos_;
    ++pos_;
    std::vector<Tree> children;
    children.push_back(parse_tree());
    skip_whitespace();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      children.push_back(parse_tree());
      skip_whitespace();
    }
    if (pos_ >= text_.size() || text_[pos_] != ')')
      throw ParseError("expected ',' or ')'", pos_);
    ++pos_;
    if (children.size() < 2)
      throw ArityError("vertex has 1 child", vertex_offset);
    if (bound_ && children.size() > static_cast<std::size_t>(*bound_))
      throw ArityError("vertex has " + std::to_string(children.size()) +
                           " children, exceeding d=" + std::to_string(*bound_),
                       vertex_offset);
    return Tree(std::move(children));
  }

  void skip_whitespace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::optional<int> bound_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: tree := "*" | "(" tree ("," tree)+ ")", whitespace ignored
// between tokens. A bounded d additionally enforces at most d children per
// vertex.
inline Tree parse(std::string_view text,
                  std::optional<int> d = std::nullopt) {
  if (d && *d < 2) throw DomainError("degree bound must be at least 2");
  return detail::Parser(text, d).run();
}

// 0-based leaf positions in depth-first pre-order of a specific tree.
struct LeafSet {
  std::vector<std::size_t> indices;  // strictly increasing

  LeafSet() = default;
  LeafSet(std::initializer_list<std::size_t> init) : indices(init) {}
  explicit LeafSet(std::vector<std::size_t> init) : indices(std::move(init)) {}

  void validate(std::size_t host_leaf_count) const {
    if (indices.empty()) throw DomainError("leaf set must be nonempty");
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i > 0 && indices[i] <= indices[i - 1])
        throw DomainError("leaf indices must be strictly increasing");
      if (indices[i] >= host_leaf_count)
        throw DomainError("leaf index " + std::to_string(indices[i]) +
                          " out of range for a tree with " +
                          std::to_string(host_leaf_count) + " leaves");
    }
  }
};

namespace detail {

inline std::optional<Tree> induce_rec(const Tree& vertex,
                                      const std::vector<std::size_t>& selected,
                                      std::size_t& next_leaf) {
  if (vertex.is_leaf()) {
    const std::size_t index = next_leaf++;
    if (std::binary_search(selected.begin(), selected.end(), index))
      return Tree::leaf();
    return std::nullopt;
  }
  std::vector<Tree> kept;
  for (const Tree& child : vertex.children()) {
    if (auto sub = induce_rec(child, selected, next_leaf))
      kept.push_back(std::move(*sub));
  }
  if (kept.empty()) return std::nullopt;
  if (kept.size() == 1) return std::move(kept.front());  // suppress degree 2
  return Tree(std::move(kept));
}

}  // namespace detail

// Leaf-induced subtree: the minimal subtree spanning the selected leaves,
// rooted at their most recent common ancestor, with every other degree-2
// vertex suppressed. The result is canonical.
inline Tree induce(const Tree& t, const LeafSet& s) {
  s.validate(t.leaf_count());
  std::size_t next_leaf = 0;
  auto result = detail::induce_rec(t, s.indices, next_leaf);
  return canonicalize(*result);  // nonempty selection always yields a tree
}

// Star C_k: k leaves joined to the root.
inline Tree build_star(int k) {
  if (k < 2) throw DomainError("a star needs at least 2 leaves");
  return Tree(std::vector<Tree>(static_cast<std::size_t>(k), Tree::leaf()));
}

// Caterpillar F^d_k: strictly d-ary, internal vertices on one descending
// path, each with d-1 leaf children except the lowest, which has d.
// Feasible iff k >= d and k == 1 (mod d-1); F^d_d is the star C_d.
inline Tree build_caterpillar(int d, int k) {
  if (d < 2) throw DomainError("degree bound must be at least 2");
  if (k < d || (k - 1) % (d - 1) != 0)
    throw DomainError("no " + std::to_string(d) + "-ary caterpillar with " +
                      std::to_string(k) + " leaves");
  Tree spine = build_star(d);
  for (int leaves = d; leaves < k; leaves += d - 1) {
    std::vector<Tree> children(static_cast<std::size_t>(d - 1), Tree::leaf());
    children.push_back(std::move(spine));
    spine = Tree(std::move(children));
  }
  return spine;
}

// Complete d-ary tree of height h: all d^h leaves at depth h.
inline Tree build_complete(int d, int h) {
  if (d < 2) throw DomainError("degree bound must be at least 2");
  if (h < 0) throw DomainError("height must be nonnegative");
  Tree level = Tree::leaf();
  for (int i = 0; i < h; ++i)
    level = Tree(std::vector<Tree>(static_cast<std::size_t>(d), level));
  return level;
}

namespace detail {

inline std::optional<Tree> remove_leaf_rec(const Tree& vertex,
                                           std::size_t target,
                                           std::size_t& next_leaf) {
  if (vertex.is_leaf())
    return next_leaf++ == target ? std::nullopt
                                 : std::optional<Tree>(Tree::leaf());
  std::vector<Tree> kept;
  for (const Tree& child : vertex.children()) {
    if (auto sub = remove_leaf_rec(child, target, next_leaf))
      kept.push_back(std::move(*sub));
  }
  if (kept.size() == 1) return std::move(kept.front());
  return Tree(std::move(kept));
}

// Deletes one leaf (DFS position) and suppresses the vertex left with a
// single child; the host must have at least 2 leaves.
inline Tree remove_leaf(const Tree& t, std::size_t index) {
  if (t.leaf_count() < 2)
    throw DomainError("cannot remove a leaf from the single-vertex tree");
  if (index >= t.leaf_count())
    throw DomainError("leaf index out of range");
  std::size_t next_leaf = 0;
  return *remove_leaf_rec(t, index, next_leaf);
}

// Replaces one leaf (DFS position) by a whole tree.
inline Tree replace_leaf(const Tree& vertex, std::size_t target,
                         const Tree& replacement, std::size_t& next_leaf) {
  if (vertex.is_leaf())
    return next_leaf++ == target ? replacement : vertex;
  std::vector<Tree> children;
  children.reserve(vertex.children().size());
  for (const Tree& child : vertex.children())
    children.push_back(replace_leaf(child, target, replacement, next_leaf));
  return Tree(std::move(children));
}

inline Tree replace_leaf(const Tree& t, std::size_t index,
                         const Tree& replacement) {
  if (index >= t.leaf_count()) throw DomainError("leaf index out of range");
  std::size_t next_leaf = 0;
  return replace_leaf(t, index, replacement, next_leaf);
}

}  // namespace detail

}  // namespace treedens
