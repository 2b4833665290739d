#include "parsicompact/newick.hpp"

#include <cctype>
#include <unordered_map>

#include "parsicompact/canonical.hpp"
#include "parsicompact/error.hpp"

namespace parsicompact {

namespace {

constexpr std::string_view kSpecial = "()[]':;,";

class NewickReader {
 public:
  NewickReader(std::string_view text, std::span<const std::string> names) : text_(text) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], static_cast<SpeciesId>(i));
  }

  MixedTree read() {
    std::vector<NodeId> open;
    bool expect_subtree = true;
    bool started = false;
    while (true) {
      skip_blank();
      if (expect_subtree) {
        NodeId u;
        if (peek() == '(') {
          ++pos_;
          u = tree_.add_node();
          if (!open.empty()) tree_.connect(open.back(), u);
          open.push_back(u);
          started = true;
          continue;
        }
        std::string name = read_label();
        if (name.empty()) fail("expected '(' or a species name");
        u = tree_.add_node();
        if (!open.empty()) tree_.connect(open.back(), u);
        assign(u, name);
        if (!started && open.empty()) {
          started = true;
        }
        skip_length();
        expect_subtree = false;
        continue;
      }
      const char c = peek();
      if (c == ',') {
        if (open.empty()) fail("',' outside parentheses");
        ++pos_;
        expect_subtree = true;
      } else if (c == ')') {
        if (open.empty()) fail("unbalanced ')'");
        ++pos_;
        NodeId u = open.back();
        open.pop_back();
        skip_blank();
        std::string name = read_label();
        if (!name.empty()) assign(u, name);
        skip_length();
      } else if (c == ';') {
        if (!open.empty()) fail("missing ')' before ';'");
        ++pos_;
        skip_blank();
        if (pos_ != text_.size()) fail("trailing text after ';'");
        break;
      } else if (c == '\0') {
        fail("missing ';'");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    for (NodeId u : tree_.nodes()) {
      if (tree_.degree(u) <= 1 && !tree_.is_labelled(u)) fail("unnamed leaf");
    }
    const NodeId root = 0;
    if (!tree_.is_labelled(root) && tree_.degree(root) == 2) tree_.unsubdivide(root);
    return std::move(tree_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kNewickParse, "Newick parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '[') {
        auto end = text_.find(']', pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 1;
      } else {
        break;
      }
    }
  }

  std::string read_label() {
    std::string out;
    if (peek() == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted name");
        if (text_[pos_] == '\'') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
            out.push_back('\'');
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        out.push_back(text_[pos_++]);
      }
      if (out.empty()) fail("empty quoted name");
      return out;
    }
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || kSpecial.find(c) != std::string_view::npos) break;
      out.push_back(c);
      ++pos_;
    }
    return out;
  }

  void skip_length() {
    skip_blank();
    if (peek() != ':') return;
    ++pos_;
    skip_blank();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   std::string_view("+-.eE").find(text_[pos_]) != std::string_view::npos)) {
      ++pos_;
    }
    if (pos_ == begin) fail("expected a branch length after ':'");
    skip_blank();
  }

  void assign(NodeId u, const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw Error(ErrorCode::kUnknownSpecies, "tree names unknown species '" + name + "'");
    }
    if (tree_.node_of(it->second)) {
      throw Error(ErrorCode::kDuplicateLabel, "species '" + name + "' appears twice in the tree");
    }
    tree_.set_label(u, it->second);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, SpeciesId> index_;
  MixedTree tree_;
};

void put_name(std::string& out, const std::string& name) {
  bool quote = name.empty();
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || kSpecial.find(c) != std::string_view::npos) quote = true;
  }
  if (!quote) {
    out += name;
    return;
  }
  out.push_back('\'');
  for (char c : name) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
}

template <class ChildrenOf>
std::string write_from(const MixedTree& tree, std::span<const std::string> names, NodeId root,
                       ChildrenOf children_of) {
  std::string out;
  // Explicit stack: (node, index of next child to emit).
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto& kids = children_of(u);
    if (next == 0 && !kids.empty()) out.push_back('(');
    if (next < kids.size()) {
      if (next > 0) out.push_back(',');
      NodeId child = kids[next++];
      stack.emplace_back(child, 0);
      continue;
    }
    if (!kids.empty()) out.push_back(')');
    if (tree.is_labelled(u)) {
      const SpeciesId s = tree.species(u);
      if (s >= names.size()) throw Error(ErrorCode::kUnknownSpecies, "species id without a name");
      put_name(out, names[s]);
    }
    stack.pop_back();
  }
  out.push_back(';');
  return out;
}

}  // namespace

MixedTree parse_newick(std::string_view text, std::span<const std::string> names) {
  return NewickReader(text, names).read();
}

MixedTree parse_newick(std::string_view text, const CharacterMatrix& matrix) {
  const auto names = matrix.names();
  return parse_newick(text, names);
}

std::string write_newick(const MixedTree& tree, std::span<const std::string> names, NodeId root) {
  RootedView view(tree, root);
  std::vector<std::vector<NodeId>> children(tree.capacity());
  for (NodeId u : view.preorder()) {
    for (NodeId v : tree.neighbors(u)) {
      if (v != view.parent(u)) children[u].push_back(v);
    }
  }
  return write_from(tree, names, root, [&](NodeId u) -> const std::vector<NodeId>& { return children[u]; });
}

std::string write_newick(const MixedTree& tree, std::span<const std::string> names) {
  const CanonicalRooting rooting = canonical_rooting(tree);
  return write_from(tree, names, rooting.root,
                    [&](NodeId u) -> const std::vector<NodeId>& { return rooting.children[u]; });
}

std::string write_newick(const MixedTree& tree, const CharacterMatrix& matrix) {
  const auto names = matrix.names();
  return write_newick(tree, std::span<const std::string>(names));
}

}  // namespace parsicompact
