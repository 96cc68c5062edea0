#include "ck/trees.hpp"

#include <algorithm>
#include <ostream>

#include "ck/errors.hpp"

namespace ck {

RootedTree::RootedTree() : enc_("[]"), degree_(1) {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.encoding() < b.encoding(); });
  enc_ = "[";
  degree_ = 1;
  for (const auto& c : children_) {
    enc_ += c.encoding();
    degree_ += c.degree();
  }
  enc_ += "]";
}

RootedTree RootedTree::decode(const std::string& encoding) {
  std::size_t pos = 0;
  struct Helper {
    const std::string& s;
    std::size_t& pos;
    RootedTree parse() {
      if (pos >= s.size() || s[pos] != '[') throw ParseError("bad tree encoding: '" + s + "'");
      ++pos;
      std::vector<RootedTree> children;
      while (pos < s.size() && s[pos] == '[') children.push_back(parse());
      if (pos >= s.size() || s[pos] != ']') throw ParseError("bad tree encoding: '" + s + "'");
      ++pos;
      return children.empty() ? RootedTree() : RootedTree(std::move(children));
    }
  } h{encoding, pos};
  RootedTree t = h.parse();
  if (pos != encoding.size()) throw ParseError("trailing input in tree encoding: '" + encoding + "'");
  return t;
}

RootedTree RootedTree::ladder(int n) {
  if (n < 1) throw Error("ladder needs at least one node");
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

RootedTree RootedTree::corolla(int n) {
  if (n < 1) throw Error("corolla needs at least one node");
  std::vector<RootedTree> leaves(static_cast<std::size_t>(n - 1));
  return n == 1 ? RootedTree() : RootedTree(std::move(leaves));
}

std::ostream& operator<<(std::ostream& os, const RootedTree& t) { return os << t.encoding(); }

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
}

Forest Forest::single(RootedTree t) { return Forest({std::move(t)}); }

Forest Forest::decode(const std::string& encoding) {
  if (encoding.empty() || encoding == "1") return Forest();
  std::vector<RootedTree> trees;
  std::size_t start = 0;
  while (start <= encoding.size()) {
    std::size_t comma = encoding.find(',', start);
    std::string part =
        comma == std::string::npos ? encoding.substr(start) : encoding.substr(start, comma - start);
    trees.push_back(RootedTree::decode(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Forest(std::move(trees));
}

int Forest::degree() const {
  int d = 0;
  for (const auto& t : trees_) d += t.degree();
  return d;
}

Forest Forest::operator*(const Forest& o) const {
  std::vector<RootedTree> all = trees_;
  all.insert(all.end(), o.trees_.begin(), o.trees_.end());
  return Forest(std::move(all));
}

Forest Forest::times(const RootedTree& t) const {
  std::vector<RootedTree> all = trees_;
  all.push_back(t);
  return Forest(std::move(all));
}

std::string Forest::encoding() const {
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i > 0) s += ",";
    s += trees_[i].encoding();
  }
  return s;
}

std::string Forest::str() const { return is_unit() ? "1" : encoding(); }

bool operator<(const Forest& a, const Forest& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.trees_ < b.trees_;
}

std::ostream& operator<<(std::ostream& os, const Forest& f) { return os << f.str(); }

namespace {

// Multisets of child trees with given total degree, children drawn (with
// repetition, nondecreasing index) from `pool`; each multiset yields one
// canonical tree, so no dedup pass is needed.
void child_multisets(const std::vector<RootedTree>& pool, std::size_t first, int remaining,
                     std::vector<RootedTree>& current, std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.push_back(current.empty() ? RootedTree() : RootedTree(current));
    return;
  }
  for (std::size_t i = first; i < pool.size(); ++i) {
    if (pool[i].degree() > remaining) continue;
    current.push_back(pool[i]);
    child_multisets(pool, i, remaining - pool[i].degree(), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int max_degree) {
  if (max_degree < 1) throw Error("max_degree must be >= 1");
  std::vector<RootedTree> all;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<RootedTree> fresh;
    std::vector<RootedTree> current;
    child_multisets(all, 0, d - 1, current, fresh);
    std::sort(fresh.begin(), fresh.end());
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace ck
