#include "correspond.hpp"

#include <sstream>

namespace wqo {

Indec treeToIndec(const Tree& t) {
  if (t.isLeaf()) return Indec::makeAtom(t.label());
  std::vector<Indec> body;
  for (const auto& c : t.children()) body.push_back(treeToIndec(c));
  return Indec::makePow(std::move(body));
}

NormalSeq treeToSeq(const Tree& t) { return {{treeToIndec(t)}}; }

namespace {

Tree indecToTree(const QO& q, const Indec& c) {
  if (c.atom) return Tree::leaf(c.label);
  std::vector<Tree> children;
  for (const auto& f : factors(q, NormalSeq{{c}})) children.push_back(indecToTree(q, f));
  return Tree::node(std::move(children));
}

}  // namespace

Tree seqToTree(const QO& q, const NormalSeq& s) {
  if (s.components.size() != 1)
    throw DomainError("seqToTree: input must be indecomposable");
  return indecToTree(q, s.components[0]);
}

int EquivReport::okCount() const {
  int n = 0;
  for (const auto& c : cases)
    if (c.ok) ++n;
  return n;
}

std::string EquivReport::text() const {
  std::ostringstream os;
  if (seed != 0) os << "seed " << seed << "\n";
  for (const auto& c : cases)
    os << "case " << c.index << " " << c.direction << " "
       << (c.ok ? "ok" : "FAIL") << "\n";
  os << okCount() << "/" << total() << " ok\n";
  return os.str();
}

EquivReport checkEquivalence(const QO& q, const std::vector<Tree>& trees,
                             const std::vector<NormalSeq>& seqs) {
  EquivReport report;
  int index = 0;
  for (const auto& t : trees) {
    Tree back = seqToTree(q, treeToSeq(t));
    bool ok = leT(q, t, back) && leT(q, back, t);
    report.cases.push_back({index++, "tree", ok});
  }
  for (const auto& s : seqs) {
    NormalSeq back = treeToSeq(seqToTree(q, s));
    bool ok = embeds(q, s, back) && embeds(q, back, s);
    report.cases.push_back({index++, "seq", ok});
  }
  return report;
}

}  // namespace wqo
