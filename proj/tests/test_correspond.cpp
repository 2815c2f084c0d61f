#include "doctest.h"

#include <random>

#include "correspond.hpp"
#include "oracle.hpp"

using namespace wqo;

namespace {
const QO kChain2 = builtinQO("chain2");
const QO kAnti2 = builtinQO("anti2");
}  // namespace

TEST_CASE("tree to sequence") {
  CHECK(treeToSeq(Tree::leaf(1)) == NormalSeq{{Indec::makeAtom(1)}});
  CHECK(treeToSeq(Tree::node({Tree::leaf(0), Tree::leaf(1)})) ==
        NormalSeq{{Indec::makePow({Indec::makeAtom(0), Indec::makeAtom(1)})}});
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    QO q = randomQO(rng, 1 + static_cast<int>(rng() % 3));
    Tree t = randomTree(rng, q, 3);
    CHECK(seqLength(treeToSeq(t)) ==
          omegaPow(Ordinal::fromNat(t.height())));
  }
}

TEST_CASE("sequence to tree") {
  CHECK(seqToTree(kChain2, NormalSeq{{Indec::makeAtom(1)}}) == Tree::leaf(1));
  CHECK(seqToTree(kAnti2,
                  NormalSeq{{Indec::makePow({Indec::makeAtom(0), Indec::makeAtom(1)})}}) ==
        Tree::node({Tree::leaf(0), Tree::leaf(1)}));
  CHECK(seqToTree(kChain2,
                  NormalSeq{{Indec::makePow({Indec::makePow({Indec::makeAtom(0)})})}}) ==
        Tree::node({Tree::node({Tree::leaf(0)})}));
  // dominated body elements disappear: (a + b)^w over a < b maps like (b)^w
  CHECK(seqToTree(kChain2,
                  NormalSeq{{Indec::makePow({Indec::makeAtom(0), Indec::makeAtom(1)})}}) ==
        Tree::node({Tree::leaf(1)}));
  CHECK_THROWS_AS(
      seqToTree(kChain2, NormalSeq{{Indec::makeAtom(0), Indec::makeAtom(0)}}),
      DomainError);
}

TEST_CASE("f is order-preserving and order-reflecting on small trees") {
  for (const QO* q : {&kChain2, &kAnti2}) {
    auto trees = enumerateTrees(*q, 5);
    for (const auto& s : trees)
      for (const auto& t : trees)
        CHECK(leT(*q, s, t) == embeds(*q, treeToSeq(s), treeToSeq(t)));
  }
}

TEST_CASE("round trips are equivalences") {
  CHECK(seqToTree(kChain2, treeToSeq(Tree::leaf(0))) == Tree::leaf(0));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    QO q = randomQO(rng, 1 + static_cast<int>(rng() % 3));
    Tree t = randomTree(rng, q, 3);
    Tree back = seqToTree(q, treeToSeq(t));
    CHECK(leT(q, t, back));
    CHECK(leT(q, back, t));

    NormalSeq s{{randomIndec(rng, q, 3)}};
    NormalSeq sBack = treeToSeq(seqToTree(q, s));
    CHECK(embeds(q, s, sBack));
    CHECK(embeds(q, sBack, s));
  }
}

TEST_CASE("equivalence report") {
  std::vector<Tree> trees = {Tree::leaf(0), Tree::node({Tree::leaf(0), Tree::leaf(1)})};
  std::vector<NormalSeq> seqs = {NormalSeq{{Indec::makePow({Indec::makeAtom(0)})}}};
  EquivReport r = checkEquivalence(kChain2, trees, seqs);
  CHECK(r.total() == 3);
  CHECK(r.okCount() == 3);
  CHECK(r.text().find("3/3 ok") != std::string::npos);
  CHECK(r.cases[0].direction == "tree");
  CHECK(r.cases[2].direction == "seq");
}
