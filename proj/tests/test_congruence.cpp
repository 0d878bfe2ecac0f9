#include "doctest.h"

#include <random>
#include <utility>
#include <vector>

#include "biframe/builders.hpp"
#include "biframe/congruence.hpp"
#include "biframe/coproduct.hpp"
#include "biframe/error.hpp"
#include "helpers.hpp"

using namespace biframe;

TEST_CASE("congruence closure basics") {
  FramePtr three = chain_frame(3);
  CHECK(congruence_closure(three, {}) == Congruence::diagonal(three));

  const int a = th::elt(three, "a");
  Congruence t = congruence_closure(three, {{a, three->top()}});
  CHECK(t.num_blocks() == 2);
  CHECK(t.same(a, three->top()));
  CHECK(!t.same(three->bottom(), a));
}

TEST_CASE("closure in the coproduct of two 3-chains") {
  Coproduct cp = coproduct(chain_frame(3), chain_frame(3));
  const FramePtr& f = cp.frame;
  Congruence t = congruence_closure(
      f, {{th::elt(f, "a+1"), f->top()}, {th::elt(f, "1+a"), f->top()}});
  CHECK(t.num_blocks() == 2);
  // the meet of the two merged generators is dragged along
  CHECK(t.same(th::elt(f, "a+a"), f->top()));
  CHECK(!t.same(f->bottom(), f->top()));
}

TEST_CASE("quotients") {
  FramePtr three = chain_frame(3);
  auto [iso, p0] = quotient(Congruence::diagonal(three));
  CHECK(iso->size() == 3);
  CHECK(is_injective(p0));

  const int a = th::elt(three, "a");
  auto [two, p1] = quotient(congruence_closure(three, {{a, three->top()}}));
  CHECK(two->size() == 2);
  CHECK(is_onto(p1));

  auto [one, p2] = quotient(Congruence::everything(three));
  CHECK(one->size() == 1);
}

TEST_CASE("factoring through a quotient") {
  FramePtr three = chain_frame(3), two = chain_frame(2);
  const int a = th::elt(three, "a");
  Congruence t = congruence_closure(three, {{a, three->top()}});
  auto [q, p] = quotient(t);

  FrameHom pp = factor_through(p, t);
  CHECK(is_iso(pp));

  FrameHom high = validate_hom(three, two, {0, 1, 1});
  FrameHom tilde = factor_through(high, t);
  CHECK(is_iso(tilde));
  CHECK(same_hom(compose(tilde, p), high));

  CHECK(th::throws_kind(ErrorKind::NotConstantOnBlocks,
                        [&] { factor_through(identity_hom(three), t); }));
}

TEST_CASE("kernels and the image factorization") {
  FramePtr three = chain_frame(3);
  CHECK(kernel(identity_hom(three)) == Congruence::diagonal(three));

  std::vector<FramePtr> frames = {chain_frame(2), chain_frame(3), chain_frame(4),
                                  diamond_frame()};
  for (const FramePtr& l : frames)
    for (const FramePtr& m : frames)
      for (const FrameHom& f : enumerate_homs(l, m)) {
        Congruence k = kernel(f);
        auto [q, p] = quotient(k);
        FrameHom emb = factor_through(f, k);
        CHECK(is_onto(p));
        CHECK(is_injective(emb));
        CHECK(same_hom(compose(emb, p), f));
      }
}

TEST_CASE("congruence enumeration") {
  CHECK(all_congruences(chain_frame(2)).size() == 2);
  CHECK(all_congruences(chain_frame(3)).size() == 4);
  CHECK(all_congruences(diamond_frame()).size() == 4);
  CHECK(th::throws_kind(ErrorKind::SizeLimitExceeded,
                        [] { all_congruences(chain_frame(5), 4); }));
}

TEST_CASE("closed and open congruences") {
  FramePtr three = chain_frame(3);
  const int a = th::elt(three, "a");
  CHECK(closed_congruence(three, three->bottom()) == Congruence::diagonal(three));
  CHECK(open_congruence(three, three->top()) == Congruence::diagonal(three));

  Congruence ca = closed_congruence(three, a);
  CHECK(ca.same(three->bottom(), a));
  CHECK(!ca.same(a, three->top()));
  Congruence oa = open_congruence(three, a);
  CHECK(oa.same(a, three->top()));
  CHECK(!oa.same(three->bottom(), a));
  CHECK(quotient(ca).first->size() == 2);
  CHECK(quotient(oa).first->size() == 2);

  Coproduct cp = coproduct(chain_frame(3), chain_frame(3));
  Congruence odiag = open_congruence(cp.frame, th::elt(cp.frame, "a+a"));
  CHECK(odiag.num_blocks() == 2);
  CHECK(quotient(odiag).first->size() == 2);
}

TEST_CASE("closure operator laws for congruence closure") {
  std::mt19937 rng(411905);
  Coproduct cp = coproduct(chain_frame(3), chain_frame(3));
  std::vector<FramePtr> frames = {diamond_frame(), cp.frame, chain_frame(4)};
  for (const FramePtr& l : frames)
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::pair<int, int>> r, s;
      const int nr = static_cast<int>(rng() % 4);
      for (int i = 0; i < nr; ++i)
        r.emplace_back(static_cast<int>(rng() % l->size()),
                       static_cast<int>(rng() % l->size()));
      s = r;
      s.emplace_back(static_cast<int>(rng() % l->size()),
                     static_cast<int>(rng() % l->size()));

      Congruence cr = congruence_closure(l, r);
      Congruence cs = congruence_closure(l, s);
      for (auto [x, y] : r) CHECK(cr.same(x, y));  // extensive
      CHECK(cr.refines(cs));                       // monotone
      // idempotent: closing the closure's pairs adds nothing
      std::vector<std::pair<int, int>> again;
      for (int x = 0; x < l->size(); ++x) again.emplace_back(x, cr.rep(x));
      CHECK(congruence_closure(l, again) == cr);
    }
}

TEST_CASE("homs constant on generators are constant on the closure") {
  std::mt19937 rng(52801);
  Coproduct cp = coproduct(chain_frame(3), chain_frame(3));
  std::vector<FramePtr> targets = {chain_frame(2), chain_frame(3)};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::pair<int, int>> r;
    const int nr = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nr; ++i)
      r.emplace_back(static_cast<int>(rng() % cp.frame->size()),
                     static_cast<int>(rng() % cp.frame->size()));
    Congruence cl = congruence_closure(cp.frame, r);
    for (const FramePtr& t : targets)
      for (const FrameHom& h : enumerate_homs(cp.frame, t)) {
        bool constant_on_r = true;
        for (auto [x, y] : r)
          if (h.map[x] != h.map[y]) constant_on_r = false;
        if (!constant_on_r) continue;
        for (int x = 0; x < cp.frame->size(); ++x) CHECK(h.map[x] == h.map[cl.rep(x)]);
      }
  }
}

TEST_CASE("meet and join in the congruence lattice") {
  FramePtr l = coproduct(chain_frame(3), chain_frame(3)).frame;
  auto cons = all_congruences(l);
  for (const Congruence& a : cons)
    for (const Congruence& b : cons) {
      Congruence m = congruence_meet(a, b);
      CHECK(m.refines(a));
      CHECK(m.refines(b));
      for (const Congruence& c : cons)
        if (c.refines(a) && c.refines(b)) CHECK(c.refines(m));
      // meet is the intersection of the partitions
      for (int x = 0; x < l->size(); ++x)
        for (int y = 0; y < l->size(); ++y)
          CHECK(m.same(x, y) == (a.same(x, y) && b.same(x, y)));

      Congruence j = congruence_join(a, b);
      CHECK(a.refines(j));
      CHECK(b.refines(j));
      for (const Congruence& c : cons)
        if (a.refines(c) && b.refines(c)) CHECK(j.refines(c));
    }
}

TEST_CASE("from_blocks rejects non-congruences") {
  FramePtr d = diamond_frame();
  // merging one atom with bottom without dragging the other joins along
  CHECK_THROWS_AS(Congruence::from_blocks(d, {0, 0, 1, 2}), Error);
  CHECK(Congruence::from_blocks(d, {0, 1, 2, 3}) == Congruence::diagonal(d));
}
