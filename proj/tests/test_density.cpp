#include "doctest.h"

#include <vector>

#include "biframe/builders.hpp"
#include "biframe/congruence.hpp"
#include "biframe/density.hpp"
#include "biframe/error.hpp"
#include "biframe/subbilocale.hpp"
#include "helpers.hpp"

using namespace biframe;

TEST_CASE("booleanization of a frame") {
  // Boolean frames are their own booleanization
  Booleanization bb = booleanization_frame(diamond_frame());
  CHECK(bb.booleanized->size() == 4);
  CHECK(is_iso(bb.beta));

  Booleanization b3 = booleanization_frame(chain_frame(3));
  CHECK(b3.booleanized->size() == 2);
  CHECK(b3.beta.map == std::vector<int>{0, 1, 1});
  CHECK(b3.regulars.size() == 2);
  CHECK(is_onto(b3.beta));
  CHECK(is_dense_frame_hom(b3.beta));

  // every nonzero element of 3 ⊕ 3 is dense, so everything collapses
  Booleanization bc = booleanization_frame(biframe_33()->ambient());
  CHECK(bc.booleanized->size() == 2);
}

TEST_CASE("density through the factorization") {
  BiframePtr l = biframe_33();
  const FramePtr& amb = l->ambient();
  CHECK(density_factor_check(*l, identity_hom(amb)));
  CHECK(density_factor_check(
      *l, quotient(open_congruence(amb, th::elt(amb, "a+a"))).second));
  CHECK(density_factor_check(
      *l, quotient(closed_congruence(amb, th::elt(amb, "a+1"))).second));
}

TEST_CASE("the generated congruence") {
  CHECK(congruence_I(*diagonal_biframe(diamond_frame())) ==
        Congruence::diagonal(diamond_frame()));

  BiframePtr l = biframe_33();
  Congruence i = congruence_I(*l);
  CHECK(i.num_blocks() == 2);
  CHECK(i == open_congruence(l->ambient(), th::elt(l->ambient(), "a+a")));

  BiframePtr d3 = diagonal_biframe(chain_frame(3));
  CHECK(congruence_I(*d3) ==
        open_congruence(d3->ambient(), th::elt(d3->ambient(), "a")));
}

TEST_CASE("least dense subbilocale") {
  BiframeBooleanization bq = least_dense_subbilocale(diagonal_biframe(diamond_frame()));
  CHECK(bq.kernel == Congruence::diagonal(bq.biframe->ambient()));
  CHECK(bq.least_dense.quotient_biframe->ambient()->size() == 4);

  BiframePtr l = biframe_33();
  BiframeBooleanization bl = least_dense_subbilocale(l);
  CHECK(bl.least_dense.quotient_biframe->ambient()->size() == 2);
  CHECK(bl.kernel == open_congruence(l->ambient(), th::elt(l->ambient(), "a+a")));
  REQUIRE(bl.embedded.size() == 2);
  CHECK(bl.embedded[0] == l->ambient()->bottom());
  CHECK(bl.embedded[1] == l->ambient()->top());
  CHECK(is_dense_biframe_hom(bl.beta));
  CHECK(is_extremal_epi(bl.beta));

  BiframeBooleanization bd = least_dense_subbilocale(diagonal_biframe(chain_frame(3)));
  CHECK(bd.least_dense.quotient_biframe->ambient()->size() == 2);
}

TEST_CASE("least means below every dense subbilocale") {
  for (const BiframePtr& l :
       {biframe_33(), diagonal_biframe(chain_frame(3)), diagonal_biframe(diamond_frame())}) {
    BiframeBooleanization b = least_dense_subbilocale(l);
    for (const Congruence& k : subbilocale_lattice(l).kernels) {
      Subbilocale s = make_subbilocale(l, k);
      if (!is_dense_biframe_hom(s.projection)) continue;
      CHECK(k.refines(b.kernel));
    }
  }
}

TEST_CASE("skeletal maps and the induced map") {
  BiframePtr d3 = diagonal_biframe(chain_frame(3));
  BiframePtr d2 = diagonal_biframe(chain_frame(2));
  BiframeBooleanization bdom = least_dense_subbilocale(d3);
  BiframeBooleanization bcod = least_dense_subbilocale(d2);

  CHECK(skeletal_check(identity_biframe_hom(d3)));

  // a |-> 0 kills the dense element: not skeletal, no induced map
  BiframeHom low = validate_biframe_hom(
      d3, d2, validate_hom(d3->ambient(), d2->ambient(), {0, 0, 1}));
  CHECK(!skeletal_check(low));
  CHECK(th::throws_kind(ErrorKind::NotSkeletal,
                        [&] { induced_booleanization_map(low, bdom, bcod); }));

  // a |-> 1 is skeletal and induces the identity on the booleanizations
  BiframeHom high = validate_biframe_hom(
      d3, d2, validate_hom(d3->ambient(), d2->ambient(), {0, 1, 1}));
  CHECK(skeletal_check(high));
  BiframeHom ind = induced_booleanization_map(high, bdom, bcod);
  CHECK(is_iso(ind.ambient));
  CHECK(same_hom(compose(ind.ambient, bdom.beta.ambient),
                 compose(bcod.beta.ambient, high.ambient)));

  // beta itself induces an iso on booleanizations
  BiframeBooleanization bq = least_dense_subbilocale(bdom.least_dense.quotient_biframe);
  BiframeHom bind = induced_booleanization_map(bdom.beta, bdom, bq);
  CHECK(is_iso(bind.ambient));
}

TEST_CASE("induced maps commute whenever they exist") {
  std::vector<BiframePtr> bfs = {biframe_33(), diagonal_biframe(chain_frame(2)),
                                 diagonal_biframe(chain_frame(3)),
                                 diagonal_biframe(diamond_frame())};
  for (const BiframePtr& a : bfs)
    for (const BiframePtr& b : bfs) {
      BiframeBooleanization ba = least_dense_subbilocale(a);
      BiframeBooleanization bb = least_dense_subbilocale(b);
      for (const BiframeHom& f : enumerate_biframe_homs(a, b)) {
        bool skel = skeletal_check(f);
        try {
          BiframeHom ind = induced_booleanization_map(f, ba, bb);
          CHECK(same_hom(compose(ind.ambient, ba.beta.ambient),
                         compose(bb.beta.ambient, f.ambient)));
        } catch (const Error& e) {
          REQUIRE(e.kind() == ErrorKind::NotSkeletal);
          // skeletal maps always induce one
          CHECK(!skel);
        }
      }
    }
}
