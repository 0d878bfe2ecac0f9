#include "doctest.h"

#include <algorithm>
#include <vector>

#include "biframe/biframe.hpp"
#include "biframe/builders.hpp"
#include "biframe/congruence.hpp"
#include "biframe/coproduct.hpp"
#include "biframe/error.hpp"
#include "helpers.hpp"

using namespace biframe;

namespace {

// quotient biframe of l by t together with the projection, bypassing the
// B-fixedness requirement of make_subbilocale
std::pair<BiframePtr, BiframeHom> quotient_biframe_of(const BiframePtr& l,
                                                      const Congruence& t) {
  auto [qf, p] = quotient(t);
  std::vector<int> c1, c2;
  for (int x : l->component(1)) c1.push_back(p.map[x]);
  for (int x : l->component(2)) c2.push_back(p.map[x]);
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(c1);
  dedupe(c2);
  BiframePtr q = Biframe::validate(qf, c1, c2);
  return {q, validate_biframe_hom(l, q, p)};
}

}  // namespace

TEST_CASE("biframe validation") {
  BiframePtr l = biframe_33();
  CHECK(l->ambient()->size() == 6);
  CHECK(l->component(1).size() == 3);
  CHECK(l->component(2).size() == 3);
  CHECK(is_onto(l->structure_map()));
  CHECK(l->component_coproduct().frame->size() == 6);

  BiframePtr d = diagonal_biframe(chain_frame(3));
  CHECK(d->ambient()->size() == 3);
  CHECK(d->component(1) == d->component(2));
}

TEST_CASE("validation failures") {
  FramePtr amb = coproduct(chain_frame(3), chain_frame(3)).frame;
  const int b = amb->bottom(), t = amb->top();
  const int a1 = th::elt(amb, "a+1"), b1 = th::elt(amb, "1+a");

  // components must generate the ambient frame
  CHECK(th::throws_kind(ErrorKind::NotSubbasis,
                        [&] { Biframe::validate(amb, {b, t}, {b, b1, t}); }));
  // a component missing the top is not a subframe
  CHECK(th::throws_kind(ErrorKind::NotSubframe,
                        [&] { Biframe::validate(amb, {b, a1}, {b, b1, t}); }));
  CHECK_NOTHROW(Biframe::validate(amb, {b, a1, t}, {b, b1, t}));
}

TEST_CASE("component preservation of biframe homs") {
  BiframePtr l = biframe_33();
  const FramePtr& amb = l->ambient();
  // the factor-swap automorphism crosses the components
  std::vector<int> swap_map(amb->size());
  swap_map[amb->bottom()] = amb->bottom();
  swap_map[amb->top()] = amb->top();
  swap_map[th::elt(amb, "a+a")] = th::elt(amb, "a+a");
  swap_map[th::elt(amb, "a+1 v 1+a")] = th::elt(amb, "a+1 v 1+a");
  swap_map[th::elt(amb, "a+1")] = th::elt(amb, "1+a");
  swap_map[th::elt(amb, "1+a")] = th::elt(amb, "a+1");
  FrameHom swap_hom = validate_hom(amb, amb, swap_map);
  CHECK(th::throws_kind(ErrorKind::ComponentNotPreserved,
                        [&] { validate_biframe_hom(l, l, swap_hom); }));
  CHECK_NOTHROW(validate_biframe_hom(l, l, identity_hom(amb)));
}

TEST_CASE("a monic quotient projection that is not extremal epi") {
  BiframePtr l = biframe_33();
  const FramePtr& amb = l->ambient();
  Congruence ov = open_congruence(amb, th::elt(amb, "a+1 v 1+a"));
  auto [q, f] = quotient_biframe_of(l, ov);
  CHECK(q->ambient()->size() == 5);
  CHECK(is_onto(f.ambient));
  CHECK(is_monic(f));
  CHECK(!is_extremal_epi(f));

  // the extremal-epi part of its factorization is an isomorphism
  Factorization fac = factorize(f);
  CHECK(is_iso(fac.fbar.ambient));
  CHECK(fac.mid->ambient()->size() == 6);
  CHECK(is_monic(fac.embed));

  RfImage rf = image_via_Rf(f);
  CHECK(rf.image->size() == 6);
  CHECK(is_iso(rf.iso_to_mid));
}

TEST_CASE("an extremal epi collapsing both components") {
  BiframePtr l = biframe_33();
  BiframePtr d2 = diagonal_biframe(chain_frame(2));
  const FramePtr& amb = l->ambient();
  std::vector<int> m(amb->size(), 1);
  m[amb->bottom()] = 0;
  FrameHom beta = validate_hom(amb, d2->ambient(), m);
  BiframeHom f = validate_biframe_hom(l, d2, beta);
  CHECK(is_extremal_epi(f));
  CHECK(!is_monic(f));

  Factorization fac = factorize(f);
  CHECK(fac.mid->ambient()->size() == 2);
  CHECK(is_iso(fac.embed.ambient));
}

TEST_CASE("factorization invariants over enumerated homs") {
  std::vector<BiframePtr> bfs = {biframe_33(), diagonal_biframe(chain_frame(2)),
                                 diagonal_biframe(chain_frame(3)),
                                 diagonal_biframe(diamond_frame())};
  for (const BiframePtr& a : bfs)
    for (const BiframePtr& b : bfs)
      for (const BiframeHom& f : enumerate_biframe_homs(a, b)) {
        Factorization fac = factorize(f);
        CHECK(same_hom(compose(fac.embed, fac.fbar).ambient, f.ambient));
        CHECK(is_extremal_epi(fac.fbar));
        CHECK(is_monic(fac.embed));
        CHECK(image_via_Rf(f).image->size() == fac.mid->ambient()->size());
        // monic extremal epis are isos
        if (is_monic(f) && is_extremal_epi(f)) CHECK(is_iso(f.ambient));
      }
}

TEST_CASE("component inclusions are jointly epic") {
  for (const BiframePtr& l : {biframe_33(), diagonal_biframe(diamond_frame())}) {
    std::vector<int> gen(l->component(1));
    gen.insert(gen.end(), l->component(2).begin(), l->component(2).end());
    CHECK(static_cast<int>(subframe_generated(*l->ambient(), gen).size()) ==
          l->ambient()->size());
    for (int i = 1; i <= 2; ++i) {
      CHECK(is_injective(l->inclusion(i)));
      CHECK(same_hom(compose(l->structure_map(),
                             i == 1 ? l->component_coproduct().inj_left
                                    : l->component_coproduct().inj_right),
                     l->inclusion(i)));
    }
  }
}
