#include "doctest.h"

#include <string>

#include "biframe/builders.hpp"
#include "biframe/congruence.hpp"
#include "biframe/coproduct.hpp"
#include "biframe/dot.hpp"
#include "biframe/error.hpp"
#include "biframe/json_io.hpp"
#include "helpers.hpp"

using namespace biframe;

TEST_CASE("poset JSON round trip") {
  FinPoset p = th::poset({"0", "a", "1"}, {{0, 1}, {1, 2}});
  FinPoset back = poset_from_json_text(poset_to_json_text(p));
  CHECK(back == p);

  CHECK(th::throws_kind(ErrorKind::BadInput, [] { poset_from_json_text("{"); }));
  CHECK(th::throws_kind(ErrorKind::BadInput,
                        [] { poset_from_json_text("{\"elements\": [\"x\"]}"); }));
  CHECK(th::throws_kind(ErrorKind::BadInput, [] {
    poset_from_json_text("{\"elements\": [\"x\"], \"leq\": [[0, 5]]}");
  }));
  // order-law failures surface through the same channel as parse errors
  CHECK_THROWS_AS(poset_from_json_text(
                      "{\"elements\": [\"x\", \"y\"], \"leq\": [[0,1],[1,0]]}"),
                  Error);
}

TEST_CASE("frame JSON round trip") {
  FramePtr f = coproduct(chain_frame(3), chain_frame(3)).frame;
  FramePtr back = frame_from_json_text(frame_to_json_text(*f));
  CHECK(back->poset() == f->poset());
  // non-frames are rejected on load
  FinPoset n5 = th::pentagon_poset();
  CHECK(th::throws_kind(ErrorKind::NotDistributive,
                        [&] { frame_from_json_text(poset_to_json_text(n5)); }));
}

TEST_CASE("biframe JSON round trip") {
  for (const BiframePtr& l : {biframe_33(), diagonal_biframe(diamond_frame())}) {
    BiframePtr back = biframe_from_json_text(biframe_to_json_text(*l));
    CHECK(back->ambient()->poset() == l->ambient()->poset());
    CHECK(back->component(1) == l->component(1));
    CHECK(back->component(2) == l->component(2));
  }
  CHECK(th::throws_kind(ErrorKind::BadInput,
                        [] { biframe_from_json_text("{\"ambient\": 3}"); }));
}

TEST_CASE("hom, congruence and lattice serialization") {
  FramePtr three = chain_frame(3);
  FrameHom high = validate_hom(three, chain_frame(2), {0, 1, 1});
  std::string hj = hom_to_json_text(high, "dom", "cod");
  CHECK(hj.find("\"map\"") != std::string::npos);
  CHECK(hj.find("\"dom\"") != std::string::npos);

  const int a = th::elt(three, "a");
  std::string cj = congruence_to_json_text(closed_congruence(three, a), "three");
  CHECK(cj.find("\"blocks\"") != std::string::npos);

  std::string lj = lattice_to_json_text(three->poset());
  CHECK(lj.find("\"elements\"") != std::string::npos);
}

TEST_CASE("unicode labels") {
  CHECK(unicode_label("a+1") == "a\xE2\x8A\x95"
                                "1");
  CHECK(unicode_label("a+1 v 1+a") ==
        "a\xE2\x8A\x95"
        "1 \xE2\x88\xA8 1\xE2\x8A\x95"
        "a");
  CHECK(unicode_label("c(a+1)^o(1+a)") ==
        "\xF0\x9D\x94\xA0(a\xE2\x8A\x95"
        "1)\xE2\x88\xA7\xF0\x9D\x94\xAC(1\xE2\x8A\x95"
        "a)");
  CHECK(unicode_label("0") == "0");
}

TEST_CASE("DOT export") {
  FramePtr f = coproduct(chain_frame(3), chain_frame(3)).frame;
  std::string plain = to_dot(f->poset(), "cop", false);
  CHECK(plain.find("digraph \"cop\"") != std::string::npos);
  CHECK(plain.find("a+1 v 1+a") != std::string::npos);
  CHECK(plain.find("rankdir=BT") != std::string::npos);
  // only cover edges appear: bottom to top is never direct
  CHECK(plain.find("n0 -> n5") == std::string::npos);

  std::string uni = to_dot(f->poset(), "cop", true);
  CHECK(uni.find("\xE2\x8A\x95") != std::string::npos);
}

TEST_CASE("named builders") {
  CHECK(build_frame("frame:4")->size() == 4);
  CHECK(build_frame("frame:2x2")->size() == 4);
  CHECK(build_frame("4")->size() == 4);
  CHECK(build_biframe("biframe:3.3")->ambient()->size() == 6);
  CHECK(build_biframe("biframe:diag:frame:3")->ambient()->size() == 3);
  CHECK(build_biframe("biframe:diag:2x2")->ambient()->size() == 4);
  CHECK(th::throws_kind(ErrorKind::BadInput, [] { build_frame("frame:x"); }));
  CHECK(th::throws_kind(ErrorKind::BadInput, [] { build_biframe("biframe:nope"); }));
}
