#ifndef BIFRAME_PUSHOUT_HPP
#define BIFRAME_PUSHOUT_HPP

#include "biframe/congruence.hpp"
#include "biframe/coproduct.hpp"
#include "biframe/frame.hpp"

namespace biframe {

/// A commuting square: f: L->M, g: L->N, with legs into the common corner
/// leg_f: M->P and leg_g: N->P.
struct PushoutSquare {
  FrameHom f;
  FrameHom g;
  FrameHom leg_f;
  FrameHom leg_g;

  const FramePtr& corner() const { return leg_f.cod; }
};

/// Pushout of the quotient by t along h: L->M, realized by congruence
/// transport: the result congruence on M is the closure of the h-images of
/// t's pairs. Returns the transported congruence, the quotient hom M->P and
/// the mediating hom L/t -> P.
struct TransportedPushout {
  Congruence on_cod;       // congruence on M
  FrameHom quotient_hom;   // M -> P
  FrameHom mediating;      // L/t -> P
};

TransportedPushout pushout_along_quotient(const FrameHom& h, const Congruence& t);

/// Pushout of a span (f: L->M, g: L->N) presented as
/// (M ⊕ N) / [ (ι_M f(a), ι_N g(a)) : a in L ].
PushoutSquare pushout(const FrameHom& f, const FrameHom& g, int max_ground = 20);

/// True iff the canonical comparison from the constructed pushout of
/// (sq.f, sq.g) to sq's corner is an isomorphism. Uses the congruence
/// transport route when either span map is onto, the coproduct presentation
/// otherwise. Throws SquareDoesNotCommute.
bool verify_pushout_square(const PushoutSquare& sq);

}  // namespace biframe

#endif
