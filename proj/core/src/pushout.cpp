#include "biframe/pushout.hpp"

#include <optional>

#include "biframe/error.hpp"

namespace biframe {

namespace {

// The unique u with u ∘ s = c for an onto s, when it exists.
std::optional<FrameHom> factor_through_onto(const FrameHom& s, const FrameHom& c) {
  std::vector<int> u(s.cod->size(), -1);
  for (int q = 0; q < s.dom->size(); ++q) {
    const int image = s.map[q];
    if (u[image] < 0)
      u[image] = c.map[q];
    else if (u[image] != c.map[q])
      return std::nullopt;
  }
  for (int v : u)
    if (v < 0) return std::nullopt;  // s not onto
  try {
    return validate_hom(s.cod, c.cod, std::move(u));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TransportedPushout pushout_along_quotient(const FrameHom& h, const Congruence& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < h.dom->size(); ++a) pairs.emplace_back(h.map[a], h.map[t.rep(a)]);
  Congruence theta = congruence_closure(h.cod, pairs);
  auto [p, proj] = quotient(theta);
  auto [lq, lproj] = quotient(t);
  std::vector<int> med(lq->size());
  for (int b = 0; b < lq->size(); ++b) med[b] = proj.map[h.map[t.block_rep(b)]];
  return TransportedPushout{theta, proj, validate_hom(lq, p, std::move(med))};
}

PushoutSquare pushout(const FrameHom& f, const FrameHom& g, int max_ground) {
  Coproduct cp = coproduct(f.cod, g.cod, max_ground);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.dom->size(); ++a)
    pairs.emplace_back(cp.inj_left.map[f.map[a]], cp.inj_right.map[g.map[a]]);
  Congruence theta = congruence_closure(cp.frame, pairs);
  auto [p, proj] = quotient(theta);
  return PushoutSquare{f, g, compose(proj, cp.inj_left), compose(proj, cp.inj_right)};
}

bool verify_pushout_square(const PushoutSquare& sq) {
  if (!same_hom(compose(sq.leg_f, sq.f), compose(sq.leg_g, sq.g)))
    throw Error(ErrorKind::SquareDoesNotCommute, "legs disagree on the span");

  if (is_onto(sq.f) || is_onto(sq.g)) {
    // Transport route along the onto span map.
    const bool swap = !is_onto(sq.f);
    const FrameHom& e = swap ? sq.g : sq.f;        // onto
    const FrameHom& o = swap ? sq.f : sq.g;        // other map
    const FrameHom& leg_e = swap ? sq.leg_g : sq.leg_f;
    const FrameHom& leg_o = swap ? sq.leg_f : sq.leg_g;
    Congruence ker = kernel(e);
    TransportedPushout tp = pushout_along_quotient(o, ker);
    // Canonical legs: over o.cod it is the quotient hom; over e.cod it is the
    // mediating map composed with the iso e.cod ≅ dom/ker(e).
    FrameHom iso = factor_through(e, ker);  // dom/ker -> e.cod, bijective
    FrameHom leg_e0 = compose(tp.mediating, inverse_iso(iso));
    auto u = factor_through_onto(tp.quotient_hom, leg_o);
    if (!u) return false;
    if (!same_hom(compose(*u, leg_e0), leg_e)) return false;
    if (!same_hom(compose(*u, tp.quotient_hom), leg_o)) return false;
    return is_iso(*u);
  }

  // Coproduct presentation.
  PushoutSquare can = pushout(sq.f, sq.g);
  // Copairing [leg_f, leg_g] evaluated on the coproduct carrier underlying the
  // canonical corner: reconstruct through the canonical legs, which are
  // jointly epic; u is determined on leg images and must agree everywhere.
  const FramePtr& p0 = can.corner();
  std::vector<int> u(p0->size(), -1);
  auto feed = [&](const FrameHom& can_leg, const FrameHom& sq_leg) -> bool {
    for (int x = 0; x < can_leg.dom->size(); ++x) {
      const int image = can_leg.map[x];
      if (u[image] < 0)
        u[image] = sq_leg.map[x];
      else if (u[image] != sq_leg.map[x])
        return false;
    }
    return true;
  };
  if (!feed(can.leg_f, sq.leg_f) || !feed(can.leg_g, sq.leg_g)) return false;
  // Fill remaining elements by join decomposition over leg images: every
  // element of the corner is a join of meets of leg images.
  for (int e = 0; e < p0->size(); ++e) {
    if (u[e] >= 0) continue;
    int v = sq.corner()->bottom();
    bool covered = false;
    // e = join over pairs (x,y) with leg_f(x) ∧ leg_g(y) <= e of those meets
    int acc = p0->bottom();
    for (int x = 0; x < can.leg_f.dom->size(); ++x)
      for (int y = 0; y < can.leg_g.dom->size(); ++y) {
        const int m = p0->meet(can.leg_f.map[x], can.leg_g.map[y]);
        if (p0->leq(m, e)) {
          acc = p0->join(acc, m);
          v = sq.corner()->join(v, sq.corner()->meet(sq.leg_f.map[x], sq.leg_g.map[y]));
        }
      }
    covered = (acc == e);
    if (!covered) return false;
    u[e] = v;
  }
  FrameHom cu;
  try {
    cu = validate_hom(p0, sq.corner(), std::move(u));
  } catch (const Error&) {
    return false;
  }
  if (!same_hom(compose(cu, can.leg_f), sq.leg_f)) return false;
  if (!same_hom(compose(cu, can.leg_g), sq.leg_g)) return false;
  return is_iso(cu);
}

}  // namespace biframe
