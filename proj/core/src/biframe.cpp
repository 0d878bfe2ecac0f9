#include "biframe/biframe.hpp"

#include <algorithm>
#include <set>

#include "biframe/error.hpp"

namespace biframe {

BiframePtr Biframe::validate(FramePtr ambient, std::vector<int> comp1,
                             std::vector<int> comp2) {
  auto bf = std::shared_ptr<Biframe>(new Biframe());
  bf->ambient_ = ambient;
  std::vector<int>* comps[2] = {&comp1, &comp2};
  for (int i = 0; i < 2; ++i) {
    auto& c = *comps[i];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int x : c)
      if (x < 0 || x >= ambient->size())
        throw Error(ErrorKind::BadInput, "component element out of range");
    std::set<int> in(c.begin(), c.end());
    for (int b : {ambient->bottom(), ambient->top()})
      if (!in.count(b))
        throw Error(ErrorKind::NotSubframe,
                    "component " + std::to_string(i + 1) + " misses bound '" +
                        ambient->label(b) + "'");
    for (int x : c)
      for (int y : c) {
        if (!in.count(ambient->meet(x, y)))
          throw Error(ErrorKind::NotSubframe,
                      "component " + std::to_string(i + 1) + " not closed under meet of ('" +
                          ambient->label(x) + "','" + ambient->label(y) + "')");
        if (!in.count(ambient->join(x, y)))
          throw Error(ErrorKind::NotSubframe,
                      "component " + std::to_string(i + 1) + " not closed under join of ('" +
                          ambient->label(x) + "','" + ambient->label(y) + "')");
      }
    bf->comp_[i] = c;
  }

  // Subbasis condition: L1 ∪ L2 generates L0.
  std::vector<int> both = comp1;
  both.insert(both.end(), comp2.begin(), comp2.end());
  const auto gen = subframe_generated(*ambient, both);
  if (static_cast<int>(gen.size()) != ambient->size()) {
    for (int x = 0; x < ambient->size(); ++x)
      if (!std::binary_search(gen.begin(), gen.end(), x))
        throw Error(ErrorKind::NotSubbasis,
                    "element '" + ambient->label(x) + "' is not generated");
  }

  for (int i = 0; i < 2; ++i) {
    bf->comp_frame_[i] = FiniteFrame::validate(ambient->poset().induced(bf->comp_[i]));
    bf->incl_[i] = validate_hom(bf->comp_frame_[i], ambient, bf->comp_[i]);
  }
  bf->cop_ = std::make_shared<const Coproduct>(
      coproduct(bf->comp_frame_[0], bf->comp_frame_[1]));

  // q_L evaluated through the maximal-rectangle decomposition:
  // q(⋁ x⊕y) = ⋁ e1(x) ∧ e2(y).
  const Coproduct& cp = *bf->cop_;
  std::vector<int> ql(cp.frame->size());
  for (int e = 0; e < cp.frame->size(); ++e) {
    int v = ambient->bottom();
    for (auto [x, y] : cp.rects[e])
      v = ambient->join(v, ambient->meet(bf->incl_[0].map[x], bf->incl_[1].map[y]));
    ql[e] = v;
  }
  bf->ql_ = validate_hom(cp.frame, ambient, std::move(ql));
  if (!is_onto(bf->ql_))
    throw Error(ErrorKind::QLNotOnto, "structure map misses elements");
  for (int i = 0; i < 2; ++i) {
    const FrameHom& inj = i == 0 ? cp.inj_left : cp.inj_right;
    if (!same_hom(compose(bf->ql_, inj), bf->incl_[i]))
      throw Error(ErrorKind::QLNotOnto, "structure map does not restrict to inclusion");
  }
  return bf;
}

bool Biframe::in_component(int i, int ambient_elt) const {
  return std::binary_search(comp_[i - 1].begin(), comp_[i - 1].end(), ambient_elt);
}

int Biframe::component_index(int i, int ambient_elt) const {
  const auto& c = comp_[i - 1];
  const auto it = std::lower_bound(c.begin(), c.end(), ambient_elt);
  if (it == c.end() || *it != ambient_elt)
    throw Error(ErrorKind::BadInput, "element not in component");
  return static_cast<int>(it - c.begin());
}

FrameHom BiframeHom::restriction(int i) const {
  const auto& dc = dom->component(i);
  std::vector<int> map(dc.size());
  for (std::size_t k = 0; k < dc.size(); ++k)
    map[k] = cod->component_index(i, ambient.map[dc[k]]);
  return validate_hom(dom->component_frame(i), cod->component_frame(i), std::move(map));
}

BiframeHom validate_biframe_hom(BiframePtr dom, BiframePtr cod, FrameHom ambient) {
  if (ambient.dom != dom->ambient() || ambient.cod != cod->ambient())
    throw Error(ErrorKind::BadInput, "ambient hom endpoints do not match the biframes");
  for (int i = 1; i <= 2; ++i)
    for (int x : dom->component(i))
      if (!cod->in_component(i, ambient.map[x]))
        throw Error(ErrorKind::ComponentNotPreserved,
                    "component " + std::to_string(i) + ", witness '" +
                        dom->ambient()->label(x) + "'");
  return BiframeHom{std::move(dom), std::move(cod), std::move(ambient)};
}

BiframeHom identity_biframe_hom(BiframePtr l) {
  FrameHom id = identity_hom(l->ambient());
  return BiframeHom{l, l, std::move(id)};
}

BiframeHom compose(const BiframeHom& g, const BiframeHom& f) {
  return validate_biframe_hom(f.dom, g.cod, compose(g.ambient, f.ambient));
}

bool is_monic(const BiframeHom& f) {
  return is_injective(f.restriction(1)) && is_injective(f.restriction(2));
}

namespace {

struct ImageData {
  std::vector<int> elems[2];  // image element sets, ambient indices of the codomain
  FramePtr frames[2];
  FrameHom restr[2];  // dom component frame -> image frame
};

ImageData images(const Biframe& l, const FrameHom& f0) {
  ImageData d;
  for (int i = 0; i < 2; ++i) {
    std::set<int> img;
    for (int x : l.component(i + 1)) img.insert(f0.map[x]);
    d.elems[i].assign(img.begin(), img.end());
    d.frames[i] = FiniteFrame::validate(f0.cod->poset().induced(d.elems[i]));
    const auto& dc = l.component(i + 1);
    std::vector<int> map(dc.size());
    for (std::size_t k = 0; k < dc.size(); ++k) {
      const auto it =
          std::lower_bound(d.elems[i].begin(), d.elems[i].end(), f0.map[dc[k]]);
      map[k] = static_cast<int>(it - d.elems[i].begin());
    }
    d.restr[i] = validate_hom(l.component_frame(i + 1), d.frames[i], std::move(map));
  }
  return d;
}

struct FactorCore {
  ImageData img;
  Coproduct image_cop;  // f[L1] ⊕ f[L2]
  FrameHom fg;          // L1 ⊕ L2 -> f[L1] ⊕ f[L2]
  Congruence theta;     // on the image coproduct
  FrameHom qbar;        // image coproduct -> mid (onto)
  FrameHom fbar0;       // L0 -> mid (onto)
};

FactorCore factor_core(const Biframe& l, const FrameHom& f0) {
  FactorCore c{images(l, f0), {}, {}, Congruence::diagonal(f0.dom), {}, {}};
  c.image_cop = coproduct(c.img.frames[0], c.img.frames[1]);
  c.fg = hom_coproduct(c.img.restr[0], c.img.restr[1], l.component_coproduct(), c.image_cop);
  Congruence kerq = kernel(l.structure_map());
  TransportedPushout tp = pushout_along_quotient(c.fg, kerq);
  FrameHom iso = factor_through(l.structure_map(), kerq);  // C/ker -> L0, bijective
  c.fbar0 = compose(tp.mediating, inverse_iso(iso));
  c.theta = tp.on_cod;
  c.qbar = tp.quotient_hom;
  return c;
}

}  // namespace

Congruence factor_kernel(const Biframe& l, const FrameHom& f0) {
  return kernel(factor_core(l, f0).fbar0);
}

Factorization factorize(const BiframeHom& f) {
  FactorCore core = factor_core(*f.dom, f.ambient);
  std::vector<int> mids[2];
  for (int i = 1; i <= 2; ++i)
    for (int x : f.dom->component(i)) mids[i - 1].push_back(core.fbar0.map[x]);
  BiframePtr mid = Biframe::validate(core.fbar0.cod, mids[0], mids[1]);
  BiframeHom fbar = validate_biframe_hom(f.dom, mid, core.fbar0);

  // fbar0 is onto, so the embedding is determined by e(fbar(x)) = f(x).
  std::vector<int> emb(mid->ambient()->size(), -1);
  for (int x = 0; x < f.dom->ambient()->size(); ++x) {
    const int z = core.fbar0.map[x];
    if (emb[z] < 0)
      emb[z] = f.ambient.map[x];
    else if (emb[z] != f.ambient.map[x])
      throw Error(ErrorKind::RouteMismatch, "factorization kernel not below kernel of f");
  }
  FrameHom e0 = validate_hom(mid->ambient(), f.cod->ambient(), std::move(emb));
  BiframeHom embed = validate_biframe_hom(mid, f.cod, std::move(e0));
  return Factorization{std::move(fbar), std::move(mid), std::move(embed)};
}

RfImage image_via_Rf(const BiframeHom& f) {
  FactorCore core = factor_core(*f.dom, f.ambient);
  // R_f: identify images of every pair with equal join-of-rectangles in L0.
  const FrameHom& ql = f.dom->structure_map();
  const int nc = ql.dom->size();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < nc; ++u)
    for (int v = u + 1; v < nc; ++v)
      if (ql.map[u] == ql.map[v]) pairs.emplace_back(core.fg.map[u], core.fg.map[v]);
  Congruence rf = congruence_closure(core.image_cop.frame, pairs);
  auto [image, proj] = quotient(rf);
  try {
    FrameHom iso = factor_through(core.qbar, rf);
    if (!is_iso(iso))
      throw Error(ErrorKind::RouteMismatch,
                  "R_f quotient is not isomorphic to the pushout image");
    return RfImage{image, std::move(iso)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotConstantOnBlocks)
      throw Error(ErrorKind::RouteMismatch, "R_f congruence strictly finer than pushout kernel");
    throw;
  }
}

bool is_extremal_epi(const BiframeHom& f) {
  FrameHom f1 = f.restriction(1), f2 = f.restriction(2);
  if (!is_onto(f1) || !is_onto(f2)) return false;
  FrameHom fg = hom_coproduct(f1, f2, f.dom->component_coproduct(),
                              f.cod->component_coproduct());
  PushoutSquare sq{f.dom->structure_map(), fg, f.ambient, f.cod->structure_map()};
  return verify_pushout_square(sq);
}

}  // namespace biframe
