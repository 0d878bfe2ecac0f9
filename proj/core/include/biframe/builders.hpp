#ifndef BIFRAME_BUILDERS_HPP
#define BIFRAME_BUILDERS_HPP

#include <string>
#include <vector>

#include "biframe/biframe.hpp"
#include "biframe/frame.hpp"

namespace biframe {

/// The n-element chain 0 < a < b < ... < 1.
FramePtr chain_frame(int n);

/// The four-element diamond 2x2: 0 < a,b < 1.
FramePtr diamond_frame();

/// Diagonal biframe (L, L, L).
BiframePtr diagonal_biframe(FramePtr l);

/// The biframe 3.3: ambient 3 ⊕ 3 with the two injected copies of 3.
BiframePtr biframe_33();

/// Named builders. Frames: "frame:<n>" chains, "frame:2x2".
/// Biframes: "biframe:3.3", "biframe:diag:<frame>". Throws BadInput.
FramePtr build_frame(const std::string& name);
BiframePtr build_biframe(const std::string& name);

/// All frames with at most max_size elements, one per isomorphism class,
/// in a deterministic order. Enumerated as down-set lattices of posets on
/// at most max_size - 1 points.
std::vector<FramePtr> small_frames(int max_size);

/// Every quotient biframe of a ⊕ b: ambient (a⊕b)/θ with the images of the
/// two injections as components, over all congruences θ.
std::vector<BiframePtr> quotient_biframes(FramePtr a, FramePtr b);

/// Isomorphism of biframes: an ambient lattice isomorphism matching the
/// components indexwise.
bool biframes_isomorphic(const Biframe& a, const Biframe& b);

/// The verification corpus: quotient biframes over all pairs of component
/// frames of size <= 4, plus 3.3 and the diagonal biframes of all frames of
/// size <= 5. One representative per isomorphism class.
std::vector<BiframePtr> acceptance_corpus();

/// All biframe homs dom -> cod (ambient frame homs preserving components).
std::vector<BiframeHom> enumerate_biframe_homs(BiframePtr dom, BiframePtr cod);

}  // namespace biframe

#endif
