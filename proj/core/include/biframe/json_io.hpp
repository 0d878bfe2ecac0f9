#ifndef BIFRAME_JSON_IO_HPP
#define BIFRAME_JSON_IO_HPP

#include <string>

#include "biframe/biframe.hpp"
#include "biframe/congruence.hpp"
#include "biframe/frame.hpp"
#include "biframe/poset.hpp"

namespace biframe {

/// Poset schema: { "elements": ["0","a","1"], "leq": [[0,1],[1,2]] }.
/// Reflexive pairs may be omitted. Parse or validation problems surface as
/// BadInput with context.
FinPoset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const FinPoset& p);

/// Frames use the poset schema.
FramePtr frame_from_json_text(const std::string& text);
std::string frame_to_json_text(const FiniteFrame& f);

/// { "ambient": <frame>, "comp1": [indices], "comp2": [indices] }.
BiframePtr biframe_from_json_text(const std::string& text);
std::string biframe_to_json_text(const Biframe& l);

/// { "dom": id, "cod": id, "map": [indices] }.
std::string hom_to_json_text(const FrameHom& f, const std::string& dom_id,
                             const std::string& cod_id);

/// { "frame": id, "blocks": [[indices]] }.
std::string congruence_to_json_text(const Congruence& t, const std::string& frame_id);

/// Elements plus the full order matrix, for computed lattices.
std::string lattice_to_json_text(const FinPoset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace biframe

#endif
