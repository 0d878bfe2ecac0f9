#ifndef BIFRAME_DOT_HPP
#define BIFRAME_DOT_HPP

#include <string>

#include "biframe/poset.hpp"

namespace biframe {

/// ASCII element names rendered with the usual glyphs: "+" becomes the
/// circled sum, "c("/"o(" the fraktur operators, "^" and " v " meet and join.
std::string unicode_label(const std::string& ascii);

/// Hasse diagram (covers only), bottom-up, elements of equal height on one
/// rank.
std::string to_dot(const FinPoset& p, const std::string& graph_name, bool unicode);

}  // namespace biframe

#endif
