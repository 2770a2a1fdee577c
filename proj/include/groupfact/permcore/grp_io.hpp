#pragma once

#include <string>

#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::permcore {

// .grp: first line "perm <degree>", then one generator per line as
// space-separated 0-based images. Blank lines and '#' lines are ignored.
PermGroup parse_grp(std::string const &text, std::string const &source = "<input>");
PermGroup load_grp(std::string const &path);
std::string to_grp(PermGroup const &g);
void save_grp(PermGroup const &g, std::string const &path);

}  // namespace groupfact::permcore
