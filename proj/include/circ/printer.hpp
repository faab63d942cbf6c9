#ifndef CIRC_PRINTER_HPP
#define CIRC_PRINTER_HPP

#include <string>

#include "circ/ast.hpp"

namespace circ {

std::string render_role(const Role& r);
std::string render_concept(const Concept& c);
// Inverse of parse_kb up to structural equality.
std::string render_kb(const CircKB& kb);

} // namespace circ

#endif
