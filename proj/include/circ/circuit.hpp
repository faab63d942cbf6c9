#ifndef CIRC_CIRCUIT_HPP
#define CIRC_CIRCUIT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "circ/ast.hpp"

namespace circ {

// Flat netlist over 2n inputs named x0..x{n-1}, y0..y{n-1}. Wires are
// numbered inputs first (x-block then y-block), then gates in file order.
struct Gate {
    enum class Op { And, Or, Not };
    Op op;
    int a = -1, b = -1; // operand wires; b unused for Not
};

struct Circuit {
    int n = 1; // half the input count
    std::vector<Gate> gates;
    int out_wire = 0;

    int num_inputs() const { return 2 * n; }
    int num_wires() const { return num_inputs() + static_cast<int>(gates.size()); }
    bool eval(const std::vector<bool>& inputs) const;
};

struct CircuitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One gate per line: "gN = AND wA wB" | "gN = OR wA wB" | "gN = NOT wA";
// final line "out = wK". Operands must be inputs or earlier gates.
// expected_n < 0 infers n from the input wires used (at least 1).
Circuit parse_circuit(const std::string& text, int expected_n = -1);
std::string render_circuit(const Circuit& c);

struct CircuitConcept {
    Concept formula;
    std::vector<std::string> aux; // one name per gate, file order
};

// Boolean-only concept whose models tie out_name to the circuit output on the
// given input names; linear in the circuit size.
CircuitConcept circuit_to_concept(const Circuit& c, const std::string& out_name,
                                  const std::vector<std::string>& x_names,
                                  const std::vector<std::string>& y_names, FreshNames& fresh);

} // namespace circ

#endif
