#include "circ/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace circ {

bool Circuit::eval(const std::vector<bool>& inputs) const {
    std::vector<bool> w(inputs.begin(), inputs.end());
    w.resize(static_cast<std::size_t>(num_wires()));
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gt = gates[g];
        bool v = false;
        switch (gt.op) {
        case Gate::Op::And:
            v = w[static_cast<std::size_t>(gt.a)] && w[static_cast<std::size_t>(gt.b)];
            break;
        case Gate::Op::Or:
            v = w[static_cast<std::size_t>(gt.a)] || w[static_cast<std::size_t>(gt.b)];
            break;
        case Gate::Op::Not:
            v = !w[static_cast<std::size_t>(gt.a)];
            break;
        }
        w[static_cast<std::size_t>(num_inputs()) + g] = v;
    }
    return w[static_cast<std::size_t>(out_wire)];
}

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

Circuit parse_circuit(const std::string& text, int expected_n) {
    // first pass: find the input width
    std::vector<std::vector<std::string>> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            auto toks = tokenize_line(line);
            if (!toks.empty()) lines.push_back(toks);
        }
    }
    int max_idx = 0;
    auto input_index = [&max_idx](const std::string& w) -> int {
        if (w.size() < 2 || (w[0] != 'x' && w[0] != 'y')) return -1;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i]))) return -1;
        int idx = std::stoi(w.substr(1));
        max_idx = std::max(max_idx, idx);
        return idx;
    };
    for (const auto& toks : lines)
        for (const auto& t : toks) input_index(t);
    int n = expected_n >= 0 ? expected_n : max_idx + 1;
    if (n < 1) n = 1;
    if (expected_n >= 0 && max_idx >= expected_n)
        throw CircuitError("input wire index exceeds declared width");

    Circuit c;
    c.n = n;
    std::map<std::string, int> wires;
    for (int i = 0; i < n; ++i) {
        wires["x" + std::to_string(i)] = i;
        wires["y" + std::to_string(i)] = n + i;
    }
    bool have_out = false;
    auto wire_of = [&wires](const std::string& w) {
        auto it = wires.find(w);
        if (it == wires.end())
            throw CircuitError("wire '" + w + "' is not defined yet (netlist must be topological)");
        return it->second;
    };
    for (const auto& toks : lines) {
        if (toks.size() >= 3 && toks[0] == "out" && toks[1] == "=") {
            if (toks.size() != 3) throw CircuitError("malformed out line");
            c.out_wire = wire_of(toks[2]);
            have_out = true;
            continue;
        }
        if (toks.size() < 4 || toks[1] != "=")
            throw CircuitError("malformed gate line");
        const std::string& name = toks[0];
        if (wires.count(name)) throw CircuitError("wire '" + name + "' defined twice");
        Gate g;
        if (toks[2] == "AND" || toks[2] == "OR") {
            if (toks.size() != 5) throw CircuitError("binary gate takes two operands");
            g.op = toks[2] == "AND" ? Gate::Op::And : Gate::Op::Or;
            g.a = wire_of(toks[3]);
            g.b = wire_of(toks[4]);
        } else if (toks[2] == "NOT") {
            if (toks.size() != 4) throw CircuitError("NOT takes one operand");
            g.op = Gate::Op::Not;
            g.a = wire_of(toks[3]);
        } else {
            throw CircuitError("unknown gate type '" + toks[2] + "'");
        }
        wires[name] = c.num_inputs() + static_cast<int>(c.gates.size());
        c.gates.push_back(g);
    }
    if (!have_out) throw CircuitError("netlist is missing the out line");
    return c;
}

std::string render_circuit(const Circuit& c) {
    std::ostringstream os;
    auto wname = [&c](int w) {
        if (w < c.n) return "x" + std::to_string(w);
        if (w < 2 * c.n) return "y" + std::to_string(w - c.n);
        return "g" + std::to_string(w - 2 * c.n + 1);
    };
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gt = c.gates[g];
        os << "g" << (g + 1) << " = ";
        switch (gt.op) {
        case Gate::Op::And:
            os << "AND " << wname(gt.a) << " " << wname(gt.b);
            break;
        case Gate::Op::Or:
            os << "OR " << wname(gt.a) << " " << wname(gt.b);
            break;
        case Gate::Op::Not:
            os << "NOT " << wname(gt.a);
            break;
        }
        os << "\n";
    }
    os << "out = " << wname(c.out_wire) << "\n";
    return os.str();
}

CircuitConcept circuit_to_concept(const Circuit& c, const std::string& out_name,
                                  const std::vector<std::string>& x_names,
                                  const std::vector<std::string>& y_names, FreshNames& fresh) {
    if (static_cast<int>(x_names.size()) < c.n || static_cast<int>(y_names.size()) < c.n)
        throw CircuitError("not enough input names for the circuit width");
    CircuitConcept out;
    auto wire_concept = [&](int w) -> Concept {
        if (w < c.n) return Concept::name(x_names[static_cast<std::size_t>(w)]);
        if (w < 2 * c.n) return Concept::name(y_names[static_cast<std::size_t>(w - c.n)]);
        return Concept::name(out.aux[static_cast<std::size_t>(w - 2 * c.n)]);
    };
    std::vector<Concept> conjuncts;
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        std::string aux = fresh.fresh("w" + std::to_string(g + 1));
        out.aux.push_back(aux);
        const Gate& gt = c.gates[g];
        Concept expr = Concept::top();
        switch (gt.op) {
        case Gate::Op::And:
            expr = Concept::conj(wire_concept(gt.a), wire_concept(gt.b));
            break;
        case Gate::Op::Or:
            expr = Concept::disj(wire_concept(gt.a), wire_concept(gt.b));
            break;
        case Gate::Op::Not:
            expr = Concept::neg(wire_concept(gt.a));
            break;
        }
        conjuncts.push_back(iff(Concept::name(aux), expr));
    }
    conjuncts.push_back(iff(Concept::name(out_name), wire_concept(c.out_wire)));
    out.formula = nary_and(conjuncts);
    return out;
}

} // namespace circ
