// Copyright 2026 The walkforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walkforge/serialize.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "walkforge/passes.hpp"

namespace walkforge::ir {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string control_token(const Control &c) {
    return (c.polarity == Polarity::Positive ? "+q" : "-q") + std::to_string(c.qubit);
}

void write_gate_text(std::ostream &os, const Gate &g) {
    std::visit(
        [&](const auto &gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, XGate>) {
                os << "X -> q" << gate.target;
            } else if constexpr (std::is_same_v<T, HGate>) {
                os << "H -> q" << gate.target;
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                os << "SWAP -> q" << gate.a << ", q" << gate.b;
            } else if constexpr (std::is_same_v<T, MCXGate>) {
                if (gate.controls.empty()) {
                    os << "X -> q" << gate.target;
                } else if (gate.controls.size() == 1 &&
                           gate.controls[0].polarity == Polarity::Positive) {
                    os << "CX q" << gate.controls[0].qubit << " -> q" << gate.target;
                } else {
                    os << "MCX";
                    for (const auto &c : gate.controls) {
                        os << ' ' << control_token(c);
                    }
                    os << " -> q" << gate.target;
                }
            } else if constexpr (std::is_same_v<T, MCSwapGate>) {
                if (gate.controls.empty()) {
                    os << "SWAP -> q" << gate.a << ", q" << gate.b;
                } else {
                    os << "MCSWAP";
                    for (const auto &c : gate.controls) {
                        os << ' ' << control_token(c);
                    }
                    os << " -> q" << gate.a << ", q" << gate.b;
                }
            } else {
                throw std::invalid_argument("text format cannot express unitary blocks");
            }
        },
        g);
    os << '\n';
}

int parse_qubit_token(const std::string &tok, std::string_view what) {
    if (tok.size() < 2 || tok[0] != 'q') {
        throw std::runtime_error("bad " + std::string(what) + " token: " + tok);
    }
    try {
        return std::stoi(tok.substr(1));
    } catch (const std::exception &) {
        throw std::runtime_error("bad " + std::string(what) + " token: " + tok);
    }
}

Control parse_control_token(const std::string &tok) {
    if (tok.empty()) {
        throw std::runtime_error("empty control token");
    }
    if (tok[0] == '+') {
        return {parse_qubit_token(tok.substr(1), "control"), Polarity::Positive};
    }
    if (tok[0] == '-') {
        return {parse_qubit_token(tok.substr(1), "control"), Polarity::Negative};
    }
    return {parse_qubit_token(tok, "control"), Polarity::Positive};
}

} // namespace

std::string to_text(const Circuit &c) {
    c.validate();
    std::ostringstream os;
    os << "qubits position=" << c.position_qubits << " coin=" << c.coin_qubits << '\n';
    for (const auto &g : c.gates) {
        write_gate_text(os, g);
    }
    return os.str();
}

Circuit from_text(std::string_view text) {
    Circuit c;
    bool header_seen = false;
    std::istringstream input{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        for (auto &ch : line) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream ls{line};
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) -> Circuit {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
        };
        if (!header_seen) {
            if (tokens[0] != "qubits" || tokens.size() != 3 ||
                tokens[1].rfind("position=", 0) != 0 || tokens[2].rfind("coin=", 0) != 0) {
                fail("expected header 'qubits position=<n> coin=<m>'");
            }
            try {
                c.position_qubits = std::stoi(tokens[1].substr(9));
                c.coin_qubits = std::stoi(tokens[2].substr(5));
            } catch (const std::exception &) {
                fail("register sizes in the header are not numbers");
            }
            header_seen = true;
            continue;
        }
        auto arrow = std::find(tokens.begin(), tokens.end(), "->");
        if (arrow == tokens.end()) {
            fail("missing '->'");
        }
        std::string name = tokens[0];
        std::vector<std::string> pre(tokens.begin() + 1, arrow);
        std::vector<std::string> post(arrow + 1, tokens.end());
        try {
            if (name == "X" && pre.empty() && post.size() == 1) {
                c.append(XGate{parse_qubit_token(post[0], "target")});
            } else if (name == "H" && pre.empty() && post.size() == 1) {
                c.append(HGate{parse_qubit_token(post[0], "target")});
            } else if (name == "SWAP" && pre.empty() && post.size() == 2) {
                c.append(SwapGate{parse_qubit_token(post[0], "target"),
                                  parse_qubit_token(post[1], "target")});
            } else if (name == "CX" && pre.size() == 1 && post.size() == 1) {
                Control ctrl = parse_control_token(pre[0]);
                if (ctrl.polarity != Polarity::Positive) {
                    fail("CX takes a positive control; use MCX for negative polarity");
                }
                c.append(MCXGate{{ctrl}, parse_qubit_token(post[0], "target")});
            } else if (name == "MCX" && !pre.empty() && post.size() == 1) {
                std::vector<Control> controls;
                for (const auto &p : pre) {
                    controls.push_back(parse_control_token(p));
                }
                c.append(MCXGate{std::move(controls), parse_qubit_token(post[0], "target")});
            } else if (name == "MCSWAP" && post.size() == 2) {
                std::vector<Control> controls;
                for (const auto &p : pre) {
                    controls.push_back(parse_control_token(p));
                }
                c.append(MCSwapGate{std::move(controls), parse_qubit_token(post[0], "target"),
                                    parse_qubit_token(post[1], "target")});
            } else {
                fail("unrecognized gate line: " + name);
            }
        } catch (const std::runtime_error &e) {
            fail(e.what());
        }
    }
    if (!header_seen) {
        throw std::runtime_error("missing 'qubits' header line");
    }
    c.validate();
    return c;
}

namespace {

class QasmWriter {
  public:
    explicit QasmWriter(std::ostream &os) : os_(os) {}

    void x(int t) { os_ << "x q[" << t << "];\n"; }
    void h(int t) { os_ << "h q[" << t << "];\n"; }
    void cx(int c, int t) { os_ << "cx q[" << c << "],q[" << t << "];\n"; }
    void swap(int a, int b) { os_ << "swap q[" << a << "],q[" << b << "];\n"; }
    void ccx(int c0, int c1, int t) {
        os_ << "ccx q[" << c0 << "],q[" << c1 << "],q[" << t << "];\n";
    }
    void cu1(int denom, bool dagger, int c, int t) {
        os_ << "cu1(" << (dagger ? "-pi" : "pi");
        if (denom > 1) {
            os_ << '/' << denom;
        }
        os_ << ") q[" << c << "],q[" << t << "];\n";
    }

    // Controlled X^(1/2^j) as H-conjugated controlled phase.
    void controlled_root(int c, int t, int j, bool dagger) {
        h(t);
        cu1(1 << j, dagger, c, t);
        h(t);
    }

    void mcx(const std::vector<int> &controls, int t) {
        switch (controls.size()) {
            case 0:
                x(t);
                return;
            case 1:
                cx(controls[0], t);
                return;
            case 2:
                ccx(controls[0], controls[1], t);
                return;
            default:
                break;
        }
        std::vector<int> rest(controls.begin(), controls.end() - 1);
        int last = controls.back();
        controlled_root(last, t, 1, false);
        mcx(rest, last);
        controlled_root(last, t, 1, true);
        mcx(rest, last);
        mc_root(rest, t, 1);
    }

    // Multi-controlled X^(1/2^j).
    void mc_root(const std::vector<int> &controls, int t, int j) {
        if (controls.size() == 1) {
            controlled_root(controls[0], t, j, false);
            return;
        }
        std::vector<int> rest(controls.begin(), controls.end() - 1);
        int last = controls.back();
        controlled_root(last, t, j + 1, false);
        mcx(rest, last);
        controlled_root(last, t, j + 1, true);
        mcx(rest, last);
        mc_root(rest, t, j + 1);
    }

  private:
    std::ostream &os_;
};

double parse_angle(const std::string &expr) {
    std::string s = expr;
    double sign = 1.0;
    if (!s.empty() && s[0] == '-') {
        sign = -1.0;
        s = s.substr(1);
    }
    if (s.rfind("pi", 0) == 0) {
        double denom = 1.0;
        if (s.size() > 2) {
            if (s[2] != '/') {
                throw std::runtime_error("unsupported angle: " + expr);
            }
            denom = std::stod(s.substr(3));
        }
        return sign * kPi / denom;
    }
    return sign * std::stod(s);
}

std::vector<int> parse_qasm_args(const std::string &args) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t open = args.find("q[", pos);
        if (open == std::string::npos) {
            break;
        }
        std::size_t close = args.find(']', open);
        if (close == std::string::npos) {
            throw std::runtime_error("malformed qasm argument list: " + args);
        }
        try {
            out.push_back(std::stoi(args.substr(open + 2, close - open - 2)));
        } catch (const std::exception &) {
            throw std::runtime_error("malformed qasm argument list: " + args);
        }
        pos = close + 1;
    }
    return out;
}

} // namespace

std::string to_qasm(const Circuit &c) {
    Circuit lowered = lower_polarities(decompose_mcswaps(c));
    lowered.validate();
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "// walkforge position=" << c.position_qubits << " coin=" << c.coin_qubits << "\n";
    os << "qreg q[" << c.num_qubits() << "];\n";
    QasmWriter w(os);
    for (const auto &g : lowered.gates) {
        std::visit(
            [&](const auto &gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, XGate>) {
                    w.x(gate.target);
                } else if constexpr (std::is_same_v<T, HGate>) {
                    w.h(gate.target);
                } else if constexpr (std::is_same_v<T, SwapGate>) {
                    w.swap(gate.a, gate.b);
                } else if constexpr (std::is_same_v<T, MCXGate>) {
                    std::vector<int> controls;
                    for (const auto &ctl : gate.controls) {
                        controls.push_back(ctl.qubit);
                    }
                    w.mcx(controls, gate.target);
                } else {
                    throw std::invalid_argument("qasm export: unsupported gate kind");
                }
            },
            g);
    }
    return os.str();
}

Circuit from_qasm(std::string_view text) {
    Circuit c;
    int declared_qubits = -1;
    int position = -1;
    int coin = 0;
    std::istringstream input{std::string(text)};
    std::string line;
    std::string pending;
    std::vector<std::string> statements;
    while (std::getline(input, line)) {
        if (auto slash = line.find("//"); slash != std::string::npos) {
            std::string comment = line.substr(slash + 2);
            line.resize(slash);
            std::istringstream cs{comment};
            std::string word;
            if (cs >> word && word == "walkforge") {
                try {
                    while (cs >> word) {
                        if (word.rfind("position=", 0) == 0) {
                            position = std::stoi(word.substr(9));
                        } else if (word.rfind("coin=", 0) == 0) {
                            coin = std::stoi(word.substr(5));
                        }
                    }
                } catch (const std::exception &) {
                    throw std::runtime_error("malformed walkforge register comment");
                }
            }
        }
        pending += line;
        pending += ' ';
        std::size_t semi;
        while ((semi = pending.find(';')) != std::string::npos) {
            statements.push_back(pending.substr(0, semi));
            pending.erase(0, semi + 1);
        }
    }
    for (auto &stmt : statements) {
        std::istringstream ss{stmt};
        std::string head;
        if (!(ss >> head)) {
            continue;
        }
        if (head == "OPENQASM" || head == "include" || head == "creg" || head == "barrier") {
            continue;
        }
        if (head == "qreg") {
            std::string rest;
            std::getline(ss, rest);
            auto open = rest.find('[');
            auto close = rest.find(']');
            if (open == std::string::npos || close == std::string::npos) {
                throw std::runtime_error("malformed qreg: " + stmt);
            }
            try {
                declared_qubits = std::stoi(rest.substr(open + 1, close - open - 1));
            } catch (const std::exception &) {
                throw std::runtime_error("malformed qreg: " + stmt);
            }
            continue;
        }
        std::string name = head;
        double angle = 0.0;
        if (auto paren = name.find('('); paren != std::string::npos) {
            auto close = name.find(')');
            if (close == std::string::npos) {
                // Parameter list may contain spaces; recover it from the
                // full statement instead.
                auto sopen = stmt.find('(');
                auto sclose = stmt.find(')');
                if (sclose == std::string::npos) {
                    throw std::runtime_error("malformed gate parameters: " + stmt);
                }
                angle = parse_angle(stmt.substr(sopen + 1, sclose - sopen - 1));
                name = name.substr(0, paren);
            } else {
                angle = parse_angle(name.substr(paren + 1, close - paren - 1));
                name = name.substr(0, paren);
            }
        }
        std::string args;
        std::getline(ss, args);
        if (auto paren = stmt.find(')'); name == "cu1" && paren != std::string::npos) {
            args = stmt.substr(paren + 1);
        }
        std::vector<int> qs = parse_qasm_args(args);
        if (name == "x" && qs.size() == 1) {
            c.append(XGate{qs[0]});
        } else if (name == "h" && qs.size() == 1) {
            c.append(HGate{qs[0]});
        } else if (name == "cx" && qs.size() == 2) {
            c.append(MCXGate{{Control{qs[0], Polarity::Positive}}, qs[1]});
        } else if (name == "swap" && qs.size() == 2) {
            c.append(SwapGate{qs[0], qs[1]});
        } else if (name == "ccx" && qs.size() == 3) {
            c.append(MCXGate{{Control{qs[0], Polarity::Positive}, Control{qs[1], Polarity::Positive}},
                             qs[2]});
        } else if (name == "cu1" && qs.size() == 2) {
            ComplexMatrix u(4, 4);
            u.at(0, 0) = 1.0;
            u.at(1, 1) = 1.0;
            u.at(2, 2) = 1.0;
            u.at(3, 3) = std::polar(1.0, angle);
            c.append(UnitaryBlockGate{{qs[0], qs[1]}, std::move(u)});
        } else {
            throw std::runtime_error("unsupported qasm statement: " + stmt);
        }
    }
    if (declared_qubits <= 0) {
        throw std::runtime_error("qasm input lacks a qreg declaration");
    }
    if (position < 0) {
        position = declared_qubits;
        coin = 0;
    }
    if (position + coin != declared_qubits) {
        throw std::runtime_error("register split does not match qreg size");
    }
    c.position_qubits = position;
    c.coin_qubits = coin;
    c.validate();
    return c;
}

} // namespace walkforge::ir
