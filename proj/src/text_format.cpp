// Copyright 2026 The icmforge Authors
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


#include "icmforge/text_format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace icmforge {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;
};

bool is_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
    }
    return true;
}

class Parser {
public:
    Circuit run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            line_ = line_no;
            parse_line(text.substr(pos, end - pos));
            pos = end + 1;
        }
        try {
            return std::move(builder_).build();
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, 1, e.what());
        }
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError(line_, at.column, message);
    }

    void parse_line(std::string_view line) {
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
        if (tokens.empty()) return;
        end_column_ = line.size() + 1;

        const auto& kw = tokens[0].text;
        try {
            if (kw == "qubit") {
                expect_count(tokens, 2);
                declare(tokens[1], std::nullopt);
            } else if (kw == "init") {
                expect_count(tokens, 3);
                auto kind = init_kind_from_string(tokens[2].text);
                if (!kind) fail(tokens[2], "unknown init kind '" + std::string(tokens[2].text) + "'");
                declare(tokens[1], kind);
            } else if (kw == "gate") {
                expect_count(tokens, 3);
                auto kind = gate_kind_from_string(tokens[1].text);
                if (!kind || is_two_qubit(*kind)) {
                    fail(tokens[1], "unknown single-qubit gate '" + std::string(tokens[1].text) + "'");
                }
                builder_.gate(*kind, qubit(tokens[2]));
            } else if (kw == "cnot" || kw == "cz") {
                expect_count(tokens, 3);
                auto a = qubit(tokens[1]);
                auto b = qubit(tokens[2]);
                if (a == b) fail(tokens[2], "two-qubit gate operands must be distinct");
                kw == "cnot" ? builder_.cnot(a, b) : builder_.cz(a, b);
            } else if (kw == "measure") {
                parse_measure(tokens);
            } else if (kw == "frame") {
                parse_frame(tokens);
            } else if (kw == "output") {
                expect_count(tokens, 2);
                auto q = qubit(tokens[1]);
                for (auto existing : builder_.outputs()) {
                    if (existing == q) fail(tokens[1], "duplicate output '" + std::string(tokens[1].text) + "'");
                }
                builder_.add_output(q);
            } else {
                fail(tokens[0], "unknown statement '" + std::string(kw) + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(tokens[0], e.what());
        }
    }

    void expect_count(const std::vector<Token>& tokens, std::size_t n) const {
        if (tokens.size() < n) throw ParseError(line_, end_column_, "missing operand");
        if (tokens.size() > n) fail(tokens[n], "unexpected token '" + std::string(tokens[n].text) + "'");
    }

    void declare(const Token& name, std::optional<InitKind> init) {
        if (!is_name(name.text)) fail(name, "invalid qubit name '" + std::string(name.text) + "'");
        if (qubits_.count(std::string(name.text)) != 0) {
            fail(name, "qubit '" + std::string(name.text) + "' declared twice");
        }
        auto id = init ? builder_.add_ancilla(std::string(name.text), *init)
                       : builder_.add_data(std::string(name.text));
        qubits_.emplace(std::string(name.text), id);
    }

    QubitId qubit(const Token& name) const {
        auto it = qubits_.find(std::string(name.text));
        if (it == qubits_.end()) fail(name, "undeclared qubit '" + std::string(name.text) + "'");
        return it->second;
    }

    Basis basis(const Token& t) const {
        auto b = basis_from_string(t.text);
        if (!b) fail(t, "expected basis X or Z, got '" + std::string(t.text) + "'");
        return *b;
    }

    XorForm xor_list(std::string_view text, std::size_t column) const {
        Token at{text, column};
        if (text.empty()) fail(at, "empty xor list");
        XorForm form;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('^', pos);
            if (end == std::string_view::npos) end = text.size();
            auto term = text.substr(pos, end - pos);
            Token term_at{term, column + pos};
            if (term == "0") {
            } else if (term == "1") {
                form ^= XorForm::constant(true);
            } else {
                auto it = outcomes_.find(std::string(term));
                if (it == outcomes_.end()) fail(term_at, "unknown outcome '" + std::string(term) + "'");
                form ^= XorForm::of(it->second);
            }
            pos = end + 1;
        }
        return form;
    }

    void bind_outcome(const Token& name, OutcomeId id) {
        if (!is_name(name.text)) fail(name, "invalid outcome name '" + std::string(name.text) + "'");
        if (!outcomes_.emplace(std::string(name.text), id).second) {
            fail(name, "outcome '" + std::string(name.text) + "' defined twice");
        }
    }

    void parse_measure(const std::vector<Token>& t) {
        if (t.size() < 2) throw ParseError(line_, end_column_, "missing operand");
        auto q = qubit(t[1]);
        if (builder_.is_measured(q)) fail(t[1], "duplicate measurement of qubit '" + std::string(t[1].text) + "'");
        if (t.size() == 5) {
            if (t[3].text != "->") fail(t[3], "expected '->'");
            Basis b = basis(t[2]);
            auto id = builder_.measure(q, b);
            bind_outcome(t[4], id);
            return;
        }
        if (t.size() == 10 && t[2].text == "if") {
            auto cond = t[3].text;
            if (cond.size() < 3 || cond.substr(cond.size() - 2) != "=0") fail(t[3], "expected '<xor>=0'");
            auto selector = xor_list(cond.substr(0, cond.size() - 2), t[3].column);
            if (t[4].text != "then") fail(t[4], "expected 'then'");
            Basis if0 = basis(t[5]);
            if (t[6].text != "else") fail(t[6], "expected 'else'");
            Basis if1 = basis(t[7]);
            if (t[8].text != "->") fail(t[8], "expected '->'");
            auto id = builder_.measure_conditional(q, std::move(selector), if0, if1);
            bind_outcome(t[9], id);
            return;
        }
        if (t.size() > 2 && t[2].text == "if") throw ParseError(line_, end_column_, "malformed conditional measurement");
        throw ParseError(line_, t.size() < 5 ? end_column_ : t[5].column, "malformed measurement");
    }

    void parse_frame(const std::vector<Token>& t) {
        if (t.size() < 2) throw ParseError(line_, end_column_, "missing operand");
        auto q = qubit(t[1]);
        FrameEntry entry;
        bool seen[3] = {false, false, false};
        for (std::size_t i = 2; i < t.size(); ++i) {
            auto text = t[i].text;
            if (text.size() < 3 || text[1] != '=') fail(t[i], "expected x=, z= or s=");
            int slot = text[0] == 'x' ? 0 : text[0] == 'z' ? 1 : text[0] == 's' ? 2 : -1;
            if (slot < 0) fail(t[i], "expected x=, z= or s=");
            if (seen[slot]) fail(t[i], "component given twice");
            seen[slot] = true;
            auto form = xor_list(text.substr(2), t[i].column + 2);
            (slot == 0 ? entry.x : slot == 1 ? entry.z : entry.s) = std::move(form);
        }
        builder_.set_frame(q, std::move(entry));
    }

    CircuitBuilder builder_;
    std::map<std::string, QubitId> qubits_;
    std::map<std::string, OutcomeId> outcomes_;
    std::size_t line_ = 0;
    std::size_t end_column_ = 1;
};

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser{}.run(text); }

std::string format_xor(const XorForm& form) {
    if (form.is_zero()) return "0";
    std::string out;
    if (form.constant_term()) out = "1";
    for (auto t : form.terms()) {
        if (!out.empty()) out += '^';
        out += 'm' + std::to_string(t);
    }
    return out;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream os;
    const auto& qs = circuit.qubits();
    auto name = [&](QubitId q) -> const std::string& { return qs[q.index].name; };
    for (const auto& q : qs) {
        if (q.init) {
            os << "init " << q.name << ' ' << to_string(*q.init) << '\n';
        } else {
            os << "qubit " << q.name << '\n';
        }
    }
    for (const auto& op : circuit.ops()) {
        if (const auto* g = std::get_if<Gate>(&op)) {
            if (g->kind == GateKind::CNOT) {
                os << "cnot " << name(g->q0) << ' ' << name(g->q1) << '\n';
            } else if (g->kind == GateKind::CZ) {
                os << "cz " << name(g->q0) << ' ' << name(g->q1) << '\n';
            } else {
                os << "gate " << to_string(g->kind) << ' ' << name(g->q0) << '\n';
            }
            continue;
        }
        const auto& m = std::get<MeasurementNode>(op);
        os << "measure " << name(m.qubit) << ' ';
        if (m.conditional()) {
            os << "if " << format_xor(m.selector) << "=0 then " << to_string(m.if0) << " else "
               << to_string(m.if1);
        } else {
            os << to_string(m.if0);
        }
        os << " -> m" << m.outcome.index << '\n';
    }
    for (std::uint32_t i = 0; i < circuit.frames().size(); ++i) {
        const auto& f = circuit.frames()[i];
        if (f.is_identity()) continue;
        os << "frame " << qs[i].name << " x=" << format_xor(f.x) << " z=" << format_xor(f.z);
        if (!f.s.is_zero()) os << " s=" << format_xor(f.s);
        os << '\n';
    }
    for (auto q : circuit.outputs()) os << "output " << name(q) << '\n';
    return os.str();
}

}  // namespace icmforge
