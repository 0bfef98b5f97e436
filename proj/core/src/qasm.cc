// Copyright 2026 The qgen Authors
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

#include "qgen/qasm.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "qgen/decompose.h"
#include "qgen/error.h"

namespace qgen {

namespace {

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::string_view qasm_name(GateTag tag, bool legacy) {
    switch (tag) {
        case GateTag::PHASE:
            return legacy ? "u1" : "p";
        case GateTag::CPHASE:
            return legacy ? "cu1" : "cp";
        default:
            return gate_name(tag);
    }
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, number, string, symbol, arrow, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t col = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char ch = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                t.kind = Tok::ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += advance();
                }
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                t.kind = Tok::number;
                while (pos_ < src_.size() &&
                       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                    t.text += advance();
                }
                if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                    t.text += advance();
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                        t.text += advance();
                    }
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        t.text += advance();
                    }
                }
            } else if (ch == '"') {
                t.kind = Tok::string;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                    t.text += advance();
                }
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    throw ParseError(t.line, t.col, "unterminated string");
                }
                advance();
            } else if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                t.kind = Tok::arrow;
                t.text = "->";
                advance();
                advance();
            } else if (std::string_view("[](),;+-*/^{}=").find(ch) != std::string_view::npos) {
                t.kind = Tok::symbol;
                t.text = std::string(1, advance());
                if (ch == '=' && pos_ < src_.size() && src_[pos_] == '=') t.text += advance();
            } else {
                throw ParseError(t.line, t.col, std::string("unexpected character '") + ch + "'");
            }
            out.push_back(std::move(t));
        }
    }

   private:
    char advance() {
        const char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

struct GateSpec {
    GateTag tag;
    std::size_t params;
    std::size_t qubits;
};

const std::map<std::string, GateSpec, std::less<>> &gate_table() {
    static const std::map<std::string, GateSpec, std::less<>> table = {
        {"id", {GateTag::I, 0, 1}},       {"h", {GateTag::H, 0, 1}},
        {"x", {GateTag::X, 0, 1}},        {"y", {GateTag::Y, 0, 1}},
        {"z", {GateTag::Z, 0, 1}},        {"s", {GateTag::S, 0, 1}},
        {"sdg", {GateTag::SDG, 0, 1}},    {"t", {GateTag::T, 0, 1}},
        {"tdg", {GateTag::TDG, 0, 1}},    {"rx", {GateTag::RX, 1, 1}},
        {"ry", {GateTag::RY, 1, 1}},      {"rz", {GateTag::RZ, 1, 1}},
        {"p", {GateTag::PHASE, 1, 1}},    {"u1", {GateTag::PHASE, 1, 1}},
        {"u3", {GateTag::U3, 3, 1}},      {"u", {GateTag::U3, 3, 1}},
        {"U", {GateTag::U3, 3, 1}},       {"cx", {GateTag::CX, 0, 2}},
        {"CX", {GateTag::CX, 0, 2}},      {"cz", {GateTag::CZ, 0, 2}},
        {"cp", {GateTag::CPHASE, 1, 2}},  {"cu1", {GateTag::CPHASE, 1, 2}},
        {"rzz", {GateTag::RZZ, 1, 2}},    {"swap", {GateTag::SWAP, 0, 2}},
        {"ccx", {GateTag::MCX, 0, 3}},
    };
    return table;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Circuit run() {
        header();
        std::vector<Instruction> body;
        while (peek().kind != Tok::end) {
            statement(body);
        }
        if (!qreg_) {
            throw ParseError(peek().line, peek().col, "missing qreg declaration");
        }
        Circuit c(qreg_size_, creg_size_);
        for (std::size_t i = 0; i < body.size(); ++i) {
            try {
                c.push(std::move(body[i]));
            } catch (const Error &e) {
                const auto &at = locations_[i];
                throw ParseError(at.line, at.col, e.what());
            }
        }
        return c;
    }

   private:
    const Token &peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    [[noreturn]] void error(const Token &t, const std::string &msg) const {
        throw ParseError(t.line, t.col, msg + (t.kind == Tok::end ? " at end of input"
                                                                  : " near '" + t.text + "'"));
    }
    void expect_symbol(const char *sym) {
        const Token &t = peek();
        if (t.kind != Tok::symbol || t.text != sym) error(t, std::string("expected '") + sym + "'");
        next();
    }
    bool accept_symbol(const char *sym) {
        if (peek().kind == Tok::symbol && peek().text == sym) {
            next();
            return true;
        }
        return false;
    }
    std::string expect_ident() {
        const Token &t = peek();
        if (t.kind != Tok::ident) error(t, "expected an identifier");
        return next().text;
    }
    std::size_t expect_index() {
        const Token &t = peek();
        if (t.kind != Tok::number || t.text.find_first_not_of("0123456789") != std::string::npos) {
            error(t, "expected a non-negative integer");
        }
        next();
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    void header() {
        const Token &t = peek();
        if (t.kind != Tok::ident || t.text != "OPENQASM") error(t, "expected 'OPENQASM 2.0;'");
        next();
        const Token &v = peek();
        if (v.kind != Tok::number) error(v, "expected a version number");
        next();
        if (v.text != "2.0" && v.text != "2") {
            fail(ErrorKind::unsupported_feature, "OpenQASM version " + v.text + " (only 2.0)");
        }
        expect_symbol(";");
    }

    void statement(std::vector<Instruction> &body) {
        const Token &t = peek();
        if (t.kind != Tok::ident) error(t, "expected a statement");
        const std::string word = t.text;
        if (word == "include") {
            next();
            const Token &f = peek();
            if (f.kind != Tok::string) error(f, "expected a file name");
            if (f.text != "qelib1.inc") {
                fail(ErrorKind::unsupported_feature, "include of '" + f.text + "'");
            }
            next();
            expect_symbol(";");
            return;
        }
        if (word == "if" || word == "gate" || word == "opaque" || word == "reset") {
            fail(ErrorKind::unsupported_feature, "'" + word + "' statements (line " +
                                                     std::to_string(t.line) + ")");
        }
        if (word == "qreg" || word == "creg") {
            declaration(word == "qreg");
            return;
        }
        if (word == "measure") {
            measure(body);
            return;
        }
        if (word == "barrier") {
            barrier(body);
            return;
        }
        gate(body);
    }

    void declaration(bool quantum) {
        const Token &kw = next();
        const std::string name = expect_ident();
        expect_symbol("[");
        const std::size_t size = expect_index();
        expect_symbol("]");
        expect_symbol(";");
        auto &slot = quantum ? qreg_ : creg_;
        if (slot) {
            fail(ErrorKind::unsupported_feature,
                 std::string("more than one ") + (quantum ? "qreg" : "creg") + " (line " +
                     std::to_string(kw.line) + ")");
        }
        slot = name;
        (quantum ? qreg_size_ : creg_size_) = size;
    }

    /// Operand: name[index] or a bare register (all of its bits).
    std::vector<std::uint32_t> operand(bool quantum) {
        const Token &at = peek();
        const std::string name = expect_ident();
        const auto &reg = quantum ? qreg_ : creg_;
        const std::size_t size = quantum ? qreg_size_ : creg_size_;
        if (!reg || *reg != name) {
            error(at, std::string("unknown ") + (quantum ? "quantum" : "classical") + " register");
        }
        if (accept_symbol("[")) {
            const Token &it = peek();
            const std::size_t idx = expect_index();
            expect_symbol("]");
            if (idx >= size) error(it, "index out of range");
            return {static_cast<std::uint32_t>(idx)};
        }
        std::vector<std::uint32_t> all(size);
        for (std::size_t i = 0; i < size; ++i) all[i] = static_cast<std::uint32_t>(i);
        return all;
    }

    void record(std::vector<Instruction> &body, Instruction instr, const Token &at) {
        body.push_back(std::move(instr));
        locations_.push_back(at);
    }

    void measure(std::vector<Instruction> &body) {
        const Token &at = next();
        const auto qs = operand(true);
        if (peek().kind != Tok::arrow) error(peek(), "expected '->'");
        next();
        const auto cs = operand(false);
        expect_symbol(";");
        if (qs.size() != cs.size()) error(at, "measure operands differ in size");
        for (std::size_t i = 0; i < qs.size(); ++i) record(body, gates::measure(qs[i], cs[i]), at);
    }

    void barrier(std::vector<Instruction> &body) {
        const Token &at = next();
        std::vector<Qubit> qs;
        do {
            const auto part = operand(true);
            qs.insert(qs.end(), part.begin(), part.end());
        } while (accept_symbol(","));
        expect_symbol(";");
        record(body, gates::barrier(std::move(qs)), at);
    }

    void gate(std::vector<Instruction> &body) {
        const Token &at = next();
        const auto &table = gate_table();
        auto it = table.find(at.text);
        if (it == table.end()) error(at, "unknown gate");
        const GateSpec spec = it->second;
        std::vector<double> params;
        if (accept_symbol("(")) {
            if (!accept_symbol(")")) {
                do {
                    params.push_back(expr());
                } while (accept_symbol(","));
                expect_symbol(")");
            }
        }
        if (params.size() != spec.params) {
            error(at, "gate expects " + std::to_string(spec.params) + " parameter(s)");
        }
        std::vector<std::vector<std::uint32_t>> args;
        do {
            args.push_back(operand(true));
        } while (accept_symbol(","));
        expect_symbol(";");
        if (args.size() != spec.qubits) {
            error(at, "gate expects " + std::to_string(spec.qubits) + " qubit operand(s)");
        }
        std::size_t width = 1;
        for (const auto &a : args) {
            if (a.size() != 1) {
                if (args.size() > 1) error(at, "register broadcast only for one-qubit gates");
                width = a.size();
            }
        }
        for (std::size_t k = 0; k < width; ++k) {
            Instruction instr;
            instr.tag = spec.tag;
            instr.params = params;
            for (const auto &a : args) instr.qubits.push_back(a.size() == 1 ? a[0] : a[k]);
            record(body, std::move(instr), at);
        }
    }

    // expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
    // unary := '-' unary | power; power := atom ('^' unary)?
    double expr() {
        double v = term();
        for (;;) {
            if (accept_symbol("+")) {
                v += term();
            } else if (accept_symbol("-")) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        for (;;) {
            if (accept_symbol("*")) {
                v *= unary();
            } else if (peek().kind == Tok::symbol && peek().text == "/") {
                const Token &at = next();
                const double d = unary();
                if (d == 0.0) error(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (accept_symbol("-")) return -unary();
        if (accept_symbol("+")) return unary();
        const double base = atom();
        if (accept_symbol("^")) return std::pow(base, unary());
        return base;
    }
    double atom() {
        const Token &t = peek();
        if (t.kind == Tok::number) {
            next();
            char *end = nullptr;
            const double v = std::strtod(t.text.c_str(), &end);
            if (end != t.text.c_str() + t.text.size()) error(t, "malformed number");
            return v;
        }
        if (t.kind == Tok::ident && t.text == "pi") {
            next();
            return std::numbers::pi;
        }
        if (accept_symbol("(")) {
            const double v = expr();
            expect_symbol(")");
            return v;
        }
        error(t, "expected a number, 'pi' or '('");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<std::string> qreg_, creg_;
    std::size_t qreg_size_ = 0, creg_size_ = 0;
    std::vector<Token> locations_;
};

}  // namespace

std::string to_qasm(const Circuit &circuit, const QasmOptions &options) {
    const Circuit basis = decompose_to_basis(circuit);
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    if (const auto &info = circuit.info()) {
        out += "// algorithm=" + info->algorithm + " category=" + info->category +
               " seed=" + std::to_string(info->seed) + "\n";
    }
    out += "qreg q[" + std::to_string(basis.num_qubits()) + "];\n";
    if (basis.num_clbits() > 0) {
        out += "creg c[" + std::to_string(basis.num_clbits()) + "];\n";
    }
    for (const auto &instr : basis) {
        if (instr.tag == GateTag::MEASURE) {
            out += "measure q[" + std::to_string(instr.qubits[0]) + "] -> c[" +
                   std::to_string(instr.clbits[0]) + "];\n";
            continue;
        }
        out += qasm_name(instr.tag, options.legacy_names);
        if (!instr.params.empty()) {
            out += '(';
            for (std::size_t i = 0; i < instr.params.size(); ++i) {
                if (i) out += ',';
                out += format_angle(instr.params[i]);
            }
            out += ')';
        }
        out += ' ';
        for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
            if (i) out += ',';
            out += "q[" + std::to_string(instr.qubits[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

Circuit from_qasm(std::string_view text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
}

}  // namespace qgen
