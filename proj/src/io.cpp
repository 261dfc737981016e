// Copyright 2026 The qreuse Authors
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


#include "qreuse/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qreuse/errors.hpp"

namespace qreuse {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::pair<size_t, size_t> line_column(std::string_view text, size_t offset) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i < offset && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

[[noreturn]] void op_error(size_t index, const std::string &what) {
    throw ParseError("op " + std::to_string(index) + ": " + what, 0, 0);
}

uint32_t get_index(const json &j, size_t op, const char *what) {
    if (!j.is_number_unsigned()) {
        op_error(op, std::string(what) + " must be a non-negative integer");
    }
    auto v = j.get<uint64_t>();
    if (v > UINT32_MAX) {
        op_error(op, std::string(what) + " out of range");
    }
    return static_cast<uint32_t>(v);
}

uint32_t get_count(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_number_unsigned() || it->get<uint64_t>() > UINT32_MAX) {
        throw ParseError(std::string("'") + key + "' must be a non-negative integer", 0, 0);
    }
    return static_cast<uint32_t>(it->get<uint64_t>());
}

Operation parse_op(const json &j, size_t index) {
    if (!j.is_object()) {
        op_error(index, "must be an object");
    }
    auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
        op_error(index, "missing 'kind'");
    }
    const std::string kind = kind_it->get<std::string>();
    auto q_it = j.find("qubits");
    if (q_it == j.end() || !q_it->is_array()) {
        op_error(index, "missing 'qubits' array");
    }
    std::vector<QubitId> qubits;
    for (const json &q : *q_it) {
        qubits.push_back(get_index(q, index, "qubit"));
    }

    if (kind == "gate") {
        auto label_it = j.find("label");
        if (label_it == j.end() || !label_it->is_string()) {
            op_error(index, "gate needs a 'label'");
        }
        std::vector<double> params;
        if (auto p = j.find("params"); p != j.end()) {
            if (!p->is_array()) {
                op_error(index, "'params' must be an array");
            }
            for (const json &x : *p) {
                if (!x.is_number()) {
                    op_error(index, "params must be numbers");
                }
                params.push_back(x.get<double>());
            }
        }
        std::optional<Matrix> matrix;
        if (auto m = j.find("matrix"); m != j.end()) {
            if (!m->is_array()) {
                op_error(index, "'matrix' must be an array of [re, im] pairs");
            }
            std::vector<Complex> data;
            for (const json &e : *m) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                    op_error(index, "matrix entries must be [re, im] pairs");
                }
                data.emplace_back(e[0].get<double>(), e[1].get<double>());
            }
            size_t dim = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(data.size()))));
            if (dim * dim != data.size()) {
                op_error(index, "matrix has " + std::to_string(data.size()) + " entries, not a square");
            }
            matrix = Matrix(dim, std::move(data));
        }
        return Operation::gate(label_it->get<std::string>(), std::move(qubits), std::move(params),
                               std::move(matrix));
    }
    if (kind != "prep" && kind != "measure" && kind != "reset") {
        op_error(index, "unknown kind '" + kind + "'");
    }
    if (qubits.size() != 1) {
        op_error(index, kind + " takes exactly one qubit");
    }
    if (kind == "measure") {
        auto c = j.find("clbit");
        if (c == j.end()) {
            op_error(index, "measure needs a 'clbit'");
        }
        return Operation::measure(qubits[0], get_index(*c, index, "clbit"));
    }
    return kind == "prep" ? Operation::prepare(qubits[0]) : Operation::reset(qubits[0]);
}

std::string quoted(const std::string &s) { return json(s).dump(); }

std::string index_list(const std::vector<QubitId> &v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? ", " : "") + std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

Circuit parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }
    if (!doc.is_object()) {
        throw ParseError("circuit document must be a JSON object", 1, 1);
    }
    auto version = doc.find("version");
    if (version == doc.end() || !version->is_string() || version->get<std::string>() != kFormatVersion) {
        throw ParseError("unsupported or missing version (expected \"" + std::string(kFormatVersion) + "\")", 0, 0);
    }
    Circuit c(get_count(doc, "num_qubits"), get_count(doc, "num_clbits"));
    auto ops = doc.find("ops");
    if (ops == doc.end() || !ops->is_array()) {
        throw ParseError("missing 'ops' array", 0, 0);
    }
    for (size_t i = 0; i < ops->size(); i++) {
        c.ops.push_back(parse_op((*ops)[i], i));
    }
    if (auto md = doc.find("metadata"); md != doc.end()) {
        if (!md->is_object()) {
            throw ParseError("'metadata' must be an object of strings", 0, 0);
        }
        for (const auto &[k, v] : md->items()) {
            if (!v.is_string()) {
                throw ParseError("metadata value for '" + k + "' must be a string", 0, 0);
            }
            c.metadata[k] = v.get<std::string>();
        }
    }
    require_valid(c);
    return c;
}

std::string emit_json(const Circuit &circuit) {
    require_valid(circuit);
    std::ostringstream out;
    out << "{\n  \"version\": " << quoted(std::string(kFormatVersion)) << ",\n";
    out << "  \"num_qubits\": " << circuit.num_qubits << ",\n";
    out << "  \"num_clbits\": " << circuit.num_clbits << ",\n";
    out << "  \"metadata\": {";
    bool first = true;
    for (const auto &[k, v] : circuit.metadata) {
        out << (first ? "" : ", ") << quoted(k) << ": " << quoted(v);
        first = false;
    }
    out << "},\n  \"ops\": [";
    for (size_t i = 0; i < circuit.ops.size(); i++) {
        const Operation &op = circuit.ops[i];
        out << (i ? ",\n    " : "\n    ") << "{\"kind\": \"" << op_kind_name(op.kind) << "\"";
        if (op.is_gate()) {
            out << ", \"label\": " << quoted(op.label);
        }
        out << ", \"qubits\": " << index_list(op.qubits);
        if (op.clbit) {
            out << ", \"clbit\": " << *op.clbit;
        }
        if (op.is_gate() && !op.params.empty()) {
            out << ", \"params\": [";
            for (size_t p = 0; p < op.params.size(); p++) {
                out << (p ? ", " : "") << format_double(op.params[p]);
            }
            out << "]";
        }
        if (op.matrix) {
            out << ", \"matrix\": [";
            const auto &data = op.matrix->data();
            for (size_t e = 0; e < data.size(); e++) {
                out << (e ? ", " : "") << "[" << format_double(data[e].real()) << ", "
                    << format_double(data[e].imag()) << "]";
            }
            out << "]";
        }
        out << "}";
    }
    out << (circuit.ops.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

namespace {

// Recursive-descent evaluator for QASM angle expressions: numbers, pi,
// + - * /, unary minus, parentheses.
class ExprParser {
   public:
    ExprParser(std::string_view s, size_t line) : s_(s), line_(line) {}

    double parse() {
        double v = sum();
        skip();
        if (pos_ != s_.size()) {
            fail();
        }
        return v;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() {
        throw ParseError("line " + std::to_string(line_) + ": bad angle expression '" + std::string(s_) + "'",
                         line_, 0);
    }
    double sum() {
        double v = product();
        while (true) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }
    double product() {
        double v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return atom();
    }
    double atom() {
        if (eat('(')) {
            double v = sum();
            if (!eat(')')) {
                fail();
            }
            return v;
        }
        skip();
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return M_PI;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                    s_[pos_] == 'e' || s_[pos_] == 'E' ||
                                    ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
                                     (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
            pos_++;
        }
        if (start == pos_) {
            fail();
        }
        try {
            size_t used = 0;
            std::string num(s_.substr(start, pos_ - start));
            double v = std::stod(num, &used);
            if (used != num.size()) {
                fail();
            }
            return v;
        } catch (const std::logic_error &) {
            fail();
        }
    }

    std::string_view s_;
    size_t line_;
    size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        b++;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        e--;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); i++) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

struct Register {
    uint32_t offset;
    uint32_t size;
};

class QasmImporter {
   public:
    Circuit run(std::string_view text) {
        // Split into statements, remembering the line each one starts on.
        std::string current;
        size_t line = 1, start_line = 1;
        for (size_t i = 0; i < text.size(); i++) {
            char ch = text[i];
            if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
                while (i < text.size() && text[i] != '\n') {
                    i++;
                }
                if (i == text.size()) {
                    break;
                }
                ch = '\n';
            }
            if (ch == '\n') {
                line++;
            }
            if (ch == ';') {
                statement(trim(current), start_line);
                current.clear();
                continue;
            }
            if (trim(current).empty() && !std::isspace(static_cast<unsigned char>(ch))) {
                start_line = line;
            }
            current += ch;
        }
        if (!trim(current).empty()) {
            throw ParseError("line " + std::to_string(start_line) + ": missing ';'", start_line, 0);
        }

        Circuit c(num_qubits_, num_clbits_);
        for (QubitId q = 0; q < num_qubits_; q++) {
            c.prepare(q);
        }
        for (Operation &op : ops_) {
            c.ops.push_back(std::move(op));
        }
        require_valid(c);
        return c;
    }

   private:
    [[noreturn]] static void fail(size_t line, const std::string &what) {
        throw ParseError("line " + std::to_string(line) + ": " + what, line, 0);
    }

    void declare(std::map<std::string, Register> &regs, uint32_t &count, const std::string &decl, size_t line) {
        auto open = decl.find('['), close = decl.find(']');
        if (open == std::string::npos || close != decl.size() - 1) {
            fail(line, "bad register declaration '" + decl + "'");
        }
        std::string name = trim(decl.substr(0, open));
        uint32_t size = 0;
        try {
            size = static_cast<uint32_t>(std::stoul(decl.substr(open + 1, close - open - 1)));
        } catch (const std::logic_error &) {
            fail(line, "bad register size in '" + decl + "'");
        }
        if (name.empty() || qregs_.count(name) || cregs_.count(name)) {
            fail(line, "duplicate or empty register name '" + name + "'");
        }
        regs[name] = {count, size};
        count += size;
    }

    // "q[3]" -> {offset+3}; "q" -> whole register.
    std::vector<uint32_t> resolve(const std::map<std::string, Register> &regs, const std::string &arg,
                                  size_t line) const {
        auto open = arg.find('[');
        std::string name = trim(arg.substr(0, open));
        auto it = regs.find(name);
        if (it == regs.end()) {
            fail(line, "unknown register '" + name + "'");
        }
        const Register &r = it->second;
        if (open == std::string::npos) {
            std::vector<uint32_t> all(r.size);
            for (uint32_t i = 0; i < r.size; i++) {
                all[i] = r.offset + i;
            }
            return all;
        }
        auto close = arg.find(']');
        if (close == std::string::npos || close != arg.size() - 1) {
            fail(line, "bad operand '" + arg + "'");
        }
        uint32_t idx = 0;
        try {
            idx = static_cast<uint32_t>(std::stoul(arg.substr(open + 1, close - open - 1)));
        } catch (const std::logic_error &) {
            fail(line, "bad index in '" + arg + "'");
        }
        if (idx >= r.size) {
            fail(line, "index out of range in '" + arg + "'");
        }
        return {r.offset + idx};
    }

    // Expands register broadcasting: operands are single bits or whole
    // registers of a common size.
    static std::vector<std::vector<uint32_t>> broadcast(const std::vector<std::vector<uint32_t>> &args,
                                                        size_t line) {
        size_t n = 1;
        for (const auto &a : args) {
            if (a.size() != 1) {
                if (n != 1 && n != a.size()) {
                    fail(line, "register size mismatch");
                }
                n = a.size();
            }
        }
        std::vector<std::vector<uint32_t>> out(n);
        for (size_t i = 0; i < n; i++) {
            for (const auto &a : args) {
                out[i].push_back(a.size() == 1 ? a[0] : a[i]);
            }
        }
        return out;
    }

    void statement(const std::string &stmt, size_t line) {
        if (stmt.empty()) {
            return;
        }
        size_t word_end = 0;
        while (word_end < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[word_end])) ||
                                          stmt[word_end] == '_')) {
            word_end++;
        }
        const std::string word = stmt.substr(0, word_end);
        std::string rest = trim(std::string_view(stmt).substr(word_end));

        if (word == "OPENQASM") {
            if (rest != "2.0") {
                fail(line, "only OPENQASM 2.0 is supported");
            }
            return;
        }
        if (word == "include") {
            if (rest != "\"qelib1.inc\"") {
                fail(line, "unsupported include " + rest);
            }
            return;
        }
        if (word == "qreg") {
            declare(qregs_, num_qubits_, rest, line);
            return;
        }
        if (word == "creg") {
            declare(cregs_, num_clbits_, rest, line);
            return;
        }
        if (word == "barrier") {
            return;
        }
        if (word == "measure") {
            auto arrow = rest.find("->");
            if (arrow == std::string::npos) {
                fail(line, "measure needs '->'");
            }
            auto q = resolve(qregs_, trim(rest.substr(0, arrow)), line);
            auto c = resolve(cregs_, trim(rest.substr(arrow + 2)), line);
            for (const auto &pair : broadcast({q, c}, line)) {
                ops_.push_back(Operation::measure(pair[0], pair[1]));
            }
            return;
        }
        if (word == "reset") {
            for (uint32_t q : resolve(qregs_, rest, line)) {
                ops_.push_back(Operation::reset(q));
            }
            return;
        }

        static const std::map<std::string, std::pair<size_t, size_t>> kGates = {
            {"h", {1, 0}},  {"x", {1, 0}},  {"z", {1, 0}},  {"rx", {1, 1}},
            {"rz", {1, 1}}, {"cx", {2, 0}}, {"cz", {2, 0}}, {"rzz", {2, 1}},
        };
        auto gate = kGates.find(word);
        if (gate == kGates.end()) {
            fail(line, "unsupported statement '" + (word.empty() ? stmt : word) + "'");
        }
        auto [arity, nparams] = gate->second;
        std::vector<double> params;
        if (!rest.empty() && rest[0] == '(') {
            int depth = 0;
            size_t close = 0;
            for (size_t i = 0; i < rest.size(); i++) {
                depth += rest[i] == '(' ? 1 : rest[i] == ')' ? -1 : 0;
                if (depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == 0) {
                fail(line, "unbalanced parentheses");
            }
            for (const std::string &e : split(std::string_view(rest).substr(1, close - 1), ',')) {
                params.push_back(ExprParser(e, line).parse());
            }
            rest = trim(std::string_view(rest).substr(close + 1));
        }
        if (params.size() != nparams) {
            fail(line, "'" + word + "' takes " + std::to_string(nparams) + " parameter(s)");
        }
        std::vector<std::vector<uint32_t>> operands;
        for (const std::string &a : split(rest, ',')) {
            operands.push_back(resolve(qregs_, a, line));
        }
        if (operands.size() != arity) {
            fail(line, "'" + word + "' takes " + std::to_string(arity) + " qubit(s)");
        }
        for (auto &qs : broadcast(operands, line)) {
            ops_.push_back(Operation::gate(word, std::move(qs), params));
        }
    }

    std::map<std::string, Register> qregs_, cregs_;
    uint32_t num_qubits_ = 0, num_clbits_ = 0;
    std::vector<Operation> ops_;
};

}  // namespace

Circuit import_qasm2_subset(std::string_view text) { return QasmImporter().run(text); }

std::string emit_distribution(const Distribution &d) {
    std::string out = "{";
    bool first = true;
    for (const auto &[bits, p] : d.probs) {
        out += (first ? "\"" : ", \"") + bits + "\": " + format_double(p);
        first = false;
    }
    return out + "}";
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    std::optional<std::pair<uint32_t, size_t>> header;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    while (std::getline(in, line)) {
        lineno++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == 'c') {
            continue;
        }
        std::istringstream fields(t);
        if (!header) {
            std::string tag;
            uint64_t n = 0, m = 0;
            if (!(fields >> tag >> n >> m) || tag != "p" || n > UINT32_MAX) {
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'p N M'", lineno, 0);
            }
            header = {static_cast<uint32_t>(n), static_cast<size_t>(m)};
            continue;
        }
        uint64_t u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra) || u > UINT32_MAX || v > UINT32_MAX) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'", lineno, 0);
        }
        edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    }
    if (!header) {
        throw ParseError("missing 'p N M' header", 0, 0);
    }
    if (edges.size() != header->second) {
        throw ParseError("header declares " + std::to_string(header->second) + " edges, found " +
                             std::to_string(edges.size()),
                         0, 0);
    }
    try {
        return make_graph(header->first, std::move(edges));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, 0);
    }
}

std::string emit_edge_list(const Graph &graph) {
    std::string out = "p " + std::to_string(graph.num_vertices) + " " + std::to_string(graph.edges.size()) + "\n";
    for (auto [u, v] : graph.edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr)) {
        throw Error("sha256 failed");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; i++) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << contents;
}

}  // namespace qreuse
