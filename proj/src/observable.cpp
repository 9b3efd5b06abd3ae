// Copyright 2026 The lgt-shadows Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgts/observable.hpp"

#include <bit>
#include <cctype>
#include <regex>
#include <stdexcept>
#include <vector>

namespace lgts {

namespace {

std::string trim(const std::string &s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<int> integers_between(const std::string &body, char open, char close) {
    const size_t a = body.find(open), b = body.rfind(close);
    if (a == std::string::npos || b == std::string::npos || b < a) {
        throw std::invalid_argument(std::string("expected a list in '") + open + "..." + close + "'");
    }
    std::vector<int> out;
    static const std::regex number(R"(-?\d+)");
    const std::string inner = body.substr(a + 1, b - a - 1);
    for (std::sregex_iterator it(inner.begin(), inner.end(), number), end; it != end; ++it) {
        out.push_back(std::stoi(it->str()));
    }
    return out;
}

std::string unquote(const std::string &body) {
    std::string t = trim(body);
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
    return t;
}

}  // namespace

Observable parse_observable(const std::string &text, const DualityContext &ctx, const std::string &id) {
    if (ctx.ancilla_mode()) throw std::invalid_argument("observables are resolved against the plain duality");
    const size_t colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("observable '" + text + "' has no kind prefix");
    const std::string kind = trim(text.substr(0, colon));
    const std::string body = text.substr(colon + 1);
    const int V = ctx.num_dual_qubits();
    Observable o;
    o.id = id;
    o.spec = trim(text);
    if (kind == "loop") {
        uint64_t mask = 0;
        for (int p : integers_between(body, '[', ']')) {
            if (p < 0 || p >= V) throw std::invalid_argument("plaquette " + std::to_string(p) + " out of range");
            if (mask >> p & 1) throw std::invalid_argument("plaquette " + std::to_string(p) + " listed twice");
            mask |= uint64_t{1} << p;
        }
        if (!mask) throw std::invalid_argument("loop needs at least one plaquette");
        o.ising = PauliString::z_string(V, mask);
        o.lgt = PauliString::identity(ctx.num_lgt_qubits());
        for (uint64_t m = mask; m; m &= m - 1) o.lgt *= ctx.plaquette_operator(std::countr_zero(m));
    } else if (kind == "ribbon") {
        auto ends = integers_between(body, '(', ')');
        if (ends.size() != 2 || ends[0] == ends[1]) throw std::invalid_argument("ribbon needs two distinct plaquettes");
        for (int p : ends) {
            if (p < 0 || p >= V) throw std::invalid_argument("plaquette " + std::to_string(p) + " out of range");
        }
        o.ising = PauliString::x_string(V, (uint64_t{1} << ends[0]) | (uint64_t{1} << ends[1]));
        o.lgt = ctx.ribbon(ends[0], ends[1]);
    } else if (kind == "ising") {
        o.ising = PauliString::parse(unquote(body), V);
        o.lgt = ctx.phi_inverse(o.ising);
    } else if (kind == "lgt") {
        o.lgt = PauliString::parse(unquote(body), ctx.num_lgt_qubits());
        o.ising = ctx.phi_forward(o.lgt);
    } else {
        throw std::invalid_argument("unknown observable kind '" + kind + "'");
    }
    if (!o.ising.is_hermitian() || !o.lgt.is_hermitian()) throw std::invalid_argument("observable must be Hermitian");
    return o;
}

}  // namespace lgts
