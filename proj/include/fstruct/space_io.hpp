#pragma once

#include <fstream>
#include <sstream>

#include "assumption1.hpp"
#include "catalog.hpp"
#include "f_operator.hpp"
#include "spaces.hpp"

namespace fstruct {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_file(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

template <class S>
S parse_entry_value(const std::vector<std::string>& toks, size_t from);

template <>
inline double parse_entry_value<double>(const std::vector<std::string>& toks, size_t from) {
    if (toks.size() != from + 1) throw ParseError("R entry takes one component");
    return std::stod(toks[from]);
}
template <>
inline Cplx parse_entry_value<Cplx>(const std::vector<std::string>& toks, size_t from) {
    if (toks.size() != from + 2) throw ParseError("C entry takes two components (re im)");
    return {std::stod(toks[from]), std::stod(toks[from + 1])};
}
template <>
inline Quaternion parse_entry_value<Quaternion>(const std::vector<std::string>& toks, size_t from) {
    if (toks.size() != from + 4) throw ParseError("H entry takes four components (w x y z)");
    return {std::stod(toks[from]), std::stod(toks[from + 1]), std::stod(toks[from + 2]),
            std::stod(toks[from + 3])};
}

template <class S>
SpaceVariant parse_space_body(const std::vector<std::vector<std::string>>& lines, std::string name,
                              int ambient, double scale) {
    std::vector<Mat<S>> h;
    std::array<std::vector<Mat<S>>, 3> m;
    std::vector<Mat<S>>* current = nullptr;
    for (const auto& toks : lines) {
        if (toks[0] == "space" || toks[0] == "ring" || toks[0] == "ambient" || toks[0] == "g0_scale")
            continue;
        if (toks[0] == "elem") {
            if (toks.size() != 2) throw ParseError("elem takes one block name (h, m1, m2, m3)");
            if (toks[1] == "h")
                current = &h;
            else if (toks[1] == "m1")
                current = &m[0];
            else if (toks[1] == "m2")
                current = &m[1];
            else if (toks[1] == "m3")
                current = &m[2];
            else
                throw ParseError("unknown block '" + toks[1] + "'");
            current->emplace_back(ambient, ambient);
            continue;
        }
        if (toks[0] == "entry") {
            if (!current) throw ParseError("entry before any elem line");
            if (toks.size() < 4) throw ParseError("entry takes: row col components...");
            int r = std::stoi(toks[1]), c = std::stoi(toks[2]);
            if (r < 0 || c < 0 || r >= ambient || c >= ambient) throw ParseError("entry index out of range");
            current->back()(r, c) = parse_entry_value<S>(toks, 3);
            continue;
        }
        throw ParseError("unknown directive '" + toks[0] + "'");
    }
    if (h.empty()) throw ParseError("space file declares no h basis");
    for (int i = 0; i < 3; ++i)
        if (m[static_cast<size_t>(i)].empty())
            throw ParseError("space file declares no m" + std::to_string(i + 1) + " basis");
    return ReductiveSpace<S>(std::move(name), ambient, scale, std::move(h), std::move(m));
}

}  // namespace detail

/// Parse a declarative space file (see README for the schema); no verification.
inline SpaceVariant parse_space_file(std::istream& in) {
    auto lines = detail::tokenize_file(in);
    std::string name = "user_space", ring;
    int ambient = 0;
    double scale = 0.0;
    for (const auto& toks : lines) {
        if (toks[0] == "space" && toks.size() == 2) name = toks[1];
        if (toks[0] == "ring" && toks.size() == 2) ring = toks[1];
        if (toks[0] == "ambient" && toks.size() == 2) ambient = std::stoi(toks[1]);
        if (toks[0] == "g0_scale" && toks.size() == 2) scale = std::stod(toks[1]);
    }
    if (ring.empty() || ambient <= 0 || scale <= 0.0)
        throw ParseError("space file must set ring, ambient and a positive g0_scale");
    if (ring == "R") return detail::parse_space_body<double>(lines, name, ambient, scale);
    if (ring == "C") return detail::parse_space_body<Cplx>(lines, name, ambient, scale);
    if (ring == "H") return detail::parse_space_body<Quaternion>(lines, name, ambient, scale);
    throw ParseError("ring must be R, C or H");
}

inline SpaceVariant parse_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open space file " + path);
    return parse_space_file(in);
}

/// Parse and verify; rejects files whose decomposition fails a clause.
inline SpaceVariant load_space_file(const std::string& path, double tol = 1e-9) {
    SpaceVariant sv = parse_space_file(path);
    std::string failed;
    std::visit(
        [&](const auto& sp) {
            auto rep = verify_assumption1(sp, tol);
            for (const auto& c : rep.clauses)
                if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.id;
        },
        sv);
    if (!failed.empty()) throw ParseError("space file rejected; failing clauses: " + failed);
    return sv;
}

/// f-structure definition file: one rotation line per image module,
///   pairs <module> p q s [p q s ...]     s in {+,-,+1,-1}
///   quat <module> w x y z
/// module indices are 1-based; unlisted modules form the kernel.
template <class S>
FOperator<S> parse_f_file(std::istream& in, const ReductiveSpace<S>& sp) {
    auto lines = detail::tokenize_file(in);
    std::map<int, ModuleRotation> rot;
    for (const auto& toks : lines) {
        if (toks[0] == "fstructure") continue;
        if (toks[0] == "pairs") {
            if (toks.size() < 5 || (toks.size() - 2) % 3 != 0)
                throw ParseError("pairs line: pairs <module> p q s [p q s ...]");
            int mod = std::stoi(toks[1]) - 1;
            PlanePairing pp;
            for (size_t t = 2; t + 3 <= toks.size(); t += 3) {
                int sign;
                if (toks[t + 2] == "+" || toks[t + 2] == "+1")
                    sign = 1;
                else if (toks[t + 2] == "-" || toks[t + 2] == "-1")
                    sign = -1;
                else
                    throw ParseError("pair sign must be + or -");
                pp.pairs.push_back({std::stoi(toks[t]), std::stoi(toks[t + 1]), sign});
            }
            rot[mod] = pp;
            continue;
        }
        if (toks[0] == "quat") {
            if (toks.size() != 6) throw ParseError("quat line: quat <module> w x y z");
            int mod = std::stoi(toks[1]) - 1;
            rot[mod] = QuaternionRotation{Quaternion(std::stod(toks[2]), std::stod(toks[3]),
                                                     std::stod(toks[4]), std::stod(toks[5]))};
            continue;
        }
        throw ParseError("unknown f-file directive '" + toks[0] + "'");
    }
    if (rot.empty()) throw ParseError("f-structure file lists no rotations");
    return block_f(sp, rot);
}

template <class S>
FOperator<S> parse_f_file(const std::string& path, const ReductiveSpace<S>& sp) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open f-structure file " + path);
    return parse_f_file(in, sp);
}

/// Pure unit quaternion in unit notation ("i", "-j", "0.6i+0.8k") or
/// component notation "(w,x,y,z)".  Near-unit inputs are normalized.
inline Quaternion parse_pure_quaternion(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty quaternion");
    Quaternion q;
    if (s.front() == '(') {
        if (s.back() != ')') throw ParseError("unbalanced parentheses in quaternion");
        std::istringstream body(s.substr(1, s.size() - 2));
        std::string part;
        double comp[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(body, part, ',')) throw ParseError("component quaternion needs w,x,y,z");
            comp[i] = std::stod(part);
        }
        q = {comp[0], comp[1], comp[2], comp[3]};
    } else {
        size_t pos = 0;
        while (pos < s.size()) {
            double sign = 1.0;
            if (s[pos] == '+') ++pos;
            else if (s[pos] == '-') {
                sign = -1.0;
                ++pos;
            }
            size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                                      s[pos] == 'e' || s[pos] == 'E' ||
                                      ((s[pos] == '+' || s[pos] == '-') && pos > start &&
                                       (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
                ++pos;
            double coef = pos > start ? std::stod(s.substr(start, pos - start)) : 1.0;
            if (pos >= s.size()) throw ParseError("quaternion term lacks a unit i, j or k");
            char unit = s[pos++];
            switch (unit) {
                case 'i': q.x += sign * coef; break;
                case 'j': q.y += sign * coef; break;
                case 'k': q.z += sign * coef; break;
                default: throw ParseError(std::string("unknown quaternion unit '") + unit + "'");
            }
        }
    }
    if (!q.is_pure(1e-9)) throw ParseError("quaternion must be pure imaginary");
    double n = q.norm();
    if (std::abs(n - 1.0) > 1e-3) throw ParseError("quaternion must have unit norm");
    return q * (1.0 / n);
}

/// "--quat h1=i,h2=-i" (or a single "h=...") into catalog parameters.
inline QuatParams parse_quat_params(const std::string& text) {
    QuatParams qp;
    auto grab = [&](const std::string& key) -> std::optional<std::string> {
        auto at = text.find(key);
        if (at == std::string::npos) return std::nullopt;
        size_t from = at + key.size();
        size_t depth = 0, end = from;
        while (end < text.size()) {
            if (text[end] == '(') ++depth;
            if (text[end] == ')' && depth > 0) --depth;
            if (text[end] == ',' && depth == 0) break;
            ++end;
        }
        return text.substr(from, end - from);
    };
    if (auto v = grab("h1=")) qp.h1 = parse_pure_quaternion(*v);
    if (auto v = grab("h2=")) qp.h2 = parse_pure_quaternion(*v);
    if (!qp.h1 && !qp.h2)
        if (auto v = grab("h=")) qp.h1 = parse_pure_quaternion(*v);
    if (!qp.h1 && !qp.h2) throw ParseError("--quat expects h=..., or h1=...,h2=...");
    return qp;
}

}  // namespace fstruct
