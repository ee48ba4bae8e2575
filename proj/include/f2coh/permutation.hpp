#ifndef F2COH_PERMUTATION_HPP
#define F2COH_PERMUTATION_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "f2coh/error.hpp"

namespace f2coh {

// A permutation of {0, ..., degree-1} stored as its image table.
// Composition is right-action order throughout the library:
// (a * b) moves a point first by a, then by b.
using Point = std::uint16_t;
using Perm = std::vector<Point>;

inline Perm perm_identity(std::size_t degree) {
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p[i] = static_cast<Point>(i);
    return p;
}

inline bool is_permutation(const Perm& p) {
    std::vector<bool> hit(p.size(), false);
    for (Point x : p) {
        if (x >= p.size() || hit[x])
            return false;
        hit[x] = true;
    }
    return true;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw InvalidPermutation("compose: degree mismatch");
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = b[a[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[a[i]] = static_cast<Point>(i);
    return r;
}

inline bool perm_is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i)
            return false;
    return true;
}

// Extends a permutation to a larger degree by fixed points.
inline Perm perm_pad(Perm p, std::size_t degree) {
    if (p.size() > degree)
        throw InvalidPermutation("pad: degree smaller than support");
    while (p.size() < degree)
        p.push_back(static_cast<Point>(p.size()));
    return p;
}

// 1-based disjoint-cycle string, "()" for the identity.
inline std::string to_cycle_string(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        std::size_t j = i;
        bool first = true;
        do {
            if (!first)
                out += ' ';
            out += std::to_string(j + 1);
            seen[j] = true;
            first = false;
            j = p[j];
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

namespace detail {

// One generator line in cycle notation: "(1 2 3)(4 5)". Non-disjoint cycles
// are composed left to right. Returns the perm on points 1..max_point.
inline Perm parse_cycle_line(const std::string& line) {
    std::vector<std::vector<long>> cycles;
    std::size_t i = 0;
    long max_point = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c != '(')
            throw InvalidPermutation("cycle notation: expected '(' in \"" + line + "\"");
        ++i;
        std::vector<long> cyc;
        std::string tok;
        for (; i < line.size() && line[i] != ')'; ++i) {
            char d = line[i];
            if (std::isdigit(static_cast<unsigned char>(d))) {
                tok += d;
            } else if (std::isspace(static_cast<unsigned char>(d)) || d == ',') {
                if (!tok.empty()) {
                    cyc.push_back(std::stol(tok));
                    tok.clear();
                }
            } else {
                throw InvalidPermutation("cycle notation: bad character in \"" + line + "\"");
            }
        }
        if (i >= line.size())
            throw InvalidPermutation("cycle notation: unbalanced '(' in \"" + line + "\"");
        ++i; // consume ')'
        if (!tok.empty())
            cyc.push_back(std::stol(tok));
        for (long v : cyc) {
            if (v < 1)
                throw InvalidPermutation("cycle notation: points are 1-based");
            max_point = std::max(max_point, v);
        }
        if (!cyc.empty())
            cycles.push_back(std::move(cyc));
    }
    Perm p = perm_identity(static_cast<std::size_t>(max_point));
    for (const auto& cyc : cycles) {
        Perm q = perm_identity(p.size());
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            long from = cyc[k] - 1;
            long to = cyc[(k + 1) % cyc.size()] - 1;
            if (q[from] != from)
                throw InvalidPermutation("cycle notation: point repeated within a cycle");
            q[from] = static_cast<Point>(to);
        }
        if (!is_permutation(q))
            throw InvalidPermutation("cycle notation: cycle is not a permutation");
        p = perm_compose(p, q);
    }
    return p;
}

inline Perm parse_image_line(const std::string& line) {
    std::istringstream in(line);
    std::vector<long> images;
    long v;
    while (in >> v)
        images.push_back(v);
    if (!in.eof())
        throw InvalidPermutation("image list: bad token in \"" + line + "\"");
    Perm p(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] < 1 || images[i] > static_cast<long>(images.size()))
            throw InvalidPermutation("image list: point out of range in \"" + line + "\"");
        p[i] = static_cast<Point>(images[i] - 1);
    }
    if (!is_permutation(p))
        throw InvalidPermutation("image list is not a bijection: \"" + line + "\"");
    return p;
}

} // namespace detail

// Generator file format: one generator per line, either cycle notation
// "(1 2 3)(4 5)" or a 1-based image list "3 1 2 5 4". Blank lines and lines
// starting with '#' are ignored. All generators are padded to the maximum
// degree seen in the file.
inline std::vector<Perm> parse_generators(std::istream& in) {
    std::vector<Perm> gens;
    std::string line;
    std::size_t degree = 0;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::string body = line.substr(start);
        Perm p = (body.find('(') != std::string::npos) ? detail::parse_cycle_line(body)
                                                       : detail::parse_image_line(body);
        degree = std::max(degree, p.size());
        gens.push_back(std::move(p));
    }
    for (Perm& p : gens)
        p = perm_pad(std::move(p), degree);
    return gens;
}

inline std::vector<Perm> parse_generators_text(const std::string& text) {
    std::istringstream in(text);
    return parse_generators(in);
}

} // namespace f2coh

#endif
