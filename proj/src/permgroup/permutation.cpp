#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "nsolve/permgroup.hpp"

namespace nsolve {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t y : images_) {
        if (y >= images_.size() || seen[y]) throw std::invalid_argument("images do not form a bijection");
        seen[y] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cycle(std::size_t n, const std::vector<std::size_t>& points) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] >= n || used[points[i]]) throw std::invalid_argument("bad cycle");
        used[points[i]] = true;
        im[points[i]] = points[(i + 1) % points.size()];
    }
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& s, std::size_t degree) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    };
    skip();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + s);
        ++i;
        std::vector<std::size_t> cyc;
        for (;;) {
            skip();
            if (i >= s.size()) throw std::invalid_argument("unterminated cycle: " + s);
            if (s[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad point in: " + s);
            std::size_t v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
            if (v == 0) throw std::invalid_argument("points are 1-based: " + s);
            cyc.push_back(v - 1);
        }
        cycles.push_back(std::move(cyc));
        skip();
    }
    std::size_t n = degree;
    for (const auto& c : cycles)
        for (std::size_t x : c) n = std::max(n, x + 1);
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (used[c[k]]) throw std::invalid_argument("cycles must be disjoint: " + s);
            used[c[k]] = true;
            im[c[k]] = c[(k + 1) % c.size()];
        }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> im(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) im[images_[x]] = x;
    return Permutation(std::move(im));
}

Permutation Permutation::pow(Int e) const {
    Permutation base = e < 0 ? inverse() : *this;
    Int k = e < 0 ? -e : e;
    Permutation r = identity(degree());
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::vector<std::size_t> Permutation::support() const {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) s.push_back(x);
    return s;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (seen[x] || images_[x] == x) continue;
        std::vector<std::size_t> c;
        for (std::size_t y = x; !seen[y]; y = images_[y]) {
            seen[y] = true;
            c.push_back(y);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("permutation degrees differ");
    std::vector<std::size_t> im(p.degree());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = p(q(x));
    return Permutation(std::move(im));
}

CycleType cycle_type_of(const Permutation& p) {
    CycleType c;
    std::size_t moved = 0;
    for (const auto& cyc : p.cycles()) {
        c.add(static_cast<Int>(cyc.size()), 1);
        moved += cyc.size();
    }
    c.add(1, static_cast<Int>(p.degree() - moved));
    return c;
}

}  // namespace nsolve
