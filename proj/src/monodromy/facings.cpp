#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nsolve/monodromy.hpp"

namespace nsolve {

namespace {

bool matches(const FaceTuple& f, const IndexSet& indices, const std::vector<LatticeSet>& parts) {
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (f.parts[indices[i]] != parts[i]) return false;
    return true;
}

/// Differences inside each part, spanning the direction of their sum.
std::vector<IntVector> part_directions(const std::vector<LatticeSet>& parts) {
    std::vector<IntVector> gens;
    for (const auto& b : parts)
        for (const auto& x : b) gens.push_back(sub(x, b[0]));
    return gens;
}

/// Index of the lattice generated by the given vectors inside its saturation.
Int saturation_index(std::size_t n, const std::vector<IntVector>& gens) {
    Sublattice s = saturation(generated_lattice(n, gens));
    if (s.rank() == 0) return 1;
    return *lattice_index(gens, s);
}

Int top_gap(const LatticeSet& a, const Covector& nu) {
    Int top = support_value(a, nu);
    Int gap = std::numeric_limits<Int>::max();
    for (const auto& x : a) {
        Int g = top - dot(nu, x);
        if (g > 0) gap = std::min(gap, g);
    }
    return gap;
}

}  // namespace

CycleType facing_cycle_type(const SupportTuple& t, const EssentialFacing& s) {
    const std::size_t n = ambient_dim(t);
    if (t.size() != n) throw std::invalid_argument("facing cycle types need a square tuple");
    bool essential = false;
    for (const auto& e : essential_facings(t))
        if (e.indices == s.indices && e.parts == s.parts) essential = true;
    if (!essential) throw std::invalid_argument("subtuple is not an essential facing");

    Sublattice span = generated_lattice(n, part_directions(s.parts));
    Int index = saturation_index(n, part_directions(s.parts));
    CycleType out;
    for (const auto& f : faces(t)) {
        if (f.dim != static_cast<int>(n) - 1 || !matches(f, s.indices, s.parts)) continue;
        Int order = std::numeric_limits<Int>::max();
        for (std::size_t j : s.indices) order = std::min(order, top_gap(t[j], f.witness));
        if (order == std::numeric_limits<Int>::max()) continue;
        SupportTuple rest;
        for (std::size_t j = 0; j < n; ++j)
            if (!std::binary_search(s.indices.begin(), s.indices.end(), j))
                rest.push_back(project_along(f.parts[j], span));
        Int v = relative_mixed_volume(rest);
        out.add(order, checked_mul(index, v));
    }
    return out;
}

CycleType discriminant_cycle_type(const SupportTuple& t) {
    Int mv = mixed_volume(t);
    if (mv < 2) throw std::invalid_argument("mixed volume below 2: no discriminant 2-cycle");
    CycleType c;
    c.add(2, 1);
    c.add(1, mv - 2);
    return c;
}

std::string facing_id(const IndexSet& indices, const std::vector<LatticeSet>& parts) {
    std::string s = "R[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(indices[i] + 1) + ":" + to_string(parts[i]);
    }
    return s + "]";
}

std::vector<std::pair<std::string, CycleType>> monodromy_summary(const SupportTuple& t) {
    std::vector<std::pair<std::string, CycleType>> out;
    if (mixed_volume(t) >= 2) out.emplace_back("D", discriminant_cycle_type(t));
    for (const auto& e : essential_facings(t)) out.emplace_back(facing_id(e.indices, e.parts), facing_cycle_type(t, e));
    return out;
}

Int augmented_index(const std::vector<LatticeSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("need at least one set");
    const std::size_t n = sets.front().dim();
    const std::size_t p = sets.size();
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < p; ++j)
        for (const auto& x : sets[j]) {
            IntVector y = x;
            y.resize(n + p, 0);
            y[n + j] = 1;
            gens.push_back(std::move(y));
        }
    return saturation_index(n + p, gens);
}

ZetaFunction zeta_discriminant(const SupportTuple& t) {
    if (t.empty() || t.size() > ambient_dim(t)) throw std::invalid_argument("need 1 <= k <= n supports");
    if (max_codim_subtuple(t).codim > 0) throw std::invalid_argument("tuple has a subtuple of positive codimension");
    ZetaFunction z;
    z.multiply(2, augmented_index(t));
    return z;
}

std::optional<FaceTuple> enclosing_face(const SupportTuple& t, const Subtuple& b) {
    if (b.indices.empty() || b.indices.size() != b.parts.size()) throw std::invalid_argument("malformed subtuple");
    for (const auto& f : faces(t))
        if (matches(f, b.indices, b.parts)) return f;
    return std::nullopt;
}

bool is_important(const SupportTuple& t, const Subtuple& b) {
    const int codim = subtuple_codim(b.parts);
    for (const auto& f : faces(t)) {
        if (!matches(f, b.indices, b.parts)) continue;
        for (const auto& J : nonempty_subsets(t.size())) {
            if (J.size() <= b.indices.size() || !std::includes(J.begin(), J.end(), b.indices.begin(), b.indices.end()))
                continue;
            if (codimension(f.parts, J) > codim) return false;
        }
    }
    return true;
}

ZetaFunction zeta_facing(const SupportTuple& t, const Subtuple& b) {
    const std::size_t n = ambient_dim(t);
    const std::size_t k = t.size();
    if (!enclosing_face(t, b)) throw std::invalid_argument("subtuple is not part of a proper face");
    if (!is_important(t, b)) throw std::invalid_argument("subtuple is not important");

    // Translate the chosen supports so that each chosen part contains 0.
    SupportTuple shifted = t;
    std::vector<LatticeSet> parts;
    for (std::size_t i = 0; i < b.indices.size(); ++i) {
        IntVector o = scale(lex_min(b.parts[i]), -1);
        shifted[b.indices[i]] = translate(t[b.indices[i]], o);
        parts.push_back(translate(b.parts[i], o));
    }
    std::vector<IntVector> gens;
    for (const auto& p : parts) gens.insert(gens.end(), p.begin(), p.end());
    Sublattice span = generated_lattice(n, gens);
    const std::size_t d = n - span.rank();

    SupportTuple img;
    for (const auto& a : shifted) img.push_back(project_along(a, span));
    LatticeSet sum(d, {Point(d, 0)});
    std::vector<Point> rest;
    for (std::size_t i = 0; i < b.indices.size(); ++i) {
        const LatticeSet& a = img[b.indices[i]];
        sum = minkowski_sum(sum, a);
        for (const auto& x : project_along(set_difference(shifted[b.indices[i]], parts[i]), span)) rest.push_back(x);
    }
    ZetaFunction z;
    if (rest.empty()) return z;
    img.push_back(sum);
    img.push_back(LatticeSet(d, std::move(rest)));

    IndexSet facet_parts(k);
    for (std::size_t j = 0; j < k; ++j) facet_parts[j] = j;
    facet_parts.push_back(k + 1);
    const Int ib = augmented_index(b.parts);
    for (const auto& c : faces(img)) {
        if (c.parts[k] != LatticeSet(d, {Point(d, 0)})) continue;
        if (sum_dim(c.parts, facet_parts) != static_cast<int>(d) - 1) continue;
        Int h = std::abs(dot(c.witness, c.parts[k + 1][0]));
        Int mc = 0;
        // Compositions m_0 >= 1, m_1..m_k >= 0 of d; the repeated arguments number d - 1.
        std::vector<std::size_t> mult(k + 1, 0);
        mult[0] = 1;
        auto recurse = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
            if (pos == k + 1) {
                if (left != 0) return;
                SupportTuple args;
                for (std::size_t r = 1; r < mult[0]; ++r) args.push_back(c.parts[k + 1]);
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t r = 0; r < mult[j + 1]; ++r) args.push_back(c.parts[j]);
                mc = checked_add(mc, relative_mixed_volume(args));
                return;
            }
            for (std::size_t m = 0; m <= left; ++m) {
                mult[pos] = (pos == 0 ? 1 : 0) + m;
                self(self, pos + 1, left - m);
            }
        };
        recurse(recurse, 0, d - 1);
        if (h == 0 || mc == 0) continue;
        z.multiply(h, checked_mul(ib, mc));
    }
    return z;
}

}  // namespace nsolve
