#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nsolve/monodromy.hpp"

namespace nsolve {

void CycleType::add(Int length, Int count) {
    if (length <= 0 || count < 0) throw std::invalid_argument("cycle lengths and counts must be positive");
    if (count == 0) return;
    counts[length] = checked_add(counts[length], count);
}

Int CycleType::moved_points() const {
    Int s = 0;
    for (const auto& [len, c] : counts) s = checked_add(s, checked_mul(len, c));
    return s;
}

std::string CycleType::to_string() const {
    if (counts.empty()) return "0";
    std::string s;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        if (!s.empty()) s += "+";
        if (it->second != 1) s += std::to_string(it->second);
        s += "e" + std::to_string(it->first);
    }
    return s;
}

void ZetaFunction::multiply(Int h, Int exponent) {
    if (h <= 0) throw std::invalid_argument("zeta factor needs a positive power of t");
    Int e = checked_add(factors[h], exponent);
    if (e == 0)
        factors.erase(h);
    else
        factors[h] = e;
}

Int ZetaFunction::degree() const {
    Int s = 0;
    for (const auto& [h, e] : factors) s = checked_add(s, checked_mul(h, e));
    return s;
}

std::string ZetaFunction::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [h, e] : factors) {
        s += "(1-t";
        if (h != 1) s += "^" + std::to_string(h);
        s += ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

std::vector<IntVector> union_of(const std::vector<LatticeSet>& bs, const IndexSet& I) {
    std::vector<IntVector> pts;
    for (std::size_t i : I) pts.insert(pts.end(), bs[i].begin(), bs[i].end());
    return pts;
}

std::size_t span_rank(std::size_t m, const std::vector<IntVector>& pts) {
    return generated_lattice(m, pts).rank();
}

}  // namespace

DBData compute_dB(const std::vector<LatticeSet>& bs) {
    if (bs.empty()) throw std::invalid_argument("need at least one set");
    const std::size_t m = bs.size() - 1;
    for (const auto& b : bs) {
        if (b.dim() != m) throw std::invalid_argument("sets must live in Z^m with m + 1 sets");
        if (!b.contains(Point(m, 0))) throw std::invalid_argument("every set must contain 0");
    }
    DBData out;
    if (m == 0) {
        out.d_B = 1;
        out.I_B = IndexSet{0};
        out.L_B = Sublattice{0, {}};
        return out;
    }

    std::vector<IndexSet> degenerate;
    for (IndexSet I : nonempty_subsets(m + 1)) {
        if (span_rank(m, union_of(bs, I)) >= I.size()) continue;
        if (I.front() != 0) return out;  // a degenerate set avoiding B_0
        degenerate.push_back(std::move(I));
    }
    std::vector<IndexSet> minimal;
    for (const auto& I : degenerate) {
        bool has_smaller = false;
        for (const auto& J : degenerate)
            if (J.size() < I.size() && std::includes(I.begin(), I.end(), J.begin(), J.end())) has_smaller = true;
        if (!has_smaller) minimal.push_back(I);
    }
    if (minimal.size() != 1) throw std::logic_error("inclusion-minimal degenerate set is not unique");
    const IndexSet& IB = minimal.front();

    auto gens = union_of(bs, IB);
    Sublattice L = saturation(generated_lattice(m, gens));
    Int index = 1;
    if (L.rank() > 0) index = *lattice_index(gens, L);

    SupportTuple rest;
    for (std::size_t i = 0; i <= m; ++i)
        if (!std::binary_search(IB.begin(), IB.end(), i)) rest.push_back(project_along(bs[i], L));
    Int mv = 1;
    if (!rest.empty()) {
        if (rest.size() != m - L.rank()) throw std::logic_error("quotient dimension does not match the remaining sets");
        mv = mixed_volume(rest);
    }
    out.d_B = checked_mul(index, mv);
    out.I_B = IB;
    out.L_B = L;
    return out;
}

CycleType local_cycle_type(const LocalSetup& s) {
    if (s.supports.empty()) throw std::invalid_argument("need at least one support");
    const std::size_t m = s.supports.size() - 1;
    std::vector<LatticeSet> bs;
    std::vector<Int> orders;
    for (const auto& a : s.supports) {
        if (a.dim() != m + 1) throw std::invalid_argument("supports must live in Z x Z^m");
        if (!a.contains(Point(m + 1, 0))) throw std::invalid_argument("every support must contain 0");
        std::vector<Point> base;
        Int order = std::numeric_limits<Int>::max();
        for (const auto& x : a) {
            if (x[0] < 0) throw std::invalid_argument("degeneration order must be non-negative");
            if (x[0] == 0)
                base.emplace_back(x.begin() + 1, x.end());
            else
                order = std::min(order, x[0]);
        }
        bs.push_back(LatticeSet(m, std::move(base)));
        orders.push_back(order);
    }
    DBData db = compute_dB(bs);
    if (db.d_B == 0) throw std::invalid_argument("no degenerate roots at t = 0");
    Int len = std::numeric_limits<Int>::max();
    for (std::size_t i : *db.I_B) len = std::min(len, orders[i]);
    if (len == std::numeric_limits<Int>::max()) throw std::invalid_argument("supports in I_B do not degenerate");
    CycleType c;
    c.add(len, db.d_B);
    return c;
}

}  // namespace nsolve
