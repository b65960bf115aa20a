#include <algorithm>
#include <map>
#include <stdexcept>

#include "nsolve/permgroup.hpp"

namespace nsolve {

namespace {

std::vector<Permutation> all_generators(const DisjointSystem& d) {
    std::vector<Permutation> gens = d.attractions;
    gens.insert(gens.end(), d.transpositions.begin(), d.transpositions.end());
    return gens;
}

std::string check_hypotheses(const DisjointSystem& d) {
    const std::size_t n = d.degree;
    for (const auto& g : all_generators(d))
        if (g.degree() != n) return "generator degree differs from the system degree";
    if (d.attractions.empty()) return "no attractions";
    std::vector<int> owner(n, -1);
    for (std::size_t j = 0; j < d.attractions.size(); ++j) {
        if (d.attractions[j].is_identity()) return "attraction " + std::to_string(j + 1) + " is trivial";
        for (std::size_t x : d.attractions[j].support()) {
            if (owner[x] >= 0) return "attractions are not disjoint";
            owner[x] = static_cast<int>(j);
        }
    }
    for (const auto& t : d.transpositions) {
        auto c = t.cycles();
        if (c.size() != 1 || c.front().size() != 2) return "listed transposition is not a 2-cycle";
    }
    if (d.attractions.front().support().size() == n) return "fixed point: the first attraction moves every point";
    if (!is_transitive(PermGroup(n, all_generators(d)))) return "transitivity";
    return "";
}

Permutation letter_value(const DisjointSystem& d, const Letter& l) {
    const std::size_t t = d.attractions.size();
    const Permutation& g = l.generator < t ? d.attractions[l.generator] : d.transpositions.at(l.generator - t);
    return g.pow(l.exponent);
}

void push(Word& w, Letter l) {
    if (!w.empty() && w.back().generator == l.generator) {
        w.back().exponent += l.exponent;
        if (w.back().exponent == 0) w.pop_back();
    } else if (l.exponent != 0) {
        w.push_back(l);
    }
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    for (const auto& l : b) push(w, l);
    return w;
}

}  // namespace

DisjointResult disjoint_generators_test(const DisjointSystem& d) {
    DisjointResult r;
    r.failed_hypothesis = check_hypotheses(d);
    if (!r.failed_hypothesis.empty()) return r;
    r.order = PermGroup(d.degree, all_generators(d)).order();
    if (r.order != factorial(d.degree)) throw std::logic_error("disjoint system generates a proper subgroup");
    r.full_symmetric = true;
    return r;
}

std::vector<Carousel> carousels(const DisjointSystem& d) {
    std::vector<Carousel> out;
    std::vector<bool> covered(d.degree, false);
    for (std::size_t j = 0; j < d.attractions.size(); ++j)
        for (auto& c : d.attractions[j].cycles()) {
            for (std::size_t x : c) covered[x] = true;
            out.push_back({std::move(c), j});
        }
    for (std::size_t x = 0; x < d.degree; ++x)
        if (!covered[x]) out.push_back({{x}, std::nullopt});
    return out;
}

Permutation evaluate(const DisjointSystem& d, const Word& w) {
    Permutation p = Permutation::identity(d.degree);
    for (const auto& l : w) p = p * letter_value(d, l);
    return p;
}

Word sorting_word(const DisjointSystem& d, const Permutation& target) {
    std::string failed = check_hypotheses(d);
    if (!failed.empty()) throw std::invalid_argument("hypothesis failed: " + failed);
    const std::size_t n = d.degree;
    const std::size_t t = d.attractions.size();
    if (target.degree() != n) throw std::invalid_argument("target degree differs from the system degree");

    std::vector<Carousel> cs = carousels(d);
    std::vector<std::size_t> home(n);
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t x : cs[c].points) home[x] = c;

    // Spanning tree of the carousel graph, one chosen transposition per tree edge.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(cs.size());  // (neighbour, transposition)
    for (std::size_t i = 0; i < d.transpositions.size(); ++i) {
        auto pts = d.transpositions[i].support();
        std::size_t a = home[pts[0]], b = home[pts[1]];
        if (a == b) continue;
        adj[a].push_back({b, i});
        adj[b].push_back({a, i});
    }
    std::vector<std::optional<std::size_t>> parent(cs.size());
    std::vector<std::size_t> parent_edge(cs.size());
    std::vector<bool> reached(cs.size(), false);
    std::vector<std::size_t> order{0};
    reached[0] = true;
    for (std::size_t q = 0; q < order.size(); ++q)
        for (auto [b, e] : adj[order[q]])
            if (!reached[b]) {
                reached[b] = true;
                parent[b] = order[q];
                parent_edge[b] = e;
                order.push_back(b);
            }
    std::vector<std::vector<std::size_t>> tree(cs.size());
    std::vector<std::size_t> tree_transpositions;
    for (std::size_t c = 0; c < cs.size(); ++c)
        if (parent[c]) {
            tree[c].push_back(*parent[c]);
            tree[*parent[c]].push_back(c);
            tree_transpositions.push_back(parent_edge[c]);
        }

    // Root edge: v1 not moved by the first attraction, v2 moved by it.
    auto owned_by_first = [&](std::size_t c) { return cs[c].owner && *cs[c].owner == 0; };
    std::size_t v1 = cs.size(), v2 = cs.size();
    for (std::size_t c = 0; c < cs.size() && v1 == cs.size(); ++c)
        for (std::size_t b : tree[c])
            if (!owned_by_first(c) && owned_by_first(b)) {
                v1 = c;
                v2 = b;
                break;
            }
    if (v1 == cs.size()) throw std::logic_error("no root edge between fixed and moved carousels");

    // Words for every transposition, by conjugating tree transpositions with the generators of G'.
    std::map<std::pair<std::size_t, std::size_t>, Word> tw;
    std::vector<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t e : tree_transpositions) {
        auto pts = d.transpositions[e].support();
        std::pair<std::size_t, std::size_t> key{pts[0], pts[1]};
        if (tw.emplace(key, Word{{t + e, 1}}).second) queue.push_back(key);
    }
    std::vector<Letter> conj;
    for (std::size_t j = 0; j < t; ++j) {
        conj.push_back({j, 1});
        conj.push_back({j, -1});
    }
    for (std::size_t e : tree_transpositions) conj.push_back({t + e, 1});
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [x, y] = queue[q];
        for (const auto& g : conj) {
            Permutation p = letter_value(d, g);
            std::size_t a = p(x), b = p(y);
            std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
            if (tw.count(key)) continue;
            Word w = concat(concat(Word{g}, tw[{x, y}]), Word{{g.generator, -g.exponent}});
            tw.emplace(key, std::move(w));
            queue.push_back(key);
        }
    }
    if (tw.size() != n * (n - 1) / 2) throw std::logic_error("tree transpositions do not generate all transpositions");

    // Leaf by leaf: place every point of a leaf carousel, then the root edge pair.
    Word b;
    Permutation current = target;  // evaluate(b) * target
    auto place = [&](std::size_t x) {
        std::size_t y = current(x);
        if (y == x) return;
        const Word& w = tw.at({std::min(x, y), std::max(x, y)});
        b = concat(w, b);
        current = evaluate(d, w) * current;
    };
    std::vector<std::size_t> degree_left(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) degree_left[c] = tree[c].size();
    std::vector<bool> done(cs.size(), false);
    for (std::size_t finished = 0; finished + 2 < cs.size(); ++finished) {
        std::size_t leaf = cs.size();
        for (std::size_t c = 0; c < cs.size() && leaf == cs.size(); ++c)
            if (!done[c] && c != v1 && c != v2 && degree_left[c] <= 1) leaf = c;
        if (leaf == cs.size()) throw std::logic_error("tree has no removable leaf");
        for (std::size_t x : cs[leaf].points) place(x);
        done[leaf] = true;
        for (std::size_t c : tree[leaf])
            if (!done[c]) --degree_left[c];
    }
    for (std::size_t x : cs[v1].points) place(x);
    for (std::size_t x : cs[v2].points) place(x);
    if (!(evaluate(d, b) * target).is_identity()) throw std::logic_error("sorting word does not invert the target");
    return b;
}

}  // namespace nsolve
