#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsolve/monodromy.hpp"

namespace nsolve {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection of {0..n-1}; printed and parsed 1-based in cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);
    /// "(1 2 3)(5 6)"; degree defaults to the largest point mentioned.
    static Permutation parse(const std::string& s, std::size_t degree = 0);
    static Permutation cycle(std::size_t n, const std::vector<std::size_t>& points);  // 0-based points

    std::size_t degree() const { return images_.size(); }
    std::size_t operator()(std::size_t x) const { return images_[x]; }
    const std::vector<std::size_t>& images() const { return images_; }
    bool is_identity() const;
    Permutation inverse() const;
    Permutation pow(Int e) const;
    /// Support of the permutation (moved points).
    std::vector<std::size_t> support() const;
    std::vector<std::vector<std::size_t>> cycles() const;  // non-trivial cycles, 0-based
    std::string to_string() const;

    /// Composition: (p * q)(x) = p(q(x)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

CycleType cycle_type_of(const Permutation& p);

/// Permutation group with a base and strong generating set.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<std::size_t>& base() const { return base_; }
    BigInt order() const;
    bool contains(const Permutation& g) const;
    std::vector<std::size_t> orbit(std::size_t x) const;

private:
    struct Level {
        std::size_t point;
        std::vector<std::optional<Permutation>> transversal;  // u with u(point) = x
    };
    Permutation sift(Permutation g, std::size_t from, std::size_t& stopped) const;
    void rebuild_level(std::size_t i);
    bool fixes_prefix(const Permutation& g, std::size_t i) const;

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> strong_;
    std::vector<std::size_t> base_;
    std::vector<Level> levels_;
};

BigInt factorial(std::size_t n);
BigInt group_order(const PermGroup& g);
bool is_transitive(const PermGroup& g);

struct Primitivity {
    bool primitive = false;
    std::string reason;  // empty when primitive
    std::vector<std::vector<std::size_t>> blocks;  // a non-trivial block system when imprimitive
};
Primitivity primitivity(const PermGroup& g);
bool is_primitive(const PermGroup& g);

/// Derived series terminates at the identity.
bool is_solvable(const PermGroup& g);

enum class JordanVerdict { ForcedAnOrSn, Inapplicable };
struct JordanResult {
    JordanVerdict verdict = JordanVerdict::Inapplicable;
    std::optional<Permutation> witness;  // element with one cycle of length 2..n-3
    std::string reason;
};
JordanResult jordan_test(const PermGroup& g, int max_word_length = 4);

struct DisjointSystem {
    std::size_t degree = 0;
    std::vector<Permutation> attractions;
    std::vector<Permutation> transpositions;
};

struct DisjointResult {
    bool full_symmetric = false;
    std::string failed_hypothesis;  // empty when full_symmetric
    BigInt order = 0;
};
DisjointResult disjoint_generators_test(const DisjointSystem& d);

struct Carousel {
    std::vector<std::size_t> points;
    std::optional<std::size_t> owner;  // attraction index; none for a virtual carousel
};
std::vector<Carousel> carousels(const DisjointSystem& d);

/// Generator index (attractions first, then transpositions) with an exponent.
struct Letter {
    std::size_t generator;
    Int exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Product of the letters, leftmost applied last.
Permutation evaluate(const DisjointSystem& d, const Word& w);

/// Word b with b * target = identity, built carousel by carousel along a spanning tree.
Word sorting_word(const DisjointSystem& d, const Permutation& target);

}  // namespace nsolve
