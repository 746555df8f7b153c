#pragma once

#include <cstdint>
#include <vector>

namespace bhlab {

// A multi-index i = (i_1, ..., i_m) with entries in 1..n.
using MultiIndex = std::vector<int>;

enum class IndexSetKind {
    full,           // all n^m tuples
    nondecreasing,  // i_1 <= i_2 <= ... <= i_m, C(n+m-1, m) tuples
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// The family of multi-indices of arity m over 1..n, enumerated and
// addressed in lexicographic order.
struct IndexSetSpec {
    int m = 0;
    int n = 0;
    IndexSetKind kind = IndexSetKind::full;

    std::uint64_t size() const;

    // Rank of idx in lexicographic order (0-based).
    std::uint64_t offset_of(const MultiIndex& idx) const;

    // Inverse of offset_of.
    MultiIndex index_at(std::uint64_t offset) const;

    bool contains(const MultiIndex& idx) const;

    bool operator==(const IndexSetSpec&) const = default;
};

// Lexicographic enumeration; throws instance_too_large beyond cap.
std::vector<MultiIndex> enumerate(const IndexSetSpec& spec,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// In-place lexicographic successor; returns false after the last index.
bool advance(const IndexSetSpec& spec, MultiIndex& idx);

MultiIndex first_index(const IndexSetSpec& spec);

// Equivalence class of i under coordinate permutations.
struct IndexClass {
    MultiIndex representative;    // nondecreasing sort of i
    std::uint64_t cardinality;    // m! / prod over values of multiplicity!
};

IndexClass class_of(const MultiIndex& idx);

// A subset S of the coordinate positions {1, ..., m}.
struct CoordinateSubset {
    int m = 0;
    std::vector<int> members;  // sorted, unique, values in 1..m

    CoordinateSubset() = default;
    CoordinateSubset(int m_, std::vector<int> members_);

    int size() const { return static_cast<int>(members.size()); }
    CoordinateSubset complement() const;
    bool contains(int position) const;
};

// i lives on S, j on the complement of S; result has arity m.
MultiIndex compose(const CoordinateSubset& S, const MultiIndex& i,
                   const MultiIndex& j);

// E(S) = max over coordinates k of the number of distinct values i_k,
// i ranging over the given set. Empty input -> 0.
int coordinate_extent(const std::vector<MultiIndex>& indices);

// All k-element subsets of {1..m}, in increasing order of the subset
// bitmask (bit p-1 set iff position p is a member).
std::vector<CoordinateSubset> coordinate_subsets(int m, int k);

}  // namespace bhlab
