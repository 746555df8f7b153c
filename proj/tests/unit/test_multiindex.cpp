#include <doctest.h>

#include <set>
#include <stdexcept>

#include "bhlab/errors.hpp"
#include "bhlab/multiindex.hpp"
#include "bhlab/rng.hpp"

using namespace bhlab;

TEST_CASE("full and nondecreasing enumeration sizes and order") {
    IndexSetSpec full{2, 3, IndexSetKind::full};
    auto fs = enumerate(full);
    CHECK(fs.size() == 9);
    CHECK(full.size() == 9);
    CHECK(fs.front() == MultiIndex{1, 1});
    CHECK(fs[1] == MultiIndex{1, 2});
    CHECK(fs.back() == MultiIndex{3, 3});

    IndexSetSpec nd{2, 3, IndexSetKind::nondecreasing};
    auto js = enumerate(nd);
    CHECK(js.size() == 6);
    CHECK(js == std::vector<MultiIndex>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});

    IndexSetSpec nd32{3, 2, IndexSetKind::nondecreasing};
    CHECK(enumerate(nd32).size() == 4);
}

TEST_CASE("offset_of and index_at are inverse bijections") {
    for (auto kind : {IndexSetKind::full, IndexSetKind::nondecreasing}) {
        IndexSetSpec spec{3, 4, kind};
        auto all = enumerate(spec);
        CHECK(all.size() == spec.size());
        for (std::uint64_t off = 0; off < all.size(); ++off) {
            CHECK(spec.offset_of(all[off]) == off);
            CHECK(spec.index_at(off) == all[off]);
            CHECK(spec.contains(all[off]));
        }
    }
    IndexSetSpec spec{2, 2, IndexSetKind::nondecreasing};
    CHECK_FALSE(spec.contains(MultiIndex{2, 1}));
    CHECK_FALSE(spec.contains(MultiIndex{1, 3}));
}

TEST_CASE("advance visits every index exactly once in lexicographic order") {
    IndexSetSpec spec{4, 3, IndexSetKind::nondecreasing};
    MultiIndex idx = first_index(spec);
    std::set<MultiIndex> seen;
    MultiIndex prev;
    do {
        if (!prev.empty()) CHECK(prev < idx);
        seen.insert(idx);
        prev = idx;
    } while (bhlab::advance(spec, idx));
    CHECK(seen.size() == spec.size());
}

TEST_CASE("enumeration cap stops runaway instances") {
    IndexSetSpec spec{8, 10, IndexSetKind::full};
    CHECK_THROWS_AS(enumerate(spec, 1000), instance_too_large);
}

TEST_CASE("class cardinality is the multinomial of value multiplicities") {
    CHECK(class_of({1, 1, 2}).cardinality == 3);
    CHECK(class_of({2, 1}).cardinality == 2);
    CHECK(class_of({1, 1}).cardinality == 1);
    CHECK(class_of({3, 1, 2}).representative == MultiIndex{1, 2, 3});
    CHECK(class_of({3, 1, 2}).cardinality == 6);

    // Cardinalities over J(m, n) add up to the size of M(m, n).
    IndexSetSpec nd{3, 3, IndexSetKind::nondecreasing};
    std::uint64_t total = 0;
    for (const auto& j : enumerate(nd)) total += class_of(j).cardinality;
    CHECK(total == IndexSetSpec{3, 3, IndexSetKind::full}.size());
}

TEST_CASE("compose splices subset and complement coordinates") {
    CoordinateSubset S(3, {1, 3});
    CHECK(S.complement().members == std::vector<int>{2});
    CHECK(compose(S, {4, 5}, {9}) == MultiIndex{4, 9, 5});
    CHECK_THROWS_AS(compose(S, {4}, {9}), error);
    CHECK_THROWS_AS(CoordinateSubset(2, {1, 5}), malformed_subset);
    CHECK_THROWS_AS(CoordinateSubset(2, {1, 1}), malformed_subset);
}

TEST_CASE("coordinate extent is the widest per-position value range") {
    CHECK(coordinate_extent({}) == 0);
    CHECK(coordinate_extent({{1, 2}, {1, 3}}) == 2);
    CHECK(coordinate_extent({{1, 1}, {2, 1}, {3, 1}, {3, 2}}) == 3);
}

TEST_CASE("coordinate subsets come in bitmask order") {
    auto subs = coordinate_subsets(4, 2);
    CHECK(subs.size() == 6);
    CHECK(subs.front().members == std::vector<int>{1, 2});
    CHECK(subs[1].members == std::vector<int>{1, 3});
    CHECK(subs[2].members == std::vector<int>{2, 3});
    CHECK(subs.back().members == std::vector<int>{3, 4});
}

TEST_CASE("seed streams are deterministic and independent") {
    SeedStream a = SeedStream::derive(42, 7);
    SeedStream b = SeedStream::derive(42, 7);
    SeedStream c = SeedStream::derive(42, 8);
    bool all_equal = true;
    bool any_differs = false;
    for (int i = 0; i < 64; ++i) {
        auto va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        any_differs = any_differs || (va != c.next_u64());
    }
    CHECK(all_equal);
    CHECK(any_differs);

    SeedStream u = SeedStream::derive(3, 1);
    for (int i = 0; i < 1000; ++i) {
        double v = u.next_unit();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        CHECK(u.next_below(17) < 17);
        int sign = u.next_sign();
        CHECK((sign == 1 || sign == -1));
    }
}
