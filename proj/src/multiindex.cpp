#include "bhlab/multiindex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "bhlab/errors.hpp"
#include "bhlab/numeric.hpp"

namespace bhlab {

namespace {

void check_spec(const IndexSetSpec& spec) {
    if (spec.m < 1 || spec.n < 1) throw bad_params("index set needs m >= 1 and n >= 1");
}

std::uint64_t pow_checked(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base + 1) throw instance_too_large("n^m exceeds enumeration cap");
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t IndexSetSpec::size() const {
    check_spec(*this);
    if (kind == IndexSetKind::full) {
        std::uint64_t r = 1;
        for (int i = 0; i < m; ++i) {
            if (r > UINT64_MAX / static_cast<std::uint64_t>(n))
                throw instance_too_large("n^m overflows 64 bits");
            r *= static_cast<std::uint64_t>(n);
        }
        return r;
    }
    return binomial_u64(static_cast<unsigned>(n + m - 1), static_cast<unsigned>(m));
}

bool IndexSetSpec::contains(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != m) return false;
    for (int v : idx)
        if (v < 1 || v > n) return false;
    if (kind == IndexSetKind::nondecreasing)
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (idx[k - 1] > idx[k]) return false;
    return true;
}

std::uint64_t IndexSetSpec::offset_of(const MultiIndex& idx) const {
    check_spec(*this);
    if (!contains(idx)) throw bad_params("index not a member of the index set");
    if (kind == IndexSetKind::full) {
        std::uint64_t off = 0;
        for (int v : idx) off = off * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v - 1);
        return off;
    }
    // Count nondecreasing tuples lexicographically smaller than idx:
    // tuples agreeing on the first k entries and smaller at position k+1.
    std::uint64_t rank = 0;
    int prev = 1;
    for (int k = 0; k < m; ++k) {
        int rest = m - k - 1;
        for (int v = prev; v < idx[static_cast<std::size_t>(k)]; ++v)
            rank += binomial_u64(static_cast<unsigned>((n - v) + rest), static_cast<unsigned>(rest));
        prev = idx[static_cast<std::size_t>(k)];
    }
    return rank;
}

MultiIndex IndexSetSpec::index_at(std::uint64_t offset) const {
    check_spec(*this);
    if (offset >= size()) throw bad_params("offset out of range");
    MultiIndex idx(static_cast<std::size_t>(m));
    if (kind == IndexSetKind::full) {
        for (int k = m - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(offset % static_cast<std::uint64_t>(n)) + 1;
            offset /= static_cast<std::uint64_t>(n);
        }
        return idx;
    }
    int prev = 1;
    for (int k = 0; k < m; ++k) {
        int rest = m - k - 1;
        for (int v = prev; v <= n; ++v) {
            std::uint64_t block = binomial_u64(static_cast<unsigned>((n - v) + rest), static_cast<unsigned>(rest));
            if (offset < block) {
                idx[static_cast<std::size_t>(k)] = v;
                prev = v;
                break;
            }
            offset -= block;
        }
    }
    return idx;
}

MultiIndex first_index(const IndexSetSpec& spec) {
    check_spec(spec);
    return MultiIndex(static_cast<std::size_t>(spec.m), 1);
}

bool advance(const IndexSetSpec& spec, MultiIndex& idx) {
    if (spec.kind == IndexSetKind::full) {
        for (int k = spec.m - 1; k >= 0; --k) {
            auto& v = idx[static_cast<std::size_t>(k)];
            if (v < spec.n) {
                ++v;
                std::fill(idx.begin() + k + 1, idx.end(), 1);
                return true;
            }
        }
        return false;
    }
    for (int k = spec.m - 1; k >= 0; --k) {
        auto& v = idx[static_cast<std::size_t>(k)];
        if (v < spec.n) {
            ++v;
            std::fill(idx.begin() + k + 1, idx.end(), v);
            return true;
        }
    }
    return false;
}

std::vector<MultiIndex> enumerate(const IndexSetSpec& spec, std::uint64_t cap) {
    check_spec(spec);
    std::uint64_t count = spec.kind == IndexSetKind::full
                              ? pow_checked(static_cast<std::uint64_t>(spec.n), spec.m, cap)
                              : spec.size();
    if (count > cap) throw instance_too_large("index set larger than enumeration cap");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(count));
    MultiIndex idx = first_index(spec);
    do {
        out.push_back(idx);
    } while (bhlab::advance(spec, idx));
    return out;
}

IndexClass class_of(const MultiIndex& idx) {
    if (idx.empty()) throw empty_input("class_of: empty multi-index");
    IndexClass cls;
    cls.representative = idx;
    std::sort(cls.representative.begin(), cls.representative.end());
    std::uint64_t card = factorial_u64(static_cast<unsigned>(idx.size()));
    std::size_t run = 1;
    for (std::size_t k = 1; k <= cls.representative.size(); ++k) {
        if (k < cls.representative.size() && cls.representative[k] == cls.representative[k - 1]) {
            ++run;
        } else {
            card /= factorial_u64(static_cast<unsigned>(run));
            run = 1;
        }
    }
    cls.cardinality = card;
    return cls;
}

CoordinateSubset::CoordinateSubset(int m_, std::vector<int> members_)
    : m(m_), members(std::move(members_)) {
    if (m < 1) throw malformed_subset("subset needs m >= 1");
    std::set<int> seen;
    for (int p : members) {
        if (p < 1 || p > m) throw malformed_subset("subset member outside 1..m");
        if (!seen.insert(p).second) throw malformed_subset("duplicate subset member");
    }
    std::sort(members.begin(), members.end());
}

CoordinateSubset CoordinateSubset::complement() const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(m) - members.size());
    for (int p = 1; p <= m; ++p)
        if (!contains(p)) rest.push_back(p);
    return CoordinateSubset(m, std::move(rest));
}

bool CoordinateSubset::contains(int position) const {
    return std::binary_search(members.begin(), members.end(), position);
}

MultiIndex compose(const CoordinateSubset& S, const MultiIndex& i, const MultiIndex& j) {
    if (static_cast<int>(i.size()) != S.size())
        throw bad_params("compose: arity of i does not match |S|");
    if (static_cast<int>(j.size()) != S.m - S.size())
        throw bad_params("compose: arity of j does not match |S^c|");
    MultiIndex out(static_cast<std::size_t>(S.m));
    std::size_t ii = 0, jj = 0;
    for (int p = 1; p <= S.m; ++p)
        out[static_cast<std::size_t>(p - 1)] = S.contains(p) ? i[ii++] : j[jj++];
    return out;
}

int coordinate_extent(const std::vector<MultiIndex>& indices) {
    if (indices.empty()) return 0;
    std::size_t m = indices.front().size();
    for (const auto& idx : indices)
        if (idx.size() != m) throw bad_params("coordinate_extent: mixed arities");
    int best = 0;
    for (std::size_t k = 0; k < m; ++k) {
        std::set<int> values;
        for (const auto& idx : indices) values.insert(idx[k]);
        best = std::max(best, static_cast<int>(values.size()));
    }
    return best;
}

std::vector<CoordinateSubset> coordinate_subsets(int m, int k) {
    if (m < 1 || k < 0 || k > m) throw bad_params("coordinate_subsets: need 0 <= k <= m");
    std::vector<CoordinateSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> members;
        for (int p = 1; p <= m; ++p)
            if (mask & (1u << (p - 1))) members.push_back(p);
        out.emplace_back(m, std::move(members));
    }
    return out;
}

}  // namespace bhlab
