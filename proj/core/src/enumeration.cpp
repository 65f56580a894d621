#include "cremona/enumeration.hpp"

#include <algorithm>

#include "cremona/parallel.hpp"

namespace cremona {

namespace {

// Depth-first search over non-increasing multiplicities. A remainder with
// sum s and square sum q is completable by entries in [1, cap] only if
// s <= q <= cap * s.
class NoetherSearch {
public:
    NoetherSearch(Int degree, std::vector<HomaloidalType>& out) : degree_(degree), out_(out) {}

    void descend(Int cap, Int rem_sum, Int rem_sq) {
        if (rem_sum == 0) {
            if (rem_sq == 0) out_.push_back(HomaloidalType::make(degree_, current_));
            return;
        }
        for (Int m = std::min(cap, rem_sum); m >= 1; --m) {
            const Int sq = checked::square(m);
            if (sq > rem_sq) continue;
            const Int s = rem_sum - m;
            const Int q = rem_sq - sq;
            if (q < s || q > checked::mul(m, s)) continue;
            current_.push_back(m);
            descend(m, s, q);
            current_.pop_back();
        }
    }

    void start_with(Int first, Int rem_sum, Int rem_sq) {
        current_.assign(1, first);
        descend(first, rem_sum, rem_sq);
    }

private:
    Int degree_;
    std::vector<HomaloidalType>& out_;
    std::vector<Int> current_;
};

}  // namespace

std::vector<HomaloidalType> enumerate_noether(Int degree, unsigned threads) {
    if (degree < 1) throw PreconditionError("enumeration needs degree >= 1");
    const Int total = checked::mul(3, degree - 1);
    const Int total_sq = checked::sub(checked::square(degree), 1);
    if (degree == 1) return {HomaloidalType::make(1, {})};

    // One task per value of the largest multiplicity, highest first.
    const Int top = degree - 1;
    const auto branches = detail::ordered_parallel_map<std::vector<HomaloidalType>>(
            static_cast<std::size_t>(top), threads, [&](std::size_t i) {
                const Int first = top - static_cast<Int>(i);
                std::vector<HomaloidalType> found;
                const Int s = total - first;
                const Int q = total_sq - checked::square(first);
                if (q < 0 || s < 0 || q < s || q > checked::mul(first, s)) return found;
                NoetherSearch search(degree, found);
                search.start_with(first, s, q);
                return found;
            });

    std::vector<HomaloidalType> all;
    for (const auto& b : branches) all.insert(all.end(), b.begin(), b.end());
    return all;
}

std::vector<HomaloidalType> enumerate_proper(Int degree, unsigned threads) {
    auto all = enumerate_noether(degree, threads);
    std::erase_if(all, [](const HomaloidalType& t) { return !is_proper(t); });
    return all;
}

HomaloidalType family_de_jonquieres(Int degree) {
    if (degree < 2) throw DomainError("de Jonquieres family needs d >= 2");
    std::vector<Int> m{degree - 1};
    m.insert(m.end(), static_cast<std::size_t>(checked::mul(2, degree - 1)), 1);
    return HomaloidalType::make(degree, std::move(m));
}

HomaloidalType family_sub2(Int degree) {
    if (degree < 4) throw DomainError("(d; d-2, 2^(d-2), 1^3) family needs d >= 4");
    std::vector<Int> m{degree - 2};
    m.insert(m.end(), static_cast<std::size_t>(degree - 2), 2);
    m.insert(m.end(), 3, 1);
    return HomaloidalType::make(degree, std::move(m));
}

ThreeMFamily family_3m(Int m) {
    if (m < 3) throw DomainError("3m families need m >= 3");
    const Int d = checked::mul(3, m);
    auto build = [](Int degree, Int lead, Int sixes, std::initializer_list<Int> tail) {
        std::vector<Int> v{lead};
        v.insert(v.end(), static_cast<std::size_t>(sixes), 6);
        v.insert(v.end(), tail);
        return HomaloidalType::make(degree, std::move(v));
    };
    return ThreeMFamily{
        build(d, d - 6, m - 3, {4, 4, 4, 3, 3, 2, 1}),
        build(d + 1, d - 5, m - 2, {4, 3, 3, 3, 1, 1, 1, 1}),
        build(d + 2, d - 4, m - 2, {4, 4, 3, 3, 2, 2, 1}),
    };
}

}  // namespace cremona
