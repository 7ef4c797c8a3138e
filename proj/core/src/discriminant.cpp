#include "pidisc/discriminant.hpp"

#include <algorithm>
#include <thread>

namespace pidisc {

GramMatrix gram(const PresentedAlgebra& a, const TraceMap& tr) {
    std::size_t L = a.size();
    PolyMatrix m(a.center.field(), a.center.nvars(), L, L);
    for (std::size_t i = 0; i < L; ++i) {
        AlgElement yi = a.basis_element(i);
        for (std::size_t j = 0; j < L; ++j)
            m.at(i, j) = tr.pair(yi, a.basis_element(j));
    }
    return GramMatrix{std::move(m), tr.kind(), tr.label()};
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t{1} << 62)) return r; // saturate, caller only compares to budget
    }
    return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) break;
            if (i == 0) return out;
        }
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

void guard_rational_size(const PresentedAlgebra& a, unsigned level, bool force) {
    if (force) return;
    if (!a.center.field().is_prime_mode() && level > kRationalDetSizeLimit)
        throw budget_error("symbolic determinants of size > " + std::to_string(kRationalDetSizeLimit) +
                           " are refused in rational mode");
}

DiscriminantResult generators_impl(const PresentedAlgebra& a, const GramMatrix& g, unsigned level,
                                   DiscVariant variant, std::uint64_t max_dets, bool force_rational) {
    std::size_t L = g.mat.rows();
    DiscriminantResult out;
    out.level = level;
    out.variant = variant;
    out.trace_label = g.trace_label;
    if (level == 0) throw shape_error("discriminant level must be >= 1");
    if (level > L) {
        out.ideal = IdealGens::make({});
        return out; // zero ideal: no level-subsets of the spanning set exist
    }
    guard_rational_size(a, level, force_rational);
    std::uint64_t nsub = binomial(L, level);
    std::uint64_t count = variant == DiscVariant::md ? nsub * nsub : nsub;
    if (count > max_dets)
        throw budget_error("determinant budget exceeded: " + std::to_string(count) + " > " +
                           std::to_string(max_dets));

    auto subs = subsets(L, level);
    // determinants over subset pairs are independent; evaluate them on a worker
    // pool into indexed slots so the merge is order-deterministic
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    if (variant == DiscVariant::d_restricted) {
        for (std::size_t r = 0; r < subs.size(); ++r) jobs.emplace_back(r, r);
    } else {
        for (std::size_t r = 0; r < subs.size(); ++r)
            for (std::size_t c = 0; c < subs.size(); ++c) jobs.emplace_back(r, c);
    }
    std::vector<MultiPoly> gens(jobs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            gens[i] = a.center.reduce(minor_det(g.mat, subs[jobs[i].first], subs[jobs[i].second]));
    };
    std::size_t nthreads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                                 std::max<std::size_t>(jobs.size() / 64, 1));
    if (nthreads <= 1) {
        work(0, jobs.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            std::size_t begin = t * chunk, end = std::min(jobs.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    out.ideal = IdealGens::make(std::move(gens));
    out.determinants_evaluated = jobs.size();
    return out;
}

} // namespace

DiscriminantResult md_generators(const PresentedAlgebra& a, const GramMatrix& g, unsigned level,
                                 std::uint64_t max_dets, bool force_rational) {
    return generators_impl(a, g, level, DiscVariant::md, max_dets, force_rational);
}

DiscriminantResult md_generators(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                                 std::uint64_t max_dets, bool force_rational) {
    return md_generators(a, gram(a, tr), level, max_dets, force_rational);
}

DiscriminantResult d_generators_restricted(const PresentedAlgebra& a, const GramMatrix& g, unsigned level,
                                           std::uint64_t max_dets, bool force_rational) {
    return generators_impl(a, g, level, DiscVariant::d_restricted, max_dets, force_rational);
}

DiscriminantResult d_generators_restricted(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                                           std::uint64_t max_dets, bool force_rational) {
    return d_generators_restricted(a, gram(a, tr), level, max_dets, force_rational);
}

MultiPoly free_discriminant(const PresentedAlgebra& a, const TraceMap& tr, bool force_rational) {
    if (!a.is_free) throw unsupported_error("free discriminant needs a free presentation");
    guard_rational_size(a, static_cast<unsigned>(a.size()), force_rational);
    return a.center.reduce(bareiss_det(gram(a, tr).mat));
}

unsigned point_gram_rank(const PresentedAlgebra& a, const GramMatrix& g, const std::vector<Scalar>& point) {
    a.center.require_point(point);
    return static_cast<unsigned>(scalar_rank(g.mat.eval(point)));
}

unsigned point_gram_rank(const PresentedAlgebra& a, const TraceMap& tr, const std::vector<Scalar>& point) {
    return point_gram_rank(a, gram(a, tr), point);
}

bool zero_set_membership(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                         const std::vector<Scalar>& point) {
    return point_gram_rank(a, tr, point) < level;
}

} // namespace pidisc
