#include "dcov/sampling.hpp"

#include <numeric>
#include <stdexcept>

namespace dcov {

PointSet PointSet::project(std::uint32_t mask) const {
    if (mask == 0) throw std::domain_error("project: empty coordinate subset");
    int pd = 0;
    for (int j = 0; j < d; ++j)
        if (mask & (1u << j)) ++pd;
    PointSet out(pd, n());
    for (std::size_t i = 0; i < n(); ++i) {
        int c = 0;
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) out.at(i, c++) = at(i, j);
    }
    return out;
}

namespace {
void require_spec(const SamplerSpec& spec) {
    if (spec.d < 1 || spec.n < 1)
        throw std::domain_error("SamplerSpec: need d >= 1 and n >= 1");
}
}  // namespace

PointSet mc_sample(const SamplerSpec& spec, std::uint64_t stream) {
    require_spec(spec);
    Rng rng(spec.seed, stream);
    PointSet p(spec.d, spec.n);
    for (double& v : p.x) v = rng.u01();
    return p;
}

PointSet lhs_sample(const SamplerSpec& spec, std::uint64_t stream) {
    require_spec(spec);
    Rng rng(spec.seed, stream);
    const std::size_t n = spec.n;
    PointSet p(spec.d, n);
    std::vector<std::uint32_t> perm(n);
    for (int j = 0; j < spec.d; ++j) {
        std::iota(perm.begin(), perm.end(), 0u);
        for (std::size_t i = n - 1; i > 0; --i) {
            std::size_t k = static_cast<std::size_t>(rng.below(i + 1));
            std::swap(perm[i], perm[k]);
        }
        for (std::size_t i = 0; i < n; ++i)
            p.at(i, j) = (static_cast<double>(perm[i]) + rng.u01()) / static_cast<double>(n);
    }
    return p;
}

PointSet draw_sample(const SamplerSpec& spec, std::uint64_t stream) {
    return spec.kind == SamplerKind::MC ? mc_sample(spec, stream) : lhs_sample(spec, stream);
}

PointSet shuffle_exchangeable(const PointSet& p, std::uint64_t seed) {
    Rng rng(seed, 0);
    const std::size_t n = p.n();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::size_t k = static_cast<std::size_t>(rng.below(i));
        std::swap(order[i - 1], order[k]);
    }
    PointSet out(p.d, n);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < p.d; ++j) out.at(i, j) = p.at(order[i], j);
    return out;
}

}  // namespace dcov
