#pragma once

// Block-parallel scan over the coefficient space of a FormSpace with an
// incrementally maintained matrix. Blocks fix a short digit prefix and run a
// digit odometer over the rest; per-block states are merged in block order,
// so results are independent of the worker count.

#include <atomic>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "formrank/formspace.hpp"

namespace formrank::detail {

using gf::Elt;

struct ScanBlock {
    std::vector<Elt> fixed;  // digits [0, fixed.size()); odometer runs beyond
};

struct ScanPlan {
    std::vector<ScanBlock> blocks;
    std::uint64_t total = 0;  // number of visits across all blocks
};

inline std::uint64_t pow_sat(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        if (r > UINT64_MAX / b) return UINT64_MAX;
        r *= b;
    }
    return r;
}

inline void append_prefixes(std::vector<ScanBlock>& blocks, std::vector<Elt> base,
                            std::uint64_t q, unsigned split) {
    if (split == 0) {
        blocks.push_back({std::move(base)});
        return;
    }
    std::vector<Elt> digits(split, 0);
    while (true) {
        ScanBlock b{base};
        b.fixed.insert(b.fixed.end(), digits.begin(), digits.end());
        blocks.push_back(std::move(b));
        unsigned t = 0;
        while (t < split && digits[t] + 1 == q) digits[t++] = 0;
        if (t == split) break;
        ++digits[t];
    }
}

inline ScanPlan make_scan_plan(std::uint64_t q, unsigned d, bool projective) {
    ScanPlan plan;
    if (!projective) {
        unsigned split = d < 2 ? d : 2;
        append_prefixes(plan.blocks, {}, q, split);
        plan.total = pow_sat(q, d);
        return plan;
    }
    for (unsigned pivot = 0; pivot < d; ++pivot) {
        std::vector<Elt> base(pivot, 0);
        base.push_back(1);
        unsigned free = d - pivot - 1;
        unsigned split = free < 2 ? free : 2;
        append_prefixes(plan.blocks, std::move(base), q, split);
        std::uint64_t cnt = pow_sat(q, free);
        plan.total = plan.total > UINT64_MAX - cnt ? UINT64_MAX : plan.total + cnt;
    }
    return plan;
}

/// Runs visit(state, coeffs, mat) for every coefficient vector of the plan.
/// State must be default-constructible; merge(acc, block_state) folds block
/// results in deterministic block order.
template <class State, class Visit, class Merge>
State scan_formspace(const formspace::FormSpace& M, const ScanPlan& plan, unsigned threads,
                     Visit visit, Merge merge) {
    const gf::Field& F = M.field();
    const gf::FieldOps ops = F.ops();
    const unsigned d = M.dim(), n = M.n(), n2 = n * n;
    const std::uint64_t q = F.order();

    // flat copies of the basis matrices plus digit-step deltas
    std::vector<std::vector<Elt>> basis(d);
    for (unsigned i = 0; i < d; ++i)
        basis[i].assign(M.basis()[i].flat().begin(), M.basis()[i].flat().end());
    std::vector<Elt> delta(q ? q : 1, 0);
    for (std::uint64_t v = 0; v + 1 < q; ++v)
        delta[v] = F.sub(static_cast<Elt>(v + 1), static_cast<Elt>(v));
    const Elt wrap = F.sub(0, static_cast<Elt>(q - 1));

    auto axpy = [&](std::vector<Elt>& mat, const std::vector<Elt>& b, Elt c) {
        for (unsigned i = 0; i < n2; ++i) mat[i] = ops.add(mat[i], ops.mul(c, b[i]));
    };

    auto run_block = [&](const ScanBlock& blk, State& st) {
        std::vector<Elt> coeffs(blk.fixed);
        coeffs.resize(d, 0);
        const unsigned start = static_cast<unsigned>(blk.fixed.size());
        std::vector<Elt> mat(n2, 0);
        for (unsigned i = 0; i < start; ++i)
            if (coeffs[i]) axpy(mat, basis[i], coeffs[i]);
        visit(st, std::span<const Elt>(coeffs), std::span<const Elt>(mat));
        while (true) {
            unsigned t = start;
            while (t < d && coeffs[t] + 1 == q) {
                axpy(mat, basis[t], wrap);
                coeffs[t] = 0;
                ++t;
            }
            if (t >= d) break;
            axpy(mat, basis[t], delta[coeffs[t]]);
            ++coeffs[t];
            visit(st, std::span<const Elt>(coeffs), std::span<const Elt>(mat));
        }
    };

    const std::size_t nblocks = plan.blocks.size();
    std::vector<State> results(nblocks);
    if (threads <= 1 || nblocks <= 1) {
        for (std::size_t i = 0; i < nblocks; ++i) run_block(plan.blocks[i], results[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= nblocks) return;
                run_block(plan.blocks[i], results[i]);
            }
        };
        std::vector<std::thread> pool;
        unsigned nt = std::min<std::size_t>(threads, nblocks);
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    State acc;
    for (std::size_t i = 0; i < nblocks; ++i) merge(acc, std::move(results[i]));
    return acc;
}

/// Rank of an n x n matrix given as a flat span, with the GF(2) word-packed
/// elimination fast path.
struct RankScratch {
    std::vector<Elt> generic;
    std::vector<std::uint64_t> packed;
};

inline unsigned rank_flat(const gf::FieldOps& ops, std::span<const Elt> mat, unsigned n,
                          RankScratch& scratch) {
    if (ops.q == 2 && n <= 64) {
        scratch.packed.assign(n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (mat[i * n + j]) scratch.packed[i] |= 1ull << j;
        return linalg::rank_destructive_gf2(scratch.packed.data(), n);
    }
    scratch.generic.assign(mat.begin(), mat.end());
    return linalg::rank_destructive(ops, scratch.generic.data(), n, n);
}

}  // namespace formrank::detail
