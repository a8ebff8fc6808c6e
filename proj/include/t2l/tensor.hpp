#pragma once

// Minimal named tensor (values + gradients, double precision) and the
// matmul kernels the transformer needs. Row-major throughout.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "t2l/common.hpp"

namespace t2l {

struct Tensor {
    std::string name;
    std::vector<size_t> shape;
    std::vector<double> v;
    std::vector<double> g;

    Tensor() = default;
    Tensor(std::string n, std::vector<size_t> s) : name(std::move(n)), shape(std::move(s)) {
        size_t total = 1;
        for (size_t d : shape) total *= d;
        v.assign(total, 0.0);
        g.assign(total, 0.0);
    }

    size_t size() const { return v.size(); }
    void zero_grad() { std::fill(g.begin(), g.end(), 0.0); }

    void init_normal(Rng& rng, double stddev) {
        for (double& x : v) {
            x = rng.normal(0.0, stddev);
        }
    }

    void fill(double value) { std::fill(v.begin(), v.end(), value); }
};

// C [m,n] += A [m,k] * B [k,n]
inline void mm_nn(double* c, const double* a, const double* b, size_t m, size_t k, size_t n) {
    for (size_t i = 0; i < m; ++i) {
        const double* ai = a + i * k;
        double* ci = c + i * n;
        for (size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            if (aip == 0.0) continue;
            const double* bp = b + p * n;
            for (size_t j = 0; j < n; ++j) {
                ci[j] += aip * bp[j];
            }
        }
    }
}

// C [m,n] += A [m,k] * B^T where B is [n,k]
inline void mm_nt(double* c, const double* a, const double* b, size_t m, size_t k, size_t n) {
    for (size_t i = 0; i < m; ++i) {
        const double* ai = a + i * k;
        double* ci = c + i * n;
        for (size_t j = 0; j < n; ++j) {
            const double* bj = b + j * k;
            double acc = 0.0;
            for (size_t p = 0; p < k; ++p) {
                acc += ai[p] * bj[p];
            }
            ci[j] += acc;
        }
    }
}

// C [k,n] += A^T * B where A is [m,k], B is [m,n]
inline void mm_tn(double* c, const double* a, const double* b, size_t m, size_t k, size_t n) {
    for (size_t p = 0; p < m; ++p) {
        const double* ap = a + p * k;
        const double* bp = b + p * n;
        for (size_t i = 0; i < k; ++i) {
            const double api = ap[i];
            if (api == 0.0) continue;
            double* ci = c + i * n;
            for (size_t j = 0; j < n; ++j) {
                ci[j] += api * bp[j];
            }
        }
    }
}

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace t2l
