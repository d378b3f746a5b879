#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

// Negative-sampling objective for one (center, outputs) group:
//   L = softplus(-u_0 . v) + sum_{k>=1} softplus(u_k . v)
// where v is the center's input vector, u_0 the positive context's output
// vector and u_1.. the noise words' output vectors.

namespace histbias::embed::kernel {

template <class T>
inline T dot(const T* a, const T* b, std::size_t n) {
    T acc[8] = {};
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        for (std::size_t k = 0; k < 8; ++k) acc[k] += a[i + k] * b[i + k];
    T s = ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7]));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

template <class T>
inline void axpy(T alpha, const T* x, T* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

/// sigma(x) and softplus(-x) = -log sigma(x), sharing one exp.
template <class T>
inline void logistic(T x, T& sigma, T& neg_log_sigma) {
    const T e = std::exp(-std::abs(x));
    const T l = std::log1p(e);
    if (x >= 0) {
        sigma = T(1) / (T(1) + e);
        neg_log_sigma = l;
    } else {
        sigma = e / (T(1) + e);
        neg_log_sigma = -x + l;
    }
}

template <class T>
inline T sgns_loss(const T* center, const T* const* outputs, std::size_t n_outputs, std::size_t dim) {
    T loss = 0;
    for (std::size_t k = 0; k < n_outputs; ++k) {
        const T x = dot(center, outputs[k], dim);
        T sigma, nls;
        // softplus(x) = -log sigma(-x)
        logistic(k == 0 ? x : -x, sigma, nls);
        loss += nls;
    }
    return loss;
}

/// One gradient step of size `lr` on the group's loss. Output rows move
/// using the pre-step center; the center moves by the gradient accumulated
/// against pre-step output rows. `scratch` holds `dim` elements.
/// Returns the pre-step loss. With lr = 1 the parameter deltas equal the
/// negated analytic gradient.
template <class T>
inline T sgns_step(T* center, T* const* outputs, std::size_t n_outputs, std::size_t dim, T lr, T* scratch) {
    std::fill(scratch, scratch + dim, T(0));
    T loss = 0;
    for (std::size_t k = 0; k < n_outputs; ++k) {
        T* u = outputs[k];
        const T x = dot(center, u, dim);
        const T label = k == 0 ? T(1) : T(0);
        T sigma, nls;
        logistic(x, sigma, nls);
        // dL/dx = sigma(x) - label
        const T g = sigma - label;
        loss += k == 0 ? nls : nls + x;  // softplus(x) = x + softplus(-x)
        axpy(g, u, scratch, dim);
        axpy(-lr * g, center, u, dim);
    }
    axpy(-lr, scratch, center, dim);
    return loss;
}

}  // namespace histbias::embed::kernel
