#ifndef BERGMAN_SUMMATION_HPP
#define BERGMAN_SUMMATION_HPP

#include <cmath>
#include <exception>
#include <complex>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman {

using Complex = std::complex<double>;

// Neumaier compensated accumulator. Every reduction in the library goes
// through this in a fixed index order, so results do not depend on the
// thread schedule.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumC {
public:
    void add(const Complex& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

// Evaluates term(i) for i in [0,n) -- in parallel when OpenMP is enabled --
// and reduces the buffered values serially in index order. Bitwise identical
// to map_sum_serial for any thread count. Exceptions from term() cannot
// cross the parallel region, so the first one is captured and rethrown.
template <class Value, class Term>
std::vector<Value> map_buffer(std::size_t n, Term&& term) {
    std::vector<Value> buf(n);
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            buf[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(bergman_map_buffer_err)
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return buf;
}

// Chunked so memory stays bounded on large node sets; the chunk layout is
// fixed, so the reduction order (and the result) never depends on threading.
inline constexpr std::size_t kMapChunk = 1u << 16;

template <class Term>
double map_sum(std::size_t n, Term&& term) {
    KahanSum acc;
    std::vector<double> buf;
    for (std::size_t lo = 0; lo < n; lo += kMapChunk) {
        const std::size_t len = std::min(kMapChunk, n - lo);
        buf = map_buffer<double>(len, [&](std::size_t i) { return term(lo + i); });
        for (std::size_t i = 0; i < len; ++i) acc.add(buf[i]);
    }
    return acc.value();
}

template <class Term>
Complex map_sum_complex(std::size_t n, Term&& term) {
    KahanSumC acc;
    std::vector<Complex> buf;
    for (std::size_t lo = 0; lo < n; lo += kMapChunk) {
        const std::size_t len = std::min(kMapChunk, n - lo);
        buf = map_buffer<Complex>(len, [&](std::size_t i) { return term(lo + i); });
        for (std::size_t i = 0; i < len; ++i) acc.add(buf[i]);
    }
    return acc.value();
}

// Serial reference implementations, kept for testing and benchmarking
// against the parallel path above.
template <class Term>
double map_sum_serial(std::size_t n, Term&& term) {
    KahanSum acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
    return acc.value();
}

template <class Term>
Complex map_sum_complex_serial(std::size_t n, Term&& term) {
    KahanSumC acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
    return acc.value();
}

} // namespace bergman

#endif
