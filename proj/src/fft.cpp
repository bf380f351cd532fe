#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <vector>

namespace qlct::detail {

namespace {

// One cached plan per (n, sign) with its own aligned buffer. Plan creation and
// the cache are guarded by a mutex; execution copies through the plan buffer
// under the same lock (row lengths are small, contention is not a concern here).
struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;

    ~PlanEntry() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

std::mutex g_mutex;
std::map<std::pair<int, int>, PlanEntry> g_plans;

PlanEntry& plan_for(int n, int sign) {
    auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    PlanEntry& e = g_plans[key];
    e.n = n;
    e.buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    e.plan = fftw_plan_dft_1d(n, e.buf, e.buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    return e;
}

}  // namespace

void dft_rows(std::complex<double>* data, int n, int count, int sign) {
    std::lock_guard<std::mutex> lock(g_mutex);
    PlanEntry& e = plan_for(n, sign);
    for (int r = 0; r < count; ++r) {
        std::memcpy(e.buf, data + static_cast<std::size_t>(r) * n, sizeof(fftw_complex) * n);
        fftw_execute(e.plan);
        std::memcpy(data + static_cast<std::size_t>(r) * n, e.buf, sizeof(fftw_complex) * n);
    }
}

}  // namespace qlct::detail
