#include "mdt/errors.hpp"
#include "mdt/kernels.hpp"

#include <atomic>

namespace mdt::kernels {
namespace {

Backend detect() { return avx2_supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& selected() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

bool avx2_supported() {
#if defined(MDT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

#if !defined(MDT_HAVE_AVX2)
const KernelTable& avx2_kernels() {
    throw StateError("AVX2 kernels were not compiled into this build");
}
#endif

const KernelTable& active() {
    return selected().load(std::memory_order_relaxed) == Backend::avx2 ? avx2_kernels()
                                                                       : scalar_kernels();
}

Backend active_backend() { return selected().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_supported()) {
        throw StateError("AVX2 backend requested but not supported by this CPU/build");
    }
    selected().store(backend, std::memory_order_relaxed);
}

void reset_backend() { selected().store(detect(), std::memory_order_relaxed); }

std::string_view backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace mdt::kernels
