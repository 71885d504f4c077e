#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "qchan/errors.hpp"
#include "qchan/kernels.hpp"

namespace qchan::kernels {
namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
  if (const char* env = std::getenv("QCHAN_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    if (std::strcmp(env, "avx2") == 0) {
      if (const Kernels* k = avx2_kernels()) return k;
      // requested vector kernels are unavailable; fall through to autodetect
    }
  }
  if (const Kernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void set_active(const char* name) {
  if (!name) {
    g_active.store(pick_default(), std::memory_order_release);
    return;
  }
  if (std::strcmp(name, "scalar") == 0) {
    g_active.store(&scalar_kernels(), std::memory_order_release);
    return;
  }
  if (std::strcmp(name, "avx2") == 0) {
    if (const Kernels* k = avx2_kernels()) {
      g_active.store(k, std::memory_order_release);
      return;
    }
    throw Error("avx2 kernels unavailable on this machine");
  }
  throw Error(std::string("unknown kernel table: ") + name);
}

}  // namespace qchan::kernels
