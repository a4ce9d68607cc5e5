#include "hgspec/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hgspec::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(HGSPEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* pick_default() {
  const char* env = std::getenv("HGSPEC_KERNELS");
  if (env != nullptr) {
    const std::string want(env);
    if (want == "scalar") return &scalar::kTable;
    if (want == "avx2" && supported(Level::kAvx2)) return &table(Level::kAvx2);
  }
  return supported(Level::kAvx2) ? &table(Level::kAvx2) : &scalar::kTable;
}

std::atomic<const Table*>& active_slot() {
  static std::atomic<const Table*> slot{pick_default()};
  return slot;
}

}  // namespace

std::string_view level_name(Level level) {
  switch (level) {
    case Level::kScalar:
      return "scalar";
    case Level::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool supported(Level level) {
  switch (level) {
    case Level::kScalar:
      return true;
    case Level::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

const Table& table(Level level) {
  if (!supported(level)) {
    throw std::invalid_argument("kernel level not supported: " + std::string(level_name(level)));
  }
#if defined(HGSPEC_HAVE_AVX2)
  if (level == Level::kAvx2) return avx2::kTable;
#endif
  return scalar::kTable;
}

const Table& active() { return *active_slot().load(std::memory_order_acquire); }

void set_active(Level level) { active_slot().store(&table(level), std::memory_order_release); }

}  // namespace hgspec::kernels
