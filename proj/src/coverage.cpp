#include "nsymkit/coverage.hpp"

#include <array>
#include <atomic>
#include <cstdint>

namespace nsymkit::coverage {

static_assert(static_cast<unsigned>(Op::kCount) <= 64);

namespace {
std::atomic<std::uint64_t> g_seen{0};

constexpr std::array<std::string_view, static_cast<unsigned>(Op::kCount)> kNames = {
    "enumerate_compositions", "set_of", "set_inverse", "involution", "refines",
    "mobius", "sort_and_z", "stat", "refined_stat", "binomial_partial_sum",
    "realize_nc", "nc_mul", "nc_linear", "is_nsym", "chi", "realize_c", "sym_expand",
    "convert", "mul", "apply_involution", "ribbon_decomposition", "verify_series",
    "qconvert", "qinvolution", "pair",
    "cob_matrix", "named_matrix", "check_identities",
    "make_wall", "enumerate_walls", "wall_stat", "indexed_wall_count",
    "enumerate_indexed_walls", "brick_tabloids", "weight", "ordered_count",
    "verify_wall_theorems", "verify_brick_theorems",
};
}  // namespace

void touch(Op op) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << static_cast<unsigned>(op);
  if (!(g_seen.load(std::memory_order_relaxed) & bit)) g_seen.fetch_or(bit, std::memory_order_relaxed);
}

void reset() noexcept { g_seen.store(0); }

bool touched(Op op) noexcept { return g_seen.load() & (std::uint64_t{1} << static_cast<unsigned>(op)); }

std::string_view name(Op op) { return kNames[static_cast<unsigned>(op)]; }

std::vector<Op> untouched() {
  std::vector<Op> out;
  for (unsigned i = 0; i < static_cast<unsigned>(Op::kCount); ++i)
    if (!touched(static_cast<Op>(i))) out.push_back(static_cast<Op>(i));
  return out;
}

}  // namespace nsymkit::coverage
