#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace csmd {

// std::mt19937_64 is bit-exact across standard libraries; every distribution used on
// top of it comes from Boost.Random, whose algorithms are fixed in headers.
using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// 64-bit FNV-1a, stable across platforms (unlike std::hash).
std::uint64_t fnv1a(std::string_view text) noexcept;

/// Seed for one repetition: hash(master_seed, instance_id, algorithm_id, rep_id).
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view instance_id,
                          std::string_view algorithm_id, std::uint64_t rep_id) noexcept;

/// Uniform draw on [0, 1).
double uniform01(Engine& engine);

/// 1 with probability p.
bool bernoulli(Engine& engine, double p);

}  // namespace csmd
