#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multiseg/enumerate.hpp"

namespace multiseg {

/// Outcome of one property sweep: either a certificate or the first
/// counterexample (full inputs plus both sides of the violated relation).
/// Everything except elapsed_sec is deterministic for fixed inputs.
struct VerifyResult {
    std::string property;
    Window window{};
    int max_points = 0;
    std::string space;           // description of the instance space
    std::uint64_t space_size = 0;
    std::uint64_t evaluated = 0; // instances checked; 0 when a counterexample stops the sweep
    bool exhaustive = true;
    std::uint64_t seed = 0;      // meaningful in sampled mode
    std::uint64_t samples = 0;   // requested sample count in sampled mode
    double elapsed_sec = 0.0;
    std::optional<nlohmann::json> counterexample;

    bool passed() const { return !counterexample.has_value(); }

    /// Record with a content hash ("record_id") over every deterministic
    /// field, so CI runs can diff certificates.
    nlohmann::json to_json() const;
};

std::vector<std::string> registered_properties();

inline constexpr std::uint64_t kDefaultBudget = 1000000; // instance ceiling
inline constexpr std::uint64_t kDefaultSamples = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

/// Sweep one registered property over the window space: exhaustive when the
/// instance space fits the budget, otherwise seeded uniform sampling.
/// Rejects unknown property ids.
VerifyResult verify(const std::string& property_id, const Window& w, int max_points,
                    std::optional<std::uint64_t> seed = std::nullopt,
                    std::uint64_t budget = kDefaultBudget,
                    std::uint64_t samples = kDefaultSamples,
                    unsigned workers = 0);

} // namespace multiseg
