#include "milnor/certificate.hpp"

#include <array>

namespace milnor {

namespace {

constexpr std::array<std::pair<StepKind, const char*>, 6> kNames{{
    {StepKind::BilinearExpand, "BILINEAR_EXPAND"},
    {StepKind::Swap, "SWAP"},
    {StepKind::SteinbergZero, "STEINBERG_ZERO"},
    {StepKind::MinusSelf, "MINUS_SELF"},
    {StepKind::SelfToMinusOne, "SELF_TO_MINUS_ONE"},
    {StepKind::HenselRoot, "HENSEL_ROOT"},
}};

}  // namespace

const char* step_name(StepKind k) noexcept {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

std::optional<StepKind> step_from_name(std::string_view s) noexcept {
  for (const auto& [kind, name] : kNames)
    if (s == name) return kind;
  return std::nullopt;
}

}  // namespace milnor
