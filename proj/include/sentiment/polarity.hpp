#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sentiment {

enum class Polarity { Neg = 0, Pos = 1 };

inline constexpr std::array<Polarity, 2> kPolarities = {Polarity::Pos, Polarity::Neg};

/// Canonical uppercase form: "POS" or "NEG".
std::string_view to_string(Polarity p) noexcept;

/// Case-insensitive parse of "pos"/"neg". Surrounding whitespace is ignored.
std::optional<Polarity> parse_polarity(std::string_view s) noexcept;

inline constexpr Polarity opposite(Polarity p) noexcept {
    return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

inline constexpr std::size_t index_of(Polarity p) noexcept {
    return static_cast<std::size_t>(p);
}

}  // namespace sentiment
