#include "sentiment/polarity.hpp"

#include <cctype>

namespace sentiment {

std::string_view to_string(Polarity p) noexcept {
    return p == Polarity::Pos ? "POS" : "NEG";
}

std::optional<Polarity> parse_polarity(std::string_view s) noexcept {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() != 3) return std::nullopt;
    char up[3];
    for (std::size_t i = 0; i < 3; ++i) {
        up[i] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    }
    const std::string_view u(up, 3);
    if (u == "POS") return Polarity::Pos;
    if (u == "NEG") return Polarity::Neg;
    return std::nullopt;
}

}  // namespace sentiment
