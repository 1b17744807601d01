#pragma once

#include <string>
#include <string_view>

namespace sentiment {

/// Snowball English ("Porter2") stemmer.
///
/// Operates on ASCII input; words containing any non-ASCII byte are returned
/// unchanged. Words shorter than three characters are returned unchanged.
std::string stem(std::string_view word);

}  // namespace sentiment
