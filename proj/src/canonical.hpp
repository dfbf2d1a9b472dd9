#pragma once

#include <compare>
#include <functional>
#include <string>

#include "diagram.hpp"

namespace kg {

struct CanonicalKey {
    std::string bytes;

    std::string hex() const;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
    Diagram diagram;
    CanonicalKey key;
};

CanonicalKey canonical_key(const Diagram& d);

// Relabeled copy whose node order and anchors depend only on the isomorphism class.
CanonicalForm canonical_form(const Diagram& d);

}  // namespace kg

template <>
struct std::hash<kg::CanonicalKey> {
    size_t operator()(const kg::CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};
