#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace focal {

// A coefficient ring is a small context object; elements are plain values
// and all arithmetic goes through the context. characteristic() is 0 for
// rings of characteristic zero.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Element& a,
                                   const typename R::Element& b, std::int64_t n) {
    typename R::Element;
    { r.zero() } -> std::convertible_to<typename R::Element>;
    { r.one() } -> std::convertible_to<typename R::Element>;
    { r.from_int(n) } -> std::convertible_to<typename R::Element>;
    { r.add(a, b) } -> std::convertible_to<typename R::Element>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Element>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
    { r.neg(a) } -> std::convertible_to<typename R::Element>;
    { r.inv(a) } -> std::convertible_to<typename R::Element>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.characteristic() } -> std::convertible_to<std::uint64_t>;
    { r.describe() } -> std::convertible_to<std::string>;
};

template <class R>
using element_t = typename R::Element;

}  // namespace focal
