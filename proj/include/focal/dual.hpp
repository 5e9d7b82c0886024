#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "focal/ring.hpp"

namespace focal {

/// value + eps * gradient with eps^2 = 0 and a fixed-width gradient.
template <class E, std::size_t Width>
struct Dual {
    E value{};
    std::array<E, Width> gradient{};

    friend bool operator==(const Dual&, const Dual&) = default;
};

/// Vector forward-mode extension R[eps]/(eps^2) of a base ring. One engine
/// pass over this ring yields all Width partial derivatives at once.
template <CoefficientRing Base, std::size_t Width>
class DualRing {
  public:
    using BaseElement = element_t<Base>;
    using Element = Dual<BaseElement, Width>;
    static constexpr std::size_t width = Width;

    explicit DualRing(Base base) : base_(std::move(base)) {}

    const Base& base() const noexcept { return base_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }
    std::string describe() const { return base_.describe() + "[eps]^" + std::to_string(Width); }

    Element constant(const BaseElement& v) const {
        Element r;
        r.value = v;
        r.gradient.fill(base_.zero());
        return r;
    }
    /// The independent variable number `index` at value v.
    Element variable(const BaseElement& v, std::size_t index) const {
        Element r = constant(v);
        r.gradient[index] = base_.one();
        return r;
    }

    Element zero() const { return constant(base_.zero()); }
    Element one() const { return constant(base_.one()); }
    Element from_int(std::int64_t n) const { return constant(base_.from_int(n)); }

    Element add(const Element& a, const Element& b) const {
        Element r;
        r.value = base_.add(a.value, b.value);
        for (std::size_t i = 0; i < Width; ++i) r.gradient[i] = base_.add(a.gradient[i], b.gradient[i]);
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r;
        r.value = base_.sub(a.value, b.value);
        for (std::size_t i = 0; i < Width; ++i) r.gradient[i] = base_.sub(a.gradient[i], b.gradient[i]);
        return r;
    }
    Element neg(const Element& a) const {
        Element r;
        r.value = base_.neg(a.value);
        for (std::size_t i = 0; i < Width; ++i) r.gradient[i] = base_.neg(a.gradient[i]);
        return r;
    }
    Element mul(const Element& a, const Element& b) const {
        Element r;
        r.value = base_.mul(a.value, b.value);
        for (std::size_t i = 0; i < Width; ++i) {
            r.gradient[i] = base_.add(base_.mul(a.value, b.gradient[i]), base_.mul(a.gradient[i], b.value));
        }
        return r;
    }
    // (a + eps u)^-1 = a^-1 - eps u a^-2
    Element inv(const Element& a) const {
        BaseElement ia = base_.inv(a.value);
        BaseElement ia2 = base_.neg(base_.mul(ia, ia));
        Element r;
        r.value = ia;
        for (std::size_t i = 0; i < Width; ++i) r.gradient[i] = base_.mul(a.gradient[i], ia2);
        return r;
    }
    bool is_zero(const Element& a) const {
        if (!base_.is_zero(a.value)) return false;
        for (const auto& g : a.gradient)
            if (!base_.is_zero(g)) return false;
        return true;
    }

  private:
    Base base_;
};

}  // namespace focal
