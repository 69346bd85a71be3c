#pragma once

#include <map>
#include <string>

#include "scalar.hpp"

namespace lfac {

/// Element of the free abelian group on ramification symbols.
class RamTag {
public:
    RamTag() = default;
    static RamTag generator(const std::string& name, int e = 1) {
        RamTag t;
        if (e != 0) t.e_[name] = e;
        return t;
    }
    bool is_identity() const { return e_.empty(); }
    const std::map<std::string, int>& exponents() const { return e_; }

    friend RamTag operator*(RamTag a, const RamTag& b) {
        for (const auto& [n, e] : b.e_) a.add(n, e);
        return a;
    }
    RamTag pow(int k) const {
        RamTag t;
        if (k != 0)
            for (const auto& [n, e] : e_) t.e_[n] = e * k;
        return t;
    }
    friend bool operator==(const RamTag&, const RamTag&) = default;
    friend auto operator<=>(const RamTag&, const RamTag&) = default;

private:
    void add(const std::string& n, int e) {
        if ((e_[n] += e) == 0) e_.erase(n);
    }
    std::map<std::string, int> e_;
};

/// Smooth character of F^x: ramification tag plus the value at a
/// uniformizer.  |.|^t is the unramified character with value v^{-2t}.
struct Character {
    RamTag tag;
    Scalar satake{1};

    static Character trivial() { return {}; }
    static Character unramified(const Scalar& alpha) {
        if (alpha.is_zero()) throw DomainError("a character value must be nonzero");
        return {RamTag{}, alpha};
    }
    static Character ramified(const std::string& name, const Scalar& alpha = Scalar(1)) {
        if (alpha.is_zero()) throw DomainError("a character value must be nonzero");
        return {RamTag::generator(name), alpha};
    }
    /// |.|^t.
    static Character abs(HalfInt t) { return unramified(Scalar::sqrt_q_power(-t.twice)); }

    bool is_unramified() const { return tag.is_identity(); }
    bool is_trivial() const { return is_unramified() && satake.is_one(); }

    friend Character operator*(const Character& a, const Character& b) {
        return {a.tag * b.tag, a.satake * b.satake};
    }
    Character inverse() const { return {tag.pow(-1), satake.inverse()}; }
    friend Character operator/(const Character& a, const Character& b) { return a * b.inverse(); }
    Character pow(int k) const { return {tag.pow(k), satake.pow(k)}; }

    Character substitute(const std::map<std::string, Scalar>& values) const {
        return {tag, satake.substitute(values)};
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.tag == b.tag && a.satake == b.satake;
    }
    /// Unramified first, then by tag, then by value.
    static int compare(const Character& a, const Character& b) {
        if (a.tag != b.tag) {
            if (a.tag.is_identity() != b.tag.is_identity()) return a.tag.is_identity() ? -1 : 1;
            return a.tag < b.tag ? -1 : 1;
        }
        return Scalar::compare(a.satake, b.satake);
    }
};

inline Character char_mul(const Character& a, const Character& b) { return a * b; }

}  // namespace lfac
