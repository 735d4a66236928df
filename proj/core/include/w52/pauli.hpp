// Copyright 2026 The w52 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef W52_PAULI_HPP
#define W52_PAULI_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace w52 {

inline constexpr int kNumQubits = 3;
inline constexpr int kNumPoints = 63;

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// Binary pair of a single-qubit letter. `z` is the coordinate x_j and `x` is
/// x_{j+3} of the six-dimensional point: I=(0,0), X=(0,1), Y=(1,1), Z=(1,0).
struct LetterBits {
    bool z;
    bool x;
    bool operator==(const LetterBits &) const = default;
};

constexpr LetterBits letter_bits(PauliLetter p) {
    switch (p) {
        case PauliLetter::I:
            return {false, false};
        case PauliLetter::X:
            return {false, true};
        case PauliLetter::Y:
            return {true, true};
        case PauliLetter::Z:
            return {true, false};
    }
    return {false, false};
}

constexpr PauliLetter letter_from_bits(LetterBits b) {
    if (b.z) {
        return b.x ? PauliLetter::Y : PauliLetter::Z;
    }
    return b.x ? PauliLetter::X : PauliLetter::I;
}

char letter_char(PauliLetter p);

/// Coordinates of a point of PG(5,2) packed into the low six bits of a byte,
/// x1 in bit 5 down to x6 in bit 0. The upper three bits are therefore the
/// z-bits of qubits 1..3 and the lower three bits their x-bits. Zero is the
/// identity and is a valid product value, but never a valid Observable.
using Coords = std::uint8_t;

enum class ObservableType : std::uint8_t { A, B, C };

char observable_type_char(ObservableType t);

/// A non-identity three-qubit Pauli word, identified with a point of W(5,2).
/// The point id is the packed coordinate value and runs over 1..63; ordering
/// follows the point id. A default-constructed Observable is point 1 (IIX).
class Observable {
   public:
    constexpr Observable() = default;

    /// Throws Error(UnknownId) unless 1 <= id <= 63.
    static Observable from_point_id(int id);
    /// Throws Error(IdentityExcluded) on zero, Error(UnknownId) when any bit
    /// above the sixth is set.
    static Observable from_coords(Coords c);
    /// Parses a three-letter uppercase word such as "XYZ".
    static Observable parse(std::string_view word);

    constexpr int point_id() const noexcept {
        return bits_;
    }
    constexpr Coords coords() const noexcept {
        return bits_;
    }
    /// Coordinate x_k for k in 1..6.
    constexpr bool coord(int k) const noexcept {
        return ((bits_ >> (6 - k)) & 1) != 0;
    }
    constexpr std::uint8_t z_mask() const noexcept {
        return bits_ >> 3;
    }
    constexpr std::uint8_t x_mask() const noexcept {
        return bits_ & 7;
    }

    /// Letter on qubit q in 0..2.
    PauliLetter letter(int q) const noexcept;
    std::array<PauliLetter, 3> letters() const noexcept;
    int identity_count() const noexcept;
    ObservableType type() const noexcept;
    std::string str() const;
    /// "(x1,x2,x3,x4,x5,x6)".
    std::string coords_str() const;

    constexpr auto operator<=>(const Observable &) const = default;

   private:
    constexpr explicit Observable(std::uint8_t bits) : bits_(bits) {
    }
    std::uint8_t bits_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Observable &o);

Observable parse_observable(std::string_view word);
std::string format_observable(const Observable &o);
ObservableType observable_type(const Observable &o);

/// All 63 observables in point-id order.
const std::array<Observable, kNumPoints> &all_observables();

/// Exponent of i, kept modulo 4.
class PhaseExponent {
   public:
    constexpr PhaseExponent() = default;
    constexpr explicit PhaseExponent(int k) : k_(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {
    }
    constexpr int value() const noexcept {
        return k_;
    }
    constexpr PhaseExponent operator+(PhaseExponent other) const noexcept {
        return PhaseExponent(k_ + other.k_);
    }
    constexpr PhaseExponent &operator+=(PhaseExponent other) noexcept {
        k_ = static_cast<std::uint8_t>((k_ + other.k_) & 3);
        return *this;
    }
    constexpr bool is_real() const noexcept {
        return (k_ & 1) == 0;
    }
    constexpr bool operator==(const PhaseExponent &) const = default;

   private:
    std::uint8_t k_ = 0;
};

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Plus : Sign::Minus;
}
/// Sign of i^k for k in {0, 2}; nullopt for an imaginary phase.
std::optional<Sign> sign_from_phase(PhaseExponent k);
char sign_char(Sign s);

/// Product of two Pauli words: i^phase times the word with the given
/// coordinates (which may be the identity).
struct PauliProduct {
    PhaseExponent phase;
    Coords coords = 0;
    bool operator==(const PauliProduct &) const = default;
};

/// Symplectic form in the basis sum_j (x_j y_{j+3} - x_{j+3} y_j) over GF(2).
constexpr int symplectic_form(Coords a, Coords b) {
    unsigned cross = static_cast<unsigned>(((a >> 3) & (b & 7)) ^ ((a & 7) & (b >> 3)));
    return static_cast<int>((cross ^ (cross >> 1) ^ (cross >> 2)) & 1);
}
int symplectic_form(const Observable &a, const Observable &b);
bool commutes(const Observable &a, const Observable &b);

/// Single-qubit product table: a * b = i^k c.
struct LetterProduct {
    PhaseExponent phase;
    PauliLetter letter;
};
LetterProduct multiply_letters(PauliLetter a, PauliLetter b);

PauliProduct multiply(Coords a, Coords b);
PauliProduct multiply(const Observable &a, const Observable &b);

/// Outcome of evaluating a candidate context without throwing.
struct ContextEvaluation {
    bool duplicate_free = true;
    bool commuting = true;
    bool closed = true;
    /// Set only when the list is duplicate free, commuting and closed.
    std::optional<Sign> sign;
};
ContextEvaluation evaluate_context(std::span<const Observable> obs);

/// Sign of the product of a context (left-to-right). Throws
/// DuplicateObservable, NotMutuallyCommuting or NotClosed.
Sign context_sign(std::span<const Observable> obs);

}  // namespace w52

#endif
