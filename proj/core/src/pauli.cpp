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

#include "w52/pauli.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <utility>

#include "w52/error.hpp"

namespace w52 {

namespace {

// kLetterProducts[a][b] = (k, c) with a * b = i^k c, letters indexed I, X, Y, Z.
// X*Y = iZ, Y*Z = iX, Z*X = iY; the reversed order negates the phase.
constexpr std::array<std::array<std::pair<int, PauliLetter>, 4>, 4> kLetterProducts = {{
    {{{0, PauliLetter::I}, {0, PauliLetter::X}, {0, PauliLetter::Y}, {0, PauliLetter::Z}}},
    {{{0, PauliLetter::X}, {0, PauliLetter::I}, {1, PauliLetter::Z}, {3, PauliLetter::Y}}},
    {{{0, PauliLetter::Y}, {3, PauliLetter::Z}, {0, PauliLetter::I}, {1, PauliLetter::X}}},
    {{{0, PauliLetter::Z}, {1, PauliLetter::Y}, {3, PauliLetter::X}, {0, PauliLetter::I}}},
}};

PauliLetter letter_at(Coords c, int q) {
    bool z = ((c >> (5 - q)) & 1) != 0;
    bool x = ((c >> (2 - q)) & 1) != 0;
    return letter_from_bits({z, x});
}

}  // namespace

char letter_char(PauliLetter p) {
    return "IXYZ"[static_cast<int>(p)];
}

char observable_type_char(ObservableType t) {
    return "ABC"[static_cast<int>(t)];
}

Observable Observable::from_point_id(int id) {
    if (id < 1 || id > kNumPoints) {
        throw Error(ErrorCode::UnknownId, "point id " + std::to_string(id) + " is outside 1..63");
    }
    return Observable(static_cast<std::uint8_t>(id));
}

Observable Observable::from_coords(Coords c) {
    if (c == 0) {
        throw Error(ErrorCode::IdentityExcluded, "the identity III is not an observable");
    }
    if (c > kNumPoints) {
        throw Error(ErrorCode::UnknownId, "coordinate value " + std::to_string(c) + " has more than six bits");
    }
    return Observable(c);
}

Observable Observable::parse(std::string_view word) {
    if (word.size() != kNumQubits) {
        throw Error(ErrorCode::BadLength, "Pauli word '" + std::string(word) + "' must have exactly 3 letters");
    }
    std::uint8_t z = 0;
    std::uint8_t x = 0;
    for (int q = 0; q < kNumQubits; q++) {
        PauliLetter p;
        switch (word[q]) {
            case 'I':
                p = PauliLetter::I;
                break;
            case 'X':
                p = PauliLetter::X;
                break;
            case 'Y':
                p = PauliLetter::Y;
                break;
            case 'Z':
                p = PauliLetter::Z;
                break;
            default:
                throw Error(
                    ErrorCode::InvalidLetter,
                    "Pauli word '" + std::string(word) + "' has a character outside {I,X,Y,Z}");
        }
        LetterBits b = letter_bits(p);
        z = static_cast<std::uint8_t>((z << 1) | (b.z ? 1 : 0));
        x = static_cast<std::uint8_t>((x << 1) | (b.x ? 1 : 0));
    }
    auto bits = static_cast<std::uint8_t>((z << 3) | x);
    if (bits == 0) {
        throw Error(ErrorCode::IdentityExcluded, "the identity III is not an observable");
    }
    return Observable(bits);
}

PauliLetter Observable::letter(int q) const noexcept {
    return letter_at(bits_, q);
}

std::array<PauliLetter, 3> Observable::letters() const noexcept {
    return {letter(0), letter(1), letter(2)};
}

int Observable::identity_count() const noexcept {
    int n = 0;
    for (int q = 0; q < kNumQubits; q++) {
        n += letter(q) == PauliLetter::I;
    }
    return n;
}

ObservableType Observable::type() const noexcept {
    switch (identity_count()) {
        case 2:
            return ObservableType::A;
        case 1:
            return ObservableType::B;
        default:
            return ObservableType::C;
    }
}

std::string Observable::str() const {
    std::string s(kNumQubits, 'I');
    for (int q = 0; q < kNumQubits; q++) {
        s[q] = letter_char(letter(q));
    }
    return s;
}

std::string Observable::coords_str() const {
    std::string s = "(";
    for (int k = 1; k <= 6; k++) {
        s += coord(k) ? '1' : '0';
        s += k == 6 ? ')' : ',';
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const Observable &o) {
    return out << o.str();
}

Observable parse_observable(std::string_view word) {
    return Observable::parse(word);
}

std::string format_observable(const Observable &o) {
    return o.str();
}

ObservableType observable_type(const Observable &o) {
    return o.type();
}

const std::array<Observable, kNumPoints> &all_observables() {
    static const auto table = []<std::size_t... Ids>(std::index_sequence<Ids...>) {
        return std::array<Observable, kNumPoints>{Observable::from_point_id(static_cast<int>(Ids) + 1)...};
    }(std::make_index_sequence<kNumPoints>{});
    return table;
}

std::optional<Sign> sign_from_phase(PhaseExponent k) {
    switch (k.value()) {
        case 0:
            return Sign::Plus;
        case 2:
            return Sign::Minus;
        default:
            return std::nullopt;
    }
}

char sign_char(Sign s) {
    return s == Sign::Plus ? '+' : '-';
}

int symplectic_form(const Observable &a, const Observable &b) {
    return symplectic_form(a.coords(), b.coords());
}

bool commutes(const Observable &a, const Observable &b) {
    return symplectic_form(a, b) == 0;
}

LetterProduct multiply_letters(PauliLetter a, PauliLetter b) {
    const auto &[k, c] = kLetterProducts[static_cast<int>(a)][static_cast<int>(b)];
    return {PhaseExponent(k), c};
}

PauliProduct multiply(Coords a, Coords b) {
    PhaseExponent phase;
    for (int q = 0; q < kNumQubits; q++) {
        phase += multiply_letters(letter_at(a, q), letter_at(b, q)).phase;
    }
    return {phase, static_cast<Coords>(a ^ b)};
}

PauliProduct multiply(const Observable &a, const Observable &b) {
    return multiply(a.coords(), b.coords());
}

ContextEvaluation evaluate_context(std::span<const Observable> obs) {
    ContextEvaluation result;
    for (size_t i = 0; i < obs.size(); i++) {
        for (size_t j = i + 1; j < obs.size(); j++) {
            if (obs[i] == obs[j]) {
                result.duplicate_free = false;
            } else if (!commutes(obs[i], obs[j])) {
                result.commuting = false;
            }
        }
    }
    PauliProduct acc;
    for (const auto &o : obs) {
        PauliProduct step = multiply(acc.coords, o.coords());
        acc = {acc.phase + step.phase, step.coords};
    }
    result.closed = acc.coords == 0;
    if (result.duplicate_free && result.commuting && result.closed) {
        result.sign = sign_from_phase(acc.phase);
        assert(result.sign.has_value());
    }
    return result;
}

Sign context_sign(std::span<const Observable> obs) {
    ContextEvaluation e = evaluate_context(obs);
    if (!e.duplicate_free) {
        throw Error(ErrorCode::DuplicateObservable, "context lists an observable more than once");
    }
    if (!e.commuting) {
        throw Error(ErrorCode::NotMutuallyCommuting, "context observables do not pairwise commute");
    }
    if (!e.closed) {
        throw Error(ErrorCode::NotClosed, "context product is not proportional to the identity");
    }
#ifndef NDEBUG
    {
        PauliProduct rev;
        for (auto it = obs.rbegin(); it != obs.rend(); ++it) {
            PauliProduct step = multiply(rev.coords, it->coords());
            rev = {rev.phase + step.phase, step.coords};
        }
        assert(sign_from_phase(rev.phase) == e.sign);
    }
#endif
    return *e.sign;
}

}  // namespace w52
