/* Copyright 2026 The stochalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef STOCHALG_SUBSPACE_HPP
#define STOCHALG_SUBSPACE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stochalg/words.hpp"

namespace stochalg {

/* Span of the words of length exactly n, at most n, or at least n. */
struct SubspaceSelector {
    enum class Kind { exactly, at_most, at_least };

    Kind kind = Kind::exactly;
    std::size_t n = 0;

    static SubspaceSelector exactly(std::size_t n) { return {Kind::exactly, n}; }
    static SubspaceSelector at_most(std::size_t n) { return {Kind::at_most, n}; }
    static SubspaceSelector at_least(std::size_t n) { return {Kind::at_least, n}; }

    /// "eq:n", "le:n" or "ge:n".
    static SubspaceSelector parse(std::string_view text);
    std::string to_string() const;

    bool contains(std::size_t length) const;
    bool finite() const { return kind != Kind::at_least; }
    /// Longest word in the subspace; only meaningful when finite().
    std::size_t max_length() const { return n; }

    friend bool operator==(const SubspaceSelector&, const SubspaceSelector&) = default;
};

/// Basis words of a finite subspace in canonical order (length, then lexicographic).
std::vector<Word> subspace_words(const SubspaceSelector& s, const Alphabet& alphabet);

}  // namespace stochalg

#endif  // STOCHALG_SUBSPACE_HPP
