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

#include "stochalg/subspace.hpp"

#include <charconv>
#include <stdexcept>

namespace stochalg {

SubspaceSelector SubspaceSelector::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("subspace: expected eq:n, le:n or ge:n, got '" + std::string(text) + "'");
    const auto kind = text.substr(0, colon);
    const auto num = text.substr(colon + 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
        throw std::invalid_argument("subspace: bad length in '" + std::string(text) + "'");
    if (kind == "eq") return exactly(n);
    if (kind == "le") return at_most(n);
    if (kind == "ge") return at_least(n);
    throw std::invalid_argument("subspace: unknown kind '" + std::string(kind) + "'");
}

std::string SubspaceSelector::to_string() const {
    const char* k = kind == Kind::exactly ? "eq:" : kind == Kind::at_most ? "le:" : "ge:";
    return k + std::to_string(n);
}

bool SubspaceSelector::contains(std::size_t length) const {
    switch (kind) {
        case Kind::exactly: return length == n;
        case Kind::at_most: return length <= n;
        case Kind::at_least: return length >= n;
    }
    return false;
}

std::vector<Word> subspace_words(const SubspaceSelector& s, const Alphabet& alphabet) {
    if (!s.finite()) throw std::invalid_argument("subspace " + s.to_string() + " is infinite");
    std::vector<Word> out;
    const std::size_t lo = s.kind == SubspaceSelector::Kind::exactly ? s.n : 0;
    for (std::size_t len = lo; len <= s.n; ++len) {
        auto w = words_of_length(len, alphabet);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

}  // namespace stochalg
