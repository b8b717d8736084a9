#pragma once

#include <optional>
#include <string_view>

#include "catfam/sequence.hpp"

namespace catfam {

// The level-preserving tree endomorphisms, for dynamic dispatch in orbit
// and census routines.
enum class Endomorphism { delta, delta_fast, gamma, mu };

std::optional<Endomorphism> parse_endomorphism(std::string_view name);
std::string_view to_string(Endomorphism e);

// (delta a)_i = #{ j < i : a_j < a_i }. Total: accepts any sequence, the
// image is always subdiagonal. Its fixed points are the self-describing
// sequences. Quadratic in the length.
Sequence delta(const Sequence& s);

// Same contract as delta, computed with a Fenwick tree over the value
// range in O(n log n) total work.
Sequence delta_fast(const Sequence& s);

// The mirror involution (mu a)_i = i - a_i. Requires a subdiagonal input
// (throws std::domain_error otherwise, since i - a_i would go negative).
Sequence mu(const Sequence& s);

// (gamma a)_i = #{ j < i : a_j >= a_i }, computed from this definition
// directly. Requires a subdiagonal input; equals mu(delta(a)) there, which
// stays a separately testable identity.
Sequence gamma(const Sequence& s);

Sequence apply(Endomorphism e, const Sequence& s);

}  // namespace catfam
