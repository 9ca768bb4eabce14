#pragma once

#include <string>

#include "optseq/seq.hpp"

namespace optseq {

/// Builds a sequence from a spec string. Three forms are accepted:
///   - a literal of '0'/'1' characters,
///   - "file:PATH" naming a one-line sequence file,
///   - "family(key=value,...)" where family is one of legendre, mseq, gmw,
///     twinprime, v, w, diffset, interleave4. Values of a/b/c0..c3 may
///     themselves be spec strings, so constructions compose inline.
BinarySequence sequence_from_spec(const std::string& spec);

} // namespace optseq
