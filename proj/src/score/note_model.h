#pragma once

#include <cstdint>
#include <vector>

#include "core/rng.h"
#include "score/pianoroll.h"

namespace choralegen {

/// Conditional note model used by the Gibbs sampler.
///
/// Given a roll and a set of masked cells, an implementation returns one
/// pitch per masked cell (in mask order), conditioned only on the cells
/// outside the mask. It must not read the current values of masked cells.
class NoteModel {
 public:
  virtual ~NoteModel() = default;

  virtual std::vector<uint8_t> conditionalSample(const PianoRoll& roll,
                                                 const std::vector<Cell>& mask,
                                                 Rng& rng) const = 0;
};

}  // namespace choralegen
