// Basic domain types shared across the generator: voice parts, instruments,
// ensembles and their name/string mappings.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace choralegen {

/// The four chorale voices, in score order from highest to lowest.
enum class Part : int {
  kSoprano = 0,
  kAlto = 1,
  kTenor = 2,
  kBass = 3,
};

inline constexpr int kNumParts = 4;

inline constexpr std::array<Part, kNumParts> kAllParts = {
    Part::kSoprano, Part::kAlto, Part::kTenor, Part::kBass};

/// The 13 orchestral instruments the synthesizer knows about.
enum class InstrumentId : int {
  kViolin = 0,
  kViola,
  kCello,
  kDoubleBass,
  kFlute,
  kOboe,
  kClarinet,
  kSaxophone,
  kBassoon,
  kTrumpet,
  kFrenchHorn,
  kTrombone,
  kTuba,
};

inline constexpr int kNumInstruments = 13;

/// Ensemble presets driving orchestration.
enum class Ensemble : int {
  kString = 0,
  kBrass,
  kWoodwind,
  kRandom,
};

inline constexpr int kNumEnsembles = 4;

std::string_view partName(Part part);
Part partFromName(std::string_view name);

std::string_view instrumentName(InstrumentId id);
InstrumentId instrumentFromName(std::string_view name);

/// General MIDI program number (0-based) used when writing stem MIDI.
int gmProgram(InstrumentId id);

std::string_view ensembleName(Ensemble ensemble);
Ensemble ensembleFromName(std::string_view name);

}  // namespace choralegen
