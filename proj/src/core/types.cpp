#include "core/types.h"

#include <stdexcept>

namespace choralegen {

namespace {

constexpr std::array<std::string_view, kNumParts> kPartNames = {
    "soprano", "alto", "tenor", "bass"};

constexpr std::array<std::string_view, kNumInstruments> kInstrumentNames = {
    "violin",  "viola",   "cello",       "double_bass", "flute",
    "oboe",    "clarinet", "saxophone",  "bassoon",     "trumpet",
    "french_horn", "trombone", "tuba"};

// General MIDI programs (0-based): strings 40-43, winds 56-73.
constexpr std::array<int, kNumInstruments> kGmPrograms = {
    40,  // violin
    41,  // viola
    42,  // cello
    43,  // contrabass
    73,  // flute
    68,  // oboe
    71,  // clarinet
    65,  // alto sax
    70,  // bassoon
    56,  // trumpet
    60,  // french horn
    57,  // trombone
    58,  // tuba
};

constexpr std::array<std::string_view, kNumEnsembles> kEnsembleNames = {
    "string", "brass", "woodwind", "random"};

}  // namespace

std::string_view partName(Part part) {
  return kPartNames[static_cast<int>(part)];
}

Part partFromName(std::string_view name) {
  for (int i = 0; i < kNumParts; ++i) {
    if (kPartNames[i] == name) return static_cast<Part>(i);
  }
  throw std::invalid_argument("unknown part name: " + std::string(name));
}

std::string_view instrumentName(InstrumentId id) {
  return kInstrumentNames[static_cast<int>(id)];
}

InstrumentId instrumentFromName(std::string_view name) {
  for (int i = 0; i < kNumInstruments; ++i) {
    if (kInstrumentNames[i] == name) return static_cast<InstrumentId>(i);
  }
  throw std::invalid_argument("unknown instrument name: " + std::string(name));
}

int gmProgram(InstrumentId id) { return kGmPrograms[static_cast<int>(id)]; }

std::string_view ensembleName(Ensemble ensemble) {
  return kEnsembleNames[static_cast<int>(ensemble)];
}

Ensemble ensembleFromName(std::string_view name) {
  for (int i = 0; i < kNumEnsembles; ++i) {
    if (kEnsembleNames[i] == name) return static_cast<Ensemble>(i);
  }
  throw std::invalid_argument("unknown ensemble name: " + std::string(name));
}

}  // namespace choralegen
