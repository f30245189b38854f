#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "staygo/geometry.hpp"

namespace staygo {

enum class Pattern { A, B };
enum class Rate { Fast, Slow };

std::string to_string(Pattern p);
std::string to_string(Rate r);
Pattern pattern_from_string(const std::string& s);
Rate rate_from_string(const std::string& s);

/// Event probability at every point of interest for one mission, in the
/// serpentine visit order of the grid.
struct ProbabilityState {
  std::vector<double> probs;
};

/// Knobs of the wavefront model. The defaults reproduce the concentric-ring
/// schedule: probabilities sweep between `low` and `high` in increments of
/// `step`, with each ring starting `stagger` states after the one before it.
struct SequenceOptions {
  double low = 0.2;
  double high = 0.8;
  double step = 0.1;
  int stagger = 1;
};

/// Per-mission evolution of the event probabilities.
struct StateSequence {
  std::vector<ProbabilityState> states;
  Pattern pattern = Pattern::A;
  Rate rate = Rate::Fast;
  int cycles = 1;
  GridSpec grid;

  int missions() const { return static_cast<int>(states.size()); }
  std::string id() const;
  nlohmann::json to_json() const;
};

/// Builds the probability schedule for `cycles` low->high->low sweeps.
///
/// Pattern A raises each ring gradually from `low` to `high` with the
/// wavefront running center -> periphery, then lowers them gradually with the
/// wavefront running periphery -> center. Pattern B flips one ring per state
/// abruptly to `high` (center -> periphery), then lowers gradually, again
/// center -> periphery. The slow rate inserts a midpoint state into every
/// gradual transition; abrupt flips stay single-transition. Cycles share
/// their boundary all-`low` state.
StateSequence build_sequence(Pattern pattern, Rate rate, int cycles,
                             const GridSpec& grid,
                             const SequenceOptions& options = {});

/// Identifies the sequence a trace was sampled from.
struct SequenceDescriptor {
  Pattern pattern = Pattern::A;
  Rate rate = Rate::Fast;
  int cycles = 1;
  GridSpec grid;
  int states = 0;

  std::string id() const;
};

/// Pre-generated event outcomes, one row per mission, one entry per point of
/// interest. Replayed identically for every decision method.
struct EventTrace {
  SequenceDescriptor seq;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::uint8_t>> events;

  int missions() const { return static_cast<int>(events.size()); }
  int points() const {
    return events.empty() ? 0 : static_cast<int>(events.front().size());
  }
  std::uint64_t checksum() const;
};

/// Draws one boolean per (mission, point) from the sequence probabilities
/// with a deterministic seeded generator. Same (sequence, seed) -> same
/// trace, bit for bit.
EventTrace sample_trace(const StateSequence& seq, std::uint64_t seed);

class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(const std::string& what, std::size_t byte_offset);
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

void save_trace(const EventTrace& trace, const std::filesystem::path& path);
EventTrace load_trace(const std::filesystem::path& path);

}  // namespace staygo
