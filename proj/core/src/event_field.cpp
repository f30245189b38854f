#include "staygo/event_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "staygo/rng.hpp"

namespace staygo {

std::string to_string(Pattern p) { return p == Pattern::A ? "A" : "B"; }
std::string to_string(Rate r) { return r == Rate::Fast ? "fast" : "slow"; }

Pattern pattern_from_string(const std::string& s) {
  if (s == "A") return Pattern::A;
  if (s == "B") return Pattern::B;
  throw std::invalid_argument("unknown pattern '" + s + "' (expected A or B)");
}

Rate rate_from_string(const std::string& s) {
  if (s == "fast") return Rate::Fast;
  if (s == "slow") return Rate::Slow;
  throw std::invalid_argument("unknown rate '" + s +
                              "' (expected fast or slow)");
}

namespace {

std::string make_id(Pattern p, Rate r, int cycles, const GridSpec& g) {
  std::ostringstream os;
  os << "p" << to_string(p) << "-" << to_string(r) << "-c" << cycles << "-g"
     << g.rows << "x" << g.cols;
  return os.str();
}

// Ring of every point of interest in serpentine visit order.
std::vector<int> serpentine_rings(const GridSpec& grid) {
  std::vector<int> rings;
  rings.reserve(static_cast<std::size_t>(grid.point_count()));
  for (int r = 0; r < grid.rows; ++r) {
    for (int k = 0; k < grid.cols; ++k) {
      const int c = (r % 2 == 0) ? k : grid.cols - 1 - k;
      rings.push_back(ring_index({0, grid.origin_x + c * grid.spacing_m,
                                  grid.origin_y + r * grid.spacing_m},
                                 grid));
    }
  }
  return rings;
}

int clamp_level(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

// One low -> high -> low cycle as per-ring integer levels, in units of
// step/2 so that slow-rate midpoints stay exact. Each state is a vector of
// R ring levels.
std::vector<std::vector<int>> fast_cycle_levels(Pattern pattern, int rings,
                                                int low, int high, int stagger) {
  const int ramp = (high - low) / 2;  // gradual transitions per ring
  std::vector<std::vector<int>> cycle;

  auto push_state = [&](auto&& level_of_ring) {
    std::vector<int> s(static_cast<std::size_t>(rings));
    for (int r = 0; r < rings; ++r) s[static_cast<std::size_t>(r)] = level_of_ring(r);
    cycle.push_back(std::move(s));
  };

  if (pattern == Pattern::A) {
    // Rise: ring r starts climbing r*stagger transitions after StateL.
    const int t_rise = ramp + (rings - 1) * stagger;
    for (int t = 0; t <= t_rise; ++t) {
      push_state([&](int r) {
        return clamp_level(low + 2 * (t - r * stagger), low, high);
      });
    }
    // Fall: wavefront runs periphery -> center.
    const int t_fall = ramp + (rings - 1) * stagger;
    for (int u = 1; u <= t_fall; ++u) {
      push_state([&](int r) {
        return clamp_level(high - 2 * (u - (rings - 1 - r) * stagger), low,
                           high);
      });
    }
  } else {
    // Rise: one ring flips abruptly per state, center -> periphery.
    for (int t = 0; t <= rings; ++t) {
      push_state([&](int r) { return r < t ? high : low; });
    }
    // Fall: gradual, wavefront center -> periphery (opposite of pattern A).
    const int t_fall = ramp + (rings - 1) * stagger;
    for (int u = 1; u <= t_fall; ++u) {
      push_state([&](int r) {
        return clamp_level(high - 2 * (u - r * stagger), low, high);
      });
    }
  }
  return cycle;
}

// Inserts a midpoint state into every transition whose entries move by one
// gradual step (2 level units). Abrupt flips are left as a single transition.
std::vector<std::vector<int>> slow_down(
    const std::vector<std::vector<int>>& fast) {
  std::vector<std::vector<int>> out;
  out.reserve(fast.size() * 2);
  for (std::size_t k = 0; k < fast.size(); ++k) {
    if (k > 0) {
      const auto& a = fast[k - 1];
      const auto& b = fast[k];
      bool gradual = false;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (std::abs(a[r] - b[r]) == 2) gradual = true;
      }
      if (gradual) {
        std::vector<int> mid(a.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
          mid[r] = std::abs(a[r] - b[r]) <= 2 ? (a[r] + b[r]) / 2 : a[r];
        }
        out.push_back(std::move(mid));
      }
    }
    out.push_back(fast[k]);
  }
  return out;
}

}  // namespace

StateSequence build_sequence(Pattern pattern, Rate rate, int cycles,
                             const GridSpec& grid,
                             const SequenceOptions& options) {
  if (cycles < 1) {
    throw std::invalid_argument("build_sequence: cycles must be >= 1");
  }
  if (options.stagger < 1) {
    throw std::invalid_argument("build_sequence: stagger must be >= 1");
  }
  const double unit = options.step / 2.0;
  const int low = static_cast<int>(std::llround(options.low / unit));
  const int high = static_cast<int>(std::llround(options.high / unit));
  if (high <= low || (high - low) % 2 != 0 ||
      std::abs(low * unit - options.low) > 1e-9 ||
      std::abs(high * unit - options.high) > 1e-9) {
    throw std::invalid_argument(
        "build_sequence: high - low must be a positive multiple of step");
  }

  const int rings = grid.ring_count();
  auto cycle = fast_cycle_levels(pattern, rings, low, high, options.stagger);
  if (rate == Rate::Slow) cycle = slow_down(cycle);

  std::vector<std::vector<int>> levels;
  for (int c = 0; c < cycles; ++c) {
    // Consecutive cycles share the boundary StateL.
    const std::size_t from = c == 0 ? 0 : 1;
    levels.insert(levels.end(), cycle.begin() + static_cast<std::ptrdiff_t>(from),
                  cycle.end());
  }

  const auto rings_by_poi = serpentine_rings(grid);
  StateSequence seq;
  seq.pattern = pattern;
  seq.rate = rate;
  seq.cycles = cycles;
  seq.grid = grid;
  seq.states.reserve(levels.size());
  for (const auto& lv : levels) {
    ProbabilityState st;
    st.probs.reserve(rings_by_poi.size());
    for (int ring : rings_by_poi) {
      st.probs.push_back(lv[static_cast<std::size_t>(ring)] * unit);
    }
    seq.states.push_back(std::move(st));
  }
  return seq;
}

std::string StateSequence::id() const {
  return make_id(pattern, rate, cycles, grid);
}

nlohmann::json StateSequence::to_json() const {
  nlohmann::json j;
  j["id"] = id();
  j["pattern"] = to_string(pattern);
  j["rate"] = to_string(rate);
  j["cycles"] = cycles;
  j["grid"] = {{"rows", grid.rows},
               {"cols", grid.cols},
               {"spacing_m", grid.spacing_m}};
  j["states"] = nlohmann::json::array();
  for (const auto& st : states) j["states"].push_back(st.probs);
  return j;
}

std::string SequenceDescriptor::id() const {
  return make_id(pattern, rate, cycles, grid);
}

std::uint64_t EventTrace::checksum() const {
  std::uint64_t h = fnv1a64(&seed, sizeof(seed));
  const int m = missions();
  const int p = points();
  h = fnv1a64(&m, sizeof(m), h);
  h = fnv1a64(&p, sizeof(p), h);
  for (const auto& row : events) h = fnv1a64(row.data(), row.size(), h);
  return h;
}

EventTrace sample_trace(const StateSequence& seq, std::uint64_t seed) {
  EventTrace trace;
  trace.seq = {seq.pattern, seq.rate, seq.cycles, seq.grid, seq.missions()};
  trace.seed = seed;
  Rng64 rng(seed);
  trace.events.reserve(seq.states.size());
  for (const auto& st : seq.states) {
    std::vector<std::uint8_t> row;
    row.reserve(st.probs.size());
    for (double p : st.probs) row.push_back(rng.bernoulli(p) ? 1 : 0);
    trace.events.push_back(std::move(row));
  }
  return trace;
}

TraceParseError::TraceParseError(const std::string& what,
                                 std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " +
                         std::to_string(byte_offset) + ")"),
      byte_offset_(byte_offset) {}

void save_trace(const EventTrace& trace, const std::filesystem::path& path) {
  if (trace.missions() != trace.seq.states) {
    throw std::invalid_argument(
        "save_trace: event rows do not match the declared state count");
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_trace: cannot open " + path.string());
  }
  out << "staygo-trace v1\n";
  out << "pattern " << to_string(trace.seq.pattern) << "\n";
  out << "rate " << to_string(trace.seq.rate) << "\n";
  out << "cycles " << trace.seq.cycles << "\n";
  out << "grid " << trace.seq.grid.rows << " " << trace.seq.grid.cols << " "
      << trace.seq.grid.spacing_m << "\n";
  out << "seed " << trace.seed << "\n";
  out << "states " << trace.seq.states << "\n";
  out << "points " << trace.seq.grid.point_count() << "\n";
  for (const auto& row : trace.events) {
    if (static_cast<int>(row.size()) != trace.seq.grid.point_count()) {
      throw std::invalid_argument(
          "save_trace: event row length does not match the grid point count");
    }
    for (std::uint8_t e : row) out.put(e ? '1' : '0');
    out.put('\n');
  }
  if (!out) {
    throw std::runtime_error("save_trace: write failed for " + path.string());
  }
}

namespace {

// Line reader that tracks the byte offset of the current line start so parse
// errors can point at the exact spot in the file.
struct LineReader {
  std::istream& in;
  std::size_t offset = 0;       // offset of the next unread byte
  std::size_t line_start = 0;   // offset of the most recently read line

  bool next(std::string& line) {
    line_start = offset;
    if (!std::getline(in, line)) return false;
    offset += line.size() + 1;  // assumes '\n'; close enough for diagnostics
    return true;
  }
};

std::string expect_field(LineReader& rd, const std::string& key) {
  std::string line;
  if (!rd.next(line)) {
    throw TraceParseError("trace truncated, expected '" + key + "' header",
                          rd.line_start);
  }
  if (line.rfind(key + " ", 0) != 0) {
    throw TraceParseError("expected '" + key + "' header, got '" + line + "'",
                          rd.line_start);
  }
  return line.substr(key.size() + 1);
}

}  // namespace

EventTrace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_trace: cannot open " + path.string());
  }
  LineReader rd{in};
  std::string line;
  if (!rd.next(line) || line != "staygo-trace v1") {
    throw TraceParseError("missing 'staygo-trace v1' magic", 0);
  }

  EventTrace trace;
  try {
    trace.seq.pattern = pattern_from_string(expect_field(rd, "pattern"));
    trace.seq.rate = rate_from_string(expect_field(rd, "rate"));
    trace.seq.cycles = std::stoi(expect_field(rd, "cycles"));
    {
      std::istringstream g(expect_field(rd, "grid"));
      if (!(g >> trace.seq.grid.rows >> trace.seq.grid.cols >>
            trace.seq.grid.spacing_m)) {
        throw TraceParseError("malformed grid header", rd.line_start);
      }
    }
    trace.seed = std::stoull(expect_field(rd, "seed"));
    trace.seq.states = std::stoi(expect_field(rd, "states"));
    const int points = std::stoi(expect_field(rd, "points"));
    if (points != trace.seq.grid.point_count()) {
      throw TraceParseError("points header disagrees with grid dimensions",
                            rd.line_start);
    }
    if (trace.seq.states < 1 || points < 1) {
      throw TraceParseError("non-positive trace dimensions", rd.line_start);
    }

    trace.events.reserve(static_cast<std::size_t>(trace.seq.states));
    for (int m = 0; m < trace.seq.states; ++m) {
      if (!rd.next(line)) {
        throw TraceParseError(
            "dimension mismatch: header declares " +
                std::to_string(trace.seq.states) + " missions but file has " +
                std::to_string(m),
            rd.line_start);
      }
      if (static_cast<int>(line.size()) != points) {
        throw TraceParseError(
            "dimension mismatch: mission row has " +
                std::to_string(line.size()) + " entries, expected " +
                std::to_string(points),
            rd.line_start);
      }
      std::vector<std::uint8_t> row;
      row.reserve(line.size());
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] != '0' && line[k] != '1') {
          throw TraceParseError("event entries must be 0 or 1",
                                rd.line_start + k);
        }
        row.push_back(line[k] == '1' ? 1 : 0);
      }
      trace.events.push_back(std::move(row));
    }
  } catch (const std::invalid_argument& e) {
    throw TraceParseError(e.what(), rd.line_start);
  } catch (const std::out_of_range& e) {
    throw TraceParseError(e.what(), rd.line_start);
  }
  return trace;
}

}  // namespace staygo
