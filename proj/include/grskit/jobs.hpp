#pragma once

#include <functional>
#include <string>

#include "grskit/json_io.hpp"

namespace grskit {

/// Receives one finished output line at a time (no trailing newline).
using LineSink = std::function<void(const std::string&)>;

struct JobOutcome {
    std::uint64_t records = 0;
    std::uint64_t disagreements = 0;
};

/// Runs one job described by a JSON spec and streams records to the sink.
///
/// Spec layout:
///   command   classify | audit | search | dual | tables
///   field     {"p", "m", "modulus"?}
///   family    grs | egrs | sub_grs | sub_egrs | plus_tgrs | tgrs
///   theorem   audit selector, see jobs.cpp for the catalogue
///   n         int or {"min", "max"}
///   k, r      optional filters (defaults: every valid value)
///   eta       element (plus_tgrs) or matrix (tgrs)
///   source    {"kind": explicit | all-subsets | cyclic-subgroup | random,
///              "points": [...], "count": int}
///   factors   {"kind": ones | explicit | witness, "values": [...]}
///   seed      required when the source is random
///   samples   random factor tuples per impossibility instance (default 1000)
///   format    json (default) | csv
///   max_work  enumeration guard, default 10^8
///
/// Identical spec and seed give byte-identical output; records carry no
/// clocks and instances are visited in a fixed order.
JobOutcome run_job(const json& spec, const LineSink& sink);
JobOutcome run_job(const std::string& spec_text, const LineSink& sink);

} // namespace grskit
