#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "regspec/graph.hpp"

namespace regspec::cli {

using json = nlohmann::json;

enum class Format { Csv, Json };

struct Common {
    std::uint64_t seed = 0;
    std::filesystem::path out; // empty: primary output goes to stdout
    Format format = Format::Csv;
    unsigned threads = 1;
    bool no_timestamp = false;
};

// Degree given directly or as d = ceil((log n)^gamma).
struct DegreeChoice {
    std::optional<std::size_t> d;
    std::optional<double> gamma;

    std::size_t resolve(std::size_t n) const;
};

// Graph source: an edge-list file, a named fixture ("cycle:N", "complete:N",
// "tree:D:ZETA", "regtree:D:ZETA"), or a sampled G(n, d).
struct GraphSource {
    std::filesystem::path in;
    std::string fixture;
    std::size_t n = 0;
    std::size_t d = 0;
};

Graph parse_fixture(const std::string& spec);

struct SampleArgs {
    std::size_t n = 0;
    std::size_t d = 0;
};

struct SpectrumArgs {
    GraphSource source;
    std::optional<double> scale;
    bool vectors = false;
};

struct TreeArgs {
    std::size_t d = 3;
    std::size_t zeta = 1;
    TreeKind kind = TreeKind::AlmostRegular;
    std::optional<double> z_re;
    std::optional<double> z_im;
    bool crosscheck = false;
};

struct EsdArgs {
    std::size_t n = 0;
    DegreeChoice degree;
    double alpha = 0.5;
    std::size_t trials = 1;
    std::size_t grid_points = 41;
};

struct LocalLawArgs {
    std::size_t n = 0;
    DegreeChoice degree;
    double alpha = 0.5;
    double delta = 0.15;
    std::size_t trials = 1;
    bool self_test = false;
};

struct CensusArgs {
    std::size_t n = 0;
    std::size_t d = 0;
    std::string fixture;
    std::optional<std::size_t> r;
    std::size_t s_max = 6;
    std::size_t trials = 1;
};

struct DelocArgs {
    std::size_t n = 0;
    DegreeChoice degree;
    std::string fixture; // "identity:N" or "cycle:N"
    double alpha = 0.5;
    double delta = 0.1;
    std::optional<std::size_t> L;
    std::size_t trials = 1;
};

// Each command writes its primary artifact(s) and returns the JSON summary,
// which always embeds the resolved configuration and master seed.
json cmd_sample(const SampleArgs& args, const Common& common);
json cmd_spectrum(const SpectrumArgs& args, const Common& common);
json cmd_tree(const TreeArgs& args, const Common& common);
json cmd_esd(const EsdArgs& args, const Common& common);
json cmd_locallaw(const LocalLawArgs& args, const Common& common);
json cmd_census(const CensusArgs& args, const Common& common);
json cmd_deloc(const DelocArgs& args, const Common& common);

// 64-bit FNV-1a of a file's bytes.
std::uint64_t file_hash(const std::filesystem::path& path);

// Process exit code for a library error: 2 for parameter problems, 3 otherwise.
int exit_code_for(const std::exception& e);

} // namespace regspec::cli
