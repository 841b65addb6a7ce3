#include "regspec/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/dense.hpp"
#include "regspec/eig.hpp"
#include "regspec/error.hpp"
#include "regspec/esd.hpp"
#include "regspec/evec.hpp"
#include "regspec/laws.hpp"
#include "regspec/treespec.hpp"

namespace regspec::cli {

namespace {

// Runs body(trial) for every trial id on up to `threads` workers. Results are
// stored by trial id, so aggregation order never depends on scheduling.
template <class Result, class Body>
std::vector<Result> run_trials(std::size_t trials, unsigned threads, Body body) {
    std::vector<Result> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t t = next++; t < trials; t = next++) {
            try {
                results[t] = body(t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

std::string timestamp_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream os;
    os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

json base_summary(const std::string& command, const Common& common, json config) {
    config["seed"] = common.seed;
    config["threads"] = common.threads;
    json summary;
    summary["command"] = command;
    summary["config"] = std::move(config);
    summary["seed"] = common.seed;
    if (!common.no_timestamp) {
        summary["timestamp"] = timestamp_now();
    }
    return summary;
}

void emit(const std::filesystem::path& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::InvalidParameter, "cannot open " + path.string() + " for writing");
    }
    out << content;
}

std::filesystem::path sibling(const std::filesystem::path& path, const std::string& suffix) {
    if (path.empty()) {
        return {};
    }
    return std::filesystem::path(path.string() + suffix);
}

void emit_summary(const Common& common, const json& summary) {
    if (!common.out.empty()) {
        emit(sibling(common.out, ".json"), summary.dump(2) + "\n");
    }
}

std::size_t parse_count(const std::string& text, const std::string& spec) {
    try {
        std::size_t used = 0;
        const auto value = std::stoull(text, &used);
        if (used == text.size()) {
            return static_cast<std::size_t>(value);
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParameter, "malformed fixture \"" + spec + "\"");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

void require_trials(std::size_t trials) {
    if (trials == 0) {
        throw Error(ErrorKind::InvalidParameter, "trials must be >= 1");
    }
}

void require_even(std::size_t n, std::size_t d) {
    if ((n * d) % 2 != 0) {
        throw Error(ErrorKind::InvalidParameter, "n*d must be even");
    }
}

double mean(const std::vector<double>& xs) {
    return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

json degree_metadata(std::size_t n, std::size_t d, const DegreeChoice& choice) {
    json meta;
    meta["n"] = n;
    meta["d"] = d;
    meta["gamma"] = choice.gamma ? json(*choice.gamma) : json(nullptr);
    // d - 1 = n^{epsilon_n}
    meta["epsilon_n"] = std::log(static_cast<double>(d) - 1.0) / std::log(static_cast<double>(n));
    return meta;
}

json to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

Graph load_graph(const GraphSource& source, const Common& common) {
    if (!source.in.empty()) {
        std::ifstream in(source.in);
        if (!in) {
            throw Error(ErrorKind::InvalidParameter, "cannot open " + source.in.string());
        }
        return read_edgelist(in);
    }
    if (!source.fixture.empty()) {
        return parse_fixture(source.fixture);
    }
    if (source.n == 0 || source.d == 0) {
        throw Error(ErrorKind::InvalidParameter, "need --in, --graph, or --n/--d");
    }
    SeededRng rng(common.seed, 0);
    return sample_regular(source.n, source.d, rng);
}

std::vector<double> semicircle_quantile_spectrum(std::size_t n) {
    const auto sc = LawSpec::semicircle();
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = quantile(sc, (static_cast<double>(k) + 0.5) / static_cast<double>(n));
    }
    return values;
}

} // namespace

std::size_t DegreeChoice::resolve(std::size_t n) const {
    if (d) {
        return *d;
    }
    if (gamma) {
        if (!(*gamma > 0.0) || n < 3) {
            throw Error(ErrorKind::InvalidParameter, "gamma must be positive and n >= 3");
        }
        return static_cast<std::size_t>(std::ceil(std::pow(std::log(static_cast<double>(n)), *gamma)));
    }
    throw Error(ErrorKind::InvalidParameter, "give either --d or --gamma");
}

Graph parse_fixture(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "cycle") {
        const auto n = parse_count(parts[1], spec);
        if (n < 3) {
            throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
        }
        return cycle_graph(n);
    }
    if (parts.size() == 2 && parts[0] == "complete") {
        return complete_graph(parse_count(parts[1], spec));
    }
    if (parts.size() == 3 && (parts[0] == "tree" || parts[0] == "regtree")) {
        TreeShape shape{parse_count(parts[1], spec), parse_count(parts[2], spec),
                        parts[0] == "tree" ? TreeKind::AlmostRegular : TreeKind::Regular};
        return build_tree(shape);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown graph fixture \"" + spec + "\"");
}

std::uint64_t file_hash(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::InvalidParameter, "cannot open " + path.string());
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        switch (err->kind()) {
        case ErrorKind::InvalidParameter:
        case ErrorKind::Precondition:
        case ErrorKind::Domain:
        case ErrorKind::Parse:
        case ErrorKind::InvariantViolation:
            return 2;
        default:
            return 3;
        }
    }
    return 3;
}

// ---------------------------------------------------------------------------

json cmd_sample(const SampleArgs& args, const Common& common) {
    SeededRng rng(common.seed, 0);
    const Graph g = sample_regular(args.n, args.d, rng);
    std::ostringstream os;
    write_edgelist(g, os);
    emit(common.out, os.str());

    json summary = base_summary("sample", common, {{"n", args.n}, {"d", args.d}});
    summary["edges"] = g.edge_count();
    if (!common.out.empty()) {
        summary["fnv1a64"] = file_hash(common.out);
    }
    return summary;
}

json cmd_spectrum(const SpectrumArgs& args, const Common& common) {
    const Graph g = load_graph(args.source, common);
    double scale = 1.0;
    if (args.scale) {
        scale = *args.scale;
    } else if (g.degree() && *g.degree() >= 2) {
        scale = 1.0 / std::sqrt(static_cast<double>(*g.degree()) - 1.0);
    }
    const Spectrum s = eig_symmetric(g, scale, args.vectors);

    std::ostringstream os;
    if (common.format == Format::Json) {
        os << json{{"scale", scale}, {"values", s.values}}.dump() << '\n';
    } else {
        write_spectrum_csv(s, os);
    }
    emit(common.out, os.str());
    if (args.vectors && !common.out.empty()) {
        std::ostringstream vs;
        write_vectors_csv(s, vs);
        emit(sibling(common.out, ".vectors.csv"), vs.str());
    }

    json config{{"in", args.source.in.string()}, {"graph", args.source.fixture},
                {"n", g.size()}, {"scale", scale}, {"vectors", args.vectors}};
    json summary = base_summary("spectrum", common, config);
    summary["n"] = g.size();
    summary["min"] = s.values.empty() ? 0.0 : s.values.front();
    summary["max"] = s.values.empty() ? 0.0 : s.values.back();
    emit_summary(common, summary);
    return summary;
}

json cmd_tree(const TreeArgs& args, const Common& common) {
    const TreeShape shape{args.d, args.zeta, args.kind};
    const bool almost = args.kind == TreeKind::AlmostRegular;
    json config{{"d", args.d}, {"zeta", args.zeta}, {"kind", almost ? "almost_regular" : "regular"}};
    json result = base_summary("tree", common, config);
    result["vertex_count"] = shape.vertex_count();

    if (almost) {
        const TreeSpectrum spectrum = tree_char_poly_eigs(shape);
        json entries = json::array();
        for (const auto& e : spectrum.entries) {
            entries.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
        }
        result["spectrum"] = entries;
        json masses = json::array();
        for (const auto& m : root_masses(shape)) {
            masses.push_back({{"lambda", m.lambda}, {"mass", m.mass}});
        }
        result["root_masses"] = masses;
        // Distinct eigenvalues (arc-sine-like) versus the full multiset.
        result["distinct_eigenvalues"] = spectrum.entries.size();
    }

    const bool has_z = args.z_re.has_value() || args.z_im.has_value();
    const std::complex<double> z(args.z_re.value_or(0.5), args.z_im.value_or(0.5));
    if (has_z || args.crosscheck) {
        const auto value = tree_resolvent(shape, z);
        result["resolvent"] = {{"z", to_json(z)}, {"phi", to_json(value.phi)}, {"psi", to_json(value.psi)}};
    }
    if (args.crosscheck) {
        const Graph tree = build_tree(shape);
        const double scale = 1.0 / std::sqrt(static_cast<double>(args.d) - 1.0);
        const auto root = static_cast<Vertex>(tree.size() - 1);
        const Vertex leaf = tree_leaves(shape).front();
        const auto value = tree_resolvent(shape, z);
        const MatrixXc resolvent = dense_resolvent(tree, scale, z);
        double dev = std::max(std::abs(resolvent(root, root) - value.phi),
                              std::abs(resolvent(root, leaf) - value.psi));
        json check{{"max_resolvent_deviation", dev}};
        if (almost) {
            const Spectrum dense = eig_symmetric(tree, scale, true);
            const auto exact = expanded_values(tree_char_poly_eigs(shape));
            double eig_dev = 0.0;
            for (std::size_t i = 0; i < exact.size(); ++i) {
                eig_dev = std::max(eig_dev, std::abs(exact[i] - dense.values[i]));
            }
            double mass_dev = 0.0;
            for (const auto& m : root_masses(shape)) {
                double mass = 0.0;
                for (std::size_t i = 0; i < dense.size(); ++i) {
                    if (std::abs(dense.values[i] - m.lambda) < 1e-6) {
                        const double c = (*dense.vectors)(root, static_cast<Eigen::Index>(i));
                        mass += c * c;
                    }
                }
                mass_dev = std::max(mass_dev, std::abs(mass - m.mass));
            }
            check["max_eigenvalue_deviation"] = eig_dev;
            check["max_root_mass_deviation"] = mass_dev;
        }
        result["crosscheck"] = check;
    }
    emit(common.out, result.dump(2) + "\n");
    return result;
}

json cmd_esd(const EsdArgs& args, const Common& common) {
    require_trials(args.trials);
    const std::size_t d = args.degree.resolve(args.n);
    require_even(args.n, d);
    const auto params = LocalLawParams::make(static_cast<double>(d), args.alpha, 0.1, args.degree.gamma);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d) - 1.0);
    const auto grid = linear_grid(-2.5, 2.5, args.grid_points);

    struct Row {
        double ks_sc = 0.0;
        double ks_km = -1.0;
        StieltjesError stieltjes;
    };
    const auto rows = run_trials<Row>(args.trials, common.threads, [&](std::size_t t) {
        SeededRng rng(common.seed, t);
        const Graph g = sample_regular(args.n, d, rng);
        const Spectrum s = eig_symmetric(g, scale, false);
        Row row;
        row.ks_sc = ks_distance(s.values, LawSpec::semicircle());
        if (d >= 3) {
            row.ks_km = ks_distance(s.values, LawSpec::kesten_mckay(d, scale));
        }
        row.stieltjes = stieltjes_sup_error(s.values, params.eta, static_cast<double>(d), grid);
        return row;
    });

    std::ostringstream os;
    os << "trial,ks_semicircle,ks_kesten_mckay,stieltjes_sup_error,c_meas\n" << std::setprecision(17);
    std::vector<double> ks_sc, ks_km, sup_err;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const auto& r = rows[t];
        os << t << ',' << r.ks_sc << ',' << r.ks_km << ',' << r.stieltjes.error << ','
           << r.stieltjes.c_meas << '\n';
        ks_sc.push_back(r.ks_sc);
        ks_km.push_back(r.ks_km);
        sup_err.push_back(r.stieltjes.error);
    }
    emit(common.out, os.str());

    json config = degree_metadata(args.n, d, args.degree);
    config["alpha"] = args.alpha;
    config["trials"] = args.trials;
    config["grid_points"] = args.grid_points;
    json summary = base_summary("esd", common, config);
    summary["eta"] = params.eta;
    summary["r"] = params.r;
    summary["mean_ks_semicircle"] = mean(ks_sc);
    if (d >= 3) {
        summary["mean_ks_kesten_mckay"] = mean(ks_km);
    }
    summary["max_stieltjes_sup_error"] = *std::max_element(sup_err.begin(), sup_err.end());
    summary["threshold_5_over_d"] = 5.0 / static_cast<double>(d);
    emit_summary(common, summary);
    return summary;
}

json cmd_locallaw(const LocalLawArgs& args, const Common& common) {
    require_trials(args.trials);
    const std::size_t d = args.degree.resolve(args.n);
    const auto params =
        LocalLawParams::make(static_cast<double>(d), args.alpha, args.delta, args.degree.gamma);
    if (!args.self_test) {
        require_even(args.n, d);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d) - 1.0);

    const auto reports = run_trials<LocalLawReport>(args.trials, common.threads, [&](std::size_t t) {
        if (args.self_test) {
            return local_law_sweep(semicircle_quantile_spectrum(args.n), params);
        }
        SeededRng rng(common.seed, t);
        const Graph g = sample_regular(args.n, d, rng);
        return local_law_sweep(eig_symmetric(g, scale, false).values, params);
    });

    std::ostringstream os;
    os << "trial,a,b,N_I,predicted,deviation\n" << std::setprecision(17);
    std::size_t passes = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < reports.size(); ++t) {
        for (const auto& row : reports[t].intervals) {
            os << t << ',' << row.a << ',' << row.b << ',' << row.count << ',' << row.predicted
               << ',' << row.deviation << '\n';
        }
        passes += reports[t].pass ? 1 : 0;
        worst = std::max(worst, reports[t].max_deviation);
    }
    emit(common.out, os.str());

    json config = degree_metadata(args.n, d, args.degree);
    config["alpha"] = args.alpha;
    config["delta"] = args.delta;
    config["trials"] = args.trials;
    config["self_test"] = args.self_test;
    json summary = base_summary("locallaw", common, config);
    summary["pass"] = passes == reports.size();
    summary["pass_count"] = passes;
    summary["max_deviation"] = worst;
    summary["eta"] = params.eta;
    summary["delta"] = args.delta;
    summary["n"] = args.n;
    summary["d"] = d;
    summary["alpha"] = args.alpha;
    summary["interval_length"] = params.min_interval_length();
    emit_summary(common, summary);
    return summary;
}

json cmd_census(const CensusArgs& args, const Common& common) {
    const bool fixture = !args.fixture.empty();
    const std::size_t trials = fixture ? 1 : args.trials;
    require_trials(trials);
    if (!fixture) {
        require_even(args.n, args.d);
    }
    const std::size_t r = args.r.value_or(2);

    struct Row {
        CycleCensus cycles;
        NeighborhoodCensus hood;
        std::optional<double> nr_star;
        std::size_t n = 0;
        std::optional<std::size_t> d;
    };
    const auto rows = run_trials<Row>(trials, common.threads, [&](std::size_t t) {
        Graph g;
        if (fixture) {
            g = parse_fixture(args.fixture);
        } else {
            SeededRng rng(common.seed, t);
            g = sample_regular(args.n, args.d, rng);
        }
        Row row;
        row.n = g.size();
        row.d = g.degree();
        row.cycles = count_cycles(g, std::max(args.s_max, std::min(2 * r, kMaxCycleLength)));
        row.hood = acyclic_ball_census(g, r);
        if (row.d && row.cycles.s_max >= 2 * r) {
            row.nr_star = nr_star_bound(row.cycles, *row.d, r);
        }
        return row;
    });

    std::ostringstream os;
    os << "s,M_s,variance,stderr,mu_s\n" << std::setprecision(17);
    const double tt = static_cast<double>(trials);
    for (std::size_t s = 3; s <= args.s_max; ++s) {
        std::vector<double> xs;
        for (const auto& row : rows) {
            xs.push_back(static_cast<double>(row.cycles.count(s)));
        }
        const double m = mean(xs);
        double var = 0.0;
        for (double x : xs) {
            var += (x - m) * (x - m);
        }
        var = trials > 1 ? var / (tt - 1.0) : 0.0;
        os << s << ',' << m << ',' << var << ',' << std::sqrt(var / tt) << ',';
        if (rows.front().d) {
            os << expected_cycle_count(s, *rows.front().d);
        }
        os << '\n';
    }
    emit(common.out, os.str());

    std::vector<double> fractions;
    std::size_t violations = 0;
    for (const auto& row : rows) {
        fractions.push_back(row.hood.fraction);
        if (row.nr_star &&
            static_cast<double>(row.n - row.hood.acyclic_vertices.size()) > *row.nr_star) {
            ++violations;
        }
    }
    json config{{"n", rows.front().n}, {"d", rows.front().d ? json(*rows.front().d) : json(nullptr)},
                {"graph", args.fixture}, {"r", r}, {"s_max", args.s_max}, {"trials", trials}};
    json summary = base_summary("census", common, config);
    summary["r"] = r;
    summary["fraction"] = mean(fractions);
    summary["n"] = rows.front().n;
    summary["d"] = config["d"];
    summary["nr_star_violations"] = violations;
    if (rows.front().d && *rows.front().d >= 3) {
        const double n = static_cast<double>(rows.front().n);
        const double d = static_cast<double>(*rows.front().d);
        summary["zeta_schedule"] = {{"beta4", zeta_schedule(n, d, 4.0)},
                                    {"beta0", zeta_schedule(n, d, 0.0)},
                                    {"radius_beta4_clamped", zeta_radius(n, d, 4.0)}};
    }
    emit_summary(common, summary);
    return summary;
}

json cmd_deloc(const DelocArgs& args, const Common& common) {
    struct Row {
        DelocReport report;
        double linf_median = 0.0;
    };
    std::size_t n = args.n;
    std::optional<std::size_t> d;
    std::optional<LocalLawParams> params;
    std::size_t L = 0;
    std::size_t trials = args.trials;
    std::vector<Row> rows;

    auto summarize = [](const Spectrum& s, std::size_t L, double delta, bool exclude) {
        Row row;
        row.report = adversarial_localization(s, L, delta, exclude);
        auto prof = linf_profile(s);
        std::nth_element(prof.begin(), prof.begin() + static_cast<std::ptrdiff_t>(prof.size() / 2), prof.end());
        row.linf_median = prof[prof.size() / 2];
        return row;
    };

    if (!args.fixture.empty()) {
        const auto parts = split(args.fixture, ':');
        if (parts.size() != 2 || (parts[0] != "identity" && parts[0] != "cycle")) {
            throw Error(ErrorKind::InvalidParameter, "deloc fixtures are identity:N and cycle:N");
        }
        n = parse_count(parts[1], args.fixture);
        if (n < 3) {
            throw Error(ErrorKind::InvalidParameter, "fixture size must be >= 3");
        }
        Spectrum s;
        if (parts[0] == "identity") {
            s = eig_symmetric(MatrixXr::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)), true);
            L = args.L.value_or(1);
        } else {
            s = eig_symmetric(cycle_graph(n), 1.0, true);
            L = args.L.value_or((n + 9) / 10);
        }
        trials = 1;
        rows.push_back(summarize(s, L, args.delta, false));
    } else {
        require_trials(trials);
        d = args.degree.resolve(n);
        require_even(n, *d);
        params = LocalLawParams::make(static_cast<double>(*d), args.alpha, 0.1, args.degree.gamma);
        L = args.L.value_or(static_cast<std::size_t>(std::ceil(0.1 / params->eta)));
        const double scale = 1.0 / std::sqrt(static_cast<double>(*d) - 1.0);
        rows = run_trials<Row>(trials, common.threads, [&](std::size_t t) {
            SeededRng rng(common.seed, t);
            const Graph g = sample_regular(n, *d, rng);
            return summarize(eig_symmetric(g, scale, true), L, args.delta, true);
        });
    }

    json per_trial = json::array();
    std::size_t localized = 0;
    std::size_t clusters = 0;
    for (const auto& row : rows) {
        localized += row.report.num_localized;
        clusters += row.report.degenerate_clusters;
        double worst = 0.0;
        for (const auto& v : row.report.per_eigenvector) {
            worst = std::max(worst, v.max_mass_on_L);
        }
        per_trial.push_back({{"num_localized", row.report.num_localized},
                             {"checked", row.report.per_eigenvector.size()},
                             {"max_mass_on_L", worst},
                             {"degenerate_clusters", row.report.degenerate_clusters},
                             {"linf_median", row.linf_median}});
    }

    json config{{"n", n}, {"d", d ? json(*d) : json(nullptr)}, {"graph", args.fixture},
                {"gamma", args.degree.gamma ? json(*args.degree.gamma) : json(nullptr)},
                {"alpha", args.alpha}, {"delta", args.delta}, {"L", L}, {"trials", trials}};
    json summary = base_summary("deloc", common, config);
    summary["n"] = n;
    summary["d"] = config["d"];
    summary["L"] = L;
    summary["delta"] = args.delta;
    summary["eta"] = params ? json(params->eta) : json(nullptr);
    summary["alpha"] = args.alpha;
    summary["num_localized"] = localized;
    summary["flagged_degenerate_clusters"] = clusters;
    summary["per_trial"] = per_trial;
    emit(common.out, summary.dump(2) + "\n");
    return summary;
}

} // namespace regspec::cli
