#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "regspec/commands.hpp"
#include "regspec/rng.hpp"

using namespace regspec;
using namespace regspec::cli;

namespace {

void add_common(CLI::App* sub, Common& common, std::string& format) {
    sub->add_option("--seed", common.seed, "master seed (default: $REGSPEC_SEED)");
    sub->add_option("--out", common.out, "output path (stdout when omitted)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", common.threads, "worker threads for trials")->check(CLI::PositiveNumber);
    sub->add_flag("--no-timestamp", common.no_timestamp, "omit timestamps from JSON summaries");
}

void add_degree(CLI::App* sub, DegreeChoice& degree) {
    auto* d = sub->add_option("--d", degree.d, "degree");
    auto* g = sub->add_option("--gamma", degree.gamma, "d = ceil((log n)^gamma)");
    d->excludes(g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral statistics of sparse random regular graphs"};
    app.require_subcommand(1);

    Common common;
    common.seed = default_master_seed();
    std::string format = "csv";

    SampleArgs sample;
    auto* c_sample = app.add_subcommand("sample", "sample a random d-regular graph to an edge list");
    c_sample->add_option("--n", sample.n)->required();
    c_sample->add_option("--d", sample.d)->required();
    add_common(c_sample, common, format);

    SpectrumArgs spectrum;
    auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues of the scaled adjacency matrix");
    c_spectrum->add_option("--in", spectrum.source.in, "edge-list file");
    c_spectrum->add_option("--graph", spectrum.source.fixture, "cycle:N, complete:N, tree:D:Z, regtree:D:Z");
    c_spectrum->add_option("--n", spectrum.source.n);
    c_spectrum->add_option("--d", spectrum.source.d);
    c_spectrum->add_option("--scale", spectrum.scale, "default (d-1)^{-1/2} for regular graphs, else 1");
    c_spectrum->add_flag("--vectors", spectrum.vectors, "also write eigenvectors to <out>.vectors.csv");
    add_common(c_spectrum, common, format);

    TreeArgs tree;
    std::string kind = "almost";
    auto* c_tree = app.add_subcommand("tree", "closed-form tree resolvents, spectrum and root masses");
    c_tree->add_option("--d", tree.d)->required();
    c_tree->add_option("--zeta", tree.zeta)->required();
    c_tree->add_option("--kind", kind)->check(CLI::IsMember({"almost", "regular"}));
    c_tree->add_option("--z-re", tree.z_re);
    c_tree->add_option("--z-im", tree.z_im);
    c_tree->add_flag("--crosscheck", tree.crosscheck, "compare against dense linear algebra");
    add_common(c_tree, common, format);

    EsdArgs esd;
    auto* c_esd = app.add_subcommand("esd", "KS distances and Stieltjes errors over sampled graphs");
    c_esd->add_option("--n", esd.n)->required();
    add_degree(c_esd, esd.degree);
    c_esd->add_option("--alpha", esd.alpha);
    c_esd->add_option("--trials", esd.trials);
    c_esd->add_option("--grid", esd.grid_points);
    add_common(c_esd, common, format);

    LocalLawArgs locallaw;
    auto* c_local = app.add_subcommand("locallaw", "interval-count sweep against the semicircle");
    c_local->add_option("--n", locallaw.n)->required();
    add_degree(c_local, locallaw.degree);
    c_local->add_option("--alpha", locallaw.alpha);
    c_local->add_option("--delta", locallaw.delta);
    c_local->add_option("--trials", locallaw.trials);
    c_local->add_flag("--self-test", locallaw.self_test, "use exact semicircle quantiles instead of graphs");
    add_common(c_local, common, format);

    CensusArgs census;
    auto* c_census = app.add_subcommand("census", "cycle counts and acyclic neighborhoods");
    c_census->add_option("--n", census.n);
    c_census->add_option("--d", census.d);
    c_census->add_option("--graph", census.fixture, "named fixture instead of sampling");
    c_census->add_option("--r", census.r);
    c_census->add_option("--s-max", census.s_max);
    c_census->add_option("--trials", census.trials);
    add_common(c_census, common, format);

    DelocArgs deloc;
    auto* c_deloc = app.add_subcommand("deloc", "adversarial eigenvector localization");
    c_deloc->add_option("--n", deloc.n);
    add_degree(c_deloc, deloc.degree);
    c_deloc->add_option("--graph", deloc.fixture, "identity:N or cycle:N");
    c_deloc->add_option("--alpha", deloc.alpha);
    c_deloc->add_option("--delta", deloc.delta);
    c_deloc->add_option("--L", deloc.L);
    c_deloc->add_option("--trials", deloc.trials);
    add_common(c_deloc, common, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    common.format = format == "json" ? Format::Json : Format::Csv;

    try {
        json summary;
        if (*c_sample) {
            summary = cmd_sample(sample, common);
        } else if (*c_spectrum) {
            summary = cmd_spectrum(spectrum, common);
        } else if (*c_tree) {
            tree.kind = kind == "regular" ? TreeKind::Regular : TreeKind::AlmostRegular;
            summary = cmd_tree(tree, common);
        } else if (*c_esd) {
            summary = cmd_esd(esd, common);
        } else if (*c_local) {
            summary = cmd_locallaw(locallaw, common);
        } else if (*c_census) {
            summary = cmd_census(census, common);
        } else if (*c_deloc) {
            summary = cmd_deloc(deloc, common);
        }
        // Summaries go to stdout alongside files, or to stderr when the
        // primary artifact itself was streamed to stdout.
        const bool streamed = common.out.empty();
        const bool primary_is_summary = *c_tree || *c_deloc;
        if (!primary_is_summary) {
            (streamed ? std::cerr : std::cout) << summary.dump(2) << '\n';
        } else if (!streamed) {
            std::cout << summary.dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 0;
}
