#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latcover/cli.hpp"

namespace {

std::string read_document(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

latcover::Json tuple_json(const std::string& csv) {
    latcover::Json arr = latcover::Json::array();
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (...) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            throw std::invalid_argument("cannot parse integer list \"" + csv + "\"");
        arr.push_back(v);
    }
    if (arr.empty()) throw std::invalid_argument("empty integer list");
    return arr;
}

latcover::ProblemSpec spec_from_document(const std::string& path, const std::string& kind) {
    latcover::ProblemSpec spec = latcover::parse_spec(read_document(path));
    if (spec.kind != kind)
        throw std::invalid_argument("document kind \"" + spec.kind + "\" does not match the " +
                                    kind + " subcommand");
    return spec;
}

int emit(const latcover::Report& rep, bool json_out) {
    std::cout << (json_out ? latcover::render_json(rep) : latcover::render_text(rep));
    return latcover::report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice covers, gluing data and counting series"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit the report as JSON");

    auto* deck = app.add_subcommand("deck", "deck group of the cover attached to (H, s)");
    deck->fallthrough();
    std::string deck_file;
    deck->add_option("file", deck_file, "problem document (JSON; \"-\" reads stdin)");
    long long deck_rank = 0;
    deck->add_option("--rank", deck_rank, "component rank for inline specs");
    std::vector<std::string> deck_s;
    deck->add_option("--s", deck_s, "contact tuple, comma separated; repeat per component");
    std::vector<std::string> deck_h;
    deck->add_option("--h-gen", deck_h, "subgroup generator, comma separated; repeatable");

    auto* psi = app.add_subcommand("psi", "sheet-difference class of a fiber pair");
    psi->fallthrough();
    std::string psi_file;
    psi->add_option("file", psi_file, "problem document (JSON; \"-\" reads stdin)")->required();

    auto* conv = app.add_subcommand("convolve", "convolution product of two covers");
    conv->fallthrough();
    std::string conv_file;
    conv->add_option("file", conv_file, "problem document (JSON; \"-\" reads stdin)")->required();

    auto* series = app.add_subcommand("series", "coefficient tables of the counting series");
    series->fallthrough();
    std::string family;
    series->add_option("family", family, "one of G, eta12, F, H")->required();
    long long genus = -1;
    series->add_option("genus", genus, "genus, for family F");
    long long series_order = 30;
    series->add_option("--order", series_order, "truncation order");

    auto* verify = app.add_subcommand("verify", "named verification suites");
    verify->fallthrough();
    std::string suite;
    verify->add_option("suite", suite,
                       "one of snf, equivariance, convolution, bryan-leung, trr, sympsum")
        ->required();
    long long v_order = -1, v_trials = -1, v_seed = -1;
    verify->add_option("--order", v_order, "series truncation order");
    verify->add_option("--trials", v_trials, "number of randomized trials");
    verify->add_option("--seed", v_seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        latcover::ProblemSpec spec;
        if (deck->parsed()) {
            if (!deck_file.empty()) {
                spec = spec_from_document(deck_file, "deck");
            } else {
                if (deck_s.empty() || deck_rank < 1)
                    throw std::invalid_argument(
                        "deck needs either a document or --rank together with --s");
                latcover::Json payload;
                payload["rank"] = deck_rank;
                payload["s"] = latcover::Json::array();
                for (const std::string& t : deck_s) payload["s"].push_back(tuple_json(t));
                if (!deck_h.empty()) {
                    payload["H"] = latcover::Json::array();
                    for (const std::string& t : deck_h) payload["H"].push_back(tuple_json(t));
                }
                spec.kind = "deck";
                spec.payload = std::move(payload);
                latcover::validate_problem_spec(spec);
            }
        } else if (psi->parsed()) {
            spec = spec_from_document(psi_file, "psi");
        } else if (conv->parsed()) {
            spec = spec_from_document(conv_file, "convolve");
        } else if (series->parsed()) {
            latcover::Json payload;
            payload["family"] = family;
            payload["order"] = series_order;
            if (genus >= 0) payload["genus"] = genus;
            spec.kind = "series";
            spec.payload = std::move(payload);
            latcover::validate_problem_spec(spec);
        } else {
            latcover::Json payload;
            payload["suite"] = suite;
            if (v_order >= 0) payload["order"] = v_order;
            if (v_trials >= 0) payload["trials"] = v_trials;
            if (v_seed >= 0) payload["seed"] = v_seed;
            spec.kind = "verify";
            spec.payload = std::move(payload);
            latcover::validate_problem_spec(spec);
        }
        return emit(latcover::run(spec), json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
