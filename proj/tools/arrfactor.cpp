#include "arrfactor/arrfactor.hpp"
#include "classification_checks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace arrfactor;

namespace {

enum Exit { exit_yes = 0, exit_no = 1, exit_usage = 2, exit_undecided = 3 };

/// Malformed input of any kind; reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string catalog;
    std::string file;
};

struct Loaded {
    std::string name;
    Arrangement arrangement;
};

Loaded load(const Input& in)
{
    if (in.catalog.empty() == in.file.empty()) {
        throw InputError("give exactly one of --catalog NAME or --file PATH");
    }
    if (!in.catalog.empty()) {
        try {
            return {in.catalog, from_catalog(in.catalog)};
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    std::ifstream f(in.file);
    if (!f) {
        throw InputError("cannot open " + in.file);
    }
    try {
        return {in.file, read_arrangement(f)};
    } catch (const ParseError& e) {
        throw InputError(in.file + ": " + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open " + path);
    }
    try {
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json poly_json(const IntPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return Json{{"coefficients", coeffs}, {"string", p.to_string()}};
}

Json arrangement_json(const Loaded& in, const IntersectionLattice& lat)
{
    const auto& a = in.arrangement;
    return Json{{"name", in.name},
                {"dim", a.dim()},
                {"conductor", a.conductor()},
                {"hyperplanes", a.size()},
                {"rank", lat.rank()}};
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const Input& in)
{
    const auto loaded = load(in);
    const auto& a = loaded.arrangement;
    const auto lat = build_lattice(a);
    Json by_rank = Json::array();
    for (std::size_t k = 0; k <= lat.rank(); ++k) {
        by_rank.push_back(lat.stratum_size(k));
    }
    const auto chi = char_poly(lat);
    const auto roots = integer_root_multiset(chi);
    print(Json{{"schema", 1},
               {"name", loaded.name},
               {"dim", a.dim()},
               {"conductor", a.conductor()},
               {"hyperplanes", a.size()},
               {"rank", lat.rank()},
               {"fingerprint", a.fingerprint()},
               {"flats", lat.size()},
               {"flats_by_rank", by_rank},
               {"char_poly", poly_json(chi)},
               {"integer_roots", roots ? Json(*roots) : Json(nullptr)}});
    return 0;
}

struct CheckOptions {
    std::string property;
    std::uint64_t budget = 0;
    std::string partition_file;
    std::string certificate_file;
};

struct Outcome {
    Answer answer = Answer::no;
    Json certificate = nullptr;
    Json stats = Json::object();
    std::string reason;
};

Answer from_status(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return Answer::yes;
    case SearchStatus::none:
        return Answer::no;
    case SearchStatus::budget_exceeded:
        break;
    }
    return Answer::undecided;
}

Outcome check_nice(const IntersectionLattice& lat, const CheckOptions& opt, const std::optional<Json>& supplied)
{
    Outcome out;
    const auto n = lat.arrangement().size();
    if (supplied) {
        Partition pi;
        try {
            pi = supplied->is_array() ? blocks_from_json(*supplied, n) : partition_from_json(*supplied);
        } catch (const std::exception& e) {
            throw InputError(std::string("partition: ") + e.what());
        }
        if (pi.size() != n) {
            throw InputError("partition covers " + std::to_string(pi.size()) + " hyperplanes, arrangement has "
                             + std::to_string(n));
        }
        out.stats["mode"] = "verify";
        if (is_nice(lat, pi)) {
            out.answer = Answer::yes;
            out.certificate = partition_to_json(pi);
        } else {
            out.reason = "supplied partition is not nice";
        }
        return out;
    }
    const auto r = find_nice(lat, NiceSearchOptions{opt.budget, 0});
    out.answer = from_status(r.status);
    out.stats = Json{{"mode", "search"}, {"nodes", r.nodes}, {"block_sizes", r.block_sizes}};
    if (r.partition) {
        out.certificate = partition_to_json(*r.partition);
    }
    out.reason = r.reason;
    return out;
}

Outcome check_supersolvable(const IntersectionLattice& lat, const std::optional<Json>& supplied)
{
    Outcome out;
    std::optional<std::vector<FlatId>> chain;
    if (supplied) {
        out.stats["mode"] = "verify";
        try {
            chain = chain_from_json(lat, *supplied);
        } catch (const std::exception& e) {
            throw InputError(std::string("certificate: ") + e.what());
        }
        try {
            supersolvable_to_nice(lat, *chain);
        } catch (const std::invalid_argument& e) {
            out.reason = e.what();
            return out;
        }
    } else {
        out.stats["mode"] = "search";
        chain = modular_chain(lat);
        if (!chain) {
            out.reason = "no maximal chain of modular flats";
            return out;
        }
    }
    out.answer = Answer::yes;
    out.certificate = chain_to_json(lat, *chain);
    out.certificate["nice_partition"] = partition_to_json(supersolvable_to_nice(lat, *chain));
    return out;
}

Outcome check_indfactored(const Arrangement& a, const CheckOptions& opt, const std::optional<Json>& supplied,
                          const std::optional<Json>& partition)
{
    Outcome out;
    if (supplied) {
        out.stats["mode"] = "verify";
        std::shared_ptr<const IfacCertificate> cert;
        try {
            cert = ifac_from_json(*supplied);
        } catch (const std::exception& e) {
            throw InputError(std::string("certificate: ") + e.what());
        }
        if (verify_ifac_certificate(a, *cert)) {
            out.answer = Answer::yes;
            out.certificate = ifac_to_json(*cert);
        } else {
            out.reason = "certificate does not verify";
        }
        return out;
    }
    IfacResult r;
    if (partition) {
        Partition pi;
        try {
            pi = partition->is_array() ? blocks_from_json(*partition, a.size()) : partition_from_json(*partition);
        } catch (const std::exception& e) {
            throw InputError(std::string("partition: ") + e.what());
        }
        r = is_inductively_factored_pair(a, pi, opt.budget);
        out.stats["mode"] = "search-pair";
    } else {
        r = is_inductively_factored(a, opt.budget);
        out.stats["mode"] = "search";
    }
    out.answer = r.answer;
    out.stats["nodes"] = r.nodes;
    if (r.certificate) {
        out.certificate = ifac_to_json(*r.certificate);
    } else if (r.answer == Answer::undecided) {
        out.reason = "node budget exhausted";
    } else {
        out.reason = "no inductive factorization";
    }
    return out;
}

Outcome check_indfree(const Arrangement& a, const CheckOptions& opt, const std::optional<Json>& supplied)
{
    Outcome out;
    if (supplied) {
        out.stats["mode"] = "verify";
        std::shared_ptr<const IfCertificate> cert;
        try {
            cert = if_from_json(a, *supplied);
        } catch (const std::exception& e) {
            throw InputError(std::string("certificate: ") + e.what());
        }
        if (verify_if_certificate(a, *cert)) {
            out.answer = Answer::yes;
            out.certificate = if_to_json(a, *cert);
        } else {
            out.reason = "certificate does not verify";
        }
        return out;
    }
    const auto r = is_inductively_free(a, opt.budget);
    out.answer = r.answer;
    out.stats = Json{{"mode", "search"}, {"nodes", r.nodes}};
    if (r.certificate) {
        out.certificate = if_to_json(a, *r.certificate);
    } else if (r.answer == Answer::undecided) {
        out.reason = "node budget exhausted";
    } else {
        out.reason = "not inductively free";
    }
    return out;
}

Outcome check_hereditary(const IntersectionLattice& lat, const CheckOptions& opt, const std::optional<Json>& supplied)
{
    Outcome out;
    if (supplied) {
        out.stats["mode"] = "verify";
        bool ok = false;
        try {
            ok = verify_hereditary_json(lat, *supplied);
        } catch (const std::exception& e) {
            throw InputError(std::string("certificate: ") + e.what());
        }
        if (ok) {
            out.answer = Answer::yes;
            out.certificate = *supplied;
        } else {
            out.reason = "certificate does not verify";
        }
        return out;
    }
    const auto r = is_hereditarily_factored(lat, HereditaryMode::direct, opt.budget);
    out.answer = r.answer;
    out.stats = Json{{"mode", "search"}, {"restrictions_checked", r.entries.size()}};
    if (r.answer == Answer::yes) {
        out.certificate = hereditary_to_json(r);
    } else if (!r.entries.empty() && r.answer == Answer::no) {
        out.reason = "restriction to flat " + Json(r.entries.back().support.indices()).dump() + " is not nice";
    } else if (r.answer == Answer::undecided) {
        out.reason = "node budget exhausted";
    }
    return out;
}

int cmd_check(const Input& in, const CheckOptions& opt)
{
    const auto loaded = load(in);
    std::optional<Json> certificate;
    std::optional<Json> partition;
    if (!opt.certificate_file.empty()) {
        certificate = read_json_file(opt.certificate_file);
    }
    if (!opt.partition_file.empty()) {
        partition = read_json_file(opt.partition_file);
    }
    if (partition && opt.property != "nice" && opt.property != "indfactored") {
        throw InputError("--partition applies to 'nice' and 'indfactored' only");
    }
    if (opt.property == "nice" && partition) {
        if (certificate) {
            throw InputError("give --partition or --certificate, not both");
        }
        certificate = partition;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto lat = build_lattice(loaded.arrangement);
    Outcome out;
    if (opt.property == "nice") {
        out = check_nice(lat, opt, certificate);
    } else if (opt.property == "supersolvable") {
        out = check_supersolvable(lat, certificate);
    } else if (opt.property == "indfactored") {
        out = check_indfactored(loaded.arrangement, opt, certificate, partition);
    } else if (opt.property == "indfree") {
        out = check_indfree(loaded.arrangement, opt, certificate);
    } else {
        out = check_hereditary(lat, opt, certificate);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    print(Json{{"schema", 1},
               {"property", opt.property},
               {"answer", to_string(out.answer)},
               {"certificate", out.certificate},
               {"timing_ms", ms},
               {"fingerprint", loaded.arrangement.fingerprint()},
               {"arrangement", arrangement_json(loaded, lat)},
               {"stats", out.stats},
               {"reason", out.reason.empty() ? Json(nullptr) : Json(out.reason)}});
    switch (out.answer) {
    case Answer::yes:
        return exit_yes;
    case Answer::no:
        return exit_no;
    case Answer::undecided:
        break;
    }
    return exit_undecided;
}

int cmd_export(const std::string& name, const std::string& output)
{
    Arrangement a = [&] {
        try {
            return from_catalog(name);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const std::string text = to_text(a, name);
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(output);
    if (!f || !(f << text)) {
        throw InputError("cannot write " + output);
    }
    return 0;
}

int cmd_list()
{
    for (const auto& e : catalog_entries()) {
        std::cout << e.name << "\t" << e.hyperplanes << " hyperplanes, rank " << e.rank << ", conductor "
                  << e.conductor << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& only)
{
    auto checks = checks::all_checks();
    if (!only.empty()) {
        std::erase_if(checks, [&](const checks::Check& c) { return c.id != only; });
        if (checks.empty()) {
            std::string ids;
            for (const auto& c : checks::all_checks()) {
                ids += " " + c.id;
            }
            throw InputError("unknown check '" + only + "'; known:" + ids);
        }
    }
    std::vector<std::string> failed;
    for (const auto& c : checks) {
        const auto start = std::chrono::steady_clock::now();
        checks::CheckOutcome r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", s);
        std::cout << (r.pass ? "PASS " : "FAIL ") << c.id << " (" << t << ") " << c.title << "\n   " << r.detail
                  << std::endl;
        if (!r.pass) {
            failed.push_back(c.id);
        }
    }
    if (!failed.empty()) {
        std::cerr << "failed:";
        for (const auto& id : failed) {
            std::cerr << " " << id;
        }
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

void add_input(CLI::App* cmd, Input& in)
{
    auto* c = cmd->add_option("--catalog", in.catalog, "catalog name, e.g. G(3,3,3), braid:3, H3");
    auto* f = cmd->add_option("--file", in.file, "arrangement text file");
    c->excludes(f);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Factored and nice partitions of hyperplane arrangements"};
    app.require_subcommand(1);

    Input in;
    CheckOptions check;
    std::string export_name;
    std::string export_output;
    std::string only;

    auto* info = app.add_subcommand("info", "lattice summary and characteristic polynomial");
    add_input(info, in);

    auto* chk = app.add_subcommand("check", "decide a property and print a JSON verdict");
    chk->add_option("property", check.property, "nice | supersolvable | indfactored | indfree | hereditary-nice")
        ->required()
        ->check(CLI::IsMember({"nice", "supersolvable", "indfactored", "indfree", "hereditary-nice"}));
    add_input(chk, in);
    chk->add_option("--budget", check.budget, "search node limit (0 = unlimited)");
    chk->add_option("--partition", check.partition_file, "JSON partition to verify (or to start from)");
    chk->add_option("--certificate", check.certificate_file, "JSON certificate to verify instead of searching");

    auto* exp = app.add_subcommand("export", "write a catalog arrangement in text form");
    exp->add_option("--catalog", export_name, "catalog name")->required();
    exp->add_option("--output,-o", export_output, "output file (default stdout)");

    auto* list = app.add_subcommand("list", "list catalog arrangements");

    auto* verify = app.add_subcommand("verify-paper", "run the classification checks");
    verify->add_option("--only", only, "run a single check by id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*info) {
            return cmd_info(in);
        }
        if (*chk) {
            return cmd_check(in, check);
        }
        if (*exp) {
            return cmd_export(export_name, export_output);
        }
        if (*list) {
            return cmd_list();
        }
        return cmd_verify(only);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
