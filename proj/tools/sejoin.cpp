#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"

using namespace sejoin;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;

std::pair<Integer, Integer> parse_pair(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw DomainError(std::string(what) + " must look like A,B");
    return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
}

bool record_ok(const SERecord& r) {
    if (!r.error.empty()) return false;
    if (!r.ray || !r.ray->quasi_regular) return true;
    return r.ke.ke1 && r.ke.ke2 && r.positive;
}

int print_record(const SERecord& r, int digits) {
    std::cout << record_json(r, digits).dump(2) << "\n";
    return record_ok(r) ? exit_ok : exit_verify;
}

nlohmann::json load_record(const std::string& path, std::size_t index) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
    if (doc.contains("records")) {
        if (index >= doc["records"].size()) throw DomainError(path + ": record index out of range");
        return doc["records"][index];
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sasaki-Einstein joins Y^{p,q} * S^3_w: exact construction and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    int digits = 40;
    app.add_option("--digits", digits, "decimal places for irrational values")->check(CLI::Range(1, 1000));

    auto* ypq = app.add_subcommand("ypq", "list quasi-regular Y^{p,q}");
    long pmax = 0;
    bool homogeneous = false;
    ypq->add_option("--max", pmax, "largest p")->required()->check(CLI::Range(2L, 100000L));
    ypq->add_flag("--homogeneous", homogeneous, "also list the homogeneous S^2 x S^3");

    auto* join = app.add_subcommand("join", "build one join record");
    long p = 0, q = 0;
    std::string k_text, w_text, l_text;
    join->add_option("--p", p)->required();
    join->add_option("--q", q)->required();
    auto* k_opt = join->add_option("--k", k_text, "rational k > 1, NUM/DEN");
    auto* w_opt = join->add_option("--w", w_text, "weights W1,W2");
    k_opt->excludes(w_opt);
    join->add_option("--l", l_text, "explicit L1,L2 instead of the canonical choice")->needs(w_opt);

    auto* family = app.add_subcommand("family", "member k2 = 255 t + 10 joined with w = (17,3)");
    long t = 0;
    family->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify-paper", "re-derive the worked examples");

    auto* profile = app.add_subcommand("profile", "tabulate Theta(z) for an exported record");
    std::string record_path;
    int grid = 10;
    std::size_t index = 0;
    bool decimal = false;
    profile->add_option("--record", record_path)->required();
    profile->add_option("--grid", grid)->check(CLI::Range(1, 100000));
    profile->add_option("--index", index, "record index inside an export document");
    profile->add_flag("--decimal", decimal, "add a 50-digit decimal column");

    auto* exp = app.add_subcommand("export", "write a catalog");
    std::string format, out_path;
    long exp_max = 0, w_bound = 0, family_t = 0;
    std::vector<std::string> k_list;
    exp->add_option("--format", format)->required()->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", out_path)->required();
    auto* max_opt = exp->add_option("--max", exp_max, "Y^{p,q} with p <= P")->check(CLI::Range(2L, 100000L));
    exp->add_option("--k", k_list, "rational k values (repeatable)")->needs(max_opt);
    exp->add_option("--w-bound", w_bound, "all coprime w with w1 <= B")->needs(max_opt);
    exp->add_option("--family", family_t, "family members t = 1..T")->excludes(max_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*ypq) {
            if (homogeneous) {
                auto h = homogeneous_s2xs3();
                std::cout << "p=1 q=0 v2=(1,1) m2=1 a=0 I=" << h.fano_index << " (homogeneous)\n";
            }
            for (const auto& y : enumerate_ypq(pmax))
                std::cout << "p=" << y.p << " q=" << y.q << " v2=(" << y.v2_0 << "," << y.v2_inf << ") m2=" << y.m2
                          << " a=" << y.a << " I=" << y.fano_index << "\n";
            return exit_ok;
        }
        if (*join) {
            auto y = solve_ypq(p, q);
            if (!k_text.empty()) return print_record(enumerate_joins(y, {parse_rational(k_text)}).front(), digits);
            if (w_text.empty()) throw DomainError("join needs --k or --w");
            auto [w1, w2] = parse_pair(w_text, "--w");
            if (l_text.empty()) return print_record(build_record(y, w1, w2), digits);
            auto [l1, l2] = parse_pair(l_text, "--l");
            return print_record(build_record(make_join_spec(y, l1, l2, w1, w2)), digits);
        }
        if (*family) {
            auto rec = enumerate_joins(family_member(Integer(255 * t + 10)), {Rational(3)}).front();
            return print_record(rec, digits);
        }
        if (*verify) {
            auto rep = verify_worked_examples();
            for (const auto& s : rep.passed) std::cout << "PASS " << s << "\n";
            for (const auto& s : rep.failures) std::cout << "FAIL " << s << "\n";
            std::cout << rep.blocks << " blocks, " << rep.failures.size() << " failures\n";
            return rep.ok() ? exit_ok : exit_verify;
        }
        if (*profile) {
            auto prof = profile_from_json(load_record(record_path, index));
            std::cout << profile_table(prof, grid, decimal ? 50 : 0);
            return exit_ok;
        }
        if (*exp) {
            std::vector<SERecord> records;
            if (family_t > 0) {
                for (long i = 1; i <= family_t; ++i)
                    for (auto& r : enumerate_joins(family_member(Integer(255 * i + 10)), {Rational(3)}))
                        records.push_back(std::move(r));
            } else if (exp_max > 0) {
                std::vector<Rational> ks;
                for (const auto& k : k_list) ks.push_back(parse_rational(k));
                if (ks.empty() && w_bound == 0) ks.push_back(2);
                for (const auto& y : enumerate_ypq(exp_max)) {
                    for (auto& r : enumerate_joins(y, ks)) records.push_back(std::move(r));
                    if (w_bound > 0)
                        for (auto& r : enumerate_joins(y, w_bound)) records.push_back(std::move(r));
                }
            } else {
                throw DomainError("export needs --max P (with --k or --w-bound) or --family T");
            }
            write_export_file(records, format == "json" ? ExportFormat::Json : ExportFormat::Csv, out_path, digits);
            std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
            return exit_ok;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ConsistencyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return exit_verify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verify;
    }
    return exit_ok;
}
