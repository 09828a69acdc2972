#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "symineq/json_io.hpp"
#include "symineq/paperlab.hpp"
#include "symineq/partition.hpp"
#include "symineq/positivity.hpp"
#include "symineq/scan.hpp"
#include "symineq/symfun.hpp"

namespace {

using namespace symineq;

struct CommonFlags {
    long samples = 1000;
    unsigned long long seed = 0;
    int ds_depth = 8;
    long branch_budget = 1000000;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::string cache_path;
    bool no_cache = false;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, int ds_default) {
    f.ds_depth = ds_default;
    cmd->add_option("--samples", f.samples, "random simplex samples per check");
    cmd->add_option("--seed", f.seed, "sampler seed");
    cmd->add_option("--ds-depth", f.ds_depth,
                    "difference-substitution depth budget (0 disables)");
    cmd->add_option("--branch-budget", f.branch_budget,
                    "difference-substitution branch budget");
    cmd->add_option("--threads", f.threads, "worker threads for scans");
    cmd->add_option("--cache", f.cache_path, "verdict cache file (JSON)");
    cmd->add_flag("--no-cache", f.no_cache, "ignore --cache");
    cmd->add_flag("--timings", f.timings, "include per-check ms in JSON output");
}

std::optional<ScanCache> open_cache(const CommonFlags& f) {
    if (f.no_cache || f.cache_path.empty())
        return std::nullopt;
    return ScanCache(f.cache_path);
}

int report_exit(const LemmaReport& rep) {
    std::string o = rep.overall();
    if (o == "pass")
        return 0;
    if (o == "unknown")
        return 2;
    return 1;
}

void print_report(const LemmaReport& rep, bool timings) {
    std::cout << report_to_json(rep, timings).dump() << "\n";
    std::cerr << rep.lemma << ": " << rep.overall() << "\n";
    for (const auto& c : rep.checks) {
        std::cerr << "  [" << c.status << "] " << c.name;
        if (!c.detail.empty())
            std::cerr << " - " << c.detail;
        std::cerr << " (" << c.ms << " ms)\n";
    }
}

int run_partitions(int d) {
    auto pars = enumerate_partitions(d);
    for (const auto& p : pars)
        std::cout << partition_to_json(p).dump() << "\n";
    std::cerr << "p(" << d << ") = " << pars.size() << "\n";
    return 0;
}

int run_majorize(const std::string& mu_s, const std::string& lam_s) {
    Partition mu = Partition::parse(mu_s);
    Partition lam = Partition::parse(lam_s);
    bool ge = majorizes(mu, lam);
    bool le = majorizes(lam, mu);
    json j;
    j["mu"] = partition_to_json(mu);
    j["lambda"] = partition_to_json(lam);
    j["majorizes"] = ge;
    j["majorized_by"] = le;
    j["comparable"] = ge || le;
    std::cout << j.dump() << "\n";
    std::cerr << mu.str() << (ge ? " >= " : (le ? " <= " : " incomparable with "))
              << lam.str() << " (majorization)\n";
    return 0;
}

int run_reduce(const std::string& fam_s, int n, const std::string& lam_s, int u) {
    SymFamily fam = family_from_string(fam_s);
    Partition lam = Partition::parse(lam_s);
    if (u < 0 || u > n)
        throw domain_error("u must lie in 0..n");
    UniPoly r = two_block(fam, n, lam, u);
    json j;
    j["family"] = family_letter(fam);
    j["n"] = n;
    j["lambda"] = partition_to_json(lam);
    j["u"] = u;
    j["poly"] = poly_to_json(r);
    std::cout << j.dump() << "\n";
    std::cerr << family_letter(fam) << "_{" << n << "," << lam.str() << "}(t_" << u
              << ",1_" << (n - u) << ") = " << r.str() << "\n";
    return 0;
}

int run_check_pair(const std::string& fam_s, int n, const std::string& mu_s,
                   const std::string& lam_s, const CommonFlags& f) {
    SymFamily fam = family_from_string(fam_s);
    Partition mu = Partition::parse(mu_s);
    Partition lam = Partition::parse(lam_s);
    if (mu.weight() != lam.weight())
        throw domain_error("mu and lambda must have equal weight");

    json out;
    out["check"] = "pair";
    out["family"] = family_letter(fam);
    out["n"] = n;
    out["mu"] = partition_to_json(mu);
    out["lambda"] = partition_to_json(lam);
    out["majorizes"] = majorizes(mu, lam);
    out["majorized_by"] = majorizes(lam, mu);
    out["samples"] = f.samples;
    out["seed"] = f.seed;

    bool negative = false, unknown = false;

    BigInt c_mu = norm_const(fam, n, mu).get_num();
    BigInt c_lam = norm_const(fam, n, lam).get_num();
    BigInt d = lcm(c_mu, c_lam);
    BigInt a = d / c_mu, b = d / c_lam;

    bool rhs_holds = true;
    json rhs = json::array();
    for (int uu = 0; uu <= n; ++uu) {
        UniPoly nu = Rational(a) * two_block(fam, n, mu, uu) -
                     Rational(b) * two_block(fam, n, lam, uu);
        Verdict v = nonneg_on_ray(nu);
        json vj = verdict_to_json(v);
        vj["u"] = uu;
        rhs.push_back(std::move(vj));
        if (v.status == VerdictStatus::NegativeWitness) {
            rhs_holds = false;
            negative = true;
        } else if (v.status == VerdictStatus::Unknown) {
            rhs_holds = false;
            unknown = true;
        }
    }
    out["rhs"] = rhs_holds ? "holds" : "fails";
    out["rhs_verdicts"] = rhs;

    auto sign_eval = [&](const std::vector<long>& c) -> Rational {
        std::vector<BigInt> xs(c.begin(), c.end());
        return Rational(a * eval_generator(fam, n, mu, xs) -
                        b * eval_generator(fam, n, lam, xs));
    };
    auto value_at = [&](const std::vector<Rational>& pt) -> Rational {
        return eval_generator_rat(fam, n, mu, pt) / Rational(c_mu) -
               eval_generator_rat(fam, n, lam, pt) / Rational(c_lam);
    };
    auto hit = sample_search(sign_eval, value_at, n, f.samples, f.seed);
    if (hit) {
        negative = true;
        Verdict v;
        v.status = VerdictStatus::NegativeWitness;
        v.certificate = "sampling";
        v.witness = Witness{hit->point, hit->value};
        v.samples_used = hit->index + 1;
        out["sampling"] = verdict_to_json(v);
    } else {
        json s;
        s["status"] = "NoNegativeFound";
        s["samples"] = f.samples;
        out["sampling"] = s;
    }

    if (f.ds_depth > 0) {
        MultiPoly num = normalized_diff(fam, n, mu, lam).first;
        Verdict v = ds_nonneg_on_simplex(num, f.ds_depth, f.branch_budget);
        out["ds"] = verdict_to_json(v);
        if (v.status == VerdictStatus::NegativeWitness)
            negative = true;
        else if (v.status == VerdictStatus::Unknown)
            unknown = true;
    }

    std::cout << out.dump() << "\n";
    int code = negative ? 1 : (unknown ? 2 : 0);
    std::cerr << "check-pair " << family_letter(fam) << " n=" << n << " " << mu.str()
              << " vs " << lam.str() << ": "
              << (negative ? "negative witness found"
                           : (unknown ? "no violation found (certification incomplete)"
                                      : "all checks passed"))
              << "\n";
    return code;
}

int run_repro(const std::string& id, int d, int n, int n_max, int m_max, int d_max,
              const CommonFlags& f) {
    auto cache = open_cache(f);
    LemmaReport rep;
    if (id == "w") {
        rep = verify_W();
    } else if (id == "j2") {
        rep = verify_J2();
    } else if (id == "boundary") {
        rep = verify_boundary_gap();
    } else if (id == "relax") {
        rep = verify_relaxation_chain(n_max, m_max);
    } else if (id == "family") {
        FamilyOptions fo;
        fo.samples = f.samples;
        fo.seed = f.seed;
        fo.ds_depth = f.ds_depth;
        fo.branch_budget = f.branch_budget;
        rep = verify_family(d, n, fo);
    } else if (id == "hs") {
        rep = verify_hs_counterexample(f.samples, f.seed, f.ds_depth, f.branch_budget);
    } else if (id == "known") {
        ScanOptions so;
        so.samples = f.samples;
        so.seed = f.seed;
        so.threads = f.threads;
        so.cache = cache ? &*cache : nullptr;
        so.emit = [](const std::string& line) { std::cout << line << "\n"; };
        rep = known_results_scan(d_max, n_max, so);
    } else if (id == "conjecture") {
        ScanOptions so;
        so.samples = f.samples;
        so.seed = f.seed;
        so.ds_depth = f.ds_depth;
        so.branch_budget = f.branch_budget;
        so.threads = f.threads;
        so.cache = cache ? &*cache : nullptr;
        so.emit = [](const std::string& line) { std::cout << line << "\n"; };
        rep = conjecture_rhs_harness(d, n, so);
    } else {
        throw domain_error("unknown lemma id: " + id +
                           " (w|j2|boundary|relax|family|hs|known|conjecture)");
    }
    if (cache)
        cache->save();
    print_report(rep, f.timings);
    return report_exit(rep);
}

int run_scan(int d_min, int d_max, int n_min, int n_max, const CommonFlags& f) {
    auto cache = open_cache(f);
    bool negative = false, unknown = false;
    for (int d = std::max(2, d_min); d <= d_max; ++d) {
        for (int n = std::max(2, n_min); n <= n_max; ++n) {
            ScanOptions so;
            so.samples = f.samples;
            so.seed = f.seed;
            so.ds_depth = f.ds_depth;
            so.branch_budget = f.branch_budget;
            so.threads = f.threads;
            so.cache = cache ? &*cache : nullptr;
            so.emit = [&](const std::string& line) {
                std::cout << line << "\n";
                if (line.find("\"refuted\":true") != std::string::npos)
                    negative = true;
                if (line.find("\"ds\":\"Unknown\"") != std::string::npos)
                    unknown = true;
            };
            LemmaReport rep = conjecture_rhs_harness(d, n, so);
            std::cerr << rep.lemma << ": " << rep.overall();
            for (const auto& c : rep.checks)
                if (c.name == "no-refutation")
                    std::cerr << " - " << c.detail;
            std::cerr << "\n";
            if (rep.overall() == "fail")
                negative = true;
        }
    }
    if (cache) {
        cache->save();
        std::cerr << "cache: " << cache->size() << " entries, " << cache->hits()
                  << " hits\n";
    }
    return negative ? 1 : (unknown ? 2 : 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of term-normalized symmetric-function "
                 "inequalities"};
    app.require_subcommand(1);

    int d = 3;
    auto* partitions = app.add_subcommand("partitions", "list Par(d), reverse-lex");
    partitions->add_option("d", d, "weight")->required();

    std::string mu_s, lam_s;
    auto* majorize_cmd = app.add_subcommand("majorize", "compare two partitions");
    majorize_cmd->add_option("mu", mu_s, "comma-separated parts")->required();
    majorize_cmd->add_option("lambda", lam_s, "comma-separated parts")->required();

    std::string fam_s;
    int n = 3, u = 1;
    auto* reduce = app.add_subcommand("reduce", "two-block reduction in t");
    reduce->add_option("family", fam_s, "M|E|P|S|H")->required();
    reduce->add_option("n", n, "number of variables")->required();
    reduce->add_option("lambda", lam_s, "comma-separated parts")->required();
    reduce->add_option("u", u, "t-block size")->required();

    CommonFlags pair_flags;
    auto* pair = app.add_subcommand("check-pair", "certify or falsify F_mu >= F_lambda");
    pair->add_option("family", fam_s, "M|E|P|S|H")->required();
    pair->add_option("n", n, "number of variables")->required();
    pair->add_option("mu", mu_s, "comma-separated parts")->required();
    pair->add_option("lambda", lam_s, "comma-separated parts")->required();
    add_common(pair, pair_flags, 8);

    CommonFlags repro_flags;
    std::string lemma_id;
    int rd = 8, rn = 3, rn_max = 4, rm_max = 6, rd_max = 5;
    auto* repro = app.add_subcommand("repro", "machine-verify a published result");
    repro->add_option("id", lemma_id, "w|j2|boundary|relax|family|hs|known|conjecture")
        ->required();
    repro->add_option("--d", rd, "degree (family, conjecture)");
    repro->add_option("--n", rn, "variables (family, conjecture)");
    repro->add_option("--n-max", rn_max, "cap on n (relax, known)");
    repro->add_option("--m-max", rm_max, "cap on m (relax)");
    repro->add_option("--d-max", rd_max, "cap on d (known)");
    add_common(repro, repro_flags, 8);

    CommonFlags scan_flags;
    int sd_min = 2, sd_max = 8, sn_min = 2, sn_max = 4;
    auto* scan = app.add_subcommand("scan", "conjecture harness over d and n ranges");
    scan->add_option("--d-min", sd_min, "smallest degree");
    scan->add_option("--d-max", sd_max, "largest degree")->required();
    scan->add_option("--n-min", sn_min, "smallest n");
    scan->add_option("--n-max", sn_max, "largest n")->required();
    add_common(scan, scan_flags, 0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (partitions->parsed())
            return run_partitions(d);
        if (majorize_cmd->parsed())
            return run_majorize(mu_s, lam_s);
        if (reduce->parsed())
            return run_reduce(fam_s, n, lam_s, u);
        if (pair->parsed())
            return run_check_pair(fam_s, n, mu_s, lam_s, pair_flags);
        if (repro->parsed())
            return run_repro(lemma_id, rd, rn, rn_max, rm_max, rd_max, repro_flags);
        if (scan->parsed())
            return run_scan(sd_min, sd_max, sn_min, sn_max, scan_flags);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const divisibility_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
