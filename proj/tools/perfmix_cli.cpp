// Command-line front end: construct, verify, convert, report.
// Exit codes: 0 PASS/success, 1 FAIL certificate, 2 usage error.

#include "perfmix/census.hpp"
#include "perfmix/construct.hpp"
#include "perfmix/equiv.hpp"
#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/io.hpp"
#include "perfmix/linalg.hpp"
#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/space.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace perfmix;

namespace {

struct Flags {
    int q = 0, m = 0, m1 = 0, m2 = 0, r = -1, alpha = 0, e = 1;
    std::uint64_t gate = kDefaultGate;
    std::uint64_t seed = 1, limit = 10, budget = 200000;
    long position = -1;
    std::string in, out, a, b, partition, qgroups, perm, kind = "coset";
    std::string emit_code, emit_qgroup;
    std::size_t index = 0;
    bool table = false;
};

void check_gate(std::uint64_t g) {
    require(g >= 2 && g <= kGateCeiling, "Usage",
            "--gate must lie in [2, 2^28]");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json perfect_json(const PerfectCert& pc) {
    return json{{"e", pc.e_requested},
                {"packing", pc.packing},
                {"rho", pc.covering},
                {"d", pc.min_distance},
                {"|V|", pc.space_size},
                {"|C|", pc.code_size},
                {"|B_e|", pc.ball},
                {"sphere_identity", pc.sphere_identity},
                {"quasi_perfect", pc.quasi_perfect},
                {"verdict", pc.pass ? "PASS" : "FAIL"}};
}

int run_grm(const Flags& f) {
    if (f.table) {
        bool all_ok = true;
        std::printf("%2s %2s %3s %6s %6s %7s %6s %7s  %s\n", "q", "m", "r", "n",
                    "k", "k.rank", "d", "d.meas", "route");
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            if (f.q && q != f.q) continue;
            for (int m = 1;; ++m) {
                std::uint64_t n = 1;
                for (int i = 0; i < m; ++i) n *= std::uint64_t(q);
                if (n > 64) break;
                if (f.m && m != f.m) continue;
                for (int r = 0; r <= (q - 1) * m; ++r) {
                    GrmCode gc = grm_generate(q, m, r);
                    Matrix g = gc.gen;
                    std::size_t k_rank = rank(g);
                    std::int64_t k = grm_dimension(q, m, r);
                    std::int64_t d = grm_min_distance(q, m, r);
                    DistanceMeasurement meas = measure_grm_distance(gc);
                    bool ok = std::int64_t(k_rank) == k &&
                              (!meas.measured || meas.d == d);
                    all_ok = all_ok && ok;
                    std::printf("%2d %2d %3d %6llu %6lld %7zu %6lld %7s  %s\n", q,
                                m, r, (unsigned long long)n, (long long)k, k_rank,
                                (long long)d,
                                meas.measured ? std::to_string(meas.d).c_str()
                                              : "-",
                                meas.route.c_str());
                }
            }
        }
        return all_ok ? 0 : 1;
    }
    require(f.q && f.m && f.r >= 0, "Usage", "grm needs --q, --m, --r");
    GrmCode gc = grm_generate(f.q, f.m, f.r);
    Matrix g = gc.gen;
    std::size_t k_rank = rank(g);
    std::int64_t k = grm_dimension(f.q, f.m, f.r);
    std::int64_t d = grm_min_distance(f.q, f.m, f.r);
    DistanceMeasurement meas = measure_grm_distance(gc);
    bool ok = std::int64_t(k_rank) == k && (!meas.measured || meas.d == d);
    json cert{{"q", f.q},
              {"m", f.m},
              {"r", f.r},
              {"n", gc.gen.cols},
              {"k_formula", k},
              {"k_rank", k_rank},
              {"d_formula", d},
              {"d_measured", meas.measured ? json(meas.d) : json()},
              {"route", meas.route},
              {"verdict", ok ? "PASS" : "FAIL"}};
    if (!f.emit_code.empty()) write_code_file(f.emit_code, grm_expand(gc, f.gate));
    emit(cert);
    return ok ? 0 : 1;
}

int run_mds2(const Flags& f) {
    require(!f.in.empty(), "Usage", "mds2 needs --in");
    Code c = read_code_file(f.in);
    Mds2Cert cert = is_mds2(c);
    if (cert.pass && !f.emit_qgroup.empty())
        write_quasigroup_file(f.emit_qgroup, quasigroup_from_code(c));
    emit(json{{"in", f.in},
              {"n", cert.n},
              {"d", cert.d},
              {"|C|", cert.size},
              {"expect", cert.expect},
              {"detail", cert.detail},
              {"verdict", cert.pass ? "PASS" : "FAIL"}});
    return cert.pass ? 0 : 1;
}

int run_qgroup(const Flags& f) {
    if (!f.in.empty()) {
        Quasigroup g = read_quasigroup_file(f.in);
        bool latin = is_latin(g);
        if (latin && !f.emit_code.empty())
            write_code_file(f.emit_code, code_from_quasigroup(g));
        emit(json{{"in", f.in},
                  {"arity", g.arity},
                  {"order", g.order},
                  {"verdict", latin ? "PASS" : "FAIL"}});
        return latin ? 0 : 1;
    }
    require(f.q && f.m, "Usage",
            "qgroup needs --in, or --order/--arity to emit a library table");
    std::vector<Quasigroup> lib = quasigroup_library(f.q, f.m);
    require(f.index < lib.size(), "Usage",
            "--index out of range, library holds " + std::to_string(lib.size()));
    require(!f.out.empty(), "Usage", "qgroup generation needs --out");
    write_quasigroup_file(f.out, lib[f.index]);
    emit(json{{"order", f.q},
              {"arity", f.m},
              {"index", f.index},
              {"library_size", lib.size()},
              {"out", f.out},
              {"verdict", "PASS"}});
    return 0;
}

int run_partition(const Flags& f) {
    Partition p = [&] {
        if (f.kind == "coset") {
            require(f.q && f.m, "Usage", "partition --kind coset needs --q, --m");
            return coset_partition_rm(f.q, f.m);
        }
        require(f.kind == "file", "Usage", "--kind must be coset or file");
        require(!f.in.empty(), "Usage", "partition --kind file needs --in");
        return partition_from_file(read_partition_file(f.in));
    }();
    if (f.q) require(p.q == f.q, "ParseError", "--q does not match the file");
    if (f.m) require(p.m == f.m, "ParseError", "--m does not match the file");
    PartitionCert cert = validate_partition(p);
    if (!f.out.empty()) write_partition_file(f.out, p);
    emit(json{{"kind", f.kind},
              {"q", p.q},
              {"m", p.m},
              {"classes", p.classes.size()},
              {"|target|", p.target.size()},
              {"disjoint", cert.disjoint},
              {"covers", cert.covers},
              {"target_mds", cert.target_mds},
              {"classes_rm_like", cert.classes_rm_like},
              {"detail", cert.detail},
              {"verdict", cert.pass ? "PASS" : "FAIL"}});
    return cert.pass ? 0 : 1;
}

int run_construct(const std::string& sub, const Flags& f) {
    require(!f.out.empty(), "Usage", "construct needs --out");

    json params{{"construction", sub}, {"gate", f.gate}, {"out", f.out}};
    auto load_partition = [&](int q, int m) {
        if (f.partition.empty()) return coset_partition_rm(q, m);
        params["partition"] = f.partition;
        return partition_from_file(read_partition_file(f.partition));
    };
    auto load_perm = [&]() -> std::vector<std::size_t> {
        if (f.perm.empty()) return {};
        params["perm"] = f.perm;
        return read_perm_file(f.perm);
    };

    Code c = [&]() -> Code {
        if (sub == "hs") {
            require(f.q && f.m && f.alpha, "Usage", "hs needs --q, --m, --alpha");
            params["q"] = f.q; params["m"] = f.m; params["alpha"] = f.alpha;
            return herzog_schonheim(hs_subgroup_partition(f.q, f.m, f.alpha));
        }
        if (sub == "thm4") {
            require(f.q && f.m, "Usage", "thm4 needs --q, --m");
            params["q"] = f.q; params["m"] = f.m;
            return theorem4_construct(load_partition(f.q, f.m));
        }
        if (sub == "thm5") {
            require(f.q && f.m, "Usage", "thm5 needs --q, --m");
            params["q"] = f.q; params["m"] = f.m;
            return theorem5_concatenate(load_partition(f.q, f.m),
                                        hamming_coset_partition(f.q, f.m),
                                        load_perm());
        }
        if (sub == "heden") {
            require(!f.in.empty() && !f.partition.empty(), "Usage",
                    "heden needs --in (base code) and --partition");
            params["in"] = f.in; params["partition"] = f.partition;
            std::size_t pos = f.position < 0 ? std::size_t(-1)
                                             : std::size_t(f.position);
            if (f.position >= 0) params["position"] = f.position;
            return heden_substitute(
                read_code_file(f.in),
                classes_from_file(read_partition_file(f.partition)), pos);
        }
        if (sub == "doubling") {
            int q = f.q ? f.q : 2;
            require(f.m, "Usage", "doubling needs --m");
            params["q"] = q; params["m"] = f.m;
            std::vector<Code> cpp;
            if (f.in.empty()) {
                cpp = hamming_coset_partition(q, f.m);
            } else {
                params["in"] = f.in;
                cpp = classes_from_file(read_partition_file(f.in));
            }
            return doubling(load_partition(q, f.m), cpp, load_perm());
        }
        if (sub == "prop1") {
            require(f.q && f.m1 && f.m2, "Usage",
                    "prop1 needs --q and block lengths --m1, --m2");
            params["q"] = f.q; params["m1"] = f.m1; params["m2"] = f.m2;
            return prop1_product(space_partition_mds(f.q, f.m1),
                                 linear_mds2(f.q, f.m2));
        }
        require(sub == "thm6", "Usage", "unknown construction");
        require(f.q && f.m1 && f.m2, "Usage", "thm6 needs --q, --m1, --m2");
        params["q"] = f.q; params["m1"] = f.m1; params["m2"] = f.m2;
        std::vector<Partition> aps = default_a_partitions(f.q, f.m1);
        Code driver =
            grm_expand(grm_generate(f.q, f.m2, (f.q - 1) * f.m2 - 2));
        ProductSpec ps;
        ps.m1 = f.m1;
        ps.m2 = f.m2;
        if (f.qgroups.empty()) {
            std::uint64_t l1 = 1, l2 = 1;
            for (int i = 0; i < f.m1; ++i) l1 *= std::uint64_t(f.q);
            for (int i = 0; i < f.m2; ++i) l2 *= std::uint64_t(f.q);
            std::vector<Quasigroup> lib =
                quasigroup_library(int(l1), int(l2) - 1);
            ps.qv.assign(driver.size(), lib.at(0));
        } else {
            params["qgroups"] = f.qgroups;
            ps.qv = read_quasigroup_blocks(f.qgroups);
            if (ps.qv.size() == 1 && driver.size() > 1)
                ps.qv.assign(driver.size(), ps.qv[0]);
        }
        return theorem6_product(aps, driver, ps);
    }();

    bool pass;
    int d, e, rho;
    if (sub == "prop1") {
        Mds2Cert mc = is_mds2(c);
        pass = mc.pass;
        d = mc.d;
        e = packing_radius(c, f.gate);
        rho = covering_radius(c, f.gate);
    } else if (sub == "thm6") {
        int mm = f.m1 + f.m2;
        pass = is_rm_like(c, f.q, mm, (f.q - 1) * mm - 2);
        d = minimum_distance(c);
        e = packing_radius(c, f.gate);
        rho = covering_radius(c, f.gate);
    } else {
        PerfectCert pc = is_perfect(c, 1, f.gate);
        pass = pc.pass;
        d = pc.min_distance;
        e = pc.packing;
        rho = pc.covering;
    }

    json cert{{"construction", sub},
              {"parameters", params},
              {"|V|", c.space().size()},
              {"|C|", c.size()},
              {"d", d},
              {"e", e},
              {"rho", rho},
              {"verdict", pass ? "PASS" : "FAIL"}};
    write_code_file(f.out, c);
    write_file_atomic(f.out + ".json", cert.dump(2) + "\n");
    emit(cert);
    return pass ? 0 : 1;
}

int run_verify(const Flags& f) {
    require(!f.in.empty(), "Usage", "verify perfect needs --in");
    Code c = read_code_file(f.in);
    PerfectCert pc = is_perfect(c, f.e, f.gate);
    json cert = perfect_json(pc);
    cert["in"] = f.in;
    if (!f.out.empty()) write_file_atomic(f.out, cert.dump(2) + "\n");
    emit(cert);
    return pc.pass ? 0 : 1;
}

int run_equiv(const Flags& f) {
    require(!f.a.empty() && !f.b.empty(), "Usage", "equiv needs --a and --b");
    Code a = read_code_file(f.a), b = read_code_file(f.b);
    EquivResult res = are_equivalent(a, b, f.budget);
    const char* verdict = res.verdict == EquivVerdict::equivalent ? "equivalent"
                          : res.verdict == EquivVerdict::nonequivalent
                              ? "nonequivalent"
                              : "unknown";
    json out{{"a", f.a},
             {"b", f.b},
             {"verdict", verdict},
             {"nodes", res.nodes},
             {"detail", res.detail}};
    if (res.verdict == EquivVerdict::equivalent) {
        out["witness"] = {{"sigma", res.witness.sigma}, {"pi", json::array()}};
        for (const std::vector<Symbol>& p : res.witness.pi)
            out["witness"]["pi"].push_back(std::vector<int>(p.begin(), p.end()));
    }
    emit(out);
    return res.verdict == EquivVerdict::equivalent ? 0 : 1;
}

int run_census(const Flags& f) {
    require(f.q && f.m1 && f.m2, "Usage", "census needs --q, --m1, --m2");
    require(!f.out.empty(), "Usage", "census needs --out");
    CensusReport rep = census_distinct(f.q, f.m1, f.m2, f.limit, f.seed);
    json jfp = json::array();
    for (const CodeFingerprint& fp : rep.fingerprints)
        jfp.push_back(json{{"size", fp.size},
                           {"distance_distribution", fp.distance_distribution},
                           {"coordinate_spectra", fp.coordinate_spectra}});
    json out{{"parameters",
              {{"q", rep.q}, {"m1", rep.m1}, {"m2", rep.m2},
               {"limit", f.limit}, {"seed", f.seed}}},
             {"assignments_tried", rep.assignments_tried},
             {"distinct_code_count", rep.distinct_code_count},
             {"nonequivalent_lower_bound", rep.nonequivalent_lower_bound},
             {"undecided_pairs", rep.undecided_pairs},
             {"fingerprints", jfp}};
    write_file_atomic(f.out, out.dump(2) + "\n");
    emit(json{{"out", f.out},
              {"assignments_tried", rep.assignments_tried},
              {"distinct_code_count", rep.distinct_code_count},
              {"nonequivalent_lower_bound", rep.nonequivalent_lower_bound},
              {"verdict", "PASS"}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* env = std::getenv("PERFMIX_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) omp_set_num_threads(t);
    }
#endif

    CLI::App app{"1-perfect mixed codes: construction and exhaustive certification"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* grm = app.add_subcommand("grm", "Reed-Muller parameters and codes");
    grm->add_option("--q", f.q, "field order");
    grm->add_option("--m", f.m, "variables");
    grm->add_option("--r", f.r, "order");
    grm->add_flag("--table", f.table, "print the full supported parameter table");
    grm->add_option("--emit-code", f.emit_code, "write the expanded code file");
    grm->add_option("--gate", f.gate, "brute-force gate");

    CLI::App* mds2 = app.add_subcommand("mds2", "distance-2 MDS certification");
    mds2->add_option("--in", f.in, "code file")->required();
    mds2->add_option("--emit-qgroup", f.emit_qgroup, "write the quasigroup file");

    CLI::App* qgroup = app.add_subcommand("qgroup", "quasigroup check / generation");
    qgroup->add_option("--in", f.in, "quasigroup file to check");
    qgroup->add_option("--emit-code", f.emit_code, "write the graph code file");
    qgroup->add_option("--order", f.q, "library order");
    qgroup->add_option("--arity", f.m, "library arity");
    qgroup->add_option("--index", f.index, "library index");
    qgroup->add_option("--out", f.out, "output quasigroup file");

    CLI::App* part = app.add_subcommand("partition", "build or validate partitions");
    part->add_option("--q", f.q, "field order");
    part->add_option("--m", f.m, "exponent");
    part->add_option("--kind", f.kind, "coset|file")->check(CLI::IsMember({"coset", "file"}));
    part->add_option("--in", f.in, "partition file (kind=file)");
    part->add_option("--out", f.out, "re-emit the partition");

    CLI::App* cons = app.add_subcommand("construct", "run a construction");
    cons->require_subcommand(1);
    std::vector<std::string> cons_subs = {"hs",   "heden", "doubling", "thm4",
                                          "thm5", "prop1", "thm6"};
    for (const std::string& name : cons_subs) {
        CLI::App* s = cons->add_subcommand(name);
        s->add_option("--q", f.q, "field order");
        s->add_option("--m", f.m, "exponent / check symbols");
        s->add_option("--m1", f.m1, name == "prop1" ? "first block length"
                                                    : "first exponent");
        s->add_option("--m2", f.m2, name == "prop1" ? "second block length"
                                                    : "second exponent");
        s->add_option("--alpha", f.alpha, "subspace dimension (hs)");
        s->add_option("--in", f.in, "input code/partition file");
        s->add_option("--position", f.position, "substituted coordinate (heden)");
        s->add_option("--partition", f.partition, "partition file");
        s->add_option("--qgroups", f.qgroups, "quasigroup blocks file (thm6)");
        s->add_option("--perm", f.perm, "permutation file");
        s->add_option("--out", f.out, "output code file")->required();
        s->add_option("--gate", f.gate, "brute-force gate");
    }

    CLI::App* verify = app.add_subcommand("verify", "verify a code property");
    CLI::App* verify_perfect = verify->add_subcommand("perfect", "1-perfection");
    verify_perfect->add_option("--in", f.in, "code file")->required();
    verify_perfect->add_option("--e", f.e, "packing radius to certify");
    verify_perfect->add_option("--out", f.out, "certificate file");
    verify_perfect->add_option("--gate", f.gate, "brute-force gate");

    CLI::App* equiv = app.add_subcommand("equiv", "decide code equivalence");
    equiv->add_option("--a", f.a, "first code file")->required();
    equiv->add_option("--b", f.b, "second code file")->required();
    equiv->add_option("--budget", f.budget, "search node budget");

    CLI::App* census = app.add_subcommand("census", "quasigroup-assignment census");
    census->add_option("--q", f.q, "field order");
    census->add_option("--m1", f.m1, "first exponent");
    census->add_option("--m2", f.m2, "second exponent");
    census->add_option("--limit", f.limit, "assignments to sample");
    census->add_option("--seed", f.seed, "sampling seed");
    census->add_option("--out", f.out, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        check_gate(f.gate);
        if (grm->parsed()) return run_grm(f);
        if (mds2->parsed()) return run_mds2(f);
        if (qgroup->parsed()) return run_qgroup(f);
        if (part->parsed()) return run_partition(f);
        if (cons->parsed())
            return run_construct(cons->get_subcommands().at(0)->get_name(), f);
        if (verify->parsed()) {
            require(verify_perfect->parsed(), "Usage",
                    "verify supports: perfect");
            return run_verify(f);
        }
        if (equiv->parsed()) return run_equiv(f);
        if (census->parsed()) return run_census(f);
        fail("Usage", "no subcommand");
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return (err.code() == "Usage" || err.code() == "ParseError") ? 2 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
