#include "macqt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <fstream>

#include "macqt/io.hpp"
#include "macqt/verify.hpp"

namespace macqt {

namespace {

long long time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
}

std::string format_symfun(const SymFun& f, const std::string& format) {
    return format == "json" ? to_json(f).dump() : f.text();
}

std::string format_hexp(const HExp& f, const std::string& format) {
    return format == "json" ? to_json(f).dump() : f.text();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

HExp load_hexp(const std::string& path) {
    const Json j = load_json_file(path);
    if (j.is_object() && j.contains("basis") && j["basis"].get<std::string>() == "H")
        return hexp_from_json(j);
    return to_hbasis(symfun_from_json(j));
}

int cmd_hmu(const std::string& part, const std::string& basis, const std::string& format,
            std::ostream& out) {
    const Partition mu = partition_from_string(part);
    const auto b = basis_from_letter(basis.size() == 1 ? basis[0] : '?');
    if (!b) throw ParseError("unknown basis '" + basis + "'");
    const SymFun f = convert(hmu_monomial(mu), *b);
    out << format_symfun(f, format) << "\n";
    return 0;
}

int cmd_pieri(const std::string& part, const std::string& op, int k, std::ostream& out) {
    const Partition p = partition_from_string(part);
    std::vector<PieriEdge> edges;
    if (op == "e1") {
        for (const Partition& mu : covers(p, CoverDirection::up))
            edges.push_back({mu, p, d1(mu, p), PieriEdge::Kind::d1, 1});
    } else if (op == "e1perp") {
        for (const Partition& nu : covers(p, CoverDirection::down))
            edges.push_back({p, nu, c1(p, nu), PieriEdge::Kind::c1, 1});
    } else if (op == "hk") {
        if (k < 0 || k > p.size()) throw ParseError("k out of range for the shape");
        for (const Partition& nu : partitions_of(p.size() - k))
            if (p.contains(nu)) edges.push_back({p, nu, ck(p, nu, k), PieriEdge::Kind::ck, k});
    } else if (op == "ekm") {
        if (k < 0) throw ParseError("k must be nonnegative");
        for (const Partition& mu : partitions_of(p.size() + k))
            if (mu.contains(p)) edges.push_back({mu, p, dk(mu, p, k), PieriEdge::Kind::dk, k});
    } else {
        throw ParseError("unknown operator '" + op + "'");
    }
    for (const PieriEdge& e : edges) {
        Json j;
        j["mu"] = to_json(e.mu);
        j["nu"] = to_json(e.nu);
        switch (e.kind) {
            case PieriEdge::Kind::c1: j["kind"] = "c1"; break;
            case PieriEdge::Kind::d1: j["kind"] = "d1"; break;
            case PieriEdge::Kind::ck: j["kind"] = "ck"; break;
            case PieriEdge::Kind::dk: j["kind"] = "dk"; break;
        }
        j["k"] = e.k;
        j["value"] = to_json(e.value);
        out << j.dump() << "\n";
    }
    return 0;
}

int cmd_qop(int m, int n, bool do_const, const std::string& input, const std::string& format,
            std::ostream& out) {
    HExp result;
    if (do_const) {
        if (n >= 1 && std::gcd(m, n) == 1) {
            result = q_const(m, n);
        } else {
            const QtScalar sign(n % 2 == 0 ? 1 : -1);
            result = apply_q({m, n}, HExp::unit(Partition(), sign));
        }
    } else {
        result = apply_q({m, n}, load_hexp(input));
    }
    out << format_hexp(result, format) << "\n";
    return 0;
}

int cmd_expand(const std::string& input, const std::string& format, std::ostream& out) {
    const HExp r = to_hbasis(symfun_from_json(load_json_file(input)));
    out << format_hexp(r, format) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, std::ostream& out) {
    bool ok = true;
    for (const SuiteReport& rep : run_suites(suite, max_n)) {
        for (const CheckResult& c : rep.checks) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << rep.suite << "/" << c.name;
            if (!c.pass) out << "  [" << c.detail << "]";
            out << "\n";
            ok = ok && c.pass;
        }
    }
    out << (ok ? "all identities hold" : "identity failure") << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(int max_n, const std::string& algo, std::ostream& out) {
    out << "n,algo,millis,table_entries\n";
    for (const BenchRow& row : run_bench(max_n, algo))
        out << row.n << "," << row.algo << "," << row.millis << "," << row.table_entries << "\n";
    return 0;
}

} // namespace

std::vector<BenchRow> run_bench(int max_n, const std::string& algo) {
    if (algo != "bh" && algo != "oracle") throw ParseError("unknown algorithm '" + algo + "'");
    std::vector<BenchRow> rows;
    const auto saved_dir = cache_dir();
    set_cache_dir(std::nullopt); // measure computation, not disk reads
    for (int n = 1; n <= max_n; ++n) {
        BenchRow row;
        row.n = n;
        row.algo = algo;
        const std::size_t plen = partitions_of(n).size();
        row.table_entries = plen * plen;
        if (algo == "bh") {
            row.millis = time_ms([&] {
                clear_hspace_caches();
                clear_pieri_cache();
                m_table(n);
            });
        } else {
            row.millis = time_ms([&] { hmu_oracle(n); });
        }
        rows.push_back(row);
    }
    set_cache_dir(saved_dir);
    clear_hspace_caches();
    return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for the modified Macdonald operator calculus"};
    app.require_subcommand(1);
    std::string cache;
    app.add_option("--cache-dir", cache, "directory for persisted coefficient tables");

    std::string hmu_part, hmu_basis = "m", hmu_format = "text";
    CLI::App* hmu = app.add_subcommand("hmu", "expand one Macdonald element in a classical basis");
    hmu->add_option("partition", hmu_part, "shape, e.g. 3,2,1 (0 or [] for empty)")->required();
    hmu->add_option("--basis", hmu_basis, "target basis: m, e, h, p or s");
    hmu->add_option("--format", hmu_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string pieri_part, pieri_op;
    int pieri_k = 1;
    CLI::App* pieri = app.add_subcommand("pieri", "print structure constants as JSON lines");
    pieri->add_option("partition", pieri_part)->required();
    pieri->add_option("--op", pieri_op, "e1, e1perp, hk or ekm")->required();
    pieri->add_option("--k", pieri_k, "cell count for hk/ekm");

    int qop_m = 0, qop_n = 0;
    bool qop_const = false;
    std::string qop_input, qop_format = "json";
    CLI::App* qop = app.add_subcommand("qop", "apply a lattice operator");
    qop->add_option("m", qop_m)->required();
    qop->add_option("n", qop_n)->required();
    qop->add_flag("--const", qop_const, "apply to the signed constant");
    qop->add_option("--input", qop_input, "serialized input (JSON)");
    qop->add_option("--format", qop_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string expand_input, expand_format = "json";
    CLI::App* expand = app.add_subcommand("expand", "expand a symmetric function in the H basis");
    expand->add_option("--input", expand_input)->required();
    expand->add_option("--format", expand_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_suite = "all";
    int verify_max_n = 5;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    std::vector<std::string> suite_choices = verify_suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", verify_suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--max-n", verify_max_n)->check(CLI::PositiveNumber);

    int bench_max_n = 6;
    std::string bench_algo = "bh";
    CLI::App* bench = app.add_subcommand("bench", "time the table builders, emit CSV");
    bench->add_option("--max-n", bench_max_n)->check(CLI::PositiveNumber);
    bench->add_option("--algo", bench_algo)->check(CLI::IsMember({"bh", "oracle"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!cache.empty()) set_cache_dir(cache);
        if (hmu->parsed()) return cmd_hmu(hmu_part, hmu_basis, hmu_format, out);
        if (pieri->parsed()) return cmd_pieri(pieri_part, pieri_op, pieri_k, out);
        if (qop->parsed()) {
            if (!qop_const && qop_input.empty())
                throw ParseError("qop needs --const or --input FILE");
            return cmd_qop(qop_m, qop_n, qop_const, qop_input, qop_format, out);
        }
        if (expand->parsed()) return cmd_expand(expand_input, expand_format, out);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_max_n, out);
        if (bench->parsed()) return cmd_bench(bench_max_n, bench_algo, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace macqt
