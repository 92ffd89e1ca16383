// Command-line front end: matrix analysis, the three factorizations, and
// verification of factor files.  All indices in files, flags and JSON are
// 1-based; exit codes are 0 ok, 2 parse error, 3 not a Z-matrix, 4 not an
// M-matrix, 5 verification failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mfact/factorization.hpp"
#include "mfact/io.hpp"
#include "mfact/singular_structure.hpp"
#include "mfact/verification.hpp"

using json = nlohmann::ordered_json;
using namespace mfact;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotZ = 3;
constexpr int kExitNotM = 4;
constexpr int kExitVerification = 5;

struct CommonOpts {
    double tol = kDefaultZeroTol;
    double mtol = kDefaultMTol;
    double ptol = kDefaultProductTol;
    bool no_mcheck = false;
    bool deterministic = false;
    bool compact = false;
    std::string format;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.tol, "structural-zero tolerance (relative)");
    cmd->add_option("--mtol", o.mtol, "M-matrix spectral-radius slack");
    cmd->add_option("--ptol", o.ptol, "product-identity tolerance (relative)");
    cmd->add_flag("--no-mcheck", o.no_mcheck, "skip the M-matrix gate");
    cmd->add_flag("--deterministic", o.deterministic, "omit the metadata footer");
    cmd->add_flag("--json", o.compact, "compact single-line JSON");
    cmd->add_option("--format", o.format, "input format: mm|txt (default: by extension)");
}

std::optional<io::MatrixFormat> format_of(const CommonOpts& o) {
    if (o.format.empty()) return std::nullopt;
    const auto f = io::parse_format_name(o.format);
    if (!f) throw ParseError("unknown format '" + o.format + "'");
    return f;
}

MMatrix load(const std::string& path, const CommonOpts& o) {
    MMatrix a = io::read_matrix(path, format_of(o), o.tol);
    return a;
}

void emit(const json& j, const CommonOpts& o) {
    if (o.compact)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

void attach_meta(json& j, const CommonOpts& o) {
    if (o.deterministic) return;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    j["meta"] = {{"generated_at", buf}};
}

json vertices_1based(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

json interval_1based(const IndexInterval& iv) { return vertices_1based(iv.to_vector()); }

json partition_1based(const OrderedPartition& p) {
    json out = json::array();
    for (const auto& b : p.blocks()) out.push_back(vertices_1based(b));
    return out;
}

json split_1based(const SplitJK& s) {
    return {{"J", vertices_1based(s.J)}, {"K", vertices_1based(s.K)}};
}

json chi_1based(const SpurPattern& chi) {
    json out = json::array();
    for (auto [r, c] : chi.positions) out.push_back(json::array({r + 1, c + 1}));
    return out;
}

json report_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (c.informational) e["informational"] = true;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return {{"overall", rep.overall}, {"checks", std::move(checks)}};
}

// Comma-separated 1-based class indices.
std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            const int v = std::stoi(tok);
            if (v < 1) throw std::invalid_argument("");
            out.push_back(v - 1);
        } catch (const std::exception&) {
            throw ParseError("invalid class index '" + tok + "'");
        }
    }
    return out;
}

int cmd_analyze(const std::string& path, const CommonOpts& o) {
    const MMatrix a = load(path, o);
    json j;
    j["n"] = a.size();
    const bool z = is_z_matrix(a);
    j["z_matrix"] = z;
    if (!z) {
        emit(j, o);
        std::cerr << "error: input is not a Z-matrix\n";
        return kExitNotZ;
    }
    const bool m = is_m_matrix(a, o.mtol);
    j["m_matrix"] = m;
    if (!m && !o.no_mcheck) {
        emit(j, o);
        std::cerr << "error: input is not an M-matrix (use --no-mcheck to override)\n";
        return kExitNotM;
    }

    const SingularStructure s = singular_structure(a, /*check_m=*/false, o.mtol);
    json classes = json::array();
    for (int i = 0; i < s.all_classes.count(); ++i)
        classes.push_back({{"vertices", vertices_1based(s.all_classes.classes[i])},
                           {"singular", static_cast<bool>(s.all_classes.singular[i])}});
    j["classes"] = std::move(classes);
    json singular = json::array();
    for (const auto& cls : s.classes) singular.push_back(vertices_1based(cls));
    j["singular_classes"] = std::move(singular);
    j["mu"] = vertices_1based(s.mu);
    json t = json::array(), f = json::array();
    for (int i = 0; i < s.count(); ++i) {
        t.push_back(interval_1based(s.T[i]));
        f.push_back(interval_1based(s.F[i]));
    }
    j["T"] = std::move(t);
    j["F"] = std::move(f);
    j["lower_self_partition"] = partition_1based(block_lower_self_partition(a));
    j["upper_self_partition"] = partition_1based(block_upper_self_partition(a));
    j["varga_cai"] = varga_cai_condition(s);
    j["lu_exists"] = lu_existence_condition(s);
    const auto bounds = subdiagonal_bounds(s);
    j["subdiagonal_bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
    const SplitJK split = strategy_min_blocks(s);
    j["J"] = vertices_1based(split.J);
    j["K"] = vertices_1based(split.K);
    j["permutation"] = vertices_1based(strategy_permutation(s));
    attach_meta(j, o);
    emit(j, o);
    return 0;
}

int cmd_factor(const std::string& mode, const std::string& path, const CommonOpts& o,
               const std::string& j_list, const std::string& k_list,
               const std::string& strategy, const std::string& out_dir) {
    const MMatrix a = load(path, o);
    if (!is_z_matrix(a)) {
        std::cerr << "error: input is not a Z-matrix\n";
        return kExitNotZ;
    }
    if (!o.no_mcheck && !is_m_matrix(a, o.mtol)) {
        std::cerr << "error: input is not an M-matrix\n";
        return kExitNotM;
    }

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    json j;
    j["mode"] = mode;
    j["n"] = a.size();
    json files;

    FactorizationResult result;
    const MMatrix* factored = &a;  // what the factors multiply back to
    MMatrix permuted;              // storage for the permute mode

    if (mode == "lu") {
        const SingularStructure s = singular_structure(a, false, o.mtol);
        SplitJK split;
        if (!j_list.empty() || !k_list.empty()) {
            split.J = parse_index_list(j_list);
            split.K = parse_index_list(k_list);
        } else {
            if (strategy != "min-blocks")
                throw ParseError("unknown strategy '" + strategy + "'");
            split = strategy_min_blocks(s);
        }
        result = factor_lu_partitioned(a, split);
        j["requested_split"] = split_1based(*result.requested_split);
        j["realized_split"] = split_1based(*result.realized_split);
    } else if (mode == "lu-spurs") {
        result = factor_lu_spurs(a);
        j["chi"] = chi_1based(*result.chi);
    } else if (mode == "lbu") {
        result = factor_lbu(a);
        j["chi"] = chi_1based(*result.chi);
    } else if (mode == "permute") {
        const SingularStructure s = singular_structure(a, false, o.mtol);
        const std::vector<int> order = strategy_permutation(s);
        permuted = apply_symmetric_permutation(a, order);
        const SingularStructure sp = singular_structure(permuted, false, o.mtol);
        SplitJK all;
        for (int i = 0; i < sp.count(); ++i) all.J.push_back(i);
        result = factor_lu_partitioned(permuted, all);
        factored = &permuted;
        j["permutation"] = vertices_1based(order);
        const std::filesystem::path p_path = dir / "P.mtx";
        io::write_matrix(p_path, permutation_matrix(order));
        files["P"] = p_path.string();
    } else {
        throw ParseError("unknown mode '" + mode + "'");
    }

    const VerificationReport rep = verify(*factored, result, o.ptol, kDefaultSingTol, o.mtol);

    const std::filesystem::path l_path = dir / "L.mtx", u_path = dir / "U.mtx";
    io::write_matrix(l_path, result.L);
    io::write_matrix(u_path, result.U);
    files["L"] = l_path.string();
    files["U"] = u_path.string();
    if (result.B) {
        const std::filesystem::path b_path = dir / "B.mtx";
        io::write_matrix(b_path, *result.B);
        files["B"] = b_path.string();
    }
    j["files"] = std::move(files);
    j["verification"] = report_json(rep);
    attach_meta(j, o);

    {
        std::ofstream rf(dir / "report.json");
        rf << j.dump(2) << "\n";
    }
    emit(j, o);
    if (!rep.overall) {
        std::cerr << "error: verification failed (factors written anyway)\n";
        return kExitVerification;
    }
    return 0;
}

int cmd_verify(const std::string& path, const CommonOpts& o, const std::string& kind,
               const std::string& l_path, const std::string& u_path,
               const std::string& b_path, const std::string& j_list,
               const std::string& k_list) {
    const MMatrix a = load(path, o);
    if (!is_z_matrix(a)) {
        std::cerr << "error: input is not a Z-matrix\n";
        return kExitNotZ;
    }
    if (!is_m_matrix(a, o.mtol)) {
        std::cerr << "error: input is not an M-matrix\n";
        return kExitNotM;
    }
    const SingularStructure s = singular_structure(a, false, o.mtol);

    FactorizationResult r;
    r.L = io::read_matrix(l_path, std::nullopt, o.tol);
    r.U = io::read_matrix(u_path, std::nullopt, o.tol);
    r.psi = OrderedPartition::coarsest(a.size());
    r.upsilon = OrderedPartition::coarsest(a.size());
    if (kind == "lu") {
        r.kind = FactorKind::BlockLU;
        if (!j_list.empty() || !k_list.empty()) {
            SplitJK split{parse_index_list(j_list), parse_index_list(k_list)};
            std::vector<std::vector<int>> f_sets, t_sets;
            for (int i : split.J) {
                if (i < 0 || i >= s.count()) throw ParseError("class index out of range");
                f_sets.push_back(s.F[i].to_vector());
            }
            for (int i : split.K) {
                if (i < 0 || i >= s.count()) throw ParseError("class index out of range");
                t_sets.push_back(s.T[i].to_vector());
            }
            r.requested_split = split;
            r.psi = finest_encompassing(f_sets, a.size());
            r.upsilon = finest_encompassing(t_sets, a.size());
        }
    } else if (kind == "lu-spurs") {
        r.kind = FactorKind::SpurLU;
        r.chi = spur_pattern(s);
        r.psi = OrderedPartition::finest(a.size());
        r.upsilon = spur_span_partition(s);
    } else if (kind == "lbu") {
        r.kind = FactorKind::Lbu;
        if (b_path.empty()) throw ParseError("--B is required for kind lbu");
        r.B = io::read_matrix(b_path, std::nullopt, o.tol);
        r.chi = lbu_pattern(s);
        r.psi = OrderedPartition::finest(a.size());
        r.upsilon = OrderedPartition::finest(a.size());
    } else {
        throw ParseError("unknown kind '" + kind + "'");
    }

    const VerificationReport rep = verify(a, r, o.ptol, kDefaultSingTol, o.mtol);
    json j;
    j["kind"] = kind;
    j["n"] = a.size();
    j["verification"] = report_json(rep);
    attach_meta(j, o);
    emit(j, o);
    return rep.overall ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure analysis and block LU/LBU factorizations of M-matrices"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string path, mode, strategy = "min-blocks", out_dir = ".";
    std::string j_list, k_list, kind = "lu", l_path, u_path, b_path;

    CLI::App* analyze = app.add_subcommand("analyze", "structure report as JSON");
    analyze->add_option("input", path, "matrix file")->required();
    add_common_flags(analyze, opts);

    CLI::App* factor = app.add_subcommand("factor", "compute and verify a factorization");
    factor->add_option("mode", mode, "lu | lu-spurs | lbu | permute")->required();
    factor->add_option("input", path, "matrix file")->required();
    factor->add_option("--J", j_list, "1-based singular-class indices for L");
    factor->add_option("--K", k_list, "1-based singular-class indices for U");
    factor->add_option("--strategy", strategy, "split strategy (min-blocks)");
    factor->add_option("--out-dir", out_dir, "output directory");
    add_common_flags(factor, opts);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check factor files against A");
    verify_cmd->add_option("input", path, "matrix file")->required();
    verify_cmd->add_option("--kind", kind, "lu | lu-spurs | lbu")->required();
    verify_cmd->add_option("--L", l_path, "L factor file")->required();
    verify_cmd->add_option("--U", u_path, "U factor file")->required();
    verify_cmd->add_option("--B", b_path, "B factor file (lbu)");
    verify_cmd->add_option("--J", j_list, "1-based class indices claimed for L");
    verify_cmd->add_option("--K", k_list, "1-based class indices claimed for U");
    add_common_flags(verify_cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(path, opts);
        if (app.got_subcommand(factor))
            return cmd_factor(mode, path, opts, j_list, k_list, strategy, out_dir);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(path, opts, kind, l_path, u_path, b_path, j_list, k_list);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotMMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotM;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
