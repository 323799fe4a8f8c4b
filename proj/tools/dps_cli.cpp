// dps: command-line front end for the discrete phase-space library.
//
//   dps decompose --modulus M --matrix a,b,c,d [--method euclid|bfs]
//   dps rep       --dim N --parity odd|even --matrix a,b,c,d
//   dps wigner    --state state.json --parity odd|even
//   dps verify    --dim N --parity odd|even --suite sw|translation|covariance|projectivity|uniqueness|all
//
// Exit codes: 0 success, 1 failed verification, 2 bad input, 3 decomposition
// failure.

#include "dps/error.hpp"
#include "dps/metaplectic.hpp"
#include "dps/oracle.hpp"
#include "dps/symplectic.hpp"
#include "dps/verify.hpp"
#include "dps/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDecomposition = 3;
constexpr int kBfsDepth = 64;

enum class IndexStyle { canonical, symmetric };

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::optional<double> tol;
    std::string index_style = "canonical";

    IndexStyle style() const {
        return index_style == "symmetric" ? IndexStyle::symmetric : IndexStyle::canonical;
    }
};

dps::Parity parse_parity(const std::string& s) {
    if (s == "odd") return dps::Parity::odd;
    if (s == "even") return dps::Parity::even;
    throw BadInput("parity must be 'odd' or 'even'");
}

dps::Lattice make_lattice(std::int64_t dim, const std::string& parity) {
    try {
        return {dim, parse_parity(parity)};
    } catch (const dps::ParityError& e) {
        throw BadInput(e.what());
    }
}

dps::SympMat make_matrix(const std::vector<std::int64_t>& e, std::int64_t modulus) {
    if (e.size() != 4) throw BadInput("--matrix expects four entries a,b,c,d");
    if (modulus < 2) throw BadInput("modulus must be >= 2");
    if (!dps::SympMat::is_symplectic(e[0], e[1], e[2], e[3], modulus)) {
        throw BadInput("matrix is not symplectic: det != 1 mod " + std::to_string(modulus));
    }
    return {e[0], e[1], e[2], e[3], modulus};
}

// Shortest round-trip decimal form.
std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    return s == "-0" ? "0" : s;
}

// Canonical basis/lattice index shown at position `pos` of the output.
std::int64_t display_index(std::int64_t pos, std::int64_t modulus, IndexStyle style) {
    if (style == IndexStyle::canonical) return pos;
    return dps::reduce(pos - (modulus - 1) / 2, modulus);
}

int cmd_decompose(const Globals& g, std::int64_t modulus, const std::vector<std::int64_t>& entries,
                  const std::string& method) {
    const dps::SympMat s = make_matrix(entries, modulus);
    std::optional<dps::GenWord> word;
    if (method == "euclid") {
        word = dps::euclid_decompose(s);
    } else if (method == "bfs") {
        try {
            word = dps::bfs_decompose(s, kBfsDepth);
        } catch (const dps::DepthExceeded&) {
        }
    } else if (method == "auto") {
        try {
            word = dps::decompose(s);
        } catch (const dps::DecompositionFailed&) {
        }
    } else {
        throw BadInput("--method must be euclid, bfs or auto");
    }
    if (!word) {
        std::cerr << "decomposition failed\n";
        return kExitDecomposition;
    }

    json out;
    out["modulus"] = modulus;
    json matrix = json::array();
    for (auto v : s.entries()) {
        matrix.push_back(g.style() == IndexStyle::symmetric ? dps::Residue(v, modulus).symmetric() : v);
    }
    out["matrix"] = matrix;
    json factors = json::array();
    for (const auto& f : word->factors()) {
        factors.push_back({{"gen", std::string(1, dps::to_char(f.gen))}, {"exp", f.exp}});
    }
    out["word"] = factors;
    out["verified"] = dps::evaluate(*word) == s;
    std::cout << out.dump() << '\n';
    return out["verified"].get<bool>() ? kExitOk : kExitDecomposition;
}

int cmd_rep(const Globals& g, std::int64_t dim, const std::string& parity,
            const std::vector<std::int64_t>& entries) {
    const dps::Lattice lattice = make_lattice(dim, parity);
    if (g.style() == IndexStyle::symmetric && lattice.parity() == dps::Parity::even) {
        throw BadInput("symmetric index style is only defined for odd N");
    }
    const dps::SympMat s = make_matrix(entries, lattice.modulus());
    const dps::CMatrix u = dps::u_of(s, lattice).matrix();
    const double residual = dps::covariance_residual(u, s, dps::delta_family(lattice));

    json rows = json::array();
    for (std::int64_t i = 0; i < dim; ++i) {
        json row = json::array();
        const auto r = static_cast<std::size_t>(display_index(i, dim, g.style()));
        for (std::int64_t k = 0; k < dim; ++k) {
            const auto c = static_cast<std::size_t>(display_index(k, dim, g.style()));
            row.push_back(json::array({u(r, c).real(), u(r, c).imag()}));
        }
        rows.push_back(row);
    }
    json out;
    out["dim"] = dim;
    out["unitary"] = rows;
    out["covariance_residual"] = residual;
    std::cout << out.dump() << '\n';
    return kExitOk;
}

dps::QuantumState load_state(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open state file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw BadInput(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("dim") || !doc.contains("amplitudes")) {
        throw BadInput("state file needs \"dim\" and \"amplitudes\"");
    }
    const auto dim = doc["dim"].get<std::int64_t>();
    std::vector<dps::cplx> amps;
    for (const auto& a : doc["amplitudes"]) {
        if (!a.is_array() || a.size() != 2) throw BadInput("amplitudes must be [re, im] pairs");
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    if (static_cast<std::int64_t>(amps.size()) != dim) {
        throw BadInput("amplitude count does not match dim");
    }
    try {
        return dps::QuantumState(std::move(amps), tol);
    } catch (const dps::Error& e) {
        throw BadInput(e.what());
    }
}

int cmd_wigner(const Globals& g, const std::string& path, const std::string& parity) {
    const dps::QuantumState state = load_state(path, g.tol.value_or(dps::kDefaultNormTol));
    const dps::Lattice lattice = make_lattice(state.dim(), parity);
    if (g.style() == IndexStyle::symmetric && lattice.parity() == dps::Parity::even) {
        throw BadInput("symmetric index style is only defined for odd N");
    }
    const dps::WignerTable table = dps::wigner_of(state, lattice);
    const auto mod = table.modulus();

    std::cout << "# parity=" << dps::to_string(lattice.parity()) << ", modulus=" << mod;
    if (g.style() == IndexStyle::symmetric) std::cout << ", index=symmetric";
    std::cout << '\n';
    for (std::int64_t r = 0; r < mod; ++r) {
        const auto m = display_index(r, mod, g.style());
        for (std::int64_t c = 0; c < mod; ++c) {
            if (c != 0) std::cout << ',';
            std::cout << format_double(table(m, display_index(c, mod, g.style())));
        }
        std::cout << '\n';
    }
    std::cout << "# sum=" << format_double(table.sum()) << '\n';
    return kExitOk;
}

int cmd_verify(const Globals& g, std::int64_t dim, const std::string& parity, const std::string& suite_name) {
    const dps::Lattice lattice = make_lattice(dim, parity);
    const auto suite = dps::verify::parse_suite(suite_name);
    if (!suite) throw BadInput("unknown suite " + suite_name);
    dps::verify::Options opts;
    opts.tol = g.tol;
    dps::verify::Report report;
    try {
        report = dps::verify::run(*suite, lattice, opts);
    } catch (const dps::ParityError& e) {
        throw BadInput(e.what());
    }
    json checks = json::array();
    for (const auto& c : report.checks) {
        json item;
        item["name"] = c.name;
        item["max_residual"] = c.max_residual;
        item["pass"] = c.pass;
        if (!c.asserted) item["asserted"] = false;
        checks.push_back(item);
    }
    json out;
    out["suite"] = report.suite;
    out["checks"] = checks;
    out["pass"] = report.pass;
    std::cout << out.dump() << '\n';
    return report.pass ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete phase-space toolkit: symplectic decomposition, metaplectic "
                 "representation and discrete Wigner functions"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--tol", g.tol, "Override the tolerance used by the command");
    app.add_option("--index-style", g.index_style, "Index display: canonical or symmetric")
        ->check(CLI::IsMember({"canonical", "symmetric"}));

    std::int64_t modulus = 0, dim = 0;
    std::vector<std::int64_t> entries;
    std::string method = "auto", parity, state_path, suite = "all";

    auto* dec = app.add_subcommand("decompose", "Factor a symplectic matrix into h+/h- powers");
    dec->add_option("--modulus", modulus, "Residue-ring modulus M")->required();
    dec->add_option("--matrix", entries, "Entries a,b,c,d")->required()->delimiter(',')->expected(4);
    dec->add_option("--method", method, "euclid, bfs, or auto (euclid with BFS fallback)");

    auto* rep = app.add_subcommand("rep", "Emit the unitary U(S) and its covariance residual");
    rep->add_option("--dim", dim, "Hilbert-space dimension N")->required();
    rep->add_option("--parity", parity, "odd or even")->required();
    rep->add_option("--matrix", entries, "Entries a,b,c,d (mod N odd, mod 2N even)")
        ->required()->delimiter(',')->expected(4);

    auto* wig = app.add_subcommand("wigner", "Wigner table of a pure state as CSV");
    wig->add_option("--state", state_path, "State JSON {\"dim\": N, \"amplitudes\": [[re,im],...]}")->required();
    wig->add_option("--parity", parity, "odd or even")->required();

    auto* ver = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    ver->add_option("--dim", dim, "Hilbert-space dimension N")->required();
    ver->add_option("--parity", parity, "odd or even")->required();
    ver->add_option("--suite", suite, "sw, translation, covariance, projectivity, uniqueness or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (dec->parsed()) return cmd_decompose(g, modulus, entries, method);
        if (rep->parsed()) return cmd_rep(g, dim, parity, entries);
        if (wig->parsed()) return cmd_wigner(g, state_path, parity);
        if (ver->parsed()) return cmd_verify(g, dim, parity, suite);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const dps::DecompositionFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDecomposition;
    } catch (const dps::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
