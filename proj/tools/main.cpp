#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "chv/identities.hpp"
#include "chv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int run_list() {
    const auto& catalog = chv::registry();
    std::size_t id_width = 2;
    std::size_t dom_width = 6;
    for (const chv::Identity& ident : catalog) {
        id_width = std::max(id_width, ident.id.size());
        dom_width = std::max(dom_width, ident.domain_text.size());
    }
    for (const chv::Identity& ident : catalog) {
        std::cout << std::left << std::setw(static_cast<int>(id_width) + 2)
                  << ident.id << std::setw(static_cast<int>(dom_width) + 2)
                  << ident.domain_text << ident.description << "\n";
    }
    std::cout << catalog.size() << " identities\n";
    return kExitOk;
}

int run_verify(const std::vector<std::string>& identity_args, long n_max,
               long p_max, long q_max, const std::vector<std::string>& check_args,
               const std::string& format_arg, bool fail_fast,
               const std::string& corrupt_id, const std::string& output_path) {
    chv::RunConfig config;
    config.identities = identity_args;
    config.n_max = n_max;
    config.p_max = p_max;
    config.q_max = q_max;
    config.fail_fast = fail_fast;
    config.corrupt_id = corrupt_id;
    if (!check_args.empty()) {
        config.checks.clear();
        for (const std::string& name : check_args) {
            config.checks.insert(chv::check_kind_from_name(name));
        }
    }
    config.format = chv::output_format_from_name(format_arg);

    std::vector<chv::VerificationRecord> records;
    const chv::RunSummary summary = chv::run_verification(config, records);

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open '" << output_path
                      << "' for writing\n";
            return kExitIo;
        }
    }
    std::ostream& os = output_path.empty() ? std::cout : file;
    chv::write_records(os, config.format, records, summary);
    os.flush();
    if (!os) {
        std::cerr << "error: write failure\n";
        return kExitIo;
    }
    if (config.format != chv::OutputFormat::Table) {
        std::cerr << "total " << summary.total << "  pass " << summary.passed
                  << "  skip " << summary.skipped << "  mismatch "
                  << summary.mismatched << "\n";
    }
    return summary.mismatched == 0 ? kExitOk : kExitMismatch;
}

int run_derive(const std::string& seed_name, const std::string& op_name,
               long n, long p, long q) {
    const chv::Seed seed = chv::seed_from_name(seed_name);
    chv::JetOp op;
    if (op_name == "dx") {
        op = chv::JetOp::Dx;
    } else if (op_name == "dy") {
        op = chv::JetOp::Dy;
    } else if (op_name == "dxy") {
        op = chv::JetOp::Dxy;
    } else {
        throw std::invalid_argument("unknown operator '" + op_name +
                                    "' (expected dx, dy or dxy)");
    }
    if (n < 0 || p < 0 || q < 0) {
        throw std::invalid_argument("n, p, q must be nonnegative");
    }
    const auto [lhs, rhs] = chv::jet_derive(seed, op, {n, p, q});
    std::cout << seed_name << " at n=" << n << " p=" << p << " q=" << q
              << ", operator " << op_name << "\n"
              << "  lhs sum     : " << lhs << "\n"
              << "  rhs closed  : " << rhs << "\n"
              << (lhs == rhs ? "EQUAL" : "UNEQUAL") << "\n";
    return lhs == rhs ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "chv: exact verification of binomial-convolution harmonic-number "
        "identities over integer parameter grids"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "sweep identities over the (n, p, q) grid and report");
    std::vector<std::string> identity_args{"all"};
    long n_max = 25, p_max = 8, q_max = 8;
    std::vector<std::string> check_args;
    std::string format_arg = "json-lines";
    bool fail_fast = false;
    std::string corrupt_id;
    std::string output_path;
    verify->add_option("--identity", identity_args,
                       "identity id(s) or 'all' (see `list`)")
        ->delimiter(',');
    verify->add_option("--n-max", n_max, "grid bound for n (default 25)");
    verify->add_option("--p-max", p_max, "grid bound for p (default 8)");
    verify->add_option("--q-max", q_max, "grid bound for q (default 8)");
    verify->add_option("--checks", check_args,
                       "subset of equality,derivation,shift (default equality)")
        ->delimiter(',');
    verify->add_option("--format", format_arg, "json-lines | csv | table");
    verify->add_flag("--fail-fast", fail_fast, "stop at the first mismatch");
    verify->add_option("--corrupt", corrupt_id,
                       "self-test: offset the named identity's closed form by "
                       "1 so its grid points mismatch");
    verify->add_option("--output", output_path,
                       "write records to a file instead of stdout");

    // list
    app.add_subcommand("list", "print the identity catalog");

    // derive
    auto* derive = app.add_subcommand(
        "derive",
        "apply a derivative operator to a seed convolution at one grid point");
    std::string seed_arg, op_arg;
    long d_n = 0, d_p = 0, d_q = 0;
    derive->add_option("--seed", seed_arg, "eq2 | eq5 | eq7")->required();
    derive->add_option("--op", op_arg, "dx | dy | dxy")->required();
    derive->add_option("--n", d_n, "summation length")->required();
    derive->add_option("--p", d_p, "parameter p (default 0)");
    derive->add_option("--q", d_q, "parameter q (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("list")) {
            return run_list();
        }
        if (app.got_subcommand("verify")) {
            return run_verify(identity_args, n_max, p_max, q_max, check_args,
                              format_arg, fail_fast, corrupt_id, output_path);
        }
        return run_derive(seed_arg, op_arg, d_n, d_p, d_q);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
