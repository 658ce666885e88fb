// Command-line front end: verify paper identities, evaluate and compare DSL
// expressions, and export coefficient tables.
#include "waring/dsl.hpp"
#include "waring/identities.hpp"
#include "waring/partition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

using namespace waring;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Primary output goes to --out when given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct VerifyCli {
    std::string id;
    VerifyParams params;
    std::string mu_text, lambda_text, alpha_text;
    bool json = false;
    std::string out;
};

struct CheckCli {
    std::string expr;
    int vars = 6;
    int t_order = 6;
    bool json = false;
    std::string out;
};

struct ExpandCli {
    std::string expr;
    int vars = 6;
    int t_order = 0;
    bool json = false;
    std::string out;
};

struct BinomCli {
    std::string mu_text;
    std::optional<int> max_k;
    bool json = false;
    std::string out;
};

struct TableCli {
    int n = 0;
    std::string out;
};

int run_verify(const VerifyCli& cli) {
    VerifyParams p = cli.params;
    if (!cli.mu_text.empty()) p.mu = Partition::from_string(cli.mu_text);
    if (!cli.lambda_text.empty()) p.lambda = Partition::from_string(cli.lambda_text);
    if (!cli.alpha_text.empty()) p.alpha = Rational::from_string(cli.alpha_text);
    IdentityReport report = verify(cli.id, p);
    Sink sink(cli.out);
    sink.out() << (cli.json ? report.to_json() : report.to_text()) << "\n";
    return report.verified ? kExitVerified : kExitFailed;
}

int run_check(const CheckCli& cli) {
    auto split = cli.expr.find("==");
    if (split == std::string::npos || cli.expr.find("==", split + 2) != std::string::npos)
        throw std::invalid_argument("check expects exactly one '==' between two expressions");
    std::string lhs_text = cli.expr.substr(0, split);
    std::string rhs_text = cli.expr.substr(split + 2);

    dsl::ExprPtr lhs, rhs;
    try {
        lhs = dsl::parse(lhs_text);
    } catch (const dsl::ParseError& e) {
        throw std::invalid_argument(std::string("left side: ") + e.what());
    }
    try {
        rhs = dsl::parse(rhs_text);
    } catch (const dsl::ParseError& e) {
        throw std::invalid_argument(std::string("right side: ") + e.what());
    }

    BiSeries left = dsl::eval(*lhs, cli.vars, cli.t_order);
    BiSeries right = dsl::eval(*rhs, cli.vars, cli.t_order);
    auto diff = first_discrepancy(left, right);

    IdentityReport report;
    report.identity = "check";
    report.params = {{"lhs", dsl::to_string(*lhs)},
                     {"rhs", dsl::to_string(*rhs)},
                     {"t_order", std::to_string(cli.t_order)},
                     {"vars", std::to_string(cli.vars)}};
    report.checked_degree = cli.t_order;
    report.vars = cli.vars;
    report.verified = !diff.has_value();
    report.discrepancy = diff;

    Sink sink(cli.out);
    sink.out() << (cli.json ? report.to_json() : report.to_text()) << "\n";
    return report.verified ? kExitVerified : kExitFailed;
}

int run_expand(const ExpandCli& cli) {
    dsl::ExprPtr expr = dsl::parse(cli.expr);
    BiSeries value = dsl::eval(*expr, cli.vars, cli.t_order);
    Sink sink(cli.out);
    if (cli.json) {
        nlohmann::json j;
        j["expr"] = dsl::to_string(*expr);
        j["vars"] = cli.vars;
        j["t_order"] = cli.t_order;
        j["slices"] = nlohmann::json::array();
        for (int dt = 0; dt <= value.t_order(); ++dt) {
            if (value.coeff(dt, 0).is_zero()) continue;
            j["slices"].push_back({{"t", dt}, {"poly", value.coeff(dt, 0).str()}});
        }
        sink.out() << j.dump(2) << "\n";
        return kExitVerified;
    }
    bool plain = true;
    for (int dt = 1; dt <= value.t_order(); ++dt) plain = plain && value.coeff(dt, 0).is_zero();
    if (plain)
        sink.out() << value.coeff(0, 0).str() << "\n";
    else
        sink.out() << value.str() << "\n";
    return kExitVerified;
}

int run_binom(const BinomCli& cli) {
    Partition mu = Partition::from_string(cli.mu_text);
    int lo = mu.empty() ? 0 : std::max(1, mu.length());
    int hi = std::min(cli.max_k.value_or(mu.weight()), mu.weight());
    Sink sink(cli.out);
    if (cli.json) {
        nlohmann::json j;
        j["mu"] = mu.str();
        j["rows"] = nlohmann::json::array();
        for (int k = lo; k <= hi; ++k)
            j["rows"].push_back({k, lassalle_binom(mu, k).get_str()});
        sink.out() << j.dump(2) << "\n";
        return kExitVerified;
    }
    for (int k = lo; k <= hi; ++k)
        sink.out() << k << "," << lassalle_binom(mu, k).get_str() << "\n";
    return kExitVerified;
}

int run_table(const TableCli& cli) {
    Sink sink(cli.out);
    sink.out() << "mu,z_mu,k,binom\n";
    for (const auto& mu : partitions_of(cli.n)) {
        for (int k = 0; k <= cli.n; ++k) {
            sink.out() << "\"" << mu.str() << "\"," << z_of(mu).get_str() << "," << k << ","
                       << lassalle_binom(mu, k).get_str() << "\n";
        }
    }
    return kExitVerified;
}

int run_list(bool json, const std::string& out) {
    Sink sink(out);
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& info : identity_catalog())
            j.push_back({{"id", info.id}, {"summary", info.summary}, {"params", info.params_help}});
        sink.out() << j.dump(2) << "\n";
        return kExitVerified;
    }
    for (const auto& info : identity_catalog())
        sink.out() << info.id << "  " << info.summary << "  (" << info.params_help << ")\n";
    return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for symmetric-function identities on X/(1-tX)"};
    app.require_subcommand(1);

    VerifyCli vcli;
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity instance");
    verify_cmd->add_option("--id", vcli.id, "identity id (see list-identities)")->required();
    verify_cmd->add_option("--k", vcli.params.k, "index k");
    verify_cmd->add_option("--i", vcli.params.i, "index i");
    verify_cmd->add_option("--j", vcli.params.j, "index j");
    verify_cmd->add_option("--n", vcli.params.n, "index n");
    verify_cmd->add_option("--r", vcli.params.r, "index r");
    verify_cmd->add_option("--mu", vcli.mu_text, "partition mu, e.g. 2,1");
    verify_cmd->add_option("--lambda", vcli.lambda_text, "partition lambda");
    verify_cmd->add_option("--alpha", vcli.alpha_text, "rational alpha, e.g. -3/2");
    verify_cmd->add_option("--vars", vcli.params.vars, "number of alphabet variables");
    verify_cmd->add_option("--t-order", vcli.params.t_order, "t truncation order");
    verify_cmd->add_option("--u-order", vcli.params.u_order, "u truncation order");
    verify_cmd->add_option("--w-order", vcli.params.w_order, "w truncation order");
    verify_cmd->add_flag("--json", vcli.json, "machine-readable report");
    verify_cmd->add_option("--out", vcli.out, "write the report to a file");

    CheckCli ccli;
    auto* check_cmd = app.add_subcommand("check", "compare two expressions, 'lhs == rhs'");
    check_cmd->add_option("expr", ccli.expr, "equation to check")->required();
    check_cmd->add_option("--vars", ccli.vars, "number of alphabet variables");
    check_cmd->add_option("--t-order", ccli.t_order, "t truncation order");
    check_cmd->add_flag("--json", ccli.json, "machine-readable report");
    check_cmd->add_option("--out", ccli.out, "write the report to a file");

    ExpandCli ecli;
    auto* expand_cmd = app.add_subcommand("expand", "expand an expression into N variables");
    expand_cmd->add_option("expr", ecli.expr, "expression")->required();
    expand_cmd->add_option("--vars", ecli.vars, "number of alphabet variables");
    expand_cmd->add_option("--t-order", ecli.t_order, "t truncation order");
    expand_cmd->add_flag("--json", ecli.json, "machine-readable output");
    expand_cmd->add_option("--out", ecli.out, "write the output to a file");

    BinomCli bcli;
    auto* binom_cmd = app.add_subcommand("binom", "table of <mu/k> over the support");
    binom_cmd->add_option("--mu", bcli.mu_text, "partition mu")->required();
    binom_cmd->add_option("--max-k", bcli.max_k, "largest k to print");
    binom_cmd->add_flag("--json", bcli.json, "machine-readable output");
    binom_cmd->add_option("--out", bcli.out, "write the output to a file");

    TableCli tcli;
    auto* table_cmd = app.add_subcommand("table", "CSV of z_mu and <mu/k> for all mu of n");
    table_cmd->add_option("--n", tcli.n, "partition weight")->required();
    table_cmd->add_option("--out", tcli.out, "write the CSV to a file");

    bool list_json = false;
    std::string list_out;
    auto* list_cmd = app.add_subcommand("list-identities", "list verifiable identity ids");
    list_cmd->add_flag("--json", list_json, "machine-readable output");
    list_cmd->add_option("--out", list_out, "write the output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify_cmd)) return run_verify(vcli);
        if (app.got_subcommand(check_cmd)) return run_check(ccli);
        if (app.got_subcommand(expand_cmd)) return run_expand(ecli);
        if (app.got_subcommand(binom_cmd)) return run_binom(bcli);
        if (app.got_subcommand(table_cmd)) return run_table(tcli);
        if (app.got_subcommand(list_cmd)) return run_list(list_json, list_out);
    } catch (const dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
