// ca1 command-line interface.
//
// Subcommands: proof-table, baskets, contractions, verify, rr-dims, duval,
// special-surface. Output is a plain table by default or the JSON envelope
// {command, inputs, results, checks} with --format json. Exit codes:
// 0 verified/success, 1 verified-negative, 2 inconsistency or undecided.

#include <ca1/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

ca1::WeightVec4 parse_weights(const std::string& text) {
    std::vector<long long> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        vals.push_back(std::stoll(text.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (vals.size() != 4)
        throw CLI::ValidationError("--weights", "expected four comma-separated positive integers");
    return ca1::WeightVec4(vals[0], vals[1], vals[2], vals[3]);
}

ca1::filt::WPoly parse_wpoly(const std::string& text) {
    std::vector<ca1::Rat> coeffs;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            coeffs.push_back(ca1::parse_rat(text.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return ca1::filt::WPoly(std::move(coeffs));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for threefold divisorial contractions over cA1 points"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format appear after the subcommand too

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    int d = 0;
    long long r_bound = 64;
    auto* baskets_cmd = app.add_subcommand("baskets", "enumerate basket/discrepancy candidates");
    baskets_cmd->add_option("--d", d, "defect dim m_P/f_*O_Y(-2E)")
        ->required()
        ->check(CLI::Range(0, 3));
    baskets_cmd->add_option("--r-bound", r_bound, "materialization bound for unbounded families")
        ->check(CLI::Range(1LL, 4096LL));

    app.add_subcommand("proof-table", "baskets with sum v = 3 and positive aE^3");

    long long N = 2;
    auto* contractions_cmd = app.add_subcommand("contractions", "catalog of weighted blow-ups");
    contractions_cmd->add_option("--N", N, "germ parameter in xy+z^2+w^N")
        ->required()
        ->check(CLI::Range(2LL, 10000LL));

    std::string weights_text;
    long long cert_bound = 4;
    auto* verify_cmd = app.add_subcommand("verify", "analyze one weighted blow-up");
    verify_cmd->add_option("--N", N, "germ parameter")->required()->check(CLI::Range(2LL, 10000LL));
    verify_cmd->add_option("--weights", weights_text, "weights a,b,c,d")->required();
    verify_cmd->add_option("--cert-bound", cert_bound, "valuation search bound")
        ->check(CLI::PositiveNumber);

    long long a = 2;
    std::string basket_text;
    auto* rr_cmd = app.add_subcommand("rr-dims", "Riemann-Roch quotient dimensions");
    rr_cmd->add_option("--a", a, "discrepancy")->required()->check(CLI::Range(1LL, 100000LL));
    rr_cmd->add_option("--basket", basket_text, "basket as r:v,r:v,... (empty for none)");

    long long chain_s = 1;
    unsigned long long mask = 0;
    auto* duval_cmd = app.add_subcommand("duval", "Du Val chain intersection numbers");
    duval_cmd->add_option("--s", chain_s, "chain length")->required()->check(CLI::Range(1LL, 62LL));
    duval_cmd->add_option("--contracted", mask, "bitmask of contracted nodes (bit i = node i+1)")
        ->required();

    std::string p_text;
    auto* ss_cmd = app.add_subcommand("special-surface", "Du Val type of z+p(w)+cw^a sections");
    ss_cmd->add_option("--a", a, "discrepancy")->required()->check(CLI::Range(2LL, 10000LL));
    ss_cmd->add_option("--p", p_text, "coefficients of p(w) from degree 0, comma-separated");
    ss_cmd->add_option("--N", N, "germ parameter")->required()->check(CLI::Range(2LL, 10000LL));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;  // usage errors stay clear of the result codes
    }

    try {
        ca1::cmd::CmdResult res;
        if (app.got_subcommand("proof-table")) res = ca1::cmd::run_proof_table();
        else if (app.got_subcommand(baskets_cmd)) res = ca1::cmd::run_baskets(d, r_bound);
        else if (app.got_subcommand(contractions_cmd)) res = ca1::cmd::run_contractions(N);
        else if (app.got_subcommand(verify_cmd))
            res = ca1::cmd::run_verify(N, parse_weights(weights_text), cert_bound);
        else if (app.got_subcommand(rr_cmd))
            res = ca1::cmd::run_rr_dims(a, ca1::Basket::parse(basket_text));
        else if (app.got_subcommand(duval_cmd)) res = ca1::cmd::run_duval(chain_s, mask);
        else if (app.got_subcommand(ss_cmd))
            res = ca1::cmd::run_special_surface(a, parse_wpoly(p_text), N);

        if (format == "json") std::cout << res.doc.dump(2) << "\n";
        else std::cout << ca1::cmd::render_table(res.doc);
        return res.exit_code;
    } catch (const ca1::consistency_error& err) {
        std::cerr << "consistency failure: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 64;
    }
}
