#include "ringsum/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace ringsum;

namespace {

std::pair<long, long> parse_range(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos) throw Error("range must look like 1..40");
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

void emit(const Json& doc, bool json) {
    if (json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (doc["command"] == "order" && doc.contains("solution")) {
        std::cout << doc["solution"]["order"] << "\n";
        return;
    }
    std::cout << doc["command"].get<std::string>() << " " << doc["input"].get<std::string>()
              << "\n";
    if (doc.contains("tower"))
        std::cout << "ring: " << doc["tower"]["base"].get<std::string>() << "\n";
    if (doc.contains("solution") && !doc["solution"].is_null()) {
        for (auto it = doc["solution"].begin(); it != doc["solution"].end(); ++it)
            if (it.value().is_string())
                std::cout << it.key() << ": " << it.value().get<std::string>() << "\n";
    }
    if (doc.contains("verification")) {
        std::cout << "verification: " << doc["verification"]["status"].get<std::string>();
        if (doc["verification"].contains("range"))
            std::cout << " on " << doc["verification"]["range"][0].get<long>() << ".."
                      << doc["verification"]["range"][1].get<long>();
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringsum: symbolic summation in difference rings with roots of unity"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandOptions opt;
    bool json = false;
    std::string verifyRange = "1..40";
    if (const char* z = std::getenv("RINGSUM_ZETA")) opt.zeta = std::stoul(z);
    app.add_option("--zeta", opt.zeta, "cyclotomic order N of the constant field Q(zeta_N)");
    app.add_option("--params", opt.params, "parameter names")->delimiter(',');
    app.add_flag("--json", json, "emit JSON to stdout");
    app.add_option("--lambda-cap", opt.lambdaCap, "cap for the sigma^lambda lift");
    app.add_option("--max-order", opt.maxOrder, "maximal recurrence order for zeilberger");
    app.add_option("--verify-range", verifyRange, "numeric verification range a..b");
    app.add_option("--extra", opt.extra, "helper sums/products to adjoin first");

    std::string input, rhs, var;
    auto* tele = app.add_subcommand("telescope", "solve sigma(g) - g = f for a summand f(k)");
    tele->fallthrough();
    tele->add_option("expr", input)->required();
    auto* zeil = app.add_subcommand("zeilberger", "creative telescoping for F(n, k)");
    zeil->fallthrough();
    zeil->add_option("expr", input)->required();
    auto* rew = app.add_subcommand("rewrite-product", "closed form of Prod(j,a,b, u(j))");
    rew->fallthrough();
    rew->add_option("expr", input)->required();
    auto* ord = app.add_subcommand("order", "order/period/factorial order of a product element");
    ord->fallthrough();
    ord->add_option("expr", input)->required();
    auto* ver = app.add_subcommand("verify", "compare two expressions over an integer range");
    ver->fallthrough();
    ver->add_option("lhs", input)->required();
    ver->add_option("rhs", rhs)->required();
    ver->add_option("--var", var, "free variable of the identity");
    auto* desc = app.add_subcommand("describe-tower", "show the ring an expression compiles into");
    desc->fallthrough();
    desc->add_option("expr", input)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::tie(opt.verifyLo, opt.verifyHi) = parse_range(verifyRange);
        CommandResult res;
        if (tele->parsed()) res = cmd_telescope(opt, input);
        else if (zeil->parsed()) res = cmd_zeilberger(opt, input);
        else if (rew->parsed()) res = cmd_rewrite_product(opt, input);
        else if (ord->parsed()) res = cmd_order(opt, input);
        else if (ver->parsed()) res = cmd_verify(opt, input, rhs, var);
        else if (desc->parsed()) res = cmd_describe(opt, input);
        emit(res.doc, json);
        return res.exitCode;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
