// Command-line front end: prints exact statistic distributions, verifies
// the closed-form identities against enumeration, and emits closed-form
// tables. Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahonian/genfun.hpp"
#include "mahonian/verify.hpp"

namespace {

using mahonian::Character;
using mahonian::Group;
using mahonian::IntPoly;
using mahonian::Order;
using mahonian::Statistic;
using json = nlohmann::ordered_json;

Group parse_group(const std::string& s) {
    if (s == "sn") return Group::Sn;
    if (s == "an") return Group::An;
    if (s == "bn") return Group::Bn;
    if (s == "bn-plus") return Group::BnPlus;
    if (s == "dn") return Group::Dn;
    if (s == "c2-wr-an") return Group::C2WrAn;
    throw std::domain_error("unknown group '" + s + "'");
}

Statistic parse_stat(const std::string& s) {
    if (s == "inv") return Statistic::Inv;
    if (s == "maj") return Statistic::Maj;
    if (s == "fmaj") return Statistic::Fmaj;
    if (s == "length") return Statistic::Length;
    throw std::domain_error("unknown statistic '" + s + "'");
}

Character parse_char(const std::string& s) {
    if (s == "trivial") return Character::Trivial;
    if (s == "sign") return Character::Sign;
    if (s == "neg") return Character::NegChar;
    if (s == "sign-abs") return Character::SignAbs;
    throw std::domain_error("unknown character '" + s + "'");
}

Order parse_order(const std::string& s) {
    if (s == "neg-reversed") return Order::NegReversed;
    if (s == "natural") return Order::Natural;
    throw std::domain_error("unknown order '" + s + "'");
}

bool is_signed_group(Group g) {
    return g == Group::Bn || g == Group::BnPlus || g == Group::Dn || g == Group::C2WrAn;
}

json poly_json(const IntPoly& p) {
    json coeffs = json::array();
    for (int e = 0; e <= p.degree(); ++e) coeffs.push_back(p.coeff(e).get_str());
    return json{{"var", "q"}, {"coeffs", coeffs}};
}

struct DistArgs {
    std::string group;
    std::string stat = "maj";
    std::string chi = "trivial";
    std::string order = "neg-reversed";
    int n = 0;
    int last = 0;
    bool order_given = false;
    bool last_given = false;
    bool machine = false;
};

int cmd_dist(const DistArgs& a) {
    const Group g = parse_group(a.group);
    const Statistic stat = parse_stat(a.stat);
    const Character chi = parse_char(a.chi);
    const Order ord = parse_order(a.order);
    if (a.order_given && !is_signed_group(g))
        throw std::domain_error("--order applies to signed groups only");
    if (a.last_given && g != Group::Sn)
        throw std::domain_error("--last applies to group sn only");
    std::optional<int> last_digit;
    if (a.last_given) last_digit = a.last;
    const IntPoly p = mahonian::dist_group(g, stat, chi, a.n, ord, last_digit);
    if (!a.machine) {
        std::cout << mahonian::render(p) << "\n";
        return 0;
    }
    json j{{"command", "dist"}, {"group", a.group}, {"stat", a.stat}, {"char", a.chi},
           {"n", a.n}};
    if (is_signed_group(g)) j["order"] = a.order;
    if (last_digit) j["last"] = *last_digit;
    j["poly"] = poly_json(p);
    j["text"] = mahonian::render(p);
    std::cout << j.dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string identity;
    int n_max = 1;
    int m = 0;
    int deg_cap = 20;
    bool m_given = false;
    bool deg_cap_given = false;
    bool machine = false;
};

std::string params_text(const mahonian::VerifyReport& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += ' ';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

int cmd_verify(const VerifyArgs& a) {
    if (a.deg_cap_given && !mahonian::identity_uses_deg_cap(a.identity))
        throw std::domain_error("--deg-cap applies to identity 'gordon-roselle' only");
    mahonian::VerifyOptions opt;
    opt.n_max = a.n_max;
    if (a.m_given) opt.m_max = a.m;
    opt.deg_cap = a.deg_cap;
    const auto reports = mahonian::run_identity(a.identity, opt);

    int failed = 0;
    for (const auto& r : reports) {
        if (!r.passed) ++failed;
        if (a.machine) {
            json j{{"command", "verify"}, {"identity", r.identity}};
            json params = json::object();
            for (const auto& [k, v] : r.params) params[k] = v;
            j["params"] = params;
            j["passed"] = r.passed;
            if (!r.lhs.empty()) j["lhs"] = r.lhs;
            if (!r.rhs.empty()) j["rhs"] = r.rhs;
            j["elapsed_ms"] = r.elapsed_ms;
            std::cout << j.dump() << "\n";
            continue;
        }
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.identity;
        const std::string params = params_text(r);
        if (!params.empty()) std::cout << ' ' << params;
        std::cout << " (" << r.elapsed_ms << " ms)\n";
        if (!r.lhs.empty() || !r.rhs.empty()) {
            std::cout << "  lhs: " << r.lhs << "\n";
            std::cout << "  rhs: " << r.rhs << "\n";
        }
    }
    if (!a.machine)
        std::cout << "cells: " << reports.size() << " passed: "
                  << reports.size() - failed << " failed: " << failed << "\n";
    return failed == 0 ? 0 : 1;
}

struct TableArgs {
    std::string family;
    int n_max = 1;
    bool machine = false;
};

IntPoly table_row(const std::string& family, int n) {
    if (family == "mahonian") return mahonian::macmahon_poly(n);
    if (family == "signed-mahonian") return mahonian::gessel_simion_poly(n);
    if (family == "fmaj-b") return mahonian::poincare_b_poly(n);
    if (family == "signed-fmaj-b") return mahonian::signed_fmaj_closed(n, Character::Sign);
    if (family == "subgroup-an") return mahonian::subgroup_dist_closed(Group::An, n);
    if (family == "subgroup-dn") return mahonian::subgroup_dist_closed(Group::Dn, n);
    throw std::domain_error("unknown family '" + family + "'");
}

int cmd_table(const TableArgs& a) {
    if (a.n_max < 1) throw std::domain_error("table: n_max must be positive");
    for (int n = 1; n <= a.n_max; ++n) {
        const IntPoly p = table_row(a.family, n);
        if (a.machine) {
            json j{{"command", "table"}, {"family", a.family}, {"n", n}};
            j["poly"] = poly_json(p);
            j["text"] = mahonian::render(p);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << mahonian::render(p) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permutation-statistic distributions, closed forms and "
                 "identity verification"};
    app.require_subcommand(1);

    DistArgs d;
    auto* dist = app.add_subcommand("dist", "Print one statistic distribution");
    dist->add_option("--group", d.group, "sn, an, bn, bn-plus, dn, c2-wr-an")->required();
    dist->add_option("--stat", d.stat, "inv, maj, fmaj, length (default maj)");
    dist->add_option("--char", d.chi, "trivial, sign, neg, sign-abs (default trivial)");
    dist->add_option("-n", d.n, "window size")->required();
    auto* order_opt =
        dist->add_option("--order", d.order, "neg-reversed (default) or natural");
    auto* last_opt = dist->add_option("--last", d.last, "fixed final digit (sn only)");
    dist->add_flag("--machine", d.machine, "one JSON object per line");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "Check identities against enumeration");
    verify->add_option("--identity", v.identity, "identity name (see README)")->required();
    verify->add_option("--n-max", v.n_max, "largest window size")->required();
    auto* m_opt = verify->add_option("-m", v.m, "largest root order (olive, root-factor)");
    auto* cap_opt =
        verify->add_option("--deg-cap", v.deg_cap, "truncation degree (gordon-roselle)");
    verify->add_flag("--machine", v.machine, "one JSON object per line");

    TableArgs t;
    auto* table = app.add_subcommand("table", "Print closed-form rows for n = 1..n_max");
    table->add_option("--family", t.family,
                      "mahonian, signed-mahonian, fmaj-b, signed-fmaj-b, subgroup-an, "
                      "subgroup-dn")
        ->required();
    table->add_option("--n-max", t.n_max, "largest window size")->required();
    table->add_flag("--machine", t.machine, "one JSON object per line");

    try {
        app.parse(argc, argv);
        d.order_given = order_opt->count() > 0;
        d.last_given = last_opt->count() > 0;
        v.m_given = m_opt->count() > 0;
        v.deg_cap_given = cap_opt->count() > 0;
        if (dist->parsed()) return cmd_dist(d);
        if (verify->parsed()) return cmd_verify(v);
        if (table->parsed()) return cmd_table(t);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
