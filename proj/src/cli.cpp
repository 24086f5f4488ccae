#include "powersum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "powersum/elliptic.hpp"
#include "powersum/families.hpp"
#include "powersum/oracle.hpp"
#include "powersum/pair.hpp"

namespace powersum::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fam = powersum::families;
namespace ell = powersum::elliptic;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split_list(text)) out.push_back(Rational::parse(s));
    return out;
}

std::array<Integer, 6> parse_six(const std::string& text) {
    auto items = split_list(text);
    if (items.size() != 6) throw MathError("expected exactly 6 comma-separated integers");
    std::array<Integer, 6> out;
    for (size_t i = 0; i < 6; ++i) out[i] = Integer(items[i]);
    return out;
}

std::set<unsigned> parse_degrees(const std::string& text) {
    std::set<unsigned> out;
    for (const auto& s : split_list(text)) {
        long v = std::stol(s);
        if (v < 1) throw MathError("degrees must be positive");
        out.insert(static_cast<unsigned>(v));
    }
    if (out.empty()) throw MathError("empty degree list");
    return out;
}

// One result line. Pass requires zero residuals at every degree plus
// agreement from the independent oracle.
struct Report {
    std::ostream& out;
    size_t records = 0, passed = 0;

    void emit_pair(const PowerSumPair& pair, const std::string& source) {
        PowerSumPair canon = canonicalize(pair);
        VerifyReport rep = verify_pair(canon);
        bool pass = rep.pass && oracle::oracle_verify(canon);
        json rec;
        json jp;
        json lhs = json::array(), rhs = json::array(), degs = json::array();
        for (const auto& v : canon.lhs) lhs.push_back(v.str());
        for (const auto& v : canon.rhs) rhs.push_back(v.str());
        for (unsigned k : canon.degrees) degs.push_back(k);
        jp["lhs"] = lhs;
        jp["rhs"] = rhs;
        jp["degrees"] = degs;
        rec["pair"] = jp;
        json res;
        for (const auto& [k, r] : rep.residuals) res[std::to_string(k)] = r.str();
        rec["residuals"] = res;
        rec["pass"] = pass;
        rec["source"] = source.empty() ? canon.source : source;
        if (!canon.flag.empty()) rec["flag"] = canon.flag;
        out << rec.dump() << "\n";
        ++records;
        if (pass) ++passed;
    }

    void emit_note(const std::string& note, const std::string& source) {
        json rec;
        rec["erratum"] = note;
        rec["source"] = source;
        out << rec.dump() << "\n";
    }

    int finish() {
        json rec;
        json s;
        s["records"] = records;
        s["pass"] = passed;
        s["fail"] = records - passed;
        rec["summary"] = s;
        int exit_code = (records == passed) ? 0 : 1;
        rec["exit"] = exit_code;
        out << rec.dump() << "\n";
        return exit_code;
    }
};

struct TableARow {
    unsigned n;
    std::vector<long> lhs, rhs;
    std::set<unsigned> degrees;
};

std::vector<TableARow> table_a_rows() {
    return {
        {2, {1, 7, 17, 30, 31, 36}, {3, 4, 19, 27, 34, 35}, {2}},
        {3, {11, 22, 4, 3, 21, 5}, {20, 7, 6, 23, 9, 1}, {3}},
        {4, {16, 480, 496, 532, 798, 1330}, {224, 342, 336, 560, 950, 1292}, {4}},
        {5, {87, 233, 264, 396, 496, 540}, {90, 206, 309, 366, 522, 523}, {5}},
        {6, {61, 3, 109, 67, 7, 79}, {21, 17, 53, 59, 89, 107}, {6}},
        {7, {129, 199, 285, 71, 11, 366}, {218, 110, 367, 277, 38, 51}, {1, 3, 5, 7}},
        {8, {3, 6, 8, 10, 15, 23}, {5, 9, 12, 9, 20, 22}, {8}},
        {9, {1, 13, 14, 13, 18, 23}, {5, 9, 10, 15, 21, 22}, {1, 3, 9}},
    };
}

void run_table_a(Report& report, bool audit) {
    for (const auto& row : table_a_rows()) {
        PowerSumPair p = make_pair_int(row.lhs, row.rhs, row.degrees,
                                       "table-a n=" + std::to_string(row.n));
        report.emit_pair(p, p.source);
    }
    // the printed n=9 row moved negatives across sides, which breaks k=2
    PowerSumPair n9 = make_pair_int({1, 13, 14, 13, 18, 23}, {5, 9, 10, 15, 21, 22}, {2});
    report.emit_note("n=9 printed row fails k=2 with residual " +
                         power_sum_residual(n9, 2).str() +
                         "; the signed pre-image (from deg9_family(1,3,6/5)) passes k=1,2,3,9",
                     "table-a n=9");
    if (!audit) return;

    // in-text worked examples
    report.emit_pair(fam::deg2_family(Rational(2)), "audit deg2 k=2");
    auto d3 = fam::deg3_shift_family({1, 2, 4, 8, 9, 12}, {3, 5, 6, 7, 10, 11});
    report.emit_pair(d3.pair, "audit deg3-shift x=" + d3.x.str());
    report.emit_pair(fam::deg3_symmetric_family({2, 5, 10, 6, 21, 22}, Rational(1)),
                     "audit deg3-sym x=1");
    report.emit_pair(fam::deg4_family(Rational(2)), "audit deg4 k=2");
    report.emit_pair(fam::deg5_66_family(Rational(2)), "audit deg5 m=2");
    report.emit_pair(fam::deg6_family(1, 1, 1), "audit deg6 example a");
    report.emit_pair(fam::deg6_family(1, 1, 3), "audit deg6 example b");
    report.emit_pair(make_pair_int({27, 85, 43, 73, 11, 49}, {29, 83, 41, 45, 17, 77}, {6}),
                     "audit deg6 example c (numeric only)");
    report.emit_pair(fam::deg7_family(3, 2, 1, 13), "audit deg7 (3,2,1,13)");
    report.emit_pair(fam::deg7_family(4, 1, 82, 89), "audit deg7 (4,1,82,89)");
    report.emit_pair(fam::deg8_family(1, 47, 82), "audit deg8 (1,47,82)");
    report.emit_pair(fam::deg9_family(Rational(3), Rational(4), Rational(27, 41), Rational(160)),
                     "audit deg9 (3,4,27/41) w=160");

    report.emit_note("deg4 base row: the paper's run-together \"9501292\" is read as 950, 1292 "
                     "(consistent with its displayed fourth-power sum)",
                     "audit deg4");
    report.emit_note("deg3 shift: the paper's eq. (5) sign yields x = +1/5 for the worked base; "
                     "x = -(sum A - sum P)/(sum A^2 - sum P^2) reproduces the printed x = -1/5",
                     "audit deg3");
    report.emit_note("deg9 curve constant: \"U^3 - 7166374 - 22875861928\" resolved to "
                     "U^3 - 7166374*U - 22875861928 (P lies on the resolved curve exactly)",
                     "audit deg9");
    auto raw = ell::deg8_weier_to_quartic_raw(Rational(406, 25), Rational(-396, 125));
    report.emit_note("deg8 map (5) sends Q=(406/25,-396/125) to (0," + raw.v.str() +
                         ") as printed; the designated pairing on the U=0 fiber restores the "
                         "paper's correspondence Q <-> (0,160)",
                     "audit deg8");
}

void run_extend(Report& report, unsigned degree, unsigned steps) {
    if (degree == 8) {
        auto bridge = ell::deg8_paper_bridge();
        auto model = ell::deg8_model();
        ell::QuarticPoint base{Rational(0), Rational(160)};
        auto params = ell::generate_parameters(model, base, steps, bridge);
        for (const auto& pt : params) {
            auto roots = fam::deg8_solve_ab(pt.u);
            for (const auto& [a, b] : roots) {
                if (b == 0) continue;
                PowerSumPair p = fam::deg8_family(pt.u, Rational(a), Rational(b));
                report.emit_pair(p, "extend deg8 x=" + pt.u.str() + " a=" + Rational(a).str() +
                                        " b=" + Rational(b).str());
            }
        }
        return;
    }
    if (degree == 9) {
        auto model = ell::deg9_model();
        ell::MordellBridge mb(model, ell::deg9_base_point());
        auto params = ell::generate_parameters(model, ell::deg9_root_point(), steps, mb.bridge());
        for (const auto& pt : params) {
            PowerSumPair p = fam::deg9_family(Rational(3), Rational(4), pt.u);
            report.emit_pair(p, "extend deg9 t=" + pt.u.str());
        }
        return;
    }
    throw MathError("extend: --degree must be 8 or 9");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"equal sums of six n-th powers: verify, generate, extend, search"};
    app.require_subcommand(1);

    // verify
    std::string v_degrees, v_lhs, v_rhs;
    auto* verify_cmd = app.add_subcommand("verify", "check a pair at the given degrees");
    verify_cmd->add_option("--degrees", v_degrees)->required();
    verify_cmd->add_option("--lhs", v_lhs)->required();
    verify_cmd->add_option("--rhs", v_rhs)->required();

    // gen <family>
    auto* gen_cmd = app.add_subcommand("gen", "instantiate a parametric family");
    gen_cmd->require_subcommand(1);
    std::string g_k = "0", g_m = "0", g_x = "0", g_t = "0", g_w;
    std::string g_basea, g_basep, g_coeffs, g_a = "0", g_b = "0";
    long long g_a1 = 0, g_b2 = 0, g_kk = 0, g_p = 0, g_q = 0;
    unsigned g_half = 0;
    auto* d2 = gen_cmd->add_subcommand("deg2");
    d2->add_option("--k", g_k)->required();
    auto* d3s = gen_cmd->add_subcommand("deg3-shift");
    d3s->add_option("--base-a", g_basea)->required();
    d3s->add_option("--base-p", g_basep)->required();
    auto* d3y = gen_cmd->add_subcommand("deg3-sym");
    d3y->add_option("--coeffs", g_coeffs)->required();
    d3y->add_option("--x", g_x)->required();
    auto* d4 = gen_cmd->add_subcommand("deg4");
    d4->add_option("--k", g_k)->required();
    auto* d5 = gen_cmd->add_subcommand("deg5");
    d5->add_option("--m", g_m)->required();
    d5->add_option("--half", g_half)->check(CLI::Range(1u, 2u));
    auto* d6 = gen_cmd->add_subcommand("deg6");
    d6->add_option("--a1", g_a1)->required();
    d6->add_option("--b2", g_b2)->required();
    d6->add_option("--k", g_kk)->required();
    auto* d7 = gen_cmd->add_subcommand("deg7");
    d7->add_option("--p", g_p)->required();
    d7->add_option("--q", g_q)->required();
    d7->add_option("--a", g_a)->required();
    d7->add_option("--b", g_b)->required();
    auto* d8 = gen_cmd->add_subcommand("deg8");
    d8->add_option("--x", g_x)->required();
    d8->add_option("--a", g_a)->required();
    d8->add_option("--b", g_b)->required();
    auto* d9 = gen_cmd->add_subcommand("deg9");
    d9->add_option("--a", g_a)->required();
    d9->add_option("--b", g_b)->required();
    d9->add_option("--t", g_t)->required();
    d9->add_option("--w", g_w);

    // extend
    unsigned e_degree = 0, e_steps = 1;
    auto* extend_cmd = app.add_subcommand("extend", "elliptic-curve parameter pipeline");
    extend_cmd->add_option("--degree", e_degree)->required();
    extend_cmd->add_option("--steps", e_steps)->default_val(1u);

    // search
    std::string s_degrees, s_contains;
    unsigned s_height = 0, s_side = 6, s_workers = 0;
    std::uint64_t s_ceiling = 100000000;
    bool s_signed = false, s_unsigned = false;
    auto* search_cmd = app.add_subcommand("search", "bounded exhaustive oracle search");
    search_cmd->add_option("--degrees", s_degrees)->required();
    search_cmd->add_option("--height", s_height)->required();
    search_cmd->add_option("--side-len", s_side)->default_val(6u);
    search_cmd->add_option("--workers", s_workers);
    search_cmd->add_option("--ceiling", s_ceiling);
    search_cmd->add_flag("--signed", s_signed);
    search_cmd->add_flag("--unsigned", s_unsigned);
    search_cmd->add_option("--contains", s_contains,
                           "membership query, \"l1,..,l6:r1,..,r6\"");

    // table-a
    bool t_audit = false;
    auto* table_cmd = app.add_subcommand("table-a", "verify the paper's numerical table");
    table_cmd->add_flag("--audit", t_audit);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    json header;
    {
        std::string echo;
        for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
        header["command"] = echo;
        header["version"] = kVersion;
    }
    out << header.dump() << "\n";

    Report report{out};
    try {
        if (*verify_cmd) {
            PowerSumPair p;
            p.lhs = parse_rationals(v_lhs);
            p.rhs = parse_rationals(v_rhs);
            p.degrees = parse_degrees(v_degrees);
            p.source = "verify";
            report.emit_pair(p, "verify");
        } else if (*gen_cmd) {
            if (*d2) {
                report.emit_pair(fam::deg2_family(Rational::parse(g_k)), "");
            } else if (*d3s) {
                auto res = fam::deg3_shift_family(parse_six(g_basea), parse_six(g_basep));
                report.emit_pair(res.pair, "");
            } else if (*d3y) {
                report.emit_pair(
                    fam::deg3_symmetric_family(parse_six(g_coeffs), Rational::parse(g_x)), "");
            } else if (*d4) {
                report.emit_pair(fam::deg4_family(Rational::parse(g_k)), "");
            } else if (*d5) {
                Rational m = Rational::parse(g_m);
                if (g_half == 0)
                    report.emit_pair(fam::deg5_66_family(m), "");
                else
                    report.emit_pair(fam::deg5_half_identity(
                                         g_half == 1 ? fam::deg5_base1() : fam::deg5_base2(), m),
                                     "");
            } else if (*d6) {
                report.emit_pair(fam::deg6_family(g_a1, g_b2, g_kk), "");
            } else if (*d7) {
                report.emit_pair(fam::deg7_family(g_p, g_q, Integer(g_a), Integer(g_b)), "");
            } else if (*d8) {
                report.emit_pair(fam::deg8_family(Rational::parse(g_x), Rational::parse(g_a),
                                                  Rational::parse(g_b)),
                                 "");
            } else if (*d9) {
                std::optional<Rational> w;
                if (!g_w.empty()) w = Rational::parse(g_w);
                report.emit_pair(fam::deg9_family(Rational::parse(g_a), Rational::parse(g_b),
                                                  Rational::parse(g_t), w),
                                 "");
            }
        } else if (*extend_cmd) {
            run_extend(report, e_degree, e_steps);
        } else if (*search_cmd) {
            oracle::SearchSpec spec;
            spec.degrees = parse_degrees(s_degrees);
            spec.height = s_height;
            spec.side_len = s_side;
            spec.workers = s_workers;
            spec.work_ceiling = s_ceiling;
            if (s_signed && s_unsigned) throw MathError("--signed conflicts with --unsigned");
            if (s_signed) spec.signed_entries = true;
            if (s_unsigned) spec.signed_entries = false;
            if (!s_contains.empty()) {
                auto colon = s_contains.find(':');
                if (colon == std::string::npos)
                    throw MathError("--contains expects \"lhs:rhs\"");
                PowerSumPair target;
                target.lhs = parse_rationals(s_contains.substr(0, colon));
                target.rhs = parse_rationals(s_contains.substr(colon + 1));
                target.degrees = spec.degrees;
                spec.target = std::move(target);
            }
            auto found = oracle::search(spec);
            for (const auto& p : found) report.emit_pair(p, "search");
            if (spec.target && found.empty()) {
                report.emit_note("target pair not found within bounds", "search");
                json rec;
                rec["summary"] = {{"records", 0}, {"pass", 0}, {"fail", 0}};
                rec["exit"] = 1;
                out << rec.dump() << "\n";
                return 1;
            }
        } else if (*table_cmd) {
            run_table_a(report, t_audit);
        }
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        json rec;
        rec["error"] = e.what();
        out << rec.dump() << "\n";
        return 1;
    }
    return report.finish();
}

}  // namespace powersum::cli
