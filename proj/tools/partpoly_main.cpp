// partpoly: exact eta-power partition polynomials, inequality scans, and
// root certificates from the command line.
//
// Exit codes: 0 = success / all checks passed, 1 = a check or computation
// failed, 2 = usage error (bad flags or argument values).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partpoly/eta.hpp"
#include "partpoly/inequality.hpp"
#include "partpoly/io.hpp"
#include "partpoly/roots.hpp"
#include "partpoly/verify.hpp"

namespace {

using namespace partpoly;

struct GlobalOpts {
    std::string output_dir;
    std::string format = "text";
    int threads = 0;
    int float_bits = 113;
    int precision_bits = 192;
};

std::filesystem::path resolve_dir(const GlobalOpts& g) {
    return std::filesystem::path(g.output_dir.empty() ? "." : g.output_dir);
}

std::string write_text_file(const GlobalOpts& g, const std::string& name, const std::string& body) {
    std::filesystem::path dir = resolve_dir(g);
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / name;
    std::ofstream stream(file, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + file.string());
    stream << body;
    return file.string();
}

int emit_scan(const ScanReport& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.pass() ? 0 : 1;
}

VerifyOptions verify_opts(const GlobalOpts& g) {
    VerifyOptions opts;
    opts.float_bits = g.float_bits;
    opts.threads = g.threads;
    return opts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eta-power partition polynomials and log-concavity certificates"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("PARTPOLY_OUTPUT_DIR")) g.output_dir = env;
    app.add_option("--output-dir", g.output_dir, "Directory for generated files");
    app.add_option("--format", g.format, "Report format for table checks")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", g.threads, "Worker threads for figure datasets (0 = hardware count)");
    app.add_option("--float-bits", g.float_bits, "Mantissa bits for floating-point root finding")
        ->check(CLI::Range(24, 4096));
    app.add_option("--precision-bits", g.precision_bits, "Bits for asymptotic main term evaluation")
        ->check(CLI::Range(16, 1 << 20));
    app.set_config("--config", "", "Read defaults from a key=value file; flags override");

    int rc = 0;

    // gen: tabulate P_0..P_n and write them as JSON
    auto* gen = app.add_subcommand("gen", "Generate the polynomial table P_0..P_n");
    int gen_n = 20;
    std::string gen_out = "polys.json";
    gen->add_option("--n-max", gen_n, "Largest index to tabulate")->check(CLI::Range(2, 4000));
    gen->add_option("--out", gen_out, "Output file name (under --output-dir)");
    gen->callback([&] {
        EtaTable table = gen_table(gen_n);
        std::cout << write_text_file(g, gen_out, table_to_json(table).dump(2) + "\n") << "\n";
    });

    // eval: exact values P_0(x)..P_n(x) as CSV
    auto* eval = app.add_subcommand("eval", "Evaluate P_0(x)..P_n(x) exactly");
    std::string eval_x = "2";
    int eval_n = 30;
    std::string eval_out;
    eval->add_option("--x", eval_x, "Evaluation point (integer, fraction, or decimal)")->required();
    eval->add_option("--n-max", eval_n, "Largest index")->check(CLI::Range(0, 100000));
    eval->add_option("--out", eval_out, "Write CSV here instead of stdout");
    eval->callback([&] {
        ValueSequence seq = eval_sequence(rational_from_string(eval_x), eval_n);
        std::string csv = sequence_csv(seq);
        if (eval_out.empty())
            std::cout << csv;
        else
            std::cout << write_text_file(g, eval_out, csv) << "\n";
    });

    // delta: the polynomial P_{a-1}P_{b+1} - P_aP_b, or its value at a point
    auto* del = app.add_subcommand("delta", "Compute delta_{a,b}, optionally evaluated at a point");
    int del_a = 0, del_b = 0;
    std::string del_at, del_out;
    del->add_option("--a", del_a, "Upper index")->required();
    del->add_option("--b", del_b, "Lower index")->required();
    del->add_option("--at", del_at, "Evaluate at this point instead of printing coefficients");
    del->add_option("--out", del_out, "Write polynomial JSON here");
    del->callback([&] {
        EtaTable table = gen_table(del_a);
        DeltaPoly d = delta(del_a, del_b, table);
        if (!del_at.empty()) {
            std::cout << rational_to_string(d.poly.eval(rational_from_string(del_at))) << "\n";
            return;
        }
        Json j = poly_to_json(d.poly);
        j["a"] = d.a;
        j["b"] = d.b;
        if (del_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            std::cout << write_text_file(g, del_out, j.dump(2) + "\n") << "\n";
    });

    // scan-cft: integer log-concavity sweep with the known exception list
    auto* cft = app.add_subcommand("scan-cft", "Scan p_{-k}(n) log-concavity over n and k");
    int cft_n = 50, cft_k = 10;
    cft->add_option("--n-max", cft_n, "Largest n")->check(CLI::Range(2, 2000));
    cft->add_option("--k-max", cft_k, "Largest k")->check(CLI::Range(2, 200));
    cft->callback([&] { rc = emit_scan(scan_cft(cft_n, cft_k)); });

    // scan-delta: sign of delta_{a,b} on a rational grid
    auto* sd = app.add_subcommand("scan-delta", "Check delta_{a,b}(x) >= 0 on a grid of points");
    int sd_b = 0, sd_alo = 0, sd_ahi = 0;
    std::vector<std::string> sd_grid;
    sd->add_option("--b", sd_b, "Fixed lower index")->required();
    sd->add_option("--a-max", sd_ahi, "Last upper index")->required();
    sd->add_option("--a-lo", sd_alo, "First upper index (default b+2)");
    sd->add_option("--x", sd_grid, "Grid points (repeat or comma separate)")
        ->required()
        ->delimiter(',');
    sd->callback([&] {
        std::vector<Rational> grid;
        for (const std::string& s : sd_grid) grid.push_back(rational_from_string(s));
        int a_lo = sd_alo > 0 ? sd_alo : sd_b + 2;
        EtaTable table = gen_table(sd_ahi);
        rc = emit_scan(scan_delta_sign(sd_b, a_lo, sd_ahi, grid, table));
    });

    // assumptions: both ray-positivity certificates for one (b, x0)
    auto* as = app.add_subcommand("assumptions", "Certify the two positivity assumptions at (b, x0)");
    int as_b = 1;
    std::string as_x0;
    as->add_option("--b", as_b, "Index b")->required()->check(CLI::Range(0, 200));
    as->add_option("--x0", as_x0, "Base point x0")->required();
    as->callback([&] {
        Rational x0 = rational_from_string(as_x0);
        EtaTable table = gen_table(as_b + 1);
        ScanReport first = assumption1_certificate(as_b, x0, table);
        ScanReport second = assumption2_certificate(as_b, x0, table);
        Json arr = Json::array({first.to_json(), second.to_json()});
        std::cout << arr.dump(2) << "\n";
        rc = (first.pass() && second.pass()) ? 0 : 1;
    });

    // smallest-x0: the least admissible base point for index b
    auto* sx = app.add_subcommand("smallest-x0", "Isolate the smallest admissible x0 for index b");
    int sx_b = 2, sx_bits = 140;
    sx->add_option("--b", sx_b, "Index b")->required()->check(CLI::Range(1, 200));
    sx->add_option("--bits", sx_bits, "Refinement width 2^-bits")->check(CLI::Range(8, 10000));
    sx->callback([&] {
        EtaTable table = gen_table(sx_b + 1);
        Interval iv = smallest_x0(sx_b, sx_bits, table);
        Json j{{"b", sx_b},
               {"lo", rational_to_string(iv.lo)},
               {"hi", rational_to_string(iv.hi)},
               {"point", iv.is_point()},
               {"decimal", decimal_string(iv.midpoint(), 37)}};
        std::cout << j.dump(2) << "\n";
    });

    // roots: real roots of delta_{a,b} (exactly isolated), or the full
    // complex set with --complex
    auto* rt = app.add_subcommand("roots", "Find roots of delta_{a,b} as CSV");
    int rt_a = 0, rt_b = 0;
    bool rt_complex = false;
    std::string rt_out;
    rt->add_option("--a", rt_a, "Upper index")->required();
    rt->add_option("--b", rt_b, "Lower index")->required();
    rt->add_flag("--complex", rt_complex, "Include complex roots (floating point)");
    rt->add_option("--out", rt_out, "Write CSV here instead of stdout");
    rt->callback([&] {
        EtaTable table = gen_table(rt_a);
        DeltaPoly d = delta(rt_a, rt_b, table);
        const int sig = std::max(17, g.float_bits * 30103 / 100000);
        std::string id = "delta_" + std::to_string(rt_a) + "_" + std::to_string(rt_b);
        std::string csv = root_csv_header() + "\n";
        if (!rt_complex) {
            const mpf_class zero(0, 64);
            for (const Interval& raw : isolate_real_roots(d.poly)) {
                Interval iv = refine(d.poly, raw, 40);
                mpf_class re(0, g.float_bits);
                mpf_set_q(re.get_mpf_t(), Rational(iv.midpoint()).get_mpq_t());
                std::ostringstream row;
                row << id << ',' << rt_a << ',' << rt_b << ",real," << float_string(re, sig) << ','
                    << float_string(zero, sig) << ",," << iv.lo.get_num().get_str() << ','
                    << iv.lo.get_den().get_str() << ',' << iv.hi.get_num().get_str() << ','
                    << iv.hi.get_den().get_str() << '\n';
                csv += row.str();
            }
        } else {
            RootSet rs = complex_roots(d.poly, g.float_bits);
            for (const ComplexRoot& r : rs.complex_roots) {
                const Interval* iv = nullptr;
                Interval refined;
                if (r.is_real) {
                    // pair the float root with the nearest exactly isolated one
                    std::optional<Interval> best;
                    mpf_class best_dist;
                    for (const auto& [raw, flag] : rs.real_roots) {
                        Interval cand = refine(d.poly, raw, 40);
                        mpf_class mid(0, g.float_bits);
                        mpf_set_q(mid.get_mpf_t(), Rational(cand.midpoint()).get_mpq_t());
                        mpf_class dist = abs(r.re - mid);
                        if (!best || dist < best_dist) {
                            best = cand;
                            best_dist = dist;
                        }
                    }
                    if (best) {
                        refined = *best;
                        iv = &refined;
                    }
                }
                csv += root_csv_row(id, rt_a, rt_b, r, iv, sig) + "\n";
            }
        }
        if (rt_out.empty())
            std::cout << csv;
        else
            std::cout << write_text_file(g, rt_out, csv) << "\n";
    });

    // tables: reproduce embedded reference tables
    auto* tb = app.add_subcommand("tables", "Recompute reference tables and compare every cell");
    std::vector<std::string> tb_only;
    tb->add_option("--only", tb_only, "Table ids to run (default: T1..T7)")->delimiter(',');
    tb->callback([&] {
        std::vector<TableId> ids;
        if (tb_only.empty()) {
            for (TableId id : all_table_ids())
                if (id != TableId::FIG1 && id != TableId::FIG2) ids.push_back(id);
        } else {
            for (const std::string& name : tb_only) {
                auto id = table_id_from_name(name);
                if (!id) throw CLI::ValidationError("--only", "unknown table id '" + name + "'");
                ids.push_back(*id);
            }
        }
        int depth = 7;
        VerifyOptions opts = verify_opts(g);
        for (TableId id : ids) {
            if (id == TableId::FIG1) depth = std::max(depth, opts.fig1_a_max);
            if (id == TableId::FIG2) depth = std::max(depth, opts.fig2_a_max);
        }
        EtaTable table = gen_table(depth);
        bool all_pass = true;
        Json arr = Json::array();
        if (g.format == "csv") std::cout << "table,label,expected,computed,match\n";
        for (TableId id : ids) {
            TableReport rep = reproduce(id, table, opts);
            all_pass = all_pass && rep.pass();
            if (g.format == "json") {
                arr.push_back(rep.to_json());
            } else if (g.format == "csv") {
                for (const TableCell& c : rep.cells)
                    std::cout << table_id_name(id) << ",\"" << c.label << "\",\"" << c.expected
                              << "\",\"" << c.computed << "\"," << (c.match ? "true" : "false") << "\n";
            } else {
                std::cout << rep.summary();
            }
        }
        if (g.format == "json") std::cout << arr.dump(2) << "\n";
        rc = all_pass ? 0 : 1;
    });

    // figures: write the root-location datasets
    auto* fg = app.add_subcommand("figures", "Write root-location CSV datasets");
    std::string fg_which = "fig1";
    int fg_amax = 0;
    fg->add_option("--which", fg_which, "fig1 (b = 2) or fig2 (b = 27, 28)")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    fg->add_option("--a-max", fg_amax, "Largest upper index (default 30 / 40)");
    fg->callback([&] {
        TableId id = fg_which == "fig1" ? TableId::FIG1 : TableId::FIG2;
        VerifyOptions opts = verify_opts(g);
        int a_max = fg_amax > 0 ? fg_amax : (id == TableId::FIG1 ? opts.fig1_a_max : opts.fig2_a_max);
        EtaTable table = gen_table(a_max);
        std::cout << figure_dataset(id, a_max, table, opts, resolve_dir(g).string()) << "\n";
    });

    // main-term: asymptotic main term vs the exact difference
    auto* mt = app.add_subcommand("main-term", "Compare delta_{a,b}(x) against its asymptotic main term");
    int mt_a = 0, mt_b = 0;
    std::string mt_x = "2";
    mt->add_option("--a", mt_a, "Upper index")->required();
    mt->add_option("--b", mt_b, "Lower index")->required();
    mt->add_option("--x", mt_x, "Evaluation point")->required();
    mt->callback([&] {
        MainTermResult res = main_term(mt_a, mt_b, rational_from_string(mt_x), g.precision_bits);
        Json j{{"a", mt_a},
               {"b", mt_b},
               {"x", mt_x},
               {"hypothesis_valid", res.valid},
               {"precision_ok", res.precision_ok},
               {"ratio_in_window", res.ratio_in_window},
               {"main_term", res.main_term},
               {"delta_exact", res.delta_exact},
               {"ratio", res.ratio}};
        std::cout << j.dump(2) << "\n";
        rc = (res.precision_ok && (!res.valid || res.ratio_in_window)) ? 0 : 1;
    });

    // let global flags appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
