// degtab: command-line front end for the degree table library.

#include "degtab/bounds.hpp"
#include "degtab/costmodel.hpp"
#include "degtab/equivalence.hpp"
#include "degtab/figures.hpp"
#include "degtab/gasp.hpp"
#include "degtab/ilp.hpp"
#include "degtab/json_io.hpp"
#include "degtab/sdmm.hpp"
#include "degtab/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace degtab;

namespace {

enum class Format { Json, Tsv, Pretty };

struct Globals {
    Format format = Format::Pretty;
    std::uint64_t seed = 1;
};

// Thrown for bad flag combinations that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string cell(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

// Objects become one header line plus one row; arrays of objects one row each.
std::string tsv(const Json& j)
{
    auto header = [](const Json& obj) {
        std::string s;
        for (auto it = obj.begin(); it != obj.end(); ++it) s += (it == obj.begin() ? "" : "\t") + it.key();
        return s + "\n";
    };
    auto row = [](const Json& obj) {
        std::string s;
        for (auto it = obj.begin(); it != obj.end(); ++it) s += (it == obj.begin() ? "" : "\t") + cell(it.value());
        return s + "\n";
    };
    if (j.is_object()) return header(j) + row(j);
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        std::string s = header(j.front());
        for (const auto& e : j) s += row(e);
        return s;
    }
    return "value\n" + cell(j) + "\n";
}

void emit(const Globals& g, const Json& j)
{
    switch (g.format) {
    case Format::Json: std::cout << j.dump() << "\n"; break;
    case Format::Tsv: std::cout << tsv(j); break;
    case Format::Pretty: std::cout << (j.is_primitive() ? cell(j) : j.dump(2)) << "\n"; break;
    }
}

// Scalar results print bare in pretty mode and as {"key": value} otherwise.
void emit_scalar(const Globals& g, const std::string& key, const Json& v)
{
    if (g.format == Format::Pretty) emit(g, v);
    else emit(g, Json{{key, v}});
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

DegreeTable load_table(const std::string& path)
{
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw StructuralError(std::string("bad JSON: ") + e.what());
    }
    return table_from_json(j);
}

std::vector<std::int64_t> parse_list(const std::string& s)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("not an integer list: " + s);
        }
    }
    return out;
}

struct Params {
    int K = 4, L = 4, T = 4, r = 1;
};

void add_klt(CLI::App* app, Params& p, bool with_r = false)
{
    app->add_option("--K", p.K, "row blocks of A")->check(CLI::PositiveNumber);
    app->add_option("--L", p.L, "column blocks of B")->check(CLI::PositiveNumber);
    app->add_option("--T", p.T, "collusion tolerance")->check(CLI::PositiveNumber);
    if (with_r) app->add_option("--r", p.r, "chain length")->check(CLI::PositiveNumber);
}

Json trace_json(const ChainSearchTrace& t)
{
    Json qw = Json::object();
    for (const auto& [w, q] : t.Qw) qw[std::to_string(w)] = q;
    Json ev = Json::array();
    for (const auto& [r, n] : t.evaluated) ev.push_back({{"r", r}, {"N", n}});
    return Json{{"phi", t.constants.phi}, {"mu", t.constants.mu}, {"x", t.constants.x}, {"W", t.W}, {"Qw", qw},
                {"Q", t.Q}, {"Q_prime", t.Q_prime}, {"Q_double_prime", t.Q_double_prime}, {"evaluated", ev}};
}

Json series_json(const std::vector<PlotSeries>& series)
{
    Json out = Json::array();
    for (const auto& s : series) {
        Json rows = Json::array();
        for (const auto& [x, y] : s.rows) rows.push_back({{"x", x}, {"y", to_string(y)}});
        out.push_back({{"name", s.name}, {"rows", rows}});
    }
    return out;
}

void emit_series(const Globals& g, const std::vector<PlotSeries>& series, const std::string& x_name)
{
    if (g.format == Format::Json) emit(g, series_json(series));
    else std::cout << to_tsv(series, x_name);
}

}  // namespace

int main(int argc, char** argv)
{
    Globals g;
    if (const char* env = std::getenv("DEGTAB_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::logic_error&) {
            std::cerr << "DEGTAB_SEED must be an unsigned integer\n";
            return 2;
        }
    }

    CLI::App app{"Degree tables for secure distributed matrix multiplication"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    app.add_option("--seed", g.seed, "PRNG seed (default from DEGTAB_SEED, else 1)");

    std::function<void()> action;

    // gasp
    Params gp;
    std::string mode = "reduced";
    auto* gasp = app.add_subcommand("gasp", "GASP_r codes");
    gasp->require_subcommand(1);
    auto* g_construct = gasp->add_subcommand("construct", "exponent vectors");
    auto* g_score = gasp->add_subcommand("score", "left/right scores");
    auto* g_n = gasp->add_subcommand("n", "number of distinct entries N(r)");
    auto* g_opt = gasp->add_subcommand("optimal-r", "optimal chain length");
    auto* g_series = gasp->add_subcommand("series", "N(r) for every r and T = 1..T");
    for (auto* s : {g_construct, g_score, g_n}) add_klt(s, gp, true);
    add_klt(g_opt, gp);
    add_klt(g_series, gp);
    g_opt->add_option("--mode", mode)->check(CLI::IsMember({"reduced", "full"}));
    g_construct->callback([&] {
        action = [&] {
            const GaspParams p{gp.K, gp.L, gp.T, gp.r};
            p.check();
            auto j = to_json(construct(p));
            j["transposed"] = is_transposed(p);
            emit(g, j);
        };
    });
    g_score->callback([&] {
        action = [&] {
            const GaspParams p{gp.K, gp.L, gp.T, gp.r};
            p.check();
            emit(g, to_json(score_closed_form(p)));
        };
    });
    g_n->callback([&] {
        action = [&] {
            const GaspParams p{gp.K, gp.L, gp.T, gp.r};
            p.check();
            emit_scalar(g, "N", n_of_r(p));
        };
    });
    g_opt->callback([&] {
        action = [&] {
            const auto o = optimal_r(gp.K, gp.L, gp.T, mode == "full" ? SearchMode::FullScan : SearchMode::Reduced);
            emit(g, Json{{"r_star", o.r_star}, {"N", o.N}, {"minimizers", o.minimizers}, {"trace", trace_json(o.trace)}});
        };
    });
    g_series->callback([&] {
        action = [&] {
            std::vector<PlotSeries> series;
            const int rmax = std::min(std::max(gp.K, gp.L), gp.T);
            for (int r = 1; r <= rmax; ++r) {
                PlotSeries s{"GASP_" + std::to_string(r), {}};
                for (int T = r; T <= gp.T; ++T) s.rows.emplace_back(T, Rational(n_of_r({gp.K, gp.L, T, r})));
                series.push_back(std::move(s));
            }
            emit_series(g, series, "T");
        };
    });

    // table
    std::string table_in, table_out;
    bool trace = false;
    auto* table = app.add_subcommand("table", "operations on a degree table JSON file");
    table->require_subcommand(1);
    auto table_cmd = [&](const std::string& name, const std::string& help, std::function<Json(const DegreeTable&)> f) {
        auto* s = table->add_subcommand(name, help);
        s->add_option("--in", table_in, "degree table JSON")->required();
        s->add_option("--out", table_out, "write the resulting table here");
        s->callback([&, f] {
            action = [&, f] {
                const auto t = load_table(table_in);
                emit(g, f(t));
            };
        });
        return s;
    };
    auto write_table = [&](const DegreeTable& t) {
        if (!table_out.empty()) write_file(table_out, to_json(t).dump(2) + "\n");
        return to_json(t);
    };
    table_cmd("validate", "check the decodability and distinctness conditions", [&](const DegreeTable& t) {
        const auto rep = validate(t);
        if (!rep.valid()) {
            emit(g, to_json(rep));
            throw InvalidTableError(rep);
        }
        return to_json(rep);
    });
    table_cmd("count", "number of distinct entries", [](const DegreeTable& t) {
        require_valid(t);
        return Json{{"N", count_distinct(t)}};
    });
    table_cmd("score", "scores by inspection", [](const DegreeTable& t) {
        require_valid(t);
        return to_json(score_bruteforce(t));
    });
    auto* sq = table_cmd("squeeze", "close gaps while keeping N", [&](const DegreeTable& t) {
        const auto res = squeeze(t);
        Json j{{"table", write_table(res.table)}, {"steps", res.steps.size()}};
        if (trace) {
            Json steps = Json::array();
            for (const auto& s : res.steps) {
                steps.push_back({{"kind", s.kind == SqueezeKind::Alpha ? "alpha" : "beta"}, {"index", s.index}, {"affected", s.affected}});
            }
            j["trace"] = steps;
        }
        return j;
    });
    sq->add_flag("--trace", trace, "list every step");
    table_cmd("normal", "normal form", [&](const DegreeTable& t) {
        require_valid(t);
        return write_table(normal(t));
    });
    table_cmd("negate", "negated table", [&](const DegreeTable& t) {
        require_valid(t);
        return write_table(negate(t));
    });
    table_cmd("canonical", "canonical form", [&](const DegreeTable& t) {
        require_valid(t);
        return write_table(canonical(t));
    });
    table_cmd("transpose", "swap alpha and beta (K = L only)", [&](const DegreeTable& t) {
        require_valid(t);
        return write_table(transpose(t));
    });

    // bounds
    Params bp;
    std::string dims_text;
    auto* bounds = app.add_subcommand("bounds", "lower bounds and entry bounds");
    add_klt(bounds, bp);
    bounds->add_option("--dims", dims_text, "a,b,c,q for the operational threshold");
    bounds->callback([&] {
        action = [&] {
            std::optional<MatrixDims> dims;
            if (!dims_text.empty()) {
                const auto v = parse_list(dims_text);
                if (v.size() != 4 || v[3] < 2) throw UsageError("--dims expects a,b,c,q");
                dims = MatrixDims{v[0], v[1], v[2], static_cast<std::uint64_t>(v[3])};
            }
            const auto rep = bounds_report(bp.K, bp.L, bp.T, dims);
            if (g.format == Format::Pretty) {
                std::cout << "ineq1 " << rep.lower.ineq1 << "\nineq2 " << (rep.lower.ineq2 ? std::to_string(*rep.lower.ineq2) : "n/a")
                          << "\nineq3 " << rep.lower.ineq3 << "\nbest " << rep.lower.best << "\n";
                if (rep.entry) std::cout << "entry_bound " << rep.entry->alpha << " " << rep.entry->beta << "\n";
                if (rep.operational_threshold) std::cout << "operational_threshold " << rep.operational_threshold->str() << "\n";
            } else {
                emit(g, to_json(rep));
            }
        };
    });

    // search
    Params sp;
    std::uint64_t budget = 0;
    std::size_t beam = 0;
    std::int64_t bound_alpha = -1, bound_beta = -1, entry_bound = -1;
    std::string lp_out, lp_in, model_kind = "fixed";
    bool tight_link = false;
    auto* search = app.add_subcommand("search", "search for small degree tables");
    search->require_subcommand(1);
    auto* s_ex = search->add_subcommand("exhaustive", "all normal tables within entry bounds");
    auto* s_fp = search->add_subcommand("fixed-prefix", "all alpha_s for the fixed GASP prefix");
    auto* s_gr = search->add_subcommand("greedy", "greedy depth-first search for alpha_s");
    auto* s_lp = search->add_subcommand("emit-lp", "write the integer program as LP text");
    auto* s_solve = search->add_subcommand("solve-lp", "solve a small LP file with the built-in enumerator");
    for (auto* s : {s_ex, s_fp, s_gr, s_lp}) add_klt(s, sp);
    s_ex->add_option("--bound-alpha", bound_alpha, "largest alpha entry");
    s_ex->add_option("--bound-beta", bound_beta, "largest beta entry");
    for (auto* s : {s_fp, s_gr, s_solve}) s->add_option("--budget", budget, "node limit");
    s_gr->add_option("--beam", beam, "branch on at most this many maximizers (0: all)");
    s_lp->add_option("--model", model_kind, "fixed or blp")->check(CLI::IsMember({"fixed", "blp"}));
    s_lp->add_option("--entry-bound", entry_bound, "entry bound for the general model");
    s_lp->add_flag("--tight-link", tight_link, "one linking constraint per column");
    s_lp->add_option("--out", lp_out, "output file (default stdout)");
    s_solve->add_option("--in", lp_in, "LP file")->required();
    s_ex->callback([&] {
        action = [&] {
            std::optional<EntryBounds> eb;
            if (bound_alpha >= 0 || bound_beta >= 0) {
                if (bound_alpha < 0 || bound_beta < 0) throw UsageError("give both --bound-alpha and --bound-beta");
                eb = EntryBounds{bound_alpha, bound_beta};
            }
            emit(g, to_json(exhaustive(sp.K, sp.L, sp.T, eb)));
        };
    });
    s_fp->callback([&] {
        action = [&] { emit(g, to_json(budget ? exhaustive_fixed_prefix(sp.K, sp.L, sp.T, budget) : exhaustive_fixed_prefix(sp.K, sp.L, sp.T))); };
    });
    s_gr->callback([&] {
        action = [&] {
            GreedyOptions opt;
            if (budget) opt.budget = budget;
            opt.beam_width = beam;
            const auto r = greedy(sp.K, sp.L, sp.T, opt);
            emit(g, Json{{"alpha_s", r.alpha_s}, {"N", r.N}, {"nodes", r.nodes}, {"budget_exhausted", r.budget_exhausted},
                         {"table", to_json(fixed_prefix_table(sp.K, sp.L, sp.T, r.alpha_s))}});
        };
    });
    s_lp->callback([&] {
        action = [&] {
            IlpModel m;
            if (model_kind == "blp") {
                std::int64_t e = entry_bound;
                if (e < 0) {
                    const auto eb = entry_upper_bounds(sp.K, sp.L, sp.T);
                    if (!eb) throw UsageError("no entry bound for these parameters; pass --entry-bound");
                    e = std::max(eb->alpha, eb->beta);
                }
                m = build_blp(sp.K, sp.L, sp.T, e);
            } else {
                m = build_ilp_fixed(sp.K, sp.L, sp.T, tight_link);
            }
            const auto text = emit_lp_text(m);
            if (lp_out.empty()) {
                std::cout << text;
            } else {
                write_file(lp_out, text);
                emit(g, Json{{"file", lp_out}, {"variables", m.variables().size()}, {"constraints", m.constraints().size()}});
            }
        };
    });
    s_solve->callback([&] {
        action = [&] {
            const auto m = parse_lp_text(read_file(lp_in));
            const auto r = budget ? naive_solve(m, budget) : naive_solve(m);
            Json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
            if (r.status == SolveStatus::Optimal) j["objective"] = r.objective;
            emit(g, j);
            if (r.status == SolveStatus::Infeasible) throw std::domain_error("model is infeasible");
        };
    });

    // sdmm
    Params dp;
    std::string sdmm_dims = "8,4,8", sdmm_table, dump_dir;
    std::uint64_t base_q = 2147483647ULL;
    auto* sdmm = app.add_subcommand("sdmm", "simulate the protocol");
    sdmm->require_subcommand(1);
    auto* d_run = sdmm->add_subcommand("run", "encode, compute, decode and check security");
    add_klt(d_run, dp, true);
    d_run->add_option("--dims", sdmm_dims, "a,b,c");
    d_run->add_option("--q", base_q, "smallest admissible field size");
    d_run->add_option("--seed", g.seed, "PRNG seed");
    d_run->add_option("--table", sdmm_table, "use this degree table instead of GASP_r");
    d_run->add_option("--dump-shares", dump_dir, "write per-server shares here");
    d_run->callback([&] {
        action = [&] {
            const auto v = parse_list(sdmm_dims);
            if (v.size() != 3 || v[0] < 1 || v[1] < 1 || v[2] < 1) throw UsageError("--dims expects a,b,c");
            const DegreeTable t = sdmm_table.empty() ? construct({dp.K, dp.L, dp.T, dp.r}) : load_table(sdmm_table);
            const auto run = run_protocol(t, {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), static_cast<std::size_t>(v[2])},
                                          base_q, g.seed);
            const auto& inst = run.instance;
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                for (std::size_t n = 0; n < inst.shares.size(); ++n) {
                    const Json j{{"server", n}, {"point", inst.points[n]}, {"f", to_json(inst.shares[n].f)}, {"g", to_json(inst.shares[n].g)},
                                 {"response", to_json(inst.responses[n])}};
                    write_file((std::filesystem::path(dump_dir) / ("server_" + std::to_string(n) + ".json")).string(), j.dump() + "\n");
                }
            }
            emit(g, Json{{"q", inst.field.modulus()},
                         {"N", inst.points.size()},
                         {"points", inst.points},
                         {"share_shape", {{"f", {inst.shares[0].f.rows, inst.shares[0].f.cols}}, {"g", {inst.shares[0].g.rows, inst.shares[0].g.cols}}}},
                         {"response_shape", {inst.responses[0].rows, inst.responses[0].cols}},
                         {"decode_matches", run.matches},
                         {"security", {{"passed", run.security.passed()},
                                       {"exhaustive", run.security.exhaustive},
                                       {"subsets_checked", run.security.subsets_checked},
                                       {"failures", run.security.failure_count}}}});
            if (!run.matches) throw std::domain_error("decoded product differs from the direct product");
        };
    });

    // cost
    std::string exps_text, cost_dims;
    std::int64_t cK = 1, cL = 1, cM = 1, nO = 1, nI = 1;
    auto* cost = app.add_subcommand("cost", "communication costs");
    cost->require_subcommand(1);
    auto* c_cmp = cost->add_subcommand("compare", "asymptotic exponents of outer and inner partitioning");
    c_cmp->add_option("--exponents", exps_text, "eps_a,eps_b,eps_c,eps_K,eps_L,eps_M (rationals)")->required();
    auto* c_con = cost->add_subcommand("concrete", "exact costs");
    c_con->add_option("--dims", cost_dims, "a,b,c")->required();
    c_con->add_option("--K", cK)->check(CLI::PositiveNumber);
    c_con->add_option("--L", cL)->check(CLI::PositiveNumber);
    c_con->add_option("--M", cM)->check(CLI::PositiveNumber);
    c_con->add_option("--NO", nO, "servers for outer partitioning")->check(CLI::PositiveNumber);
    c_con->add_option("--NI", nI, "servers for inner partitioning")->check(CLI::PositiveNumber);
    c_cmp->callback([&] {
        action = [&] {
            std::vector<Rational> e;
            std::stringstream ss(exps_text);
            std::string item;
            while (std::getline(ss, item, ',')) e.push_back(parse_rational(item));
            if (e.size() != 6) throw UsageError("--exponents expects six values");
            const auto r = asymptotic_compare({e[0], e[1], e[2], e[3], e[4], e[5]});
            emit(g, Json{{"outer_exponent", to_string(r.outer)}, {"inner_exponent", to_string(r.inner)}, {"outer_wins", r.outer_wins}});
        };
    });
    c_con->callback([&] {
        action = [&] {
            const auto v = parse_list(cost_dims);
            if (v.size() != 3) throw UsageError("--dims expects a,b,c");
            const auto r = concrete_costs(v[0], v[1], v[2], cK, cL, cM, nO, nI);
            emit(g, Json{{"U_O", to_string(r.upload_outer)}, {"D_O", to_string(r.download_outer)}, {"U_I", to_string(r.upload_inner)},
                         {"D_I", to_string(r.download_inner)}, {"total_O", to_string(r.total_outer())}, {"total_I", to_string(r.total_inner())}});
        };
    });

    // figure
    int n_max = 30;
    auto* figure = app.add_subcommand("figure", "plot data (TSV unless --format json)");
    figure->require_subcommand(1);
    auto* f1a = figure->add_subcommand("1a", "N(r) for K=L=4 against T with the lower bound");
    auto* f1b = figure->add_subcommand("1b", "normalized N for K=L=T=n^2");
    f1b->add_option("--n-max", n_max)->check(CLI::Range(2, 1000));
    f1a->callback([&] { action = [&] { emit_series(g, figure1a(), "T"); }; });
    f1b->callback([&] { action = [&] { emit_series(g, figure1b(n_max), "n"); }; });

    // stats
    int max_k = 300, max_t = 300;
    auto* stats = app.add_subcommand("stats", "aggregate statistics");
    stats->require_subcommand(1);
    auto* st_red = stats->add_subcommand("reduction", "mean of (5+|W|)/min{K,T}");
    st_red->add_option("--max-k", max_k)->check(CLI::PositiveNumber);
    st_red->add_option("--max-t", max_t)->check(CLI::PositiveNumber);
    st_red->callback([&] {
        action = [&] {
            const auto s = reduction_statistic(max_k, max_t);
            emit(g, Json{{"mean", s.mean}, {"triples", s.triples}});
        };
    });

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Pretty;

    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidTableError& e) {
        std::cerr << "error: invalid degree table\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
