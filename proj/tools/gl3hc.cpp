#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gl3hc/gl3hc.hpp"

using namespace gl3hc;

namespace {

struct SetOptions {
    std::string t, x, s, y;
};

std::vector<std::size_t> parse_shape(const std::string& text)
{
    std::vector<std::size_t> shape;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto comma = text.find(',', start);
        const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        const unsigned long value = std::stoul(part, &used);
        if (used != part.size()) {
            throw ParseError("bad shape component '" + part + "'");
        }
        shape.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return shape;
}

std::string shape_text(const std::vector<std::size_t>& shape)
{
    std::string out = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(shape[i]);
    }
    return out + ")";
}

void print_case(const CaseResult& c, std::ostream& os)
{
    os << c.identity_id;
    if (c.side) {
        os << " [" << side_char(*c.side) << "]";
    }
    os << " shape " << shape_text(c.shape) << " seed " << c.seed << "\n";
    if (c.q) {
        os << "  q = " << c.q->str() << "\n";
    }
    for (const auto& [name, values] : c.params) {
        os << "  " << name << " = {" << format_set(values) << "}\n";
    }
    if (c.lhs && c.rhs) {
        os << "  lhs = " << c.lhs->str() << "\n  rhs = " << c.rhs->str() << "\n";
    }
    const char* status = c.status() == CaseStatus::Pass ? "pass" : c.status() == CaseStatus::Fail ? "FAIL" : "ERROR";
    os << "  " << status << " (" << c.checks << " checks, " << c.elapsed_ms << " ms)";
    if (!c.error.empty()) {
        os << ": " << c.error;
    }
    os << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Izergin determinants and GL(3) trigonometric highest coefficients"};
    app.require_subcommand(1);

    // izergin
    auto* iz = app.add_subcommand("izergin", "Evaluate K, K^(l) or K^(r)");
    std::string iz_variant = "plain";
    std::string iz_x, iz_y, iz_q;
    iz->add_option("--variant", iz_variant, "plain | left | right")
        ->check(CLI::IsMember({"plain", "left", "right"}));
    iz->add_option("--x", iz_x, "comma-separated rationals")->required();
    iz->add_option("--y", iz_y, "comma-separated rationals")->required();
    iz->add_option("--q", iz_q, "deformation parameter")->required();

    // hc
    auto* hcs = app.add_subcommand("hc", "Evaluate Z^(l) or Z^(r)");
    std::string hc_side = "l";
    std::string hc_rep = "ws";
    std::string hc_q;
    SetOptions hc_sets;
    hcs->add_option("--side", hc_side, "l | r")->check(CLI::IsMember({"l", "r", "left", "right"}));
    hcs->add_option("--rep", hc_rep, "ws | ws-twin | ty | ty-twin | tx | sy | all");
    hcs->add_option("--t", hc_sets.t)->required();
    hcs->add_option("--x", hc_sets.x)->required();
    hcs->add_option("--s", hc_sets.s)->required();
    hcs->add_option("--y", hc_sets.y)->required();
    hcs->add_option("--q", hc_q)->required();

    // scalar-product
    auto* sp = app.add_subcommand("scalar-product", "Expand the scalar product S_{a,b}");
    std::string sp_uc, sp_vc, sp_ub, sp_vb, sp_q;
    std::string sp_r1 = "num:1";
    std::string sp_r3 = "num:1";
    bool sp_symbolic = false;
    sp->add_option("--uc", sp_uc)->required();
    sp->add_option("--vc", sp_vc)->required();
    sp->add_option("--ub", sp_ub)->required();
    sp->add_option("--vb", sp_vb)->required();
    sp->add_option("--q", sp_q)->required();
    sp->add_option("--r1", sp_r1, "num:a0,a1,...;den:b0,... (default 1)");
    sp->add_option("--r3", sp_r3, "num:a0,a1,...;den:b0,... (default 1)");
    sp->add_flag("--symbolic", sp_symbolic, "print monomial -> coefficient pairs");

    // verify
    auto* vf = app.add_subcommand("verify", "Run identity suites and write a JSON report");
    SuiteOptions opts;
    std::string vf_q, vf_out;
    bool vf_quiet = false;
    vf->add_option("--suite", opts.suite, "all | izergin | hc-reps | symmetries | residues | reductions | twins | "
                                          "prop51 | scalar");
    vf->add_option("--a-max", opts.a_max);
    vf->add_option("--b-max", opts.b_max);
    vf->add_option("--trials", opts.trials);
    vf->add_option("--seed", opts.cfg.seed);
    vf->add_option("--q", vf_q, "pin q instead of sampling it per case");
    vf->add_option("--window", opts.cfg.laurent_window, "Laurent truncation window");
    vf->add_option("--max-abs", opts.cfg.max_abs, "bound on sampled numerators and denominators");
    vf->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
    vf->add_option("--out", vf_out, "report path (default: stdout)");
    vf->add_flag("--quiet", vf_quiet, "do not print failing cases to stderr");

    // replay
    auto* rp = app.add_subcommand("replay", "Re-run one case from its recorded seed");
    std::string rp_id, rp_side, rp_shape, rp_q;
    std::uint64_t rp_seed = 0;
    Config rp_cfg;
    rp->add_option("--id", rp_id)->required();
    rp->add_option("--side", rp_side, "l | r (sided identities only)");
    rp->add_option("--shape", rp_shape, "comma-separated shape tuple")->required();
    rp->add_option("--seed", rp_seed, "case seed from the report")->required();
    rp->add_option("--q", rp_q);
    rp->add_option("--window", rp_cfg.laurent_window);
    rp->add_option("--max-abs", rp_cfg.max_abs);

    // list
    auto* ls = app.add_subcommand("list", "List the identity registry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (iz->parsed()) {
            const KernelContext ctx(Rational::parse(iz_q));
            const auto x = parse_set(iz_x);
            const auto y = parse_set(iz_y);
            const Rational value = iz_variant == "left"  ? izergin_left(ctx, x, y)
                                 : iz_variant == "right" ? izergin_right(ctx, x, y)
                                                         : izergin(ctx, x, y);
            std::cout << value.str() << "\n";
            return 0;
        }
        if (hcs->parsed()) {
            HCQuery query{parse_side(hc_side),  Rep::WS,
                          parse_set(hc_sets.t), parse_set(hc_sets.x),
                          parse_set(hc_sets.s), parse_set(hc_sets.y),
                          Rational::parse(hc_q)};
            if (hc_rep != "all") {
                query.rep = parse_rep(hc_rep);
                std::cout << hc(query).str() << "\n";
                return 0;
            }
            std::optional<Rational> first;
            bool agree = true;
            for (auto rep : kAllReps) {
                query.rep = rep;
                const Rational value = hc(query);
                std::cout << rep_name(rep) << " " << value.str() << "\n";
                if (!first) {
                    first = value;
                } else if (value != *first) {
                    agree = false;
                }
            }
            std::cout << "agree " << (agree ? "true" : "false") << "\n";
            return agree ? 0 : 1;
        }
        if (sp->parsed()) {
            const KernelContext ctx(Rational::parse(sp_q));
            const ScalarSets sets{parse_set(sp_uc), parse_set(sp_vc), parse_set(sp_ub), parse_set(sp_vb)};
            if (sp_symbolic) {
                const auto poly = scalar_product_symbolic(ctx, sets);
                for (const auto& [m, c] : poly.terms()) {
                    std::cout << m.str() << " " << c.str() << "\n";
                }
                return 0;
            }
            const auto r1 = RationalFunctionSpec::parse(sp_r1);
            const auto r3 = RationalFunctionSpec::parse(sp_r3);
            std::cout << scalar_product_numeric(ctx, sets, r1, r3).str() << "\n";
            return 0;
        }
        if (vf->parsed()) {
            if (!is_suite(opts.suite)) {
                std::cerr << "error: unknown suite '" << opts.suite << "'\n";
                return 2;
            }
            if (!vf_q.empty()) {
                opts.cfg.q = Rational::parse(vf_q);
                validate_q(*opts.cfg.q);
            }
            const Report report = run_suite(opts);
            const std::string text = report_to_json(report);
            if (vf_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(vf_out);
                if (!out) {
                    std::cerr << "error: cannot write " << vf_out << "\n";
                    return 2;
                }
                out << text;
            }
            if (!vf_quiet) {
                for (const auto& c : report.cases) {
                    if (c.status() != CaseStatus::Pass) {
                        print_case(c, std::cerr);
                    }
                }
            }
            std::cerr << "suite " << report.suite << ": " << report.pass << " pass, " << report.fail << " fail, "
                      << report.error << " error\n";
            return report.fail == 0 && report.error == 0 ? 0 : 1;
        }
        if (rp->parsed()) {
            if (!rp_q.empty()) {
                rp_cfg.q = Rational::parse(rp_q);
            }
            std::optional<Side> side;
            if (!rp_side.empty()) {
                side = parse_side(rp_side);
            }
            (void)find_identity(rp_id);
            const CaseResult c = run_case(rp_id, side, parse_shape(rp_shape), rp_seed, rp_cfg);
            print_case(c, std::cout);
            return c.status() == CaseStatus::Pass ? 0 : 1;
        }
        if (ls->parsed()) {
            for (const auto& d : registry()) {
                std::cout << d.id << "\t" << d.suite << "\t" << (d.sided ? "l,r" : "-") << "\t" << d.shape_doc
                          << "\t" << d.summary << "\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
