#include "rectwalg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "rectwalg/classify.hpp"
#include "rectwalg/parallel.hpp"
#include "rectwalg/report.hpp"
#include "rectwalg/walg.hpp"

namespace rectwalg {

namespace {

Sign parse_eps(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw std::invalid_argument("eps must be one of +, -, plus, minus");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("format must be json or text");
}

RowClass load_row_class(const std::string& path, const SignData& sd) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tableau file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    RowClass rc = row_class_from_json(buf.str());
    if (rc.n() != sd.n || rc.l() != sd.l)
        throw std::invalid_argument("tableau shape does not match --n/--l");
    return rc;
}

std::vector<Number> default_pool() {
    std::vector<Number> pool;
    for (int k = -2; k <= 2; ++k) pool.push_back(Number(k));
    for (int k : {-3, -1, 1, 3}) pool.push_back(Number(Rational(k, 2)));
    return pool;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for rectangular finite W-algebras"};
    app.require_subcommand(1);

    int n = 0, l = 0;
    std::string eps_str;
    std::string format_str = "text";
    int jobs = default_jobs();
    int order = 0;
    std::string tableau_path;
    std::string pool_str;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of Jordan blocks")->required();
        cmd->add_option("--l", l, "Jordan block size")->required();
        cmd->add_option("--eps", eps_str, "sign of the form: + or -")->required();
        cmd->add_option("--format", format_str, "output format: json or text");
        cmd->add_option("--jobs", jobs, "worker count (default: RECTWALG_THREADS or 1)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the structural checks");
    add_common(verify);
    verify->add_option("--order", order, "series truncation order (default l+2)");

    CLI::App* classify = app.add_subcommand("classify", "classify one row class");
    add_common(classify);
    classify->add_option("--tableau", tableau_path, "row-class JSON file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "classify all classes over a pool");
    add_common(enumerate);
    enumerate->add_option("--pool", pool_str, "comma-separated entry pool");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "component-group orbit of a class");
    add_common(orbit_cmd);
    orbit_cmd->add_option("--tableau", tableau_path, "row-class JSON file")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        SignData sd = SignData::make(parse_eps(eps_str), n, l);
        OutputFormat fmt = parse_format(format_str);

        if (app.got_subcommand(verify)) {
            int R = order > 0 ? order : l + 2;
            if (R <= l) throw std::invalid_argument("--order must exceed l");
            VerifyContext ctx = VerifyContext::make(Pyramid(sd), R);
            std::vector<CheckRecord> records = check_membership(ctx, jobs);
            for (auto& rec : check_gens_identity(ctx, jobs)) records.push_back(rec);
            for (auto& rec : check_kernel(ctx, jobs)) records.push_back(rec);
            for (auto& rec : check_symmetry_relation(ctx, jobs)) records.push_back(rec);
            out << report_render(records, fmt);
            for (const auto& rec : records)
                if (!rec.pass) return 1;
            return 0;
        }
        if (app.got_subcommand(classify)) {
            RowClass rc = load_row_class(tableau_path, sd);
            ClassificationResult res = classify_row_class(rc, sd);
            out << classification_render(res, fmt);
            return res.agree() ? 0 : 1;
        }
        if (app.got_subcommand(enumerate)) {
            std::vector<Number> pool =
                pool_str.empty() ? default_pool() : parse_pool(pool_str);
            std::vector<RowClass> classes = enumerate_row_classes(sd.n, sd.l, pool);
            auto results = parallel_map<ClassificationResult>(
                classes.size(), jobs,
                [&](size_t k) { return classify_row_class(classes[k], sd); });
            out << classification_render(results, fmt);
            for (const auto& res : results)
                if (!res.agree()) return 1;
            return 0;
        }
        if (app.got_subcommand(orbit_cmd)) {
            RowClass rc = load_row_class(tableau_path, sd);
            out << orbit_render(rc, orbit(rc, sd), fmt);
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rectwalg
