#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdf/io.hpp"
#include "mdf/suites.hpp"

namespace {

struct Options {
    std::string field;
    std::string points_file;
    std::string cartesian;
    int torus_s = 0;
    int pspace_s = 0;
    std::string ideal_file;
    int dmin = 1;
    int dmax = 0;  // 0: up to the regularity
    std::uint64_t cap = 10'000'000;
    bool force = false;
    std::string format = "csv";
    std::vector<std::string> suites;
    int cover_dmax = 0;
};

struct Source {
    std::optional<mdf::PointSet> X;
    std::optional<mdf::MonomialIdeal> ideal;
};

mdf::Fq require_field(const Options& opt) {
    if (opt.field.empty()) mdf::fail(mdf::errc::input_error, "--field is required for this source");
    return mdf::parse_field_spec(opt.field);
}

Source resolve(const Options& opt, bool need_points) {
    Source src;
    int given = !opt.points_file.empty() + !opt.cartesian.empty() + (opt.torus_s > 0) +
                (opt.pspace_s > 0);
    if (given > 1)
        mdf::fail(mdf::errc::input_error, "choose one of --points, --cartesian, --torus, --pspace");
    if (!opt.points_file.empty()) {
        src.X = mdf::load_points(opt.points_file);
    } else if (!opt.cartesian.empty()) {
        auto spec = mdf::parse_cartesian_spec(opt.cartesian);
        src.X = spec.pointset();
        src.ideal = mdf::cartesian_initial_ideal(spec.sizes());
    } else if (opt.torus_s > 0) {
        mdf::Fq F = require_field(opt);
        src.X = mdf::torus_pointset(F, opt.torus_s);
        std::vector<long long> ds(opt.torus_s - 1, static_cast<long long>(F.q()) - 1);
        src.ideal = mdf::cartesian_initial_ideal(ds);
    } else if (opt.pspace_s > 0) {
        src.X = mdf::projective_space_pointset(require_field(opt), opt.pspace_s);
    } else if (need_points) {
        mdf::fail(mdf::errc::input_error, "no point set: use --points, --cartesian, --torus, or --pspace");
    }
    if (!opt.ideal_file.empty()) src.ideal = mdf::load_ideal(opt.ideal_file);
    return src;
}

std::pair<int, int> degree_range(const Options& opt, int reg) {
    int dmax = opt.dmax > 0 ? opt.dmax : reg;
    if (opt.dmin < 1 || dmax < opt.dmin)
        mdf::fail(mdf::errc::input_error, "empty or invalid degree range");
    return {opt.dmin, dmax};
}

void emit_values(const Options& opt, const std::string& column,
                 const std::vector<std::pair<int, long long>>& values) {
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [d, v] : values) arr.push_back({{"d", d}, {column, v}});
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << "d," << column << '\n';
        for (auto [d, v] : values) std::cout << d << ',' << v << '\n';
    }
}

int cmd_table(const Options& opt) {
    Source src = resolve(opt, true);
    auto [dmin, dmax] = degree_range(opt, mdf::reg_X(*src.X));
    if (!src.ideal)
        std::cerr << "note: no initial ideal available; fp column omitted\n";
    auto rows = mdf::parameter_table(*src.X, src.ideal ? &*src.ideal : nullptr, dmin, dmax,
                                     opt.cap, opt.force);
    std::cout << (opt.format == "json" ? mdf::to_json(rows) : mdf::to_csv(rows));
    return 0;
}

int cmd_fp(const Options& opt) {
    Source src = resolve(opt, false);
    if (!src.ideal)
        mdf::fail(mdf::errc::missing_initial_ideal,
                  "fp needs an initial ideal: pass --ideal or a cartesian/torus source");
    auto prof = mdf::hilbert_oracle(*src.ideal);
    auto [dmin, dmax] = degree_range(opt, prof.regularity);
    std::vector<std::pair<int, long long>> values;
    for (int d = dmin; d <= dmax; ++d) values.emplace_back(d, mdf::fp_bruteforce(*src.ideal, d));
    emit_values(opt, "fp", values);
    return 0;
}

int cmd_delta(const Options& opt) {
    Source src = resolve(opt, true);
    auto [dmin, dmax] = degree_range(opt, mdf::reg_X(*src.X));
    std::vector<std::pair<int, long long>> values;
    for (int d = dmin; d <= dmax; ++d)
        values.emplace_back(d, mdf::min_distance_enum(*src.X, d, opt.cap, opt.force));
    emit_values(opt, "delta", values);
    return 0;
}

int cmd_degree(const Options& opt) {
    Source src = resolve(opt, false);
    long long degree;
    long long regularity;
    if (src.X) {
        degree = static_cast<long long>(src.X->points.size());
        regularity = mdf::reg_X(*src.X);
    } else if (src.ideal) {
        auto prof = mdf::hilbert_oracle(*src.ideal);
        degree = prof.degree;
        regularity = prof.regularity;
    } else {
        mdf::fail(mdf::errc::input_error, "degree needs a point set or an ideal");
    }
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"degree", degree}, {"regularity", regularity}}.dump(2)
                  << '\n';
    } else {
        std::cout << "degree,regularity\n" << degree << ',' << regularity << '\n';
    }
    return 0;
}

int cmd_cover(const Options& opt) {
    Source src = resolve(opt, true);
    int reg = mdf::reg_X(*src.X);
    int dmax = opt.cover_dmax > 0 ? opt.cover_dmax : reg + 1;
    std::vector<std::pair<int, long long>> values;
    for (std::size_t i = 0; i < src.X->points.size(); ++i) {
        auto res = mdf::min_hyperplane_cover(*src.X, src.X->points[i], dmax);
        values.emplace_back(static_cast<int>(i), res ? *res : -1);
    }
    emit_values(opt, "cover", values);
    return 0;
}

int cmd_verify(const Options& opt) {
    auto names = opt.suites.empty() ? mdf::suite_names() : opt.suites;
    bool ok = true;
    for (const auto& name : names) {
        auto r = mdf::run_suite(name);
        std::printf("%-10s %6lld cases  %4lld failures  %7.2fs  %s\n", r.name.c_str(), r.cases,
                    r.failures, r.seconds, r.passed() ? "PASS" : "FAIL");
        if (!r.passed()) {
            ok = false;
            if (!r.first_failure.empty()) std::printf("           first: %s\n", r.first_failure.c_str());
        }
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parameters of evaluation codes and footprint bounds on monomial ideals"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "Field spec, 'p' or 'p^k'");
        sub->add_option("--points", opt.points_file, "Point-set file");
        sub->add_option("--cartesian", opt.cartesian, "Cartesian spec string");
        sub->add_option("--torus", opt.torus_s, "Projective torus in s variables");
        sub->add_option("--pspace", opt.pspace_s, "Full projective space in s variables");
        sub->add_option("--ideal", opt.ideal_file, "Initial-ideal file");
        sub->add_option("--dmin", opt.dmin, "First degree (default 1)");
        sub->add_option("--dmax", opt.dmax, "Last degree (default: regularity)");
        sub->add_option("--cap", opt.cap, "Codeword enumeration cap");
        sub->add_flag("--force", opt.force, "Ignore the enumeration cap");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* table = app.add_subcommand("table", "Per-degree parameter table");
    add_common(table);
    auto* fp = app.add_subcommand("fp", "Footprint function of an initial ideal");
    add_common(fp);
    auto* delta = app.add_subcommand("delta", "Minimum distance by enumeration");
    add_common(delta);
    auto* degree = app.add_subcommand("degree", "Degree and regularity");
    add_common(degree);
    auto* cover = app.add_subcommand("cover", "Minimum hyperplane covers avoiding one point");
    add_common(cover);
    cover->add_option("--cover-dmax", opt.cover_dmax, "Cover search limit (default: reg+1)");
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", opt.suites, "Suite name (repeatable; default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (fp->parsed()) return cmd_fp(opt);
        if (delta->parsed()) return cmd_delta(opt);
        if (degree->parsed()) return cmd_degree(opt);
        if (cover->parsed()) return cmd_cover(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const mdf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
