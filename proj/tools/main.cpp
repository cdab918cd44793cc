// Command-line front end: compute family members, run verification suites,
// emit expansion tables. Output is deterministic for a fixed flag set.

#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "latsym/json_io.hpp"

using namespace latsym;

namespace {

struct SetBinding {
    std::string spelled;
    char letter = 'q';
    std::optional<std::uint32_t> index; // whole alphabet when absent
    Rat value;
};

SetBinding parse_set(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("bad --set binding: " + s);
    SetBinding b;
    b.spelled = s;
    std::string name = s.substr(0, eq);
    b.value = rat_parse(s.substr(eq + 1));
    b.letter = name[0];
    if (std::string("quvxyw").find(b.letter) == std::string::npos)
        throw ParseError("bad --set variable: " + s);
    if (name.size() > 1) {
        b.index = static_cast<std::uint32_t>(std::stoul(name.substr(1)));
        if (*b.index == 0) throw ParseError("variable index must be positive: " + s);
    } else if (b.letter == 'q') {
        b.index = 0;
    }
    return b;
}

RingElem apply_bindings(const RingElem& f, const std::vector<std::string>& sets) {
    std::map<VarId, RingElem> map;
    auto vars = f.variables();
    for (const auto& s : sets) {
        SetBinding b = parse_set(s);
        for (const VarId& v : vars) {
            bool match = false;
            if (b.letter == 'q' && v.kind == VarId::Kind::Q) match = true;
            if (v.name()[0] == b.letter && v.kind != VarId::Kind::Q)
                match = !b.index || v.index == *b.index;
            if (match) map[v] = RingElem(b.value);
        }
    }
    try {
        return substitute(f, map);
    } catch (const ZeroDenominator& e) {
        std::string which;
        for (const auto& s : sets) which += (which.empty() ? "" : ", ") + s;
        throw ZeroDenominator(std::string(e.what()) + " (bindings: " + which + ")");
    }
}

std::vector<RingElem> x_vars(int n) {
    std::vector<RingElem> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(RingElem::var(VarId::x(i)));
    return xs;
}

std::optional<FamilyTag> tag_by_name(const std::string& name) {
    const FamilyTag tags[] = {FamilyTag::Schur,
                              FamilyTag::HallLittlewoodQ,
                              FamilyTag::QWhittaker,
                              FamilyTag::InhomQWhittakerF,
                              FamilyTag::DualInhomG,
                              FamilyTag::GrothendieckG,
                              FamilyTag::DualGrothendieckLittleG,
                              FamilyTag::WeakGrothendieckJ,
                              FamilyTag::WeakDualLittleJ};
    for (FamilyTag t : tags)
        if (name == family_tag_name(t)) return t;
    if (name == "qwhittaker") return FamilyTag::QWhittaker;
    return std::nullopt;
}

void print_value(const RingElem& value, const std::string& format) {
    if (format == "json")
        std::cout << ring_elem_to_json(value).dump(2) << "\n";
    else
        std::cout << value.to_string() << "\n";
}

void print_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << r.identity_id << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
              << r.instances_checked << " instances, " << r.elapsed_seconds << "s)\n";
    for (const auto& f : r.failures)
        std::cout << "  failed: " << f.instance << "\n    lhs = " << f.lhs.to_string()
                  << "\n    rhs = " << f.rhs.to_string() << "\n";
}

struct VerifyFlags {
    int L = 1, M = 1, N = 1;
    int degree = 3;
    int max_label = 3;
    int max_size = 5;
    int n = 2, m = 2;
    int columns = 2;
    int jobs = 1;
    std::string box = "2x2";
    bool plain_normalization = false;
};

std::vector<Partition> box_partitions(const std::string& box) {
    auto xpos = box.find('x');
    if (xpos == std::string::npos) throw ParseError("bad --box, expected WxH: " + box);
    int w = std::stoi(box.substr(0, xpos));
    int h = std::stoi(box.substr(xpos + 1));
    return enumerate_sub_partitions(Partition(std::vector<int>(h, w)));
}

VerificationReport run_suite(const std::string& suite, const VerifyFlags& fl) {
    if (suite == "ybe") {
        VerificationReport r = verify_ybe(YbeKind::General, fl.L, fl.M, fl.N, 0, 0, fl.jobs);
        r.merge(verify_ybe(YbeKind::Spin1, 1, 1, 0, 1, fl.max_label, fl.jobs));
        r.merge(verify_ybe(YbeKind::Fused, 0, 0, 0, fl.max_label, fl.max_label, fl.jobs));
        r.merge(verify_ybe(YbeKind::Mixed, 1, 0, 0, fl.max_label, fl.max_label, fl.jobs));
        r.identity_id = "ybe";
        return r;
    }
    if (suite == "stochastic") return verify_stochasticity(fl.L, fl.M);
    if (suite == "gauge") return verify_gauge_and_stochasticity(fl.max_label);
    if (suite == "cauchy-j" || suite == "cauchy-g" || suite == "cauchy-mixed") {
        CauchyOptions opt;
        opt.n = fl.n;
        opt.m = fl.m;
        opt.degree = fl.degree;
        opt.conjugate_normalization = !fl.plain_normalization;
        VerificationReport total;
        total.identity_id = suite;
        for (const auto& lambda : box_partitions(fl.box)) {
            for (const auto& mu : box_partitions(fl.box)) {
                if (suite == "cauchy-j") total.merge(verify_cauchy_j(lambda, mu, opt));
                else if (suite == "cauchy-g") total.merge(verify_cauchy_g(lambda, mu, opt));
                else total.merge(verify_cauchy_mixed(lambda, mu, opt));
            }
        }
        return total;
    }
    if (suite == "fusion") {
        VerificationReport total;
        total.identity_id = "fusion";
        for (int cols = 1; cols <= fl.columns; ++cols)
            total.merge(verify_fusion(fl.L, fl.M, cols));
        return total;
    }
    if (suite == "degenerations") return verify_degenerations(fl.max_size, fl.n);
    if (suite == "symmetry") return verify_symmetry(fl.max_size, fl.n);
    if (suite == "stability") return verify_stability(fl.max_size, fl.n);
    throw ParseError("unknown suite: " + suite);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex-model engine for symmetric rational function families"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    };

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate a family member");
    add_format(compute);
    std::string c_family = "G", c_lambda = "0", c_mu = "0", c_deform;
    int c_n = 1;
    std::vector<std::string> c_sets;
    compute->add_option("--family", c_family, "J, G, or a degeneration name");
    compute->add_option("--lambda", c_lambda);
    compute->add_option("--mu", c_mu);
    compute->add_option("--n", c_n, "number of variables");
    compute->add_option("--set", c_sets, "bind parameters, e.g. u=0 or v3=1/2");
    compute->add_option("--deform", c_deform, "alpha/beta value for deformed families");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "evaluate via the closed-form chain oracle");
    add_format(oracle);
    std::string o_family = "schur", o_lambda = "0", o_deform;
    int o_n = 1;
    oracle->add_option("--family", o_family);
    oracle->add_option("--lambda", o_lambda);
    oracle->add_option("--n", o_n);
    oracle->add_option("--deform", o_deform);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    add_format(verify);
    std::string v_suite = "all";
    VerifyFlags fl;
    verify->add_option("--suite", v_suite,
                       "ybe|stochastic|gauge|cauchy-j|cauchy-g|cauchy-mixed|fusion|"
                       "degenerations|symmetry|stability|all");
    verify->add_option("--L", fl.L);
    verify->add_option("--M", fl.M);
    verify->add_option("--N", fl.N);
    verify->add_option("--degree", fl.degree);
    verify->add_option("--max-label", fl.max_label);
    verify->add_option("--max-size", fl.max_size);
    verify->add_option("--n", fl.n);
    verify->add_option("--m", fl.m);
    verify->add_option("--columns", fl.columns);
    verify->add_option("--box", fl.box);
    verify->add_option("--jobs", fl.jobs);
    verify->add_flag("--plain-normalization", fl.plain_normalization,
                     "index Cauchy normalizations by plain multiplicities");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "expansion table between two bases");
    add_format(expand_cmd);
    std::string e_source = "q-whittaker", e_target = "inhom-f", e_lambda = "0", e_box,
                e_certify = "none";
    int e_n = 2;
    expand_cmd->add_option("--source", e_source);
    expand_cmd->add_option("--target", e_target);
    expand_cmd->add_option("--lambda", e_lambda);
    expand_cmd->add_option("--n", e_n);
    expand_cmd->add_option("--box", e_box, "target box as a partition, default lambda_1^n");
    expand_cmd->add_option("--certify", e_certify)->check(CLI::IsMember({"none", "positive", "alternating"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            Partition lambda = Partition::parse(c_lambda), mu = Partition::parse(c_mu);
            auto xs = x_vars(c_n);
            RingElem value;
            if (c_family == "J") {
                ColumnParams cols =
                    ColumnParams::symbolic(std::max({lambda.first(), mu.first(), 1}) + 1);
                value = skew_j(lambda, mu, xs, cols);
            } else if (c_family == "G") {
                ColumnParams cols =
                    ColumnParams::symbolic(std::max({lambda.length(), mu.length(), 1}) + 1);
                value = skew_g(lambda, mu, xs, cols);
            } else if (auto tag = tag_by_name(c_family)) {
                FamilyParams params;
                if (!c_deform.empty()) params.deform = RingElem(rat_parse(c_deform));
                value = degeneration_of_lattice(*tag, lambda, mu, xs, params);
            } else {
                throw ParseError("unknown family: " + c_family);
            }
            if (!c_sets.empty()) value = apply_bindings(value, c_sets);
            print_value(value, format);
            return 0;
        }
        if (oracle->parsed()) {
            auto tag = tag_by_name(o_family);
            if (!tag) throw ParseError("unknown family: " + o_family);
            FamilyParams params;
            if (!o_deform.empty()) params.deform = RingElem(rat_parse(o_deform));
            print_value(multivar_oracle(*tag, Partition::parse(o_lambda), x_vars(o_n), params),
                        format);
            return 0;
        }
        if (verify->parsed()) {
            VerificationReport report;
            if (v_suite == "all") {
                const char* suites[] = {"ybe",      "stochastic", "gauge",
                                        "cauchy-j", "cauchy-g",   "cauchy-mixed",
                                        "fusion",   "degenerations", "symmetry", "stability"};
                report.identity_id = "all";
                for (const char* s : suites) {
                    VerificationReport r = run_suite(s, fl);
                    if (format == "text") print_report(r, format);
                    report.merge(r);
                }
                if (format == "json")
                    std::cout << report_to_json(report).dump(2) << "\n";
                else
                    std::cout << "all: " << (report.pass() ? "PASS" : "FAIL") << "\n";
            } else {
                report = run_suite(v_suite, fl);
                print_report(report, format);
            }
            return report.pass() ? 0 : 1;
        }
        if (expand_cmd->parsed()) {
            Partition lambda = Partition::parse(e_lambda);
            Partition box = e_box.empty()
                                ? Partition(std::vector<int>(e_n, std::max(lambda.first(), 1)))
                                : Partition::parse(e_box);
            ExpansionTable table =
                expand(basis_provider(e_source, e_n), basis_provider(e_target, e_n), lambda, e_n,
                       box, e_source, e_target);
            if (format == "json") {
                std::cout << table_to_json(table).dump(2) << "\n";
            } else {
                for (const auto& [mu, c] : table.entries)
                    std::cout << mu.to_string() << ": " << c.to_string() << "\n";
            }
            if (e_certify != "none") {
                VerificationReport cert = certify(table, e_certify == "positive"
                                                             ? CertifyLaw::Positive
                                                             : CertifyLaw::SignAlternating);
                if (format != "json") print_report(cert, format);
                if (!cert.pass()) return 1;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const WidthTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GridTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
