#include "app.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "grlie/analysis.hpp"
#include "grlie/errors.hpp"
#include "grlie/expr.hpp"
#include "grlie/families.hpp"
#include "grlie/log.hpp"
#include "serialize.hpp"

namespace grlie::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDefect = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string family;
    int genus = 0;
    int strands = 0;
    int punctures = 0;
    int max_degree = 0;
    std::string format = "json";
    std::string output = "-";
    std::uint64_t seed = 1u;
    int threads = 0;
};

GradedPresentation make_presentation(const Options& o) {
    if (o.family == "free") {
        // strands weight-1 generators x[i], punctures weight-2 generators u[j]
        std::vector<std::string> names;
        std::vector<int> weights;
        for (int i = 1; i <= o.strands; ++i) {
            names.push_back("x[" + std::to_string(i) + "]");
            weights.push_back(1);
        }
        for (int i = 1; i <= o.punctures; ++i) {
            names.push_back("u[" + std::to_string(i) + "]");
            weights.push_back(2);
        }
        return free_lie(std::move(names), std::move(weights));
    }
    if (o.family == "drinfeld_kohno") return drinfeld_kohno(o.strands);
    if (o.family == "ihara_sphere") return ihara_sphere(o.strands);
    if (o.family == "kv_sphere") return kv_sphere(o.strands);
    if (o.family == "bezrukavnikov") return bezrukavnikov(o.genus, o.strands);
    if (o.family == "surface_group") return surface_group(o.genus, o.punctures);
    throw ParamError("unknown family '" + o.family + "'");
}

/// Compact family spec "name:key=value,..." used by the compare subcommand,
/// e.g. "kv_sphere:strands=4" or "bezrukavnikov:genus=1,strands=2".
GradedPresentation parse_family_spec(const std::string& spec) {
    Options o;
    auto colon = spec.find(':');
    o.family = spec.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream in(rest);
        std::string kv;
        while (std::getline(in, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParamError("bad family spec entry '" + kv + "' (expected key=value)");
            std::string key = kv.substr(0, eq);
            int value = 0;
            try {
                value = std::stoi(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParamError("bad integer in family spec entry '" + kv + "'");
            }
            if (key == "genus")
                o.genus = value;
            else if (key == "strands")
                o.strands = value;
            else if (key == "punctures")
                o.punctures = value;
            else
                throw ParamError("unknown family spec key '" + key + "'");
        }
    }
    return make_presentation(o);
}

int write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    f << content;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
    std::ostringstream lines;
    int checks = 0;
    int failures = 0;

    void record(const std::string& name, bool ok, const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        lines << name << "\t" << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) lines << "\t" << detail;
        lines << "\n";
    }
};

std::vector<WeightedAlphabet> witt_alphabets() {
    return {
        WeightedAlphabet({"x"}, {1}),
        WeightedAlphabet({"x", "y"}, {1, 1}),
        WeightedAlphabet({"x", "y", "z"}, {1, 1, 1}),
        WeightedAlphabet({"x", "u"}, {1, 2}),
        WeightedAlphabet({"x", "y", "u"}, {1, 1, 2}),
        WeightedAlphabet({"u", "v"}, {2, 2}),
        WeightedAlphabet({"x", "u", "v"}, {1, 2, 2}),
    };
}

void suite_witt(SuiteResult& r, int max_degree) {
    const int D = max_degree > 0 ? max_degree : 6;
    for (const auto& alphabet : witt_alphabets()) {
        std::vector<Int> ranks = witt_ranks(alphabet, D);
        bool ok = true;
        std::string detail;
        for (int d = 1; d <= D; ++d) {
            Int count(lyndon_words(alphabet, d).size());
            if (ranks[static_cast<std::size_t>(d - 1)] != count) {
                ok = false;
                detail = "degree " + std::to_string(d) + ": witt " +
                         ranks[static_cast<std::size_t>(d - 1)].str() + " vs enumeration " +
                         count.str();
                break;
            }
        }
        std::string name = "witt_vs_enumeration(";
        for (int i = 0; i < alphabet.size(); ++i) {
            if (i) name += ",";
            name += std::to_string(alphabet.weight(i));
        }
        name += ")";
        r.record(name, ok, detail);
    }
    // classical two-generator values
    std::vector<Int> two = witt_ranks(WeightedAlphabet({"x", "y"}, {1, 1}), 6);
    std::vector<Int> expected = {2, 1, 2, 3, 6, 9};
    r.record("witt_two_generators_1_to_6", two == expected);
}

LieElement random_element(const FreeLieAlgebra& fla, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    LieElement e(degree);
    for (const Word& w : fla.basis(degree)) e.add(w, coeff(rng));
    return e;
}

void suite_jacobi(SuiteResult& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<WeightedAlphabet> alphabets = {WeightedAlphabet({"x", "y"}, {1, 1}),
                                               WeightedAlphabet({"x", "y", "u"}, {1, 1, 2})};
    int anti_bad = 0, jacobi_bad = 0;
    for (const auto& alphabet : alphabets) {
        FreeLieAlgebra fla(alphabet);
        std::uniform_int_distribution<int> deg(1, 4);
        for (int s = 0; s < 50; ++s) {
            int d1 = deg(rng), d2 = deg(rng);
            while (d1 + d2 > 5) { d1 = deg(rng); d2 = deg(rng); }
            LieElement e1 = random_element(fla, d1, rng);
            LieElement e2 = random_element(fla, d2, rng);
            LieElement lhs = fla.bracket(e1, e2);
            LieElement rhs = fla.bracket(e2, e1);
            rhs *= Int(-1);
            if (!(lhs == rhs)) ++anti_bad;
        }
        for (int s = 0; s < 50; ++s) {
            int d1 = deg(rng), d2 = deg(rng), d3 = deg(rng);
            while (d1 + d2 + d3 > 6) { d1 = deg(rng); d2 = deg(rng); d3 = deg(rng); }
            LieElement e1 = random_element(fla, d1, rng);
            LieElement e2 = random_element(fla, d2, rng);
            LieElement e3 = random_element(fla, d3, rng);
            LieElement sum = fla.bracket(e1, fla.bracket(e2, e3));
            sum += fla.bracket(e2, fla.bracket(e3, e1));
            sum += fla.bracket(e3, fla.bracket(e1, e2));
            if (!sum.is_zero()) ++jacobi_bad;
        }
    }
    r.record("antisymmetry_100_samples", anti_bad == 0,
             anti_bad ? std::to_string(anti_bad) + " violations" : "");
    r.record("jacobi_100_samples", jacobi_bad == 0,
             jacobi_bad ? std::to_string(jacobi_bad) + " violations" : "");
}

void suite_roundtrip(SuiteResult& r) {
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
        FreeLieAlgebra fla(WeightedAlphabet::uniform(names));
        bool round_ok = true, tri_ok = true;
        for (int d = 1; d <= 6; ++d) {
            for (const Word& w : fla.basis(d)) {
                TensorPoly rho = fla.rho_expand(w);
                if (rho.coeffs().begin()->first != w || rho.coeffs().begin()->second != 1)
                    tri_ok = false;
                LieElement back = fla.to_lyndon_coords(rho);
                if (!(back == LieElement(d, w, 1))) round_ok = false;
            }
        }
        r.record("rho_roundtrip_" + std::to_string(k) + "_letters_deg6", round_ok);
        r.record("rho_unitriangular_" + std::to_string(k) + "_letters_deg6", tri_ok);
    }
}

// small determinant by cofactor expansion, for the SNF suite
Int cofactor_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void suite_snf(SuiteResult& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 6);

    int det_bad = 0;
    for (int s = 0; s < 200; ++s) {
        int n = dim(rng);
        std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                        std::vector<Int>(static_cast<std::size_t>(n)));
        Int det = 0;
        while (det == 0) {
            for (auto& row : m)
                for (auto& e : row) e = entry(rng);
            det = cofactor_det(m);
        }
        std::vector<Int> inv = snf_invariants(IntegerMatrix::from_rows(m));
        Int prod = 1;
        for (const Int& f : inv) prod *= f;
        if (prod != abs(det) || static_cast<int>(inv.size()) != n) ++det_bad;
    }
    r.record("snf_product_equals_abs_det_200", det_bad == 0,
             det_bad ? std::to_string(det_bad) + " mismatches" : "");

    int member_bad = 0;
    std::uniform_int_distribution<int> coeff(-10, 10);
    std::uniform_int_distribution<int> nrows(1, 3);
    for (int s = 0; s < 100; ++s) {
        int rows = nrows(rng);
        std::vector<std::vector<Int>> gen(static_cast<std::size_t>(rows),
                                          std::vector<Int>(3));
        for (auto& row : gen)
            for (auto& e : row) e = entry(rng);
        IntegerLattice lattice(3);
        for (const auto& row : gen) lattice.insert(row);
        // members by construction
        std::vector<Int> v(3, Int(0));
        for (const auto& row : gen) {
            Int c = coeff(rng);
            for (int j = 0; j < 3; ++j) v[static_cast<std::size_t>(j)] += c * row[static_cast<std::size_t>(j)];
        }
        if (!lattice.contains(v)) ++member_bad;
    }
    r.record("lattice_membership_constructed_100", member_bad == 0,
             member_bad ? std::to_string(member_bad) + " mismatches" : "");
}

void suite_exactness(SuiteResult& r, const Options& o) {
    if (o.genus < 1 || o.strands < 2 || o.max_degree < 1)
        throw ParamError("verify --suite exactness requires --genus >= 1, --strands >= 2, "
                         "--max-degree >= 1");
    ExactnessReport report = exactness_check(o.genus, o.strands, o.max_degree, o.threads);
    for (const auto& row : report.rows)
        r.record("exactness_defect_d" + std::to_string(row.degree), row.defect == 0,
                 "total=" + std::to_string(row.total_rank) +
                     " base=" + std::to_string(row.base_rank) +
                     " fiber=" + std::to_string(row.fiber_rank) +
                     " defect=" + std::to_string(row.defect));
}

int run_verify(const Options& o, const std::string& suite) {
    SuiteResult r;
    if (suite == "witt")
        suite_witt(r, o.max_degree);
    else if (suite == "jacobi")
        suite_jacobi(r, o.seed);
    else if (suite == "roundtrip")
        suite_roundtrip(r);
    else if (suite == "exactness")
        suite_exactness(r, o);
    else if (suite == "snf")
        suite_snf(r, o.seed);
    else
        throw ParamError("unknown verify suite '" + suite + "'");

    std::ostringstream out;
    out << r.lines.str();
    out << "suite " << suite << ": " << (r.failures == 0 ? "PASS" : "FAIL") << " (" << r.checks
        << " checks, " << r.failures << " failures)\n";
    int wc = write_output(o.output, out.str());
    if (wc != kExitOk) return wc;
    return r.failures == 0 ? kExitOk : kExitDefect;
}

int run_table(const Options& o) {
    GradedPresentation p = make_presentation(o);
    HilbertTable table = hilbert_table(p, o.max_degree, o.threads);
    std::string content = o.format == "tsv" ? table_to_tsv(table)
                                            : table_to_json(table).dump(2) + "\n";
    return write_output(o.output, content);
}

int run_central(const Options& o, const std::string& element_text) {
    GradedPresentation p = make_presentation(o);
    LieElement e = parse_lie_expr(element_text, p);
    bool central = is_central(e, p, o.max_degree);

    std::string content;
    if (o.format == "tsv") {
        std::ostringstream out;
        out << "element\tdegree\tcentral\n"
            << element_text << "\t" << e.degree() << "\t" << (central ? "true" : "false") << "\n";
        content = out.str();
    } else {
        nlohmann::ordered_json j;
        j["family"] = p.meta().family;
        j["params"] = {{"genus", p.meta().genus},
                       {"strands", p.meta().strands},
                       {"punctures", p.meta().punctures}};
        j["element"] = element_text;
        j["degree"] = e.degree();
        j["max_degree"] = o.max_degree;
        j["central"] = central;
        content = j.dump(2) + "\n";
    }
    int wc = write_output(o.output, content);
    if (wc != kExitOk) return wc;
    return central ? kExitOk : kExitDefect;
}

int run_compare(const Options& o, const std::string& left_spec, const std::string& right_spec) {
    GradedPresentation left = parse_family_spec(left_spec);
    GradedPresentation right = parse_family_spec(right_spec);
    ComparisonReport report = compare_presentations(left, right, o.max_degree, o.threads);
    std::string content = o.format == "tsv" ? compare_to_tsv(report)
                                            : compare_to_json(report).dump(2) + "\n";
    int wc = write_output(o.output, content);
    if (wc != kExitOk) return wc;
    // free-rank disagreement is a defect; torsion differences are reported only
    return report.all_free_ranks_equal() ? kExitOk : kExitDefect;
}

void add_family_flags(CLI::App* cmd, Options& o, bool family_required) {
    auto* fam = cmd->add_option("--family", o.family,
                                "free|drinfeld_kohno|ihara_sphere|kv_sphere|bezrukavnikov|"
                                "surface_group");
    if (family_required)
        fam->required()->check(CLI::IsMember({"free", "drinfeld_kohno", "ihara_sphere",
                                              "kv_sphere", "bezrukavnikov", "surface_group"}));
    cmd->add_option("--genus", o.genus, "genus g of the surface");
    cmd->add_option("--strands", o.strands, "number of strands n");
    cmd->add_option("--punctures", o.punctures, "number of punctures k");
}

void add_io_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--output", o.output, "output path ('-' = standard output)");
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--threads", o.threads, "worker threads (0 = implementation default)");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"grlie: graded components of finitely presented graded Lie algebras over Z"};
    app.require_subcommand(1);

    Options topt, vopt, copt, popt;
    std::string suite, element_text, left_spec, right_spec;

    CLI::App* table = app.add_subcommand("table", "Hilbert table of a family presentation");
    add_family_flags(table, topt, true);
    table->add_option("--max-degree", topt.max_degree, "highest degree to compute")->required();
    add_io_flags(table, topt);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "witt|jacobi|roundtrip|exactness|snf")
        ->required()
        ->check(CLI::IsMember({"witt", "jacobi", "roundtrip", "exactness", "snf"}));
    add_family_flags(verify, vopt, false);
    verify->add_option("--max-degree", vopt.max_degree, "degree bound where applicable");
    add_io_flags(verify, vopt);

    CLI::App* central = app.add_subcommand("central", "test centrality of a Lie expression");
    add_family_flags(central, copt, true);
    central->add_option("--element", element_text, "Lie expression, e.g. 'A[1,2]+A[1,3]'")
        ->required();
    central->add_option("--max-degree", copt.max_degree, "cache depth for the ideal")->required();
    add_io_flags(central, copt);

    CLI::App* compare = app.add_subcommand("compare", "compare two family presentations");
    compare->add_option("left", left_spec, "family spec, e.g. kv_sphere:strands=4")->required();
    compare->add_option("right", right_spec, "family spec, e.g. ihara_sphere:strands=4")
        ->required();
    compare->add_option("--max-degree", popt.max_degree, "highest degree to compare")->required();
    add_io_flags(compare, popt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) return run_table(topt);
        if (verify->parsed()) return run_verify(vopt, suite);
        if (central->parsed()) return run_central(copt, element_text);
        if (compare->parsed()) return run_compare(popt, left_spec, right_spec);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InhomogeneousExpressionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("grlie");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace grlie::cli
