// meshpat: distributions of marked mesh patterns over 132-avoiding
// permutations, the associated bijections, and exhaustive verification runs.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "meshpat/meshpat.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string output;

    // qpoly
    std::size_t n = 0;
    std::string pattern;
    std::string qpoly_format = "text";

    // table
    std::string quadrant;
    int ell = 1;
    std::size_t max_n = 0;
    std::string triangle;
    bool qzero = false;
    std::size_t rows = 0;
    std::string table_format = "csv";
    std::size_t column = 0;

    // bijection
    std::string kind;
    std::string perm;
    std::string inverse;
    bool draw = false;

    // verify
    std::string theorem;
    std::size_t verify_max_n = 7;
};

meshpat::Quadrant parse_quadrant(const std::string& q) {
    if (q == "I" || q == "1") return meshpat::Quadrant::I;
    if (q == "II" || q == "2") return meshpat::Quadrant::II;
    if (q == "III" || q == "3") return meshpat::Quadrant::III;
    if (q == "IV" || q == "4") return meshpat::Quadrant::IV;
    throw meshpat::invalid_input("unknown quadrant '" + q + "' (expected I, II, III or IV)");
}

std::string run_qpoly(const Options& o) {
    if (o.n < 1) throw meshpat::invalid_input("--n must be at least 1");
    auto q = meshpat::q_polynomial(o.n, meshpat::parse_pattern(o.pattern));
    meshpat::NumberTable t{q.pattern, {}, 0, {{o.n, q.coeffs}}};
    if (o.qpoly_format == "text") return q.to_string() + "\ncoefficients: " + meshpat::join(q.coeffs) + "\n";
    if (o.qpoly_format == "csv") return meshpat::render_csv(t);
    if (o.qpoly_format == "json") return meshpat::render_json(t);
    throw meshpat::invalid_input("unknown format '" + o.qpoly_format + "'");
}

std::string run_table(const Options& o) {
    meshpat::NumberTable t;
    int modes = !o.quadrant.empty() + !o.triangle.empty() + o.qzero;
    if (modes != 1) throw meshpat::invalid_input("choose exactly one of --quadrant, --triangle, --qzero");
    if (!o.quadrant.empty()) {
        if (o.max_n < 1) throw meshpat::invalid_input("--max-n must be at least 1");
        t = meshpat::to_number_table(meshpat::distribution_table(parse_quadrant(o.quadrant), o.ell, o.max_n));
    } else {
        if (o.rows < 1) throw meshpat::invalid_input("--rows must be at least 1");
        if (o.qzero) t = meshpat::to_number_table(meshpat::q_zero_table(o.rows));
        else if (o.triangle == "catalan") t = meshpat::to_number_table(meshpat::catalan_triangle_table(o.rows));
        else if (o.triangle == "narayana") t = meshpat::to_number_table(meshpat::narayana_table(o.rows));
        else throw meshpat::invalid_input("unknown triangle '" + o.triangle + "'");
    }
    if (o.table_format == "csv") return meshpat::render_csv(t);
    if (o.table_format == "json") return meshpat::render_json(t);
    if (o.table_format == "bfile") return meshpat::render_bfile(t, o.column);
    throw meshpat::invalid_input("unknown format '" + o.table_format + "'");
}

std::string run_bijection(const Options& o) {
    if (o.perm.empty() == o.inverse.empty()) throw meshpat::invalid_input("give exactly one of --perm, --inverse");
    std::ostringstream os;
    const bool forward = !o.perm.empty();
    if (o.kind == "dyck") {
        if (forward) {
            auto path = meshpat::perm_to_dyck(meshpat::parse_permutation(o.perm));
            os << path << '\n';
            if (o.draw) os << path.draw();
        } else {
            auto path = meshpat::DyckPath::parse(o.inverse);
            os << meshpat::dyck_to_perm(path) << '\n';
            if (o.draw) os << path.draw();
        }
    } else if (o.kind == "parking") {
        if (forward) {
            os << meshpat::phi(meshpat::parse_permutation(o.perm)).to_string() << '\n';
        } else {
            meshpat::NonDecreasingParkingFunction f(meshpat::parse_int_list(o.inverse));
            os << meshpat::phi_inverse(f) << '\n';
        }
    } else if (o.kind == "tree") {
        if (forward) {
            auto tree = meshpat::perm_to_tree(meshpat::parse_permutation(o.perm));
            os << tree.shape_string() << '\n';
            if (o.draw) os << tree.draw();
        } else {
            auto tree = meshpat::BinaryTree::parse_shape(o.inverse).with_canonical_labels();
            os << meshpat::tree_to_perm(tree) << '\n';
            if (o.draw) os << tree.draw();
        }
    } else {
        throw meshpat::invalid_input("unknown bijection '" + o.kind + "' (expected dyck, parking or tree)");
    }
    return os.str();
}

std::string run_verify(const Options& o, bool& all_pass) {
    if (o.verify_max_n < 1 || o.verify_max_n > 9) throw meshpat::invalid_input("--max-n must be between 1 and 9");
    if (o.verify_max_n > 7) std::cerr << "warning: --max-n " << o.verify_max_n << " may take a while\n";
    std::vector<std::string> ids;
    if (o.theorem == "all") ids = meshpat::theorem_ids();
    else ids.push_back(o.theorem);
    std::string out;
    all_pass = true;
    for (const auto& id : ids) {
        auto rep = meshpat::verify_theorem(id, o.verify_max_n);
        all_pass = all_pass && rep.pass();
        out += rep.to_string();
    }
    return out;
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path << '\n';
        return exit_usage;
    }
    f << text;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marked mesh pattern distributions over 132-avoiding permutations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("-o,--output", o.output, "Write the result to this file instead of stdout");

    auto* qpoly = app.add_subcommand("qpoly", "Distribution polynomial of mmp(a,b,c,d) over S_n(132)");
    qpoly->add_option("--n", o.n, "Permutation length")->required();
    qpoly->add_option("--pattern", o.pattern, "Thresholds a,b,c,d")->required();
    qpoly->add_option("--format", o.qpoly_format, "text, csv or json")->capture_default_str();

    auto* table = app.add_subcommand("table", "Coefficient tables and number triangles");
    table->add_option("--quadrant", o.quadrant, "I, II, III or IV (pattern with ell in one quadrant)");
    table->add_option("--ell", o.ell, "Threshold in the chosen quadrant")->capture_default_str();
    table->add_option("--max-n", o.max_n, "Largest n for --quadrant tables");
    table->add_option("--triangle", o.triangle, "catalan or narayana");
    table->add_flag("--qzero", o.qzero, "Constant terms Q_n^(0,k,0,0)(0)");
    table->add_option("--rows", o.rows, "Number of rows for --triangle / --qzero");
    table->add_option("--format", o.table_format, "csv, json or bfile")->capture_default_str();
    table->add_option("--column", o.column, "Column k emitted by --format bfile");

    auto* bij = app.add_subcommand("bijection", "Apply a bijection or its inverse");
    bij->add_option("kind", o.kind, "dyck, parking or tree")->required();
    bij->add_option("--perm", o.perm, "132-avoiding permutation (e.g. 768945213 or 7,6,8,9,4,5,2,1,3)");
    bij->add_option("--inverse", o.inverse, "Dyck word, parking function or tree shape to map back");
    bij->add_flag("--draw", o.draw, "Append an ASCII drawing of the path or tree");

    auto* verify = app.add_subcommand("verify", "Exhaustively check an identity up to max_n");
    verify->add_option("--theorem", o.theorem, "Identity id or 'all'")->required();
    verify->add_option("--max-n", o.verify_max_n, "Largest n checked (1..9)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        std::string out;
        bool pass = true;
        if (qpoly->parsed()) out = run_qpoly(o);
        else if (table->parsed()) out = run_table(o);
        else if (bij->parsed()) out = run_bijection(o);
        else out = run_verify(o, pass);
        int rc = emit(out, o.output);
        if (rc != exit_ok) return rc;
        return pass ? exit_ok : exit_verification_failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
