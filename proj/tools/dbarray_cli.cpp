// SPDX-License-Identifier: Apache-2.0
//
// dbarray: construct, fold and verify de Bruijn array codes from the command line.
// Exit codes: 0 verified, 1 constructed but not verified, 2 usage or precondition error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dbarray/dbarray.hpp>
#include <dbarray/io.hpp>

namespace {

using namespace dbarray;
using json = nlohmann::ordered_json;

struct Output {
    std::string format = "text";
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path);
        require(static_cast<bool>(os), errc::invalid_argument, "cannot open output file " + path);
        os << text;
    }
};

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream is(path);
    require(static_cast<bool>(is), errc::invalid_argument, "cannot open input file " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Gf2Poly parse_poly(const std::string& s) { return Gf2Poly::parse(s); }

std::string render_code(const Output& out, const ArrayCode& code, const json& meta)
{
    if (out.format == "json")
        return dump_json(CodeDocument{code, meta});
    std::string text = dump_text(code);
    std::string notes;
    if (meta.contains("notes"))
        for (const auto& n : meta.at("notes"))
            notes += "# " + n.get<std::string>() + "\n";
    if (meta.contains("verified"))
        notes += std::string("# verified: ") + (meta.at("verified").get<bool>() ? "true" : "false") + "\n";
    if (meta.contains("min_distance"))
        notes += "# min_distance: " + std::to_string(meta.at("min_distance").get<std::size_t>()) + "\n";
    // keep the label line first
    const auto eol = text.find('\n');
    return text.substr(0, eol + 1) + notes + text.substr(eol + 1);
}

json report_meta(const ConstructionReport& rep)
{
    json meta;
    meta["construction"] = rep.construction;
    if (rep.source)
        meta["source_poly"] = rep.source->to_string();
    meta["claimed_size"] = rep.claimed_size;
    meta["verified"] = rep.verified;
    if (rep.experimental)
        meta["experimental"] = true;
    if (rep.distance)
        meta["min_distance"] = rep.distance->pairwise;
    meta["notes"] = rep.notes;
    return meta;
}

json verify_json(const VerifyReport& v)
{
    json j;
    j["counting"] = v.counting;
    j["dimensions"] = v.dimensions;
    j["coverage"] = v.coverage;
    if (v.closure)
        j["closure"] = *v.closure;
    j["verdict"] = v.verdict;
    j["diagnostics"] = v.diagnostics;
    return j;
}

std::string verify_text(const ArrayCode& code, const VerifyReport& v)
{
    std::ostringstream os;
    const auto b = [](bool x) { return x ? "true" : "false"; };
    os << "code: " << code.label() << " with " << code.arrays.size() << " array(s)\n";
    os << "counting: " << b(v.counting) << "\n";
    os << "dimensions: " << b(v.dimensions) << "\n";
    os << "coverage: " << b(v.coverage) << "\n";
    if (v.closure)
        os << "closure: " << b(*v.closure) << "\n";
    for (const auto& d : v.diagnostics)
        os << "note: " << d << "\n";
    os << "verdict: " << (v.verdict ? "verified" : "NOT verified") << "\n";
    return os.str();
}

int emit_report(const Output& out, const ConstructionReport& rep)
{
    out.write(render_code(out, rep.produced, report_meta(rep)));
    return rep.verified ? 0 : 1;
}

std::optional<Parity> parse_parity(const std::string& s)
{
    if (s.empty() || s == "any")
        return std::nullopt;
    if (s == "even")
        return Parity::even;
    if (s == "odd")
        return Parity::odd;
    fail(errc::parse, "parity must be even, odd or any");
}

// n with r = 2^n - 1, if any
std::optional<int> rows_exponent(std::size_t r)
{
    for (int n = 1; n < 63; ++n)
        if (mersenne(n) == r)
            return n;
    return std::nullopt;
}

std::string table_row(const ConstructionReport& rep)
{
    std::ostringstream os;
    os << (rep.source ? rep.source->to_string() : std::string("-")) << "\t" << rep.produced.arrays.size() << "\t"
       << rep.produced.label() << "\t" << (rep.verified ? "verified" : "NOT verified") << "\t"
       << (rep.distance ? std::to_string(rep.distance->pairwise) : std::string("-"));
    return os.str();
}

int emit_table(const Output& out, const std::vector<ConstructionReport>& reps)
{
    bool all = !reps.empty();
    for (const auto& r : reps)
        all = all && r.verified;
    if (out.format == "json") {
        json rows = json::array();
        for (const auto& r : reps) {
            json row = report_meta(r);
            row["code"] = r.produced.label();
            row["arrays"] = r.produced.arrays.size();
            rows.push_back(row);
        }
        out.write(rows.dump(2) + "\n");
    } else {
        std::string text = "poly\tarrays\tcode\tverdict\tmin_distance\n";
        for (const auto& r : reps)
            text += table_row(r) + "\n";
        out.write(text);
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct and verify de Bruijn array codes and pseudo-random arrays"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.path, "Write output to FILE instead of standard output");

    int rc = 0;
    std::string poly;
    std::size_t r = 0;
    std::size_t t = 0;
    int n = 0;
    int m = 0;
    int k = 0;
    std::optional<std::size_t> cycle;
    std::string in_path;
    std::string kind;
    std::string parity;

    auto add_poly = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--poly,--seed-poly", poly, "Characteristic polynomial, e.g. x^4+x^3+1 or 0x19");
        if (required)
            opt->required();
    };

    // fold
    auto* fold_cmd = app.add_subcommand("fold", "Fold the register cycles of a polynomial into r x t arrays");
    add_poly(fold_cmd, true);
    fold_cmd->add_option("--r", r, "Rows")->required();
    fold_cmd->add_option("--t", t, "Columns")->required();
    fold_cmd->add_option("--n", n, "Window height recorded in the document");
    fold_cmd->add_option("--m", m, "Window width recorded in the document");
    fold_cmd->add_option("--cycle", cycle, "Fold only this cycle (0-based, canonical order)");
    fold_cmd->callback([&] {
        const Gf2Poly f = parse_poly(poly);
        const FoldingMap map(r, t);
        const SequenceFamily fam = generate_cycles(f);
        if (n == 0 && m == 0) {
            const auto rn = rows_exponent(r);
            if (rn && f.degree() % *rn == 0) {
                n = *rn;
                m = f.degree() / *rn;
            }
        }
        require(n >= 1 && m >= 1, errc::precondition, "cannot infer the window size; pass --n and --m");
        ArrayCode code;
        code.r = r;
        code.t = t;
        code.n = n;
        code.m = m;
        json meta;
        meta["source_poly"] = f.to_string();
        std::vector<std::string> notes;
        if (cycle) {
            require(*cycle < fam.members.size(), errc::invalid_argument,
                    "cycle index " + std::to_string(*cycle) + " out of range (" +
                        std::to_string(fam.members.size()) + " cycles)");
            code.kind = CodeKind::PRA;
            code.arrays.push_back(fold(fam.members[*cycle], r, t));
            if (fam.members[*cycle].size() != map.cells())
                notes.push_back("periodic extension: cycle period properly divides r*t");
        } else {
            code = detail::fold_family(fam, r, t, n, m, notes);
        }
        meta["notes"] = notes;
        out.write(render_code(out, code, meta));
    });

    // unfold
    auto* unfold_cmd = app.add_subcommand("unfold", "Read arrays and print the sequences they fold");
    unfold_cmd->add_option("--in", in_path, "Input document (JSON or text; - for stdin)")->required();
    unfold_cmd->callback([&] {
        const std::string text = read_file(in_path);
        const auto first = text.find_first_not_of(" \t\r\n");
        std::vector<CyclicArray> arrays;
        if (first != std::string::npos && text[first] == '{')
            arrays = parse_json(text).code.arrays;
        else
            arrays = parse_text_arrays(text);
        json seqs = json::array();
        std::string lines;
        for (const auto& a : arrays) {
            const CyclicSequence s = unfold(a);
            seqs.push_back(s.to_string());
            lines += s.to_string() + "\n";
        }
        out.write(out.format == "json" ? seqs.dump(2) + "\n" : lines);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force oracle on a code document");
    verify_cmd->add_option("--in", in_path, "Input document (JSON or text; - for stdin)")->required();
    verify_cmd->add_option("--kind", kind, "Override the declared kind (required for text input)");
    verify_cmd->add_option("--n", n, "Window height (text input)");
    verify_cmd->add_option("--m", m, "Window width (text input)");
    verify_cmd->callback([&] {
        const std::string text = read_file(in_path);
        const auto first = text.find_first_not_of(" \t\r\n");
        ArrayCode code;
        if (first != std::string::npos && text[first] == '{') {
            code = parse_json(text).code;
            if (!kind.empty())
                code.kind = parse_kind(kind);
            if (n > 0)
                code.n = n;
            if (m > 0)
                code.m = m;
        } else {
            require(!kind.empty() && n > 0 && m > 0, errc::parse, "text input needs --kind, --n and --m");
            code.kind = parse_kind(kind);
            code.arrays = parse_text_arrays(text);
            code.r = code.arrays.front().rows();
            code.t = code.arrays.front().cols();
            code.n = n;
            code.m = m;
        }
        const VerifyReport v = verify(code);
        if (out.format == "json") {
            json j = verify_json(v);
            j["code"] = code.label();
            out.write(j.dump(2) + "\n");
        } else {
            out.write(verify_text(code, v));
        }
        rc = v.verdict ? 0 : 1;
    });

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Run a construction and certify its output");
    construct_cmd->require_subcommand(1);

    auto* pf_cmd = construct_cmd->add_subcommand("pf", "Perfect factor PF(n,k)");
    pf_cmd->add_option("--n", n)->required();
    pf_cmd->add_option("--k", k)->required();
    pf_cmd->add_option("--parity", parity, "even, odd or any");
    pf_cmd->callback([&] {
        const PerfectFactor pf = perfect_factor(n, k, parse_parity(parity));
        const ArrayCode code = as_array_code(pf);
        const VerifyReport v = verify(code);
        json meta;
        meta["construction"] = "pf";
        meta["verified"] = v.verdict && verify_perfect_factor(pf);
        json cycles = json::array();
        for (const auto& c : pf.cycles)
            cycles.push_back(c.to_string());
        meta["cycles"] = cycles;
        out.write(render_code(out, code, meta));
        rc = meta["verified"].get<bool>() ? 0 : 1;
    });

    auto add_pmc = [&](const char* name, const char* help, bool odd) {
        auto* cmd = construct_cmd->add_subcommand(name, help);
        cmd->add_option("--n", n, "Perfect factor order")->required();
        cmd->add_option("--k", k, "Perfect factor cycle length exponent")->required();
        cmd->add_option("--m", m)->required();
        cmd->add_option("--parity", parity, "Column weight parity of the perfect factor: even, odd or any");
        cmd->callback([&, odd] {
            const PerfectFactor pf = perfect_factor(n, k, parse_parity(parity));
            rc = emit_report(out, odd ? construct_pmc_odd(pf, m) : construct_pmc_sd(pf, m));
        });
    };
    add_pmc("pmc-odd", "Column composition with an odd number of window columns", true);
    add_pmc("pmc-sd", "Column composition with complemented halves", false);

    auto* db_cmd = construct_cmd->add_subcommand("db-direct", "Raise the window height of a DBAC by one (experimental)");
    db_cmd->add_option("--in", in_path, "Input DBAC document (JSON)")->required();
    db_cmd->add_option("--m", m)->required();
    db_cmd->callback([&] {
        const ArrayCode code = parse_json(read_file(in_path)).code;
        rc = emit_report(out, construct_db_pmc_direct(code, m));
    });

    auto* prac_cmd = construct_cmd->add_subcommand("prac-fold", "Fold all cycles of an irreducible polynomial");
    add_poly(prac_cmd, true);
    prac_cmd->add_option("--n", n)->required();
    prac_cmd->add_option("--m", m)->required();
    prac_cmd->callback([&] { rc = emit_report(out, construct_prac_fold(parse_poly(poly), n, m)); });

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Folding experiments on products and exponent families");
    exp_cmd->require_subcommand(1);
    std::string fstr;
    std::string gstr;
    int deg = 0;
    std::uint64_t e = 0;
    auto* prod_cmd = exp_cmd->add_subcommand("product-fold", "Fold the cycles of f*g");
    prod_cmd->add_option("--f", fstr)->required();
    prod_cmd->add_option("--g", gstr)->required();
    prod_cmd->add_option("--r", r)->required();
    prod_cmd->add_option("--t", t)->required();
    prod_cmd->add_option("--n", n)->required();
    prod_cmd->add_option("--m", m)->required();
    prod_cmd->callback([&] {
        rc = emit_table(out, {experiment_product_fold(parse_poly(fstr), parse_poly(gstr), r, t, n, m)});
    });
    auto* fam_cmd = exp_cmd->add_subcommand("exponent-family", "Fold every irreducible of a given degree and exponent");
    fam_cmd->add_option("--deg", deg)->required();
    fam_cmd->add_option("--e", e)->required();
    fam_cmd->add_option("--r", r)->required();
    fam_cmd->add_option("--t", t)->required();
    fam_cmd->add_option("--n", n)->required();
    fam_cmd->add_option("--m", m)->required();
    fam_cmd->callback([&] { rc = emit_table(out, experiment_exponent_family(deg, e, r, t, n, m)); });

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Polynomial queries");
    poly_cmd->require_subcommand(1);
    auto* info_cmd = poly_cmd->add_subcommand("info", "Irreducibility, exponent and primitivity of one polynomial");
    add_poly(info_cmd, true);
    info_cmd->callback([&] {
        const Gf2Poly f = parse_poly(poly);
        json j;
        j["poly"] = f.to_string();
        j["hex"] = f.to_hex();
        j["degree"] = f.degree();
        j["irreducible"] = f.degree() >= 1 && is_irreducible(f);
        if (f.constant_term() && f.degree() >= 1 && (f.degree() <= kMaxExponentDegree))
            j["exponent"] = exponent(f);
        j["primitive"] = f.degree() >= 1 && is_primitive(f);
        j["reciprocal"] = reciprocal(f).to_string();
        if (out.format == "json") {
            out.write(j.dump(2) + "\n");
            return;
        }
        std::string text;
        for (const auto& [key, value] : j.items())
            text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        out.write(text);
    });
    bool primitive_only = false;
    std::optional<std::uint64_t> list_e;
    auto* list_cmd = poly_cmd->add_subcommand("list", "List irreducible polynomials of a degree");
    list_cmd->add_option("--n", n, "Degree")->required();
    list_cmd->add_option("--e", list_e, "Keep only this exponent");
    list_cmd->add_flag("--primitive", primitive_only, "Keep only primitive polynomials");
    list_cmd->callback([&] {
        std::optional<std::uint64_t> want = list_e;
        if (primitive_only) {
            require(!want || *want == mersenne(n), errc::invalid_argument, "--primitive conflicts with --e");
            want = mersenne(n);
        }
        std::string diag;
        const auto polys = enumerate_irreducible(n, want, &diag);
        if (!diag.empty())
            std::cerr << "note: " << diag << "\n";
        json arr = json::array();
        std::string text;
        for (const auto& f : polys) {
            arr.push_back(f.to_string());
            text += f.to_string() + "\n";
        }
        out.write(out.format == "json" ? arr.dump(2) + "\n" : text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return 2;
    } catch (const dbarray::error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return rc;
}
