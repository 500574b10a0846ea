#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ytl/lr.hpp"
#include "ytl/monomials.hpp"
#include "ytl/rep_theory.hpp"
#include "ytl/tableau.hpp"
#include "ytl/verify.hpp"

using namespace ytl;
using json = nlohmann::ordered_json;

namespace {

json json_integer(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int part : p.parts) a.push_back(part);
    return a;
}

json d_partition_json(const DPartition& dp) {
    json a = json::array();
    for (const auto& comp : dp.components) a.push_back(partition_json(comp));
    return a;
}

json pattern_json(const CyclePattern& p) {
    json a = json::array();
    for (const auto& [i, k] : p.cycles) a.push_back(json::array({i, k}));
    return a;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

int parse_part(const std::string& token) {
    size_t pos = 0;
    int value;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer part: '" + token + "'");
    }
    if (pos != token.size())
        throw std::invalid_argument("not an integer part: '" + token + "'");
    return value;
}

// Comma-separated parts, e.g. "3,1,1"; empty string is the empty partition.
Partition parse_partition_arg(std::string text) {
    std::erase(text, ' ');
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) parts.push_back(parse_part(token));
    return Partition(parts);
}

// Semicolon-separated components, e.g. "2,1;;1" for ((2,1),(),(1)).
DPartition parse_d_partition_arg(const std::string& text) {
    std::vector<Partition> comps;
    std::string::size_type start = 0;
    while (true) {
        auto semi = text.find(';', start);
        comps.push_back(parse_partition_arg(
            text.substr(start, semi == std::string::npos ? semi : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return DPartition(std::move(comps));
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* family_name(IrrepFamily f) {
    return f == IrrepFamily::single_component ? "single_component"
                                              : "two_single_columns";
}

int run_dims(int d, int n, const std::string& format) {
    Integer formula = ytl_dimension_formula(d, n);
    Integer squares = ytl_dimension_sum_squares(d, n);
    Integer algebra = int_pow(Integer(d), n) * factorial(n);
    bool match = formula == squares;
    if (format == "json") {
        json out;
        out["d"] = d;
        out["n"] = n;
        out["algebra_dimension"] = json_integer(algebra);
        out["formula"] = json_integer(formula);
        out["sum_of_squares"] = json_integer(squares);
        out["match"] = match;
        print_json(out);
    } else if (format == "csv") {
        std::cout << "d,n,algebra_dimension,formula,sum_of_squares,match\n"
                  << d << "," << n << "," << algebra.get_str() << ","
                  << formula.get_str() << "," << squares.get_str() << ","
                  << (match ? "true" : "false") << "\n";
    } else {
        std::cout << "formula: " << formula.get_str() << "\n"
                  << "sum_of_squares: " << squares.get_str() << "\n"
                  << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

int run_irreps(int d, int n, const std::string& format) {
    auto classification = r_set(d, n);
    Integer squares = 0;
    std::vector<Integer> dims;
    for (const auto& member : classification.members) {
        dims.push_back(standard_d_tableaux_count(member.shape));
        squares += dims.back() * dims.back();
    }
    if (format == "json") {
        json out;
        out["d"] = d;
        out["n"] = n;
        out["count"] = classification.members.size();
        out["sum_of_squares"] = json_integer(squares);
        out["members"] = json::array();
        for (size_t i = 0; i < classification.members.size(); ++i) {
            const auto& member = classification.members[i];
            json row;
            row["shape"] = d_partition_json(member.shape);
            row["family"] = family_name(member.family);
            row["dimension"] = json_integer(dims[i]);
            out["members"].push_back(row);
        }
        print_json(out);
    } else if (format == "csv") {
        std::cout << "shape,family,dimension\n";
        for (size_t i = 0; i < classification.members.size(); ++i) {
            const auto& member = classification.members[i];
            std::cout << csv_field(member.shape.to_string()) << ","
                      << family_name(member.family) << "," << dims[i].get_str()
                      << "\n";
        }
    } else {
        std::cout << classification.members.size() << " irreducibles, sum of squares "
                  << squares.get_str() << "\n";
        for (size_t i = 0; i < classification.members.size(); ++i) {
            const auto& member = classification.members[i];
            std::cout << member.shape.to_string() << " " << family_name(member.family)
                      << " " << dims[i].get_str() << "\n";
        }
    }
    return 0;
}

int run_lr(const std::string& lambda_text, const std::string& mu_text,
           const std::string& nu_text, const std::string& format) {
    Partition lambda = parse_partition_arg(lambda_text);
    Partition mu = parse_partition_arg(mu_text);
    Partition nu = parse_partition_arg(nu_text);
    Integer c = lr_coefficient(lambda, mu, nu);
    if (format == "json") {
        json out;
        out["lambda"] = partition_json(lambda);
        out["mu"] = partition_json(mu);
        out["nu"] = partition_json(nu);
        out["coefficient"] = json_integer(c);
        print_json(out);
    } else if (format == "csv") {
        std::cout << "lambda,mu,nu,coefficient\n"
                  << csv_field(lambda.to_string()) << "," << csv_field(mu.to_string())
                  << "," << csv_field(nu.to_string()) << "," << c.get_str() << "\n";
    } else {
        std::cout << c.get_str() << "\n";
    }
    return 0;
}

int run_restrict(const std::string& lambda_text, const std::string& format) {
    DPartition lambda = parse_d_partition_arg(lambda_text);
    auto mults = restriction_multiplicities(lambda);
    if (format == "json") {
        json out;
        out["lambda"] = d_partition_json(lambda);
        out["summands"] = json::array();
        for (const auto& [nu, c] : mults) {
            json row;
            row["nu"] = partition_json(nu);
            row["multiplicity"] = json_integer(c);
            out["summands"].push_back(row);
        }
        print_json(out);
    } else if (format == "csv") {
        std::cout << "nu,multiplicity\n";
        for (const auto& [nu, c] : mults)
            std::cout << csv_field(nu.to_string()) << "," << c.get_str() << "\n";
    } else {
        for (const auto& [nu, c] : mults)
            std::cout << nu.to_string() << ": " << c.get_str() << "\n";
    }
    return 0;
}

int run_pieri(const std::string& mu_text, int l, const std::string& format) {
    DPartition mu = parse_d_partition_arg(mu_text);
    auto summands = pieri_summands(mu, l);
    if (format == "json") {
        json out;
        out["mu"] = d_partition_json(mu);
        out["l"] = l;
        out["count"] = summands.size();
        out["summands"] = json::array();
        for (const auto& s : summands) out["summands"].push_back(d_partition_json(s));
        print_json(out);
    } else if (format == "csv") {
        std::cout << "summand\n";
        for (const auto& s : summands)
            std::cout << csv_field(s.to_string()) << "\n";
    } else {
        for (const auto& s : summands) std::cout << s.to_string() << "\n";
    }
    return 0;
}

int run_basis(int d, int n, bool count_only, const std::string& format) {
    auto basis = enumerate_quotient_basis(d, n);
    if (format == "json") {
        json out;
        out["d"] = d;
        out["n"] = n;
        out["size"] = basis.size();
        if (!count_only) {
            out["elements"] = json::array();
            for (const auto& b : basis) {
                json row;
                row["framing"] = b.framing;
                row["pattern"] = pattern_json(b.pattern);
                out["elements"].push_back(row);
            }
        }
        print_json(out);
    } else if (format == "csv") {
        if (count_only) {
            std::cout << "size\n" << basis.size() << "\n";
        } else {
            std::cout << "framing,pattern\n";
            for (const auto& b : basis)
                std::cout << csv_field(join_ints(b.framing, ",")) << ","
                          << csv_field(b.pattern.to_string()) << "\n";
        }
    } else {
        std::cout << "size: " << basis.size() << "\n";
        if (!count_only)
            for (const auto& b : basis)
                std::cout << join_ints(b.framing, ",") << " " << b.pattern.to_string()
                          << "\n";
    }
    return 0;
}

int run_zcount(int n, const std::string& format) {
    auto row = z_row(n);
    Integer total = 0, weighted = 0;
    for (int m = 0; m < n; ++m) {
        total += row[m];
        weighted += int_pow(2, n - m) * row[m];
    }
    bool top = row[n - 1] == catalan(n - 1);
    bool sum = total == catalan(n);
    bool wsum = weighted == (n + 1) * catalan(n);
    bool pass = top && sum && wsum;
    if (format == "json") {
        json out;
        out["n"] = n;
        out["row"] = json::array();
        for (const auto& z : row) out["row"].push_back(json_integer(z));
        out["identities"]["top_weight"] = top;
        out["identities"]["total"] = sum;
        out["identities"]["weighted_total"] = wsum;
        out["pass"] = pass;
        print_json(out);
    } else if (format == "csv") {
        std::cout << "key,value\n";
        for (int m = 0; m < n; ++m)
            std::cout << "z_" << m << "," << row[m].get_str() << "\n";
        std::cout << "top_weight," << (top ? "PASS" : "FAIL") << "\n"
                  << "total," << (sum ? "PASS" : "FAIL") << "\n"
                  << "weighted_total," << (wsum ? "PASS" : "FAIL") << "\n";
    } else {
        std::cout << "z_row:";
        for (const auto& z : row) std::cout << " " << z.get_str();
        std::cout << "\n"
                  << "top_weight: " << (top ? "PASS" : "FAIL") << "\n"
                  << "total: " << (sum ? "PASS" : "FAIL") << "\n"
                  << "weighted_total: " << (wsum ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

json check_items_json(const std::vector<CheckItem>& items) {
    json a = json::array();
    for (const auto& item : items) {
        json row;
        row["name"] = item.name;
        row["pass"] = item.pass;
        a.push_back(row);
    }
    return a;
}

void print_check_summary(const char* label, const std::vector<CheckItem>& items,
                         bool pass) {
    std::cout << label << ": " << items.size() << " checks: "
              << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& item : items)
        if (!item.pass) std::cout << "  failed: " << item.name << "\n";
}

int run_verify(int d, int n, const std::vector<std::string>& u_texts,
               std::uint64_t seed, bool symbolic, const std::string& format) {
    std::vector<Rational> us;
    for (const auto& text : u_texts) {
        Rational r = parse_rational(text);
        validate_u0(r);
        us.push_back(r);
    }
    auto rep = run_full_verification(d, n, us, symbolic, seed);

    if (format == "json") {
        json out;
        out["d"] = d;
        out["n"] = n;
        out["u_values"] = json::array();
        for (const auto& u : rep.dimensions.u_values)
            out["u_values"].push_back(u.get_str());
        json dims;
        dims["algebra"] = json_integer(rep.dimensions.algebra_dim);
        dims["expected_quotient"] = json_integer(rep.dimensions.expected_quotient_dim);
        dims["sum_of_squares"] = json_integer(rep.dimensions.sum_squares);
        dims["ranks"] = rep.dimensions.ranks;
        dims["quotient_dimensions"] = json::array();
        for (const auto& q : rep.dimensions.quotient_dims)
            dims["quotient_dimensions"].push_back(json_integer(q));
        dims["pass"] = rep.dimensions.pass;
        out["dimensions"] = dims;
        json indep;
        indep["u"] = rep.independence.u0.get_str();
        indep["basis_size"] = rep.independence.basis_size;
        indep["independent"] = rep.independence.independent;
        indep["dependent_positions"] = rep.independence.dependent_positions;
        indep["pass"] = rep.independence.pass;
        out["basis_independence"] = indep;
        json ledger;
        ledger["u"] = rep.ledger.u0.get_str();
        ledger["items"] = check_items_json(rep.ledger.checks);
        ledger["pass"] = rep.ledger.pass;
        out["relation_ledger"] = ledger;
        json defining;
        defining["items"] = check_items_json(rep.defining.checks);
        defining["pass"] = rep.defining.pass;
        out["defining_relations"] = defining;
        json spanning;
        spanning["trials"] = rep.spanning.trials;
        spanning["seed"] = rep.spanning.seed;
        spanning["failures"] = rep.spanning.failures;
        spanning["pass"] = rep.spanning.pass;
        out["word_spanning"] = spanning;
        if (rep.symbolic_rank) {
            out["symbolic_rank"] = *rep.symbolic_rank;
            out["symbolic_rank_matches"] = rep.symbolic_rank_matches;
        }
        out["pass"] = rep.pass;
        print_json(out);
    } else if (format == "csv") {
        std::cout << "section,item,pass\n";
        std::cout << "dimensions,," << (rep.dimensions.pass ? "true" : "false") << "\n";
        std::cout << "basis_independence,,"
                  << (rep.independence.pass ? "true" : "false") << "\n";
        for (const auto& item : rep.ledger.checks)
            std::cout << "relation_ledger," << csv_field(item.name) << ","
                      << (item.pass ? "true" : "false") << "\n";
        for (const auto& item : rep.defining.checks)
            std::cout << "defining_relations," << csv_field(item.name) << ","
                      << (item.pass ? "true" : "false") << "\n";
        std::cout << "word_spanning,," << (rep.spanning.pass ? "true" : "false")
                  << "\n";
        if (rep.symbolic_rank)
            std::cout << "symbolic_rank,,"
                      << (rep.symbolic_rank_matches ? "true" : "false") << "\n";
        std::cout << "overall,," << (rep.pass ? "true" : "false") << "\n";
    } else {
        std::cout << "d=" << d << " n=" << n << " u_values:";
        for (const auto& u : rep.dimensions.u_values) std::cout << " " << u.get_str();
        std::cout << "\n";
        std::cout << "algebra_dimension: " << rep.dimensions.algebra_dim.get_str()
                  << "\n";
        std::cout << "expected_quotient_dimension: "
                  << rep.dimensions.expected_quotient_dim.get_str() << "\n";
        std::cout << "sum_of_squares: " << rep.dimensions.sum_squares.get_str()
                  << "\n";
        std::cout << "ranks:";
        for (size_t r : rep.dimensions.ranks) std::cout << " " << r;
        std::cout << "\n";
        std::cout << "dimensions: " << (rep.dimensions.pass ? "PASS" : "FAIL") << "\n";
        std::cout << "basis_independence: " << rep.independence.independent << "/"
                  << rep.independence.basis_size << " independent: "
                  << (rep.independence.pass ? "PASS" : "FAIL") << "\n";
        print_check_summary("relation_ledger", rep.ledger.checks, rep.ledger.pass);
        print_check_summary("defining_relations", rep.defining.checks,
                            rep.defining.pass);
        std::cout << "word_spanning: " << rep.spanning.trials << " trials: "
                  << (rep.spanning.pass ? "PASS" : "FAIL") << "\n";
        if (rep.symbolic_rank)
            std::cout << "symbolic_rank: " << *rep.symbolic_rank << " (matches: "
                      << (rep.symbolic_rank_matches ? "yes" : "no") << ")\n";
        std::cout << "overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

void add_format_option(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the framed diagram quotient algebra"};
    app.require_subcommand(1);
    int rc = 0;

    int dims_d = 0, dims_n = 0;
    std::string dims_format = "text";
    auto* dims = app.add_subcommand(
        "dims", "closed dimension formula vs sum of squared irreducible dimensions");
    dims->add_option("--d", dims_d, "framing modulus")->required();
    dims->add_option("--n", dims_n, "number of strands")->required();
    add_format_option(dims, dims_format);
    dims->callback([&] { rc = run_dims(dims_d, dims_n, dims_format); });

    int irreps_d = 0, irreps_n = 0;
    std::string irreps_format = "text";
    auto* irreps = app.add_subcommand(
        "irreps", "irreducible shapes surviving in the quotient, with dimensions");
    irreps->add_option("--d", irreps_d, "framing modulus")->required();
    irreps->add_option("--n", irreps_n, "number of strands")->required();
    add_format_option(irreps, irreps_format);
    irreps->callback([&] { rc = run_irreps(irreps_d, irreps_n, irreps_format); });

    std::string lr_lambda, lr_mu, lr_nu, lr_format = "text";
    auto* lr = app.add_subcommand("lr", "product multiplicity for a triple of shapes");
    lr->add_option("--lambda", lr_lambda, "partition, comma separated")->required();
    lr->add_option("--mu", lr_mu, "partition, comma separated")->required();
    lr->add_option("--nu", lr_nu, "partition, comma separated")->required();
    add_format_option(lr, lr_format);
    lr->callback([&] { rc = run_lr(lr_lambda, lr_mu, lr_nu, lr_format); });

    std::string restrict_lambda, restrict_format = "text";
    auto* restrict_cmd = app.add_subcommand(
        "restrict", "multiplicities of the restriction to the plain symmetric group");
    restrict_cmd
        ->add_option("--lambda", restrict_lambda,
                     "tuple of partitions, components separated by ';'")
        ->required();
    add_format_option(restrict_cmd, restrict_format);
    restrict_cmd->callback([&] { rc = run_restrict(restrict_lambda, restrict_format); });

    std::string pieri_mu, pieri_format = "text";
    int pieri_l = 0;
    auto* pieri = app.add_subcommand(
        "pieri", "summands obtained by adding boxes, no two in a column");
    pieri->add_option("--mu", pieri_mu, "tuple of partitions, ';' separated")
        ->required();
    pieri->add_option("--l", pieri_l, "number of boxes to add")->required()
        ->check(CLI::NonNegativeNumber);
    add_format_option(pieri, pieri_format);
    pieri->callback([&] { rc = run_pieri(pieri_mu, pieri_l, pieri_format); });

    int basis_d = 0, basis_n = 0;
    bool basis_count_only = false;
    std::string basis_format = "text";
    auto* basis = app.add_subcommand("basis", "framed monomial basis of the quotient");
    basis->add_option("--d", basis_d, "framing modulus")->required();
    basis->add_option("--n", basis_n, "number of strands")->required();
    basis->add_flag("--count-only", basis_count_only, "print only the size");
    add_format_option(basis, basis_format);
    basis->callback(
        [&] { rc = run_basis(basis_d, basis_n, basis_count_only, basis_format); });

    int zcount_n = 0;
    std::string zcount_format = "text";
    auto* zcount = app.add_subcommand(
        "zcount", "weight census of increasing-start patterns, with identities");
    zcount->add_option("--n", zcount_n, "number of strands")->required()
        ->check(CLI::PositiveNumber);
    add_format_option(zcount, zcount_format);
    zcount->callback([&] { rc = run_zcount(zcount_n, zcount_format); });

    int verify_d = 0, verify_n = 0;
    std::vector<std::string> verify_u;
    std::uint64_t verify_seed = 0;
    bool verify_symbolic = false;
    std::string verify_format = "json";
    auto* verify = app.add_subcommand(
        "verify", "full structural verification report (exit 1 on failure)");
    verify->add_option("--d", verify_d, "framing modulus")->required();
    verify->add_option("--n", verify_n, "number of strands")->required();
    verify->add_option("--u-eval", verify_u,
                       "specialization point 'p' or 'p/q'; repeatable, must avoid "
                       "0, 1 and -1; two points drawn from --seed when omitted");
    verify->add_option("--seed", verify_seed,
                       "seed for default specialization points and random words");
    verify->add_flag("--symbolic", verify_symbolic,
                     "also compute the ideal rank over rational functions");
    add_format_option(verify, verify_format);
    verify->callback([&] {
        rc = run_verify(verify_d, verify_n, verify_u, verify_seed, verify_symbolic,
                        verify_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
