#include "multiproj/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multiproj/p1p1.hpp"

namespace multiproj::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, int min_value, const char* what) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != cur.size() || cur.empty() || v < min_value)
            throw SyntaxError(std::string("invalid ") + what + " entry '" + cur + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw SyntaxError(std::string("empty ") + what + " list");
    return out;
}

Partition parse_partition_list(const std::string& text, const char* what) {
    try {
        return Partition(parse_int_list(text, 1, what));
    } catch (const std::invalid_argument& e) {
        throw SyntaxError(std::string(what) + ": " + e.what());
    }
}

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SyntaxError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_point_set(buf.str());
}

std::string envelope_header(const std::vector<int>& dims, int s, const std::vector<int>& t) {
    return "dims: " + join(dims, " ") + "\ns: " + std::to_string(s) + "\nt: " + join(t, " ") +
           "\n";
}

json nested_array(const std::vector<int>& shape, const std::vector<int>& flat, std::size_t& pos,
                  std::size_t axis) {
    if (axis == shape.size())
        return flat[pos++];
    json arr = json::array();
    for (int i = 0; i < shape[axis]; ++i)
        arr.push_back(nested_array(shape, flat, pos, axis + 1));
    return arr;
}

json nested_array(const std::vector<int>& shape, const std::vector<int>& flat) {
    std::size_t pos = 0;
    return nested_array(shape, flat, pos, 0);
}

json table_json(const HilbertTable& table) {
    json out;
    out["dims"] = table.dims().factors();
    out["s"] = table.s();
    out["t"] = table.t();
    out["table"] = nested_array(table.t(), table.box_values());
    return out;
}

json border_json(const HilbertTable& table, const Border& b) {
    json out;
    out["dims"] = table.dims().factors();
    out["s"] = table.s();
    out["t"] = table.t();
    json arrays = json::array();
    for (const BorderArray& arr : b.arrays)
        arrays.push_back(nested_array(arr.shape, arr.values));
    out["border"] = json{{"arrays", arrays}};
    return out;
}

} // namespace

std::string render_table_text(const std::vector<int>& dims, int s, const std::vector<int>& t,
                              const std::vector<int>& flat_table) {
    std::string out = envelope_header(dims, s, t);
    const int k = static_cast<int>(t.size());
    if (k == 1) {
        out += join(flat_table, " ") + "\n";
        return out;
    }
    if (k == 2) {
        std::size_t pos = 0;
        for (int r = 0; r < t[0]; ++r) {
            std::string line;
            for (int c = 0; c < t[1]; ++c) {
                if (c > 0)
                    line += " ";
                line += std::to_string(flat_table[pos++]);
            }
            out += line + "\n";
        }
        return out;
    }
    std::vector<int> j(k, 0);
    for (int v : flat_table) {
        out += join(j, " ") + ": " + std::to_string(v) + "\n";
        int i = k - 1;
        while (i >= 0 && ++j[i] == t[i]) {
            j[i] = 0;
            --i;
        }
    }
    return out;
}

std::string render_border_text(const std::vector<int>& dims, int s, const std::vector<int>& t,
                               const std::vector<BorderArray>& arrays) {
    std::string out = envelope_header(dims, s, t);
    const int k = static_cast<int>(arrays.size());
    for (int i = 0; i < k; ++i) {
        const BorderArray& arr = arrays[i];
        const std::string label =
            (k == 2) ? (i == 0 ? std::string("B_C") : std::string("B_R"))
                     : "B_" + std::to_string(i + 1);
        if (arr.shape.size() <= 1) {
            out += label + ": " + join(arr.values, " ") + "\n";
        } else if (arr.shape.size() == 2) {
            out += label + ":\n";
            std::size_t pos = 0;
            for (int r = 0; r < arr.shape[0]; ++r) {
                std::string line;
                for (int c = 0; c < arr.shape[1]; ++c) {
                    if (c > 0)
                        line += " ";
                    line += std::to_string(arr.values[pos++]);
                }
                out += line + "\n";
            }
        } else {
            out += label + ":\n";
            std::vector<int> j(arr.shape.size(), 0);
            for (int v : arr.values) {
                out += join(j, " ") + ": " + std::to_string(v) + "\n";
                int d = static_cast<int>(j.size()) - 1;
                while (d >= 0 && ++j[d] == arr.shape[d]) {
                    j[d] = 0;
                    --d;
                }
            }
        }
    }
    return out;
}

std::string render_partitions_text(const std::vector<int>& alpha,
                                   const std::vector<int>& alpha_conjugate,
                                   const std::vector<int>& beta,
                                   const std::vector<int>& beta_conjugate) {
    return "alpha: " + join(alpha, ",") + "\nalpha*: " + join(alpha_conjugate, ",") +
           "\nbeta: " + join(beta, ",") + "\nbeta*: " + join(beta_conjugate, ",") + "\n";
}

namespace {

struct Options {
    std::string file;
    std::string degree;
    std::string bc;
    std::string br;
    std::string alpha;
    std::string beta;
    std::string emit = "matrix";
    std::string format = "text";

    bool json_mode() const { return format == "json"; }
};

MultiDegree parse_degree(const std::string& text, int k) {
    const std::vector<int> entries = parse_int_list(text, 0, "degree");
    if (static_cast<int>(entries.size()) != k)
        throw ArityError("degree needs " + std::to_string(k) + " entries, got " +
                         std::to_string(entries.size()));
    return MultiDegree(entries);
}

int cmd_hilbert(const Options& opt, std::ostream& out) {
    const PointSet x = load_point_set(opt.file);
    const HilbertTable table = hilbert_table(x);
    if (!opt.degree.empty()) {
        const MultiDegree j = parse_degree(opt.degree, x.dims.factor_count());
        const int value = hilbert_query(table, j);
        if (opt.json_mode()) {
            json payload;
            payload["dims"] = x.dims.factors();
            payload["s"] = table.s();
            payload["t"] = table.t();
            payload["degree"] = j.entries;
            payload["value"] = value;
            out << payload.dump() << "\n";
        } else {
            out << value << "\n";
        }
        return exit_ok;
    }
    if (opt.json_mode())
        out << table_json(table).dump() << "\n";
    else
        out << render_table_text(x.dims.factors(), table.s(), table.t(), table.box_values());
    return exit_ok;
}

int cmd_border(const Options& opt, std::ostream& out) {
    const PointSet x = load_point_set(opt.file);
    const HilbertTable table = hilbert_table(x);
    const Border b = border(table);
    if (opt.json_mode())
        out << border_json(table, b).dump() << "\n";
    else
        out << render_border_text(x.dims.factors(), table.s(), table.t(), b.arrays);
    return exit_ok;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    BorderPair b;
    b.bc = parse_int_list(opt.bc, 0, "bc");
    b.br = parse_int_list(opt.br, 0, "br");
    const BorderVerdict verdict = classify_border(b);
    if (opt.json_mode()) {
        json payload;
        payload["bc"] = b.bc;
        payload["br"] = b.br;
        payload["feasible"] = verdict.feasible;
        payload["reasons"] = verdict.reasons;
        out << payload.dump() << "\n";
    } else if (verdict.feasible) {
        out << "FEASIBLE\n";
    } else {
        out << "INFEASIBLE\n";
        for (const std::string& reason : verdict.reasons)
            out << "reason: " << reason << "\n";
    }
    return verdict.feasible ? exit_ok : exit_infeasible;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
    const Partition alpha = parse_partition_list(opt.alpha, "alpha");
    const Partition beta = parse_partition_list(opt.beta, "beta");
    if (alpha.sum() != beta.sum()) {
        err << "infeasible: alpha and beta must partition the same integer\n";
        return exit_infeasible;
    }
    if (!gale_ryser_feasible(alpha, beta)) {
        err << "infeasible: alpha* does not majorize beta\n";
        return exit_infeasible;
    }
    const BinaryMatrix a = ryser_construct(alpha, beta);
    const bool emit_points = opt.emit == "points";
    if (opt.json_mode()) {
        json payload;
        payload["alpha"] = alpha.parts();
        payload["beta"] = beta.parts();
        if (emit_points) {
            payload["points"] = format_point_set(witness_from_matrix(a));
        } else {
            json rows = json::array();
            for (int r = 0; r < a.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < a.cols(); ++c)
                    row.push_back(a.at(r, c));
                rows.push_back(row);
            }
            payload["matrix"] = rows;
        }
        out << payload.dump() << "\n";
    } else if (emit_points) {
        out << format_point_set(witness_from_matrix(a));
    } else {
        out << a.to_text();
    }
    return exit_ok;
}

int cmd_partitions(const Options& opt, std::ostream& out) {
    const PointSet x = load_point_set(opt.file);
    const auto [alpha, beta] = alpha_beta(x);
    const Partition alpha_c = conjugate(alpha);
    const Partition beta_c = conjugate(beta);
    if (opt.json_mode()) {
        json payload;
        payload["dims"] = x.dims.factors();
        payload["s"] = x.size();
        payload["t"] = std::vector<int>{alpha.size(), beta.size()};
        payload["alpha"] = alpha.parts();
        payload["alpha_conjugate"] = alpha_c.parts();
        payload["beta"] = beta.parts();
        payload["beta_conjugate"] = beta_c.parts();
        out << payload.dump() << "\n";
    } else {
        out << render_partitions_text(alpha.parts(), alpha_c.parts(), beta.parts(),
                                      beta_c.parts());
    }
    return exit_ok;
}

int cmd_separators(const Options& opt, std::ostream& out) {
    const PointSet x = load_point_set(opt.file);
    const MultiDegree j = parse_degree(opt.degree, x.dims.factor_count());
    const SeparatorSet sep = separators(x, j);
    const int h = static_cast<int>(sep.subset.size());

    std::vector<std::vector<Rational>> check(h, std::vector<Rational>(h));
    for (int i = 0; i < h; ++i)
        for (int l = 0; l < h; ++l)
            check[i][l] = evaluate(sep.forms[i], x.points[sep.subset[l]]);

    if (opt.json_mode()) {
        json payload;
        payload["dims"] = x.dims.factors();
        payload["s"] = x.size();
        payload["degree"] = j.entries;
        payload["subset"] = sep.subset;
        json forms = json::array();
        const std::vector<Monomial> basis = monomial_basis(x.dims, j);
        for (const MultiForm& f : sep.forms) {
            json fj;
            fj["text"] = to_string(f, x.dims);
            json coeffs = json::array();
            json monos = json::array();
            for (std::size_t c = 0; c < f.coefficients.size(); ++c) {
                if (f.coefficients[c] == 0)
                    continue;
                coeffs.push_back(to_string(f.coefficients[c]));
                monos.push_back(to_string(basis[c], x.dims));
            }
            fj["coefficients"] = coeffs;
            fj["monomials"] = monos;
            forms.push_back(fj);
        }
        payload["forms"] = forms;
        json rows = json::array();
        for (int i = 0; i < h; ++i) {
            json row = json::array();
            for (int l = 0; l < h; ++l)
                row.push_back(to_string(check[i][l]));
            rows.push_back(row);
        }
        payload["check"] = rows;
        out << payload.dump() << "\n";
    } else {
        out << "degree: " << join(j.entries, " ") << "\n";
        out << "subset:";
        for (int idx : sep.subset)
            out << " " << idx;
        out << "\n";
        for (int i = 0; i < h; ++i)
            out << "G" << (i + 1) << " = " << to_string(sep.forms[i], x.dims) << "\n";
        out << "check:\n";
        for (int i = 0; i < h; ++i) {
            for (int l = 0; l < h; ++l)
                out << (l ? " " : "") << to_string(check[i][l]);
            out << "\n";
        }
    }
    return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const PointSet x = load_point_set(opt.file);
    const HilbertTable table = hilbert_table(x);
    const PropertyReport report = verify_properties(x, table);
    if (opt.json_mode()) {
        json payload;
        payload["dims"] = x.dims.factors();
        payload["s"] = table.s();
        payload["t"] = table.t();
        json checks = json::array();
        for (const PropertyCheck& c : report.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        payload["checks"] = checks;
        payload["ok"] = report.ok();
        out << payload.dump() << "\n";
    } else {
        for (const PropertyCheck& c : report.checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty())
                out << ": " << c.detail;
            out << "\n";
        }
    }
    return report.ok() ? exit_ok : exit_infeasible;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert functions and borders of finite point sets in products of "
                 "projective spaces"};
    app.require_subcommand(1);
    Options opt;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function table or one value");
    hilbert->add_option("file", opt.file, "Point-set file")->required();
    hilbert->add_option("--degree", opt.degree, "Comma-separated multidegree");
    add_format(hilbert);

    CLI::App* border = app.add_subcommand("border", "Border arrays of the Hilbert function");
    border->add_option("file", opt.file, "Point-set file")->required();
    add_format(border);

    CLI::App* classify = app.add_subcommand("classify", "Decide whether a border is achievable");
    classify->add_option("--bc", opt.bc, "Eventual column vector")->required();
    classify->add_option("--br", opt.br, "Eventual row vector")->required();
    add_format(classify);

    CLI::App* construct =
        app.add_subcommand("construct", "Build a matrix or point set with given fiber partitions");
    construct->add_option("--alpha", opt.alpha, "Column-sum partition")->required();
    construct->add_option("--beta", opt.beta, "Row-sum partition")->required();
    construct->add_option("--emit", opt.emit, "What to print")
        ->check(CLI::IsMember({"points", "matrix"}));
    add_format(construct);

    CLI::App* partitions =
        app.add_subcommand("partitions", "Fiber partitions and conjugates (P^1 x P^1)");
    partitions->add_option("file", opt.file, "Point-set file")->required();
    add_format(partitions);

    CLI::App* separators = app.add_subcommand("separators", "Separator forms at a degree");
    separators->add_option("file", opt.file, "Point-set file")->required();
    separators->add_option("--degree", opt.degree, "Comma-separated multidegree")->required();
    add_format(separators);

    CLI::App* verify = app.add_subcommand("verify", "Check structural properties of the table");
    verify->add_option("file", opt.file, "Point-set file")->required();
    add_format(verify);

    std::vector<const char*> argv;
    argv.push_back("multiproj");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_parse;
    }

    try {
        if (hilbert->parsed())
            return cmd_hilbert(opt, out);
        if (border->parsed())
            return cmd_border(opt, out);
        if (classify->parsed())
            return cmd_classify(opt, out);
        if (construct->parsed())
            return cmd_construct(opt, out, err);
        if (partitions->parsed())
            return cmd_partitions(opt, out);
        if (separators->parsed())
            return cmd_separators(opt, out);
        if (verify->parsed())
            return cmd_verify(opt, out);
    } catch (const ArityError& e) {
        err << "error: " << e.what() << "\n";
        return exit_arity;
    } catch (const WrongAmbient& e) {
        err << "error: " << e.what() << "\n";
        return exit_ambient;
    } catch (const NotAProduct& e) {
        err << "error: " << e.what() << "\n";
        return exit_ambient;
    } catch (const NotSingleFactor& e) {
        err << "error: " << e.what() << "\n";
        return exit_ambient;
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_parse;
}

} // namespace multiproj::cli
