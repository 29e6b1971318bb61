#include "optic/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "optic/demos.hpp"
#include "optic/lawsuite.hpp"
#include "optic/path.hpp"

namespace optic::cli {

namespace {

Value read_document(const std::string& input_file, std::istream& in) {
    std::string text;
    if (!input_file.empty()) {
        std::ifstream file(input_file);
        if (!file) throw InputError("cannot open input file '" + input_file + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    } else {
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Value::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON document: ") + e.what());
    }
}

Value parse_json_argument(const std::string& text) {
    try {
        return Value::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON argument: ") + e.what());
    }
}

ValueFn named_map_fn(const std::string& name) {
    auto text_map = [](const char* what, char (*f)(char)) {
        std::string label = what;
        return [label, f](const Value& v) {
            std::string s = expect_text(v, label.c_str());
            for (char& c : s) c = f(c);
            return Value(s);
        };
    };
    if (name == "uppercase")
        return text_map("uppercase", [](char c) {
            return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        });
    if (name == "lowercase")
        return text_map("lowercase", [](char c) {
            return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        });
    if (name == "incr")
        return [](const Value& v) {
            if (v.is_number_integer()) return Value(v.get<std::int64_t>() + 1);
            return Value(expect_number(v, "incr") + 1.0);
        };
    if (name == "neg")
        return [](const Value& v) {
            if (v.is_number_integer()) return Value(-v.get<std::int64_t>());
            return Value(-expect_number(v, "neg"));
        };
    throw InputError("unknown function '" + name + "'");
}

Value fold_values(const std::string& name, const std::vector<Value>& xs) {
    if (name == "concat") {
        std::string out;
        for (const auto& x : xs) out += expect_text(x, "concat");
        return Value(out);
    }
    if (name == "sum") {
        double total = 0;
        for (const auto& x : xs) total += expect_number(x, "sum");
        return Value(total);
    }
    if (xs.empty()) throw DocTypeError(name + " of an empty focus list");
    if (name == "mean") {
        double total = 0;
        for (const auto& x : xs) total += expect_number(x, "mean");
        return Value(total / static_cast<double>(xs.size()));
    }
    if (name == "max" || name == "min") {
        double best = expect_number(xs[0], name.c_str());
        for (const auto& x : xs) {
            double v = expect_number(x, name.c_str());
            best = name == "max" ? std::max(best, v) : std::min(best, v);
        }
        return Value(best);
    }
    throw InputError("unknown fold '" + name + "'");
}

finlab::Sizes parse_sizes(const std::string& text) {
    finlab::Sizes sz;
    std::array<std::size_t*, 4> slots{&sz.s, &sz.t, &sz.a, &sz.b};
    std::stringstream ss(text);
    std::string cell;
    for (auto* slot : slots) {
        if (!std::getline(ss, cell, ','))
            throw InputError("--sizes wants four comma-separated sizes");
        try {
            long v = std::stol(cell);
            if (v < 1) throw std::out_of_range("size");
            *slot = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw InputError("bad size '" + cell + "' in --sizes");
        }
    }
    if (std::getline(ss, cell, ',')) throw InputError("--sizes wants exactly four sizes");
    return sz;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"bidirectional accessors over JSON documents"};
    app.require_subcommand(1);

    std::string path_expr;
    std::string input_file;
    std::string json_arg;
    std::string fn_name;
    std::string demo_name;
    std::string data_file = "data/iris.csv";
    std::string agg_name = "mean";
    std::string sizes_text = "2,2,2,2";
    std::uint64_t seed = 42;

    auto add_doc_command = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("path", path_expr, "path expression")->required();
        cmd->add_option("--input", input_file, "read the document from this file");
        return cmd;
    };

    auto* cmd_get = add_doc_command("get", "print the single focus of a lens-like path");
    auto* cmd_preview = add_doc_command("preview", "print the focus or null when nothing matches");
    auto* cmd_list = add_doc_command("list", "print every focus as a JSON array");
    auto* cmd_set = add_doc_command("set", "replace every focus with a JSON value");
    cmd_set->add_option("value", json_arg, "replacement (JSON)")->required();
    auto* cmd_over = add_doc_command("over", "map a named function over every focus");
    cmd_over->add_option("fn", fn_name, "uppercase|lowercase|incr|neg")
        ->required()
        ->check(CLI::IsMember({"uppercase", "lowercase", "incr", "neg"}));
    auto* cmd_agg = add_doc_command("agg", "fold the focus list to a single value");
    cmd_agg->add_option("fn", fn_name, "sum|mean|max|min|concat")
        ->required()
        ->check(CLI::IsMember({"sum", "mean", "max", "min", "concat"}));

    auto* cmd_kind = app.add_subcommand("kind", "print the inferred optic kind of a path");
    cmd_kind->add_option("path", path_expr, "path expression")->required();

    auto* cmd_laws = app.add_subcommand("laws", "run the finite-set and container law suites");
    cmd_laws->add_option("--seed", seed, "seed for the randomized sweeps");
    cmd_laws->add_option("--sizes", sizes_text, "sizes s,t,a,b for the section sweeps")
        ->check([](const std::string& text) -> std::string {
            try {
                parse_sizes(text);
                return "";
            } catch (const Error& e) {
                return e.what();
            }
        });

    auto* cmd_demo = app.add_subcommand("demo", "run a named demo (address, mail, iris)");
    cmd_demo->add_option("name", demo_name, "address|mail|iris")
        ->required()
        ->check(CLI::IsMember({"address", "mail", "iris"}));
    cmd_demo->add_option("--agg", agg_name, "iris fold: mean|max")
        ->check(CLI::IsMember({"mean", "max"}));
    cmd_demo->add_option("--data", data_file, "iris dataset path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitPathError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitPathError;
    }

    try {
        if (cmd_kind->parsed()) {
            out << kind_name(path::infer_kind(path::parse(path_expr))) << "\n";
            return kExitOk;
        }
        if (cmd_laws->parsed()) {
            auto report = lawsuite::run_finlab_suites(seed, parse_sizes(sizes_text));
            auto containers = lawsuite::run_container_suites();
            report.suites.insert(report.suites.end(), containers.suites.begin(),
                                 containers.suites.end());
            report.print(out);
            return report.all_passed() ? kExitOk : kExitNoMatch;
        }
        if (cmd_demo->parsed()) {
            if (demo_name == "address") {
                out << demos::address_demo();
            } else if (demo_name == "mail") {
                out << demos::mail_demo();
            } else {
                auto rows = flowers::load_iris_csv(data_file);
                out << demos::iris_demo(rows, agg_name == "mean" ? demos::IrisAgg::Mean
                                                                 : demos::IrisAgg::Max);
            }
            return kExitOk;
        }

        DynOptic optic = path::compile(path::parse(path_expr));
        Value doc = read_document(input_file, in);

        if (cmd_get->parsed()) {
            out << dyn_get(optic, doc).dump() << "\n";
            return kExitOk;
        }
        if (cmd_preview->parsed()) {
            auto focus = dyn_preview(optic, doc);
            out << (focus ? focus->dump() : "null") << "\n";
            return focus ? kExitOk : kExitNoMatch;
        }
        if (cmd_list->parsed()) {
            out << Value(dyn_to_list(optic, doc)).dump() << "\n";
            return kExitOk;
        }
        if (cmd_set->parsed()) {
            out << dyn_set(optic, doc, parse_json_argument(json_arg)).dump() << "\n";
            return kExitOk;
        }
        if (cmd_over->parsed()) {
            out << dyn_over(optic, named_map_fn(fn_name), doc).dump() << "\n";
            return kExitOk;
        }
        if (cmd_agg->parsed()) {
            out << fold_values(fn_name, dyn_to_list(optic, doc)).dump() << "\n";
            return kExitOk;
        }
        err << "no subcommand selected\n";
        return kExitPathError;
    } catch (const LexError& e) {
        err << "path error: " << e.what() << "\n";
        return kExitPathError;
    } catch (const ParseError& e) {
        err << "path error: " << e.what() << "\n";
        return kExitPathError;
    } catch (const NoPathError& e) {
        // The path is well-formed but its kind cannot support the
        // requested observation; report it with the path errors.
        err << "path error: " << e.what() << "\n";
        return kExitPathError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "type error: " << e.what() << "\n";
        return kExitTypeError;
    }
}

} // namespace optic::cli
