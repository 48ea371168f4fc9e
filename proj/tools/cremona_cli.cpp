// Command-line front end for the cremona library.
//
// Exit status: 0 on success, 1 on a domain error, 2 on a parse or usage error.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cremona/cremona.hpp"

namespace {

using cremona::io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// An argument is either inline text or the path of a file holding it.
std::string resolve(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return trim(cremona::io::read_file(arg));
    return arg;
}

int int_arg(const std::string& arg) {
    int v = 0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (ec != std::errc{} || end != arg.data() + arg.size()) throw UsageError("expected an integer, got \"" + arg + "\"");
    return v;
}

cremona::RationalMap map_arg(const std::string& arg) { return cremona::parse_map(resolve(arg)); }

cremona::Word word_arg(const std::string& arg) {
    return cremona::io::word_from_json(cremona::io::parse_json(resolve(arg)));
}

cremona::CharVector charvec_arg(const std::string& arg) {
    const std::string text = resolve(arg);
    if (!text.empty() && text.front() == '{') return cremona::io::charvec_from_json(cremona::io::parse_json(text));
    return cremona::io::charvec_from_compact(text);
}

Json map_json(const cremona::RationalMap& f) { return {{"degree", f.degree()}, {"map", cremona::to_string(f)}}; }

void print_text(const Json& j, std::ostream& out) {
    if (!j.is_object()) {
        out << j.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        out << key << ": ";
        if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane Cremona transformations: maps, base points, homaloidal types and sigma-word decompositions."};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::uint64_t seed = 0;
    int max_steps = 0;
    app.add_flag("--json", json, "Print a JSON report");
    app.add_option("--seed", seed, "Seed for randomized choices (default 0)");
    app.add_option("--max-steps", max_steps, "Step limit for decompositions (default 64 * degree)")->check(CLI::PositiveNumber);

    std::function<Json()> action;
    std::vector<std::string> args;

    const auto verb = [&](const std::string& name, const std::string& help, std::size_t arity, const std::string& arg_help,
                          std::function<Json()> body) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("inputs", args, arg_help)->required()->expected(static_cast<int>(arity));
        sub->callback([&action, body = std::move(body)] { action = body; });
    };

    verb("info", "Degree, components, Jacobian and base points of a map", 1, "MAP", [&] {
        const auto f = map_arg(args[0]);
        Json out = map_json(f);
        out["jacobian"] = cremona::to_string(cremona::jacobian(f));
        const auto rep = cremona::rational_proper_base_points(f);
        out["base_points"] = cremona::io::to_json(rep);
        if (f.degree() == 2) out["orbit"] = std::string(cremona::orbit_name(cremona::classify_quadratic(f)));
        return out;
    });
    {
        CLI::App* sub = app.add_subcommand("compose", "Compose maps, the rightmost applied first");
        sub->add_option("maps", args, "MAP MAP [MAP...]")->required();
        sub->callback([&] {
            action = [&] {
                if (args.size() < 2) throw UsageError("compose needs at least two maps");
                auto acc = map_arg(args.back());
                for (auto it = args.rbegin() + 1; it != args.rend(); ++it) acc = cremona::compose(map_arg(*it), acc);
                return map_json(acc);
            };
        });
    }
    verb("classify", "Orbit of a quadratic birational map", 1, "MAP", [&] {
        const auto f = map_arg(args[0]);
        return Json{{"orbit", std::string(cremona::orbit_name(cremona::classify_quadratic(f)))}};
    });
    verb("basepoints", "Rational proper base points with multiplicities", 1, "MAP",
         [&] { return cremona::io::to_json(cremona::rational_proper_base_points(map_arg(args[0]))); });
    verb("charvec", "Characteristic vector over the rational proper base points", 1, "MAP",
         [&] { return cremona::io::to_json(cremona::char_vector_partial(map_arg(args[0]))); });
    verb("noether", "Check the Noether equations and the degree bounds", 1, "CHARVEC", [&] {
        const auto cv = charvec_arg(args[0]);
        Json out{{"noether", cremona::noether_check(cv)}};
        if (cv.degree() >= 2) out["bounds"] = cremona::io::to_json(cremona::check_bounds(cv));
        return out;
    });
    verb("bounds", "Lower and upper sigma bounds for degree d", 1, "D",
         [&] { return cremona::io::to_json(cremona::bounds(int_arg(args[0]))); });
    verb("enumerate", "All multiplicity multisets solving the Noether equations", 1, "D", [&] {
        const int d = int_arg(args[0]);
        return Json{{"d", d}, {"types", cremona::enumerate_homaloidal(d)}};
    });
    verb("jh", "The (2j, h) statistics of a homaloidal type", 1, "CHARVEC", [&] {
        const auto cv = charvec_arg(args[0]);
        Json out = cremona::io::to_json(cremona::jh(cv));
        out["jonquieres"] = cremona::is_jonquieres(cv);
        return out;
    });
    verb("descent", "Combinatorial descent to degree one", 1, "CHARVEC",
         [&] { return cremona::io::to_json(cremona::descent(charvec_arg(args[0]))); });
    verb("decompose", "Greedy word in linear maps and sigma for a map", 1, "MAP", [&] {
        const auto f = map_arg(args[0]);
        std::optional<int> limit;
        if (max_steps > 0) limit = max_steps;
        return cremona::io::to_json(cremona::report_for(cremona::decompose_greedy(f, seed, limit), f));
    });
    verb("decompose-aut", "Word for a polynomial automorphism via its Jung factors", 1, "AUT", [&] {
        const auto F = cremona::parse_polyaut(resolve(args[0]));
        return cremona::io::to_json(cremona::report_for(cremona::decompose_polyaut(F), cremona::homogenize(F)));
    });
    verb("jung", "Affine and elementary factors of a polynomial automorphism", 1, "AUT", [&] {
        const auto F = cremona::parse_polyaut(resolve(args[0]));
        return Json{{"factors", cremona::io::to_json(cremona::jung_factorize(F))}, {"map", cremona::to_string(F.map())}};
    });
    verb("verify-word", "Check that a word evaluates to a map", 2, "WORD MAP",
         [&] { return cremona::io::to_json(cremona::verify_word(word_arg(args[0]), map_arg(args[1]))); });
    verb("lamy-trace", "Base-point count through the Jung-Lamy construction", 2, "N BASE_COUNT",
         [&] { return cremona::io::to_json(cremona::lamy_trace(int_arg(args[0]), int_arg(args[1]))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto fail = [&](int status, const std::string& name, const std::string& message) {
        if (json) {
            std::cout << Json{{"error", name}, {"message", message}}.dump() << '\n';
        } else {
            std::cerr << "error: " << (message.rfind(name, 0) == 0 ? message : name + ": " + message) << '\n';
        }
        return status;
    };
    try {
        const Json out = action();
        if (json) {
            std::cout << out.dump() << '\n';
        } else {
            print_text(out, std::cout);
        }
        return 0;
    } catch (const cremona::ParseError& e) {
        return fail(2, std::string(cremona::error_name(e.code())), e.what());
    } catch (const cremona::Error& e) {
        return fail(1, std::string(cremona::error_name(e.code())), e.what());
    } catch (const UsageError& e) {
        return fail(2, "USAGE", e.what());
    }
}
