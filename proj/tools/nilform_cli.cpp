// Command-line front end; talks to the engine through the C API only.
#include <CLI11.hpp>
#include <json.hpp>
#include <nilform.h>

#include <fstream>
#include <iostream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::exception& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(2);
    }
}

void print_kv(const std::string& key, const Json& v, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        std::cout << pad << key << ":\n";
        for (const auto& [k, x] : v.items()) print_kv(k, x, indent + 2);
    } else if (v.is_array()) {
        std::cout << pad << key << ":\n";
        for (const auto& x : v) {
            if (x.is_object()) {
                std::cout << pad << "  -\n";
                for (const auto& [k, y] : x.items()) print_kv(k, y, indent + 4);
            } else {
                std::cout << pad << "  - " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            }
        }
    } else if (v.is_string()) {
        std::cout << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
        std::cout << pad << key << ": " << v.dump() << "\n";
    }
}

void render_text(const Json& response) {
    for (const auto& [k, v] : response.items()) {
        if (k == "command") continue;
        print_kv(k, v);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilform: exact invariant-form calculus on nilmanifolds with complex structures"};
    app.require_subcommand(1);

    std::string algebra_path, metric_path, curve_path, phi_path, form_path, omega_prime_path;
    std::string mode = "astheno", format = "text", at;
    int p = -1, q = -1;
    std::vector<std::string> sets;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra_path, "algebra file (JSON)")->required();
        cmd->add_option("--set", sets, "parameter substitution name=value (repeatable)");
        cmd->add_option("--format", format, "output format: text|json");
        return cmd;
    };

    auto* v = add_common(app.add_subcommand("validate", "check d^2 = 0, nilpotency, paper-mode constants"));
    auto* cl = add_common(app.add_subcommand("classify", "abelian / holomorphically parallelizable / nilpotent coframe / torus"));
    auto* mc = add_common(app.add_subcommand("metric-check", "special-metric residual and conditions"));
    mc->add_option("--metric", metric_path, "metric file (default diagonal)");
    mc->add_option("--mode", mode, "astheno|skt|balanced|kahler");
    auto* ig = add_common(app.add_subcommand("integrability", "(0,2) residuals of the deformed coframe"));
    ig->add_option("--phi", phi_path, "vector-form family file");
    ig->add_option("--curve", curve_path, "curve file");
    auto* bc = add_common(app.add_subcommand("bc", "invariant Bott-Chern cohomology space"));
    bc->add_option("--p", p, "holomorphic degree")->required();
    bc->add_option("--q", q, "antiholomorphic degree")->required();
    auto* bcc = add_common(app.add_subcommand("bc-class", "class verdict for a d-closed form"));
    bcc->add_option("--form", form_path, "form file")->required();
    auto* ha = add_common(app.add_subcommand("harmonic", "Bott-Chern harmonicity for the diagonal metric"));
    ha->add_option("--form", form_path, "form file")->required();
    ha->add_option("--metric", metric_path, "metric file (default diagonal)");
    auto* ob = add_common(app.add_subcommand("obstruct", "obstruction form and verdicts along a curve"));
    ob->add_option("--metric", metric_path, "metric file (default diagonal)");
    ob->add_option("--curve", curve_path, "curve file (phi'(0) taken at t=0)");
    ob->add_option("--phi", phi_path, "phi'(0) given directly");
    auto* tc = add_common(app.add_subcommand("theorem-check", "solvability of del delbar X = 2i Im Theta"));
    tc->add_option("--metric", metric_path, "metric file (default diagonal)");
    tc->add_option("--curve", curve_path, "curve file");
    tc->add_option("--phi", phi_path, "phi'(0) given directly");
    tc->add_option("--omega-prime", omega_prime_path, "candidate (n-2,n-2) form file");
    auto* jc = add_common(app.add_subcommand("jet-check", "first-order consistency of the deformed operators"));
    jc->add_option("--metric", metric_path, "metric file (default diagonal)");
    jc->add_option("--curve", curve_path, "curve file")->required();
    jc->add_option("--omega-prime", omega_prime_path, "omega' file (default 0)");
    auto* pb = add_common(app.add_subcommand("pullback", "structure equations of (M, J_t) at a point"));
    pb->add_option("--curve", curve_path, "curve file")->required();
    pb->add_option("--at", at, "curve parameter value t0 (real rational)")->required();

    // argument errors share the parse-error exit code
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command;
    for (auto* cmd : {v, cl, mc, ig, bc, bcc, ha, ob, tc, jc, pb}) {
        if (cmd->parsed()) command = cmd->get_name();
    }

    Json request;
    request["command"] = command;
    request["algebra"] = read_json_file(algebra_path);
    if (!metric_path.empty()) request["metric"] = read_json_file(metric_path);
    if (!curve_path.empty()) request["curve"] = read_json_file(curve_path);
    if (!phi_path.empty()) request["phi"] = read_json_file(phi_path);
    if (!form_path.empty()) request["form"] = read_json_file(form_path);
    if (!omega_prime_path.empty()) request["omega_prime"] = read_json_file(omega_prime_path);
    if (mc->parsed()) request["mode"] = mode;
    if (bc->parsed()) {
        request["p"] = p;
        request["q"] = q;
    }
    if (pb->parsed()) request["at"] = at;
    if (!sets.empty()) {
        Json subs = Json::object();
        for (const auto& s : sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --set expects name=value, got '" << s << "'\n";
                return 2;
            }
            subs[s.substr(0, eq)] = s.substr(eq + 1);
        }
        request["subs"] = subs;
    }

    char* response_text = nullptr;
    nf_session* session = nf_session_new();
    int status = nf_run(session, request.dump().c_str(), &response_text);
    Json response = Json::parse(response_text ? response_text : "{}");
    nf_free(response_text);
    nf_session_free(session);

    if (format == "json") {
        std::cout << response.dump(2) << "\n";
    } else {
        render_text(response);
    }
    return status;
}
