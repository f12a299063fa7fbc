#include "boxicity/cli.hpp"

#include "boxicity/boxes.hpp"
#include "boxicity/certificate.hpp"
#include "boxicity/cover.hpp"
#include "boxicity/families.hpp"
#include "boxicity/interval.hpp"
#include "boxicity/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace boxicity::cli {

namespace {
    struct InputOptions {
        std::string graph6;
        std::string file;
        std::string format = "graph6";
        std::string family;
        std::vector<int> params;
        std::uint64_t seed = 1;
    };

    struct InvalidInput : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    auto read_text(const std::string &path) -> std::string
    {
        if (path == "-") {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot read " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto read_json(const std::string &path) -> Json
    {
        try {
            return Json::parse(read_text(path));
        }
        catch (const Json::parse_error &e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    auto param(const InputOptions &in, std::size_t i) -> int
    {
        if (i >= in.params.size())
            throw InvalidInput("family '" + in.family + "' needs " + std::to_string(i + 1) + " parameter(s)");
        return in.params[i];
    }

    auto random_graph(int n, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto family_graph(const InputOptions &in) -> Graph
    {
        const auto &f = in.family;
        if (f == "matching")
            return matching(param(in, 0));
        if (f == "matching-complement")
            return complement(matching(param(in, 0)));
        if (f == "complete")
            return complete(param(in, 0));
        if (f == "cycle")
            return cycle(param(in, 0));
        if (f == "path")
            return path(param(in, 0));
        if (f == "octahedron")
            return octahedron();
        if (f == "line-of-complete")
            return line_of_complete(param(in, 0));
        if (f == "line-of-complete-complement")
            return complement(line_of_complete(param(in, 0)));
        if (f == "projective")
            return projective_incidence(param(in, 0));
        if (f == "random")
            return random_graph(param(in, 0), in.seed);
        throw InvalidInput("unknown family '" + f + "'");
    }

    auto load_graph(const InputOptions &in) -> Graph
    {
        int sources = (in.graph6.empty() ? 0 : 1) + (in.file.empty() ? 0 : 1) + (in.family.empty() ? 0 : 1);
        if (sources != 1)
            throw InvalidInput("give exactly one of --graph6, --file, --family");

        try {
            if (! in.graph6.empty())
                return parse_graph6(in.graph6);
            if (! in.file.empty()) {
                if (in.format == "graph6")
                    return parse_graph6(read_text(in.file));
                return graph_from_edge_list_json(read_json(in.file));
            }
            return family_graph(in);
        }
        catch (const std::invalid_argument &e) {
            throw InvalidInput(e.what());
        }
    }

    auto add_input_options(CLI::App *cmd, InputOptions &in) -> void
    {
        cmd->add_option("--graph6", in.graph6, "Input graph in graph6");
        cmd->add_option("--file", in.file, "Read the input graph from a file ('-' for stdin)");
        cmd->add_option("--format", in.format, "Input file format")->check(CLI::IsMember({"graph6", "edgelist-json"}));
        cmd->add_option("--family", in.family, "Named graph family");
        cmd->add_option("--param", in.params, "Family parameter(s)");
        cmd->add_option("--seed", in.seed, "Seed for the random family");
    }

    auto cover_to_boxes(const Certificate &cert) -> BoxRepresentation
    {
        if (cert.cover.cover_class == CoverClass::co_interval)
            return local_cover_to_boxes(cert.cover, cert.graph);
        auto plain = split_into_components(cert.cover);
        plain.cover_class = CoverClass::co_interval;
        return local_cover_to_boxes(plain, cert.graph);
    }
}

auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int
{
    CLI::App app{"Exact boxicity, local boxicity and union boxicity with certificates"};
    app.require_subcommand(1);

    std::string output_path;
    double budget_seconds = 60.0;
    std::string class_flag = "C";
    std::string certificate_path, boxes_path;
    InputOptions in;

    app.add_option("--output", output_path, "Write the JSON result to this file");

    auto add_budget = [&](CLI::App *cmd) {
        cmd->add_option("--time-budget-seconds", budget_seconds, "Search time budget")->check(CLI::PositiveNumber);
    };

    auto *box_cmd = app.add_subcommand("box", "Boxicity with certificate");
    auto *local_cmd = app.add_subcommand("localbox", "Local boxicity with certificate");
    auto *union_cmd = app.add_subcommand("unionbox", "Union boxicity with certificate");
    auto *boxf_cmd = app.add_subcommand("boxf", "Folded boxicity (1 or infinity)");
    auto *chia_cmd = app.add_subcommand("chia", "Acyclic chromatic number with colouring");
    auto *recognize_cmd = app.add_subcommand("recognize", "Interval / co-interval / chordal recognition");
    auto *gen_cmd = app.add_subcommand("gen", "Generate a named family in graph6");
    auto *verify_cmd = app.add_subcommand("verify", "Verify a certificate");
    auto *boxes_cmd = app.add_subcommand("boxes", "Convert a cover certificate to a box representation");
    auto *project_cmd = app.add_subcommand("project", "Convert a box representation to a cover certificate");

    for (auto *cmd : {box_cmd, local_cmd, union_cmd, boxf_cmd, chia_cmd, recognize_cmd, gen_cmd})
        add_input_options(cmd, in);
    for (auto *cmd : {box_cmd, local_cmd, union_cmd})
        add_budget(cmd);
    local_cmd->add_option("--class", class_flag, "Covering class")->check(CLI::IsMember({"C", "Cbar"}));
    verify_cmd->add_option("certificate", certificate_path, "Certificate JSON ('-' for stdin)")->required();
    boxes_cmd->add_option("certificate", certificate_path, "Certificate JSON ('-' for stdin)")->required();
    project_cmd->add_option("representation", boxes_path, "Box representation JSON ('-' for stdin)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    }
    catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return invalid_input;
    }

    Json result;
    int code = ok;
    auto options = SolveOptions{std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0))};

    try {
        auto solve_cmd = [&](Parameter p, auto solver) {
            auto g = load_graph(in);
            auto solution = solver(g, options);
            result = certificate_json(make_certificate(p, g, solution));
            result["exact"] = solution.exact;
            result["lower_bound"] = solution.lower_bound;
            if (! solution.exact) {
                err << "time budget exceeded; reporting bounds only\n";
                code = budget_exceeded;
            }
        };

        if (box_cmd->parsed())
            solve_cmd(Parameter::box, [](const Graph &g, const SolveOptions &o) { return boxicity(g, o); });
        else if (union_cmd->parsed())
            solve_cmd(Parameter::unionbox, [](const Graph &g, const SolveOptions &o) { return union_boxicity(g, o); });
        else if (local_cmd->parsed()) {
            if (class_flag == "C")
                solve_cmd(Parameter::localbox, [](const Graph &g, const SolveOptions &o) { return local_boxicity(g, o); });
            else
                solve_cmd(Parameter::localbox,
                    [](const Graph &g, const SolveOptions &o) { return local_boxicity_union_class(g, o); });
        }
        else if (boxf_cmd->parsed()) {
            auto value = box_f(load_graph(in));
            result = Json{{"value", value ? Json(*value) : Json("infinity")}};
        }
        else if (chia_cmd->parsed()) {
            auto g = load_graph(in);
            if (g.order() > acyclic_chromatic_vertex_limit) {
                err << "acyclic chromatic number is limited to " << acyclic_chromatic_vertex_limit << " vertices\n";
                result = Json{{"error", "size limit exceeded"}, {"n", g.order()}};
                code = budget_exceeded;
            }
            else
                result = acyclic_coloring_json(acyclic_chromatic_number(g));
        }
        else if (recognize_cmd->parsed()) {
            auto g = load_graph(in);
            result = Json{{"interval", is_interval(g)}, {"co_interval", is_co_interval(g)},
                {"union_co_interval", is_union_co_interval(g)}, {"chordal", is_chordal(g)}};
        }
        else if (gen_cmd->parsed()) {
            auto g = load_graph(in);
            result = Json{{"graph6", serialize_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
        }
        else if (verify_cmd->parsed()) {
            auto cert = certificate_from_json(read_json(certificate_path));
            try {
                auto stats = verify_certificate(cert);
                result = Json{{"valid", true}, {"stats", {{"t", stats.globality}, {"s", stats.locality}}}};
            }
            catch (const std::runtime_error &e) {
                err << "verification failed: " << e.what() << "\n";
                result = Json{{"valid", false}, {"error", e.what()}};
                code = verification_failed;
            }
        }
        else if (boxes_cmd->parsed()) {
            auto cert = certificate_from_json(read_json(certificate_path));
            try {
                verify_certificate(cert);
            }
            catch (const std::runtime_error &e) {
                err << "verification failed: " << e.what() << "\n";
                result = Json{{"valid", false}, {"error", e.what()}};
                code = verification_failed;
            }
            if (code == ok)
                result = box_representation_json(cover_to_boxes(cert));
        }
        else if (project_cmd->parsed()) {
            auto rep = box_representation_from_json(read_json(boxes_path));
            auto cover = boxes_to_cover(rep);
            auto stats = verify_cover(cover);
            Certificate cert{Parameter::localbox, stats.locality, complement(cover.host), cover, stats};
            result = certificate_json(cert);
        }
    }
    catch (const InvalidInput &e) {
        err << "invalid input: " << e.what() << "\n";
        return invalid_input;
    }
    catch (const FormatError &e) {
        err << "invalid input: " << e.what() << "\n";
        return invalid_input;
    }
    catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << "\n";
        return invalid_input;
    }
    catch (const CoverError &e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_failed;
    }

    if (output_path.empty())
        out << result.dump(2) << "\n";
    else {
        std::ofstream file(output_path);
        if (! file) {
            err << "cannot write " << output_path << "\n";
            return invalid_input;
        }
        file << result.dump(2) << "\n";
    }
    return code;
}

} // namespace boxicity::cli
