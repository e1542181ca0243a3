#include "volrig/cli.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <CLI11.hpp>

#include "volrig/json_io.hpp"

namespace volrig::cli {

namespace {

json read_json(const std::string& path, std::istream& fallback) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << fallback.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError(path + ": cannot open");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError((path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " +
                         e.what());
    }
}

void write_json(const json& j, const std::string& out_path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError(out_path + ": cannot open for writing");
        f << text;
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct CommonOpts {
    std::string input;
    std::string output;
    std::uint64_t seed = 1;
    int trials = 3;
    std::string field = "prime";
    std::uint64_t prime = 0;

    void apply_prime() const {
        if (prime != 0) Fp::set_modulus(prime);
    }
    FieldKind kind() const { return field_kind_from_name(field); }
};

void add_io(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "input JSON file ('-' or absent: stdin)");
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
}

void add_random(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "random seed (trial i derives seed+i)");
    cmd->add_option("--trials", o.trials, "number of sampling trials");
    cmd->add_option("--field", o.field, "certification field: rational or prime")
        ->check(CLI::IsMember({"rational", "prime"}));
    cmd->add_option("--prime", o.prime, "override the prime modulus");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"volrig: exact volume rigidity certification for hypergraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate hypergraphs and complexes");
    gen->require_subcommand(1);
    CommonOpts gen_complete_o;
    int gen_n = 0, gen_k = 0;
    auto* gen_complete = gen->add_subcommand("complete", "complete k-uniform hypergraph K_n^k");
    gen_complete->add_option("--n", gen_n, "number of vertices")->required();
    gen_complete->add_option("--k", gen_k, "hyperedge size")->required();
    gen_complete->add_option("-o,--output", gen_complete_o.output, "output file");

    CommonOpts gen_preset_o;
    std::string preset_name;
    int preset_dim = 0;
    auto* gen_preset = gen->add_subcommand("preset", "named simplicial complex");
    gen_preset
        ->add_option("--name", preset_name,
                     "simplex-boundary | cross-polytope | octahedron | sixteen-cell | bipyramid | "
                     "icosahedron")
        ->required();
    gen_preset->add_option("--dim", preset_dim, "dimension for parametric presets");
    gen_preset->add_option("-o,--output", gen_preset_o.output, "output file");

    // skeleton
    CommonOpts skel_o;
    int skel_k = 0;
    auto* skel = app.add_subcommand("skeleton", "k-skeleton hypergraph of a complex");
    add_io(skel, skel_o);
    skel->add_option("--k", skel_k, "face dimension k")->required();

    // cone
    CommonOpts cone_o;
    std::string cone_vertices;
    auto* conecmd = app.add_subcommand("cone", "simplicial cone S*Z with fresh vertices Z");
    add_io(conecmd, cone_o);
    conecmd->add_option("--vertices", cone_vertices, "comma-separated fresh vertices")->required();

    // contract
    CommonOpts contract_o;
    std::string contract_u, contract_v;
    auto* contractcmd =
        app.add_subcommand("contract", "contract u onto v (hypergraph or complex input)");
    add_io(contractcmd, contract_o);
    contractcmd->add_option("-u", contract_u, "vertex to contract away")->required();
    contractcmd->add_option("-v", contract_v, "vertex to contract onto")->required();

    // rank
    CommonOpts rank_o;
    auto* rankcmd = app.add_subcommand("rank", "exact rank of a serialized matrix");
    add_io(rankcmd, rank_o);

    // rigid
    CommonOpts rigid_o;
    int rigid_dim = 0;
    auto* rigidcmd = app.add_subcommand("rigid", "randomized volume rigidity certification");
    add_io(rigidcmd, rigid_o);
    rigidcmd->add_option("--dim", rigid_dim, "ambient dimension d")->required();
    add_random(rigidcmd, rigid_o);

    // dof
    CommonOpts dof_o;
    int dof_dim = 0;
    auto* dofcmd = app.add_subcommand("dof", "degrees of freedom at a sampled realisation");
    add_io(dofcmd, dof_o);
    dofcmd->add_option("--dim", dof_dim, "ambient dimension d")->required();
    add_random(dofcmd, dof_o);

    // split-check
    CommonOpts split_o;
    int split_dim = 0;
    std::string split_u, split_v;
    bool split_certify_flag = false;
    auto* splitcmd = app.add_subcommand("split-check", "vertex-splitting matrix condition");
    add_io(splitcmd, split_o);
    splitcmd->add_option("-u", split_u, "split vertex u")->required();
    splitcmd->add_option("-v", split_v, "split vertex v")->required();
    splitcmd->add_option("--dim", split_dim, "ambient dimension d")->required();
    splitcmd->add_flag("--certify", split_certify_flag,
                       "also require H/uv rigid (full inductive step)");
    add_random(splitcmd, split_o);

    // cone-check
    CommonOpts conechk_o;
    int conechk_dim = 0, conechk_target = -1;
    auto* conechkcmd = app.add_subcommand("cone-check", "coning coefficient matrix rank condition");
    add_io(conechkcmd, conechk_o);
    conechkcmd->add_option("--dim", conechk_dim, "ambient dimension d")->required();
    conechkcmd->add_option("--target", conechk_target, "target rank (default |V|)");
    add_random(conechkcmd, conechk_o);

    // glue-plan
    CommonOpts glue_o;
    int glue_dim = 0;
    std::string glue_parts;
    auto* gluecmd = app.add_subcommand("glue-plan", "gluing plan over a part decomposition");
    add_io(gluecmd, glue_o);
    gluecmd->add_option("--parts", glue_parts, "JSON file with an array of part hypergraphs")
        ->required();
    gluecmd->add_option("--dim", glue_dim, "ambient dimension d")->required();

    // verify-paper
    CommonOpts paper_o;
    std::string paper_case = "all";
    paper_o.seed = kPaperSeed;
    auto* papercmd = app.add_subcommand("verify-paper", "reproduction suite");
    papercmd->add_option("--case", paper_case, "case id a..h, or 'all'");
    papercmd->add_option("--seed", paper_o.seed, "random seed");
    papercmd->add_option("--prime", paper_o.prime, "override the prime modulus");
    papercmd->add_option("-o,--output", paper_o.output, "output file");

    std::vector<const char*> argv;
    argv.push_back("volrig");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (gen_complete->parsed()) {
            write_json(to_json(Hypergraph::complete_uniform(gen_n, gen_k)), gen_complete_o.output, out);
            return 0;
        }
        if (gen_preset->parsed()) {
            write_json(to_json(SimplicialComplex::preset(preset_name, preset_dim)),
                       gen_preset_o.output, out);
            return 0;
        }
        if (skel->parsed()) {
            const SimplicialComplex s = complex_from_json(read_json(skel_o.input, in));
            write_json(to_json(s.skeleton(skel_k)), skel_o.output, out);
            return 0;
        }
        if (conecmd->parsed()) {
            const SimplicialComplex s = complex_from_json(read_json(cone_o.input, in));
            write_json(to_json(s.cone(split_commas(cone_vertices))), cone_o.output, out);
            return 0;
        }
        if (contractcmd->parsed()) {
            const json j = read_json(contract_o.input, in);
            if (j.is_object() && j.contains("facets")) {
                const SimplicialComplex s = complex_from_json(j);
                write_json(to_json(s.contract(contract_u, contract_v)), contract_o.output, out);
            } else {
                const Hypergraph h = hypergraph_from_json(j);
                write_json(to_json(h.contract(contract_u, contract_v)), contract_o.output, out);
            }
            return 0;
        }
        if (rankcmd->parsed()) {
            const json j = read_json(rank_o.input, in);
            RankCertificate cert;
            if (matrix_json_is_prime(j))
                cert = rank_of(matrix_prime_from_json(j));
            else
                cert = rank_of(matrix_rational_from_json(j));
            write_json(to_json(cert), rank_o.output, out);
            return 0;
        }
        if (rigidcmd->parsed()) {
            rigid_o.apply_prime();
            const Hypergraph h = hypergraph_from_json(read_json(rigid_o.input, in));
            const RigidityReport rep =
                rigidity_report(h, rigid_dim, rigid_o.trials, rigid_o.seed, rigid_o.kind());
            write_json(to_json(rep), rigid_o.output, out);
            return rep.rigid() ? 0 : 1;
        }
        if (dofcmd->parsed()) {
            dof_o.apply_prime();
            const Hypergraph h = hypergraph_from_json(read_json(dof_o.input, in));
            const RigidityReport rep =
                rigidity_report(h, dof_dim, dof_o.trials, dof_o.seed, dof_o.kind());
            write_json(to_json(rep), dof_o.output, out);
            return 0;
        }
        if (splitcmd->parsed()) {
            split_o.apply_prime();
            const Hypergraph h = hypergraph_from_json(read_json(split_o.input, in));
            SplitCheckResult res;
            if (split_o.kind() == FieldKind::rational)
                res = split_certify_flag
                          ? split_certify<Rational>(h, split_u, split_v, split_dim, split_o.trials, split_o.seed)
                          : split_check<Rational>(h, split_u, split_v, split_dim, split_o.trials, split_o.seed);
            else
                res = split_certify_flag
                          ? split_certify<Fp>(h, split_u, split_v, split_dim, split_o.trials, split_o.seed)
                          : split_check<Fp>(h, split_u, split_v, split_dim, split_o.trials, split_o.seed);
            json j = to_json(res);
            if (split_certify_flag) {
                j["contraction_rigid"] = res.contraction_rigid;
                j["certified"] = res.certified;
            }
            write_json(j, split_o.output, out);
            return (split_certify_flag ? res.certified : res.ok) ? 0 : 1;
        }
        if (conechkcmd->parsed()) {
            conechk_o.apply_prime();
            const Hypergraph h = hypergraph_from_json(read_json(conechk_o.input, in));
            const ConingCheckResult res =
                conechk_o.kind() == FieldKind::rational
                    ? coning_rank_check<Rational>(h, conechk_dim, conechk_o.trials, conechk_o.seed, conechk_target)
                    : coning_rank_check<Fp>(h, conechk_dim, conechk_o.trials, conechk_o.seed, conechk_target);
            write_json(to_json(res), conechk_o.output, out);
            return res.ok ? 0 : 1;
        }
        if (gluecmd->parsed()) {
            const Hypergraph h = hypergraph_from_json(read_json(glue_o.input, in));
            const json pj = read_json(glue_parts, in);
            if (!pj.is_array()) throw ParseError(glue_parts + ": expected an array of hypergraphs");
            std::vector<Hypergraph> parts;
            for (const auto& pe : pj) parts.push_back(hypergraph_from_json(pe));
            const bool ok = glue_plan(h, parts, glue_dim);
            json j;
            j["pass"] = ok;
            j["dim"] = glue_dim;
            j["parts"] = parts.size();
            write_json(j, glue_o.output, out);
            return ok ? 0 : 1;
        }
        if (papercmd->parsed()) {
            paper_o.apply_prime();
            bool all_pass = true;
            json cases = json::array();
            if (paper_case == "all") {
                for (const std::string& id : paper_case_ids()) {
                    const PaperCaseReport rep = verify_paper(id, paper_o.seed);
                    all_pass = all_pass && rep.pass;
                    cases.push_back(to_json(rep));
                }
            } else {
                const PaperCaseReport rep = verify_paper(paper_case, paper_o.seed);
                all_pass = rep.pass;
                cases.push_back(to_json(rep));
            }
            json j;
            j["pass"] = all_pass;
            j["seed"] = paper_o.seed;
            j["cases"] = std::move(cases);
            write_json(j, paper_o.output, out);
            return all_pass ? 0 : 1;
        }
        err << "error: no command dispatched\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        err << "degeneracy error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace volrig::cli
