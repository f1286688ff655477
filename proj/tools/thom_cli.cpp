// Command-line front end: homology tables and theorem reports for pointed
// sets over free partially commutative monoids.
//
// Exit codes: 0 success; 1 an asserted verification failed; 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thom/thom.hpp"

namespace fs = std::filesystem;
using namespace thom;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::syntax_error, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(errc::syntax_error, "cannot write file '" + out_path + "'");
    out << text;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

void print_groups(const std::vector<FinAbGroup>& groups, const std::string& format,
                  const std::string& prefix) {
    for (size_t k = 0; k < groups.size(); ++k) {
        if (format == "machine")
            std::cout << "deg=" << k << " group=" << render(groups[k]) << "\n";
        else
            std::cout << prefix << "_" << k << " = " << render(groups[k]) << "\n";
    }
}

struct HomologyInputs {
    std::string alphabet_file, action_file, format = "text", variant = "unreduced";
    int chain_n = 0;
    bool have_chain = false;
    int max_dim = -1;

    PointedAction load_action(IndependenceAlphabet& alpha) const {
        alpha = parse_alphabet(read_file(alphabet_file));
        if (have_chain) return chain_set(alpha, chain_n);
        if (action_file.empty()) fail(errc::syntax_error, "need either --action or --chain");
        return parse_action(read_file(action_file), alpha);
    }
    Variant parsed_variant() const {
        return variant == "reduced" ? Variant::reduced : Variant::unreduced;
    }
};

void add_homology_inputs(CLI::App* cmd, HomologyInputs& in, bool with_variant = true) {
    cmd->add_option("--alphabet", in.alphabet_file, "alphabet file")->required();
    auto* act = cmd->add_option("--action", in.action_file, "pointed action file");
    auto* chn = cmd->add_option_function<int>(
        "--chain",
        [&in](int n) {
            in.chain_n = n;
            in.have_chain = true;
        },
        "use the chain set X_n (n >= -1)");
    act->excludes(chn);
    chn->excludes(act);
    if (with_variant)
        cmd->add_option("--variant", in.variant, "unreduced|reduced")
            ->check(CLI::IsMember({"unreduced", "reduced"}));
}

int run_verify(const std::string& which, const std::string& format,
               const std::vector<TheoremReport>& reports) {
    bool all_pass = true;
    for (const auto& rep : reports) {
        std::cout << (format == "machine" ? render_machine(rep) : render_text(rep));
        if (rep.asserted) all_pass = all_pass && rep.pass;
    }
    (void)which;
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer homology of pointed sets over free partially commutative monoids"};
    app.require_subcommand(1);

    // homology
    HomologyInputs hom_in;
    auto* hom = app.add_subcommand("homology", "homology groups of a pointed M(E,I)-set");
    add_homology_inputs(hom, hom_in);
    hom->add_option("--max-dim", hom_in.max_dim, "highest degree to print (default: max clique size)");
    hom->add_option("--format", hom_in.format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    // clique-homology
    std::string ch_alpha, ch_format = "text";
    int ch_maxdim = -1;
    auto* cliq = app.add_subcommand("clique-homology", "reduced homology of the clique complex (E,M)");
    cliq->add_option("--alphabet", ch_alpha, "alphabet file")->required();
    cliq->add_option("--max-dim", ch_maxdim, "highest degree to print");
    cliq->add_option("--format", ch_format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    // verify
    std::string v_which, v_alpha, v_name, v_format = "text", v_battery;
    std::vector<std::string> v_components;
    int v_m = -1, v_kmax = -1, v_mmax = 3, v_n = 0;
    auto* ver = app.add_subcommand("verify", "check a decomposition statement on an instance");
    ver->add_option("statement", v_which, "thm1|thm2|thm3|corollary")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "corollary"}));
    ver->add_option("--alphabet", v_alpha, "alphabet file (thm1/thm2/corollary)");
    ver->add_option("--name", v_name, "instance name for the report (default: file stem)");
    ver->add_option("--battery", v_battery, "battery manifest: run the standard grid over it");
    ver->add_option("--component", v_components, "component alphabet file (thm3; repeatable)");
    ver->add_option("--m", v_m, "chain index m (thm1/corollary; default -1)");
    ver->add_option("--mmax", v_mmax, "largest m (thm2; default 3)");
    ver->add_option("--n", v_n, "chain index n (thm3; default 0)");
    ver->add_option("--kmax", v_kmax,
                    "largest homology degree (default: max clique size + 1, or 3 with --battery)");
    ver->add_option("--format", v_format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    // subdivide
    std::string sd_complex, sd_out;
    auto* sub = app.add_subcommand("subdivide", "barycentric subdivision of a complex file");
    sub->add_option("--complex", sd_complex, "complex file")->required();
    sub->add_option("--out", sd_out, "output file (default: stdout)");

    // example
    std::string ex_name, ex_out;
    auto* exa = app.add_subcommand("example", "write a builtin complex");
    exa->add_option("name", ex_name, "delta2|hollow_triangle|cycle4|two_points|rp2_min")->required();
    exa->add_option("--out", ex_out, "output file (default: stdout)");

    // dd-check
    HomologyInputs dd_in;
    bool dd_dump = false;
    auto* ddc = app.add_subcommand("dd-check", "check the differential identity d.d = 0");
    add_homology_inputs(ddc, dd_in);
    ddc->add_flag("--dump", dd_dump, "dump the boundary matrices first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are input errors
    }

    try {
        if (*hom) {
            IndependenceAlphabet alpha;
            PointedAction action = hom_in.load_action(alpha);
            int kmax = hom_in.max_dim >= 0 ? hom_in.max_dim : max_clique_size(alpha);
            print_groups(action_homology(action, kmax, hom_in.parsed_variant()), hom_in.format, "H");
            return 0;
        }
        if (*cliq) {
            IndependenceAlphabet alpha = parse_alphabet(read_file(ch_alpha));
            SimplicialComplex sc = clique_complex(alpha);
            int kmax = ch_maxdim >= 0 ? ch_maxdim : sc.dimension();
            if (kmax < 0) return 0;  // empty complex: nothing to report
            print_groups(reduced_homology(sc, kmax), ch_format, "H~");
            return 0;
        }
        if (*ver) {
            std::vector<TheoremReport> reports;
            auto kmax_for = [&](const IndependenceAlphabet& a) {
                return v_kmax >= 1 ? v_kmax : std::max(1, max_clique_size(a) + 1);
            };
            if (!v_battery.empty()) {
                fs::path base = fs::path(v_battery).parent_path();
                auto entries = parse_battery_manifest(read_file(v_battery));
                for (const auto& e : entries) {
                    IndependenceAlphabet a = parse_alphabet(read_file((base / e.path).string()));
                    if (v_which == "thm2") {
                        reports.push_back(check_thm2(a, e.name, v_mmax));
                    } else if (v_which == "thm3") {
                        fail(errc::syntax_error, "thm3 takes --component files, not a battery");
                    } else {
                        int km = v_kmax >= 1 ? v_kmax : 3;
                        for (int m = -1; m <= 2; ++m)
                            reports.push_back(v_which == "thm1" ? check_thm1(a, e.name, m, km)
                                                                : check_corollary(a, e.name, m, km));
                    }
                }
            } else if (v_which == "thm3") {
                if (v_components.empty())
                    fail(errc::syntax_error, "thm3 needs at least one --component file");
                std::vector<IndependenceAlphabet> comps;
                std::vector<std::string> names;
                for (const auto& f : v_components) {
                    comps.push_back(parse_alphabet(read_file(f)));
                    names.push_back(stem_of(f));
                }
                int km = v_kmax;
                if (km < 1) {
                    int mcs = 0;
                    for (const auto& c : comps) mcs = std::max(mcs, max_clique_size(c));
                    km = mcs + 1;
                }
                reports.push_back(check_thm3(comps, names, v_n, km));
            } else {
                if (v_alpha.empty()) fail(errc::syntax_error, v_which + " needs --alphabet");
                IndependenceAlphabet a = parse_alphabet(read_file(v_alpha));
                std::string name = v_name.empty() ? stem_of(v_alpha) : v_name;
                if (v_which == "thm1") reports.push_back(check_thm1(a, name, v_m, kmax_for(a)));
                else if (v_which == "corollary") reports.push_back(check_corollary(a, name, v_m, kmax_for(a)));
                else reports.push_back(check_thm2(a, name, v_mmax));
            }
            return run_verify(v_which, v_format, reports);
        }
        if (*sub) {
            SimplicialComplex sc = parse_complex(read_file(sd_complex));
            write_output(sd_out, serialize_complex(barycentric_subdivision(sc)));
            return 0;
        }
        if (*exa) {
            write_output(ex_out, serialize_complex(builtin_complex(ex_name)));
            return 0;
        }
        if (*ddc) {
            IndependenceAlphabet alpha;
            PointedAction action = dd_in.load_action(alpha);
            ChainComplex cc = kset_complex(action, -1, dd_in.parsed_variant());
            if (dd_dump) dump_matrices(cc, std::cout);
            DdReport rep = verify_dd_zero(cc);
            if (rep.pass) {
                std::cout << "dd: pass\n";
                return 0;
            }
            std::cout << "dd: FAIL degree=" << rep.degree << " row=" << rep.row
                      << " col=" << rep.col << "\n";
            return 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
