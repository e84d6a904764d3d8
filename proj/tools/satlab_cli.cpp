#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/bounds.hpp"
#include "satlab/builders.hpp"
#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<satlab::Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<satlab::Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(satlab::from_graph6(line));
    }
    if (out.empty()) throw std::runtime_error("no graphs in " + path);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int g_exit = 0;
std::ostringstream g_out;

void emit(const std::string& s) {
    g_out << s;
    std::cout << s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace satlab;

    CLI::App app{"saturation-number toolkit: constructions, counting, "
                 "saturation certificates, exhaustive oracles, cycle builders, "
                 "and closed-form bounds for sat(n, H, F).\n"
                 "Pattern mini-language: K<r>, C<l>, Kbar<r>, K<r>-e, K<a>,<b>, "
                 "g6:<code>."};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "search parallelism (results independent of N)")
        ->envname("SATLAB_THREADS");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a graph from a named family");
    std::string family, out_format = "g6";
    int c_n = 0, c_s = 0, c_k = 0, c_r = 0, c_m = 0, c_a = 0, c_b = 0;
    int c_m1 = 1, c_m3 = 1, c_m4 = 1;
    std::string named;
    construct->add_option("--family", family,
                          "EhmJoin|BookJoin|Ws|G4k|G4k2|CompleteBipartite|FriendshipLike|"
                          "ApexCliqueFan|TwoApexClique|StarMatching|KaszonyiTuza");
    construct->add_option("--named", named, "Petersen|C5|Coxeter|HoffmanSingleton|C6Builder11");
    construct->add_option("--n", c_n);
    construct->add_option("--s", c_s);
    construct->add_option("--k", c_k);
    construct->add_option("--r", c_r);
    construct->add_option("--m", c_m);
    construct->add_option("--a", c_a);
    construct->add_option("--b", c_b);
    construct->add_option("--m1", c_m1);
    construct->add_option("--m3", c_m3);
    construct->add_option("--m4", c_m4);
    std::string kt_target;
    construct->add_option("--target", kt_target, "pattern for KaszonyiTuza");
    construct->add_option("--out", out_format, "g6|json");

    // count
    auto* count = app.add_subcommand("count", "count copies of a pattern in each input graph");
    std::string count_pattern, count_input;
    count->add_option("--pattern", count_pattern)->required();
    count->add_option("--input", count_input, "graph6 file, one graph per line")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check F-saturation, optionally emit certificate");
    std::string verify_target, verify_input, verify_cert_out;
    verify->add_option("--target", verify_target)->required();
    verify->add_option("--input", verify_input)->required();
    verify->add_option("--cert", verify_cert_out, "write certificate JSON here");

    // verify-cert
    auto* vcert = app.add_subcommand("verify-cert", "re-check a saturation certificate");
    std::string vc_input, vc_cert;
    vcert->add_option("--input", vc_input, "graph6 file (first graph used)")->required();
    vcert->add_option("--cert", vc_cert, "certificate JSON file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact sat(n, H, F) by exhaustive enumeration");
    int o_n = 0;
    std::string o_h, o_f;
    double o_seconds = std::numeric_limits<double>::infinity();
    long long o_nodes = std::numeric_limits<long long>::max();
    oracle->set_help_flag("--help", "print help");  // frees -h/--h for the pattern
    oracle->add_option("--n", o_n)->required();
    oracle->add_option("--h", o_h)->required();
    oracle->add_option("--f", o_f)->required();
    oracle->add_option("--max-seconds", o_seconds);
    oracle->add_option("--max-nodes", o_nodes);

    // search
    auto* search = app.add_subcommand("search", "find H-free saturated graphs or builders");
    std::string s_mode, s_h, s_f;
    int s_n = 0, s_k = 0, s_nlo = 0, s_nhi = 0;
    double s_seconds = std::numeric_limits<double>::infinity();
    search->set_help_flag("--help", "print help");
    search->add_option("--mode", s_mode, "hfree-saturated|builder")->required();
    search->add_option("--n", s_n);
    search->add_option("--h", s_h);
    search->add_option("--f", s_f);
    search->add_option("--k", s_k);
    search->add_option("--n-lo", s_nlo);
    search->add_option("--n-hi", s_nhi);
    search->add_option("--max-seconds", s_seconds);

    // builder
    auto* builder = app.add_subcommand("builder", "verify, glue, or size-cover cycle builders");
    auto* bverify = builder->add_subcommand("verify", "verify a C_k-builder");
    std::string bv_input;
    int bv_v = 0, bv_k = 0;
    bverify->add_option("--input", bv_input)->required();
    bverify->add_option("--v", bv_v)->required();
    bverify->add_option("--k", bv_k)->required();
    auto* bglue = builder->add_subcommand("glue", "glue copies of one or two builders");
    std::string bg_input1, bg_input2;
    int bg_v1 = 0, bg_v2 = 0, bg_k = 0, bg_m1 = 1, bg_m2 = 0;
    bglue->add_option("--input1", bg_input1)->required();
    bglue->add_option("--v1", bg_v1)->required();
    bglue->add_option("--input2", bg_input2);
    bglue->add_option("--v2", bg_v2);
    bglue->add_option("--k", bg_k)->required();
    bglue->add_option("--m1", bg_m1);
    bglue->add_option("--m2", bg_m2);
    auto* bcover = builder->add_subcommand("coverage", "coprime size coverage 1 + m1 a + m2 b");
    int bc_a = 0, bc_b = 0, bc_limit = 0;
    bcover->add_option("--a", bc_a)->required();
    bcover->add_option("--b", bc_b)->required();
    bcover->add_option("--limit", bc_limit)->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound exactly");
    std::string bo_case, bo_h, bo_f;
    int bo_n = 0, bo_r = 0, bo_s = 0, bo_h1 = 0, bo_h2 = 1;
    bool bo_table = false;
    bounds->set_help_flag("--help", "print help");
    bounds->add_option("--case", bo_case, "Ehm|KrKs|QuadLB|C4K4|CrKs|C6K5|KTcount");
    bounds->add_option("--n", bo_n);
    bounds->add_option("--r", bo_r);
    bounds->add_option("--s", bo_s);
    bounds->add_option("--h", bo_h, "pattern for QuadLB");
    bounds->add_option("--h1", bo_h1);
    bounds->add_option("--h2", bo_h2);
    bounds->add_option("--f", bo_f, "pattern for KTcount");
    bounds->add_flag("--table", bo_table, "summary table at --n");

    auto start = std::chrono::system_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    (void)threads;  // searches are deterministic; accepted for interface parity
    try {
        if (*construct) {
            Graph g;
            if (!named.empty()) {
                if (named == "Petersen") g = named_graph(NamedGraph::Petersen);
                else if (named == "C5") g = named_graph(NamedGraph::C5);
                else if (named == "Coxeter") g = named_graph(NamedGraph::Coxeter);
                else if (named == "HoffmanSingleton") g = named_graph(NamedGraph::HoffmanSingleton);
                else if (named == "C6Builder11") g = named_graph(NamedGraph::C6Builder11);
                else throw CLI::ValidationError("--named", "unknown graph " + named);
            } else if (family == "KaszonyiTuza") {
                if (kt_target.empty())
                    throw CLI::ValidationError("--target", "KaszonyiTuza needs --target");
                g = kaszonyi_tuza(c_n, parse_pattern(kt_target).graph());
            } else {
                FamilyParams p;
                if (family == "EhmJoin") p = ehm_join(c_n, c_s);
                else if (family == "BookJoin") p = book_join(c_n, c_s);
                else if (family == "Ws") p = ws(c_s, c_m1, c_m3, c_m4);
                else if (family == "G4k") p = g4k(c_k);
                else if (family == "G4k2") p = g4k2(c_k);
                else if (family == "CompleteBipartite")
                    p = FamilyParams{.family = Family::CompleteBipartite, .a = c_a, .b = c_b};
                else if (family == "FriendshipLike") p = friendship_like(c_m, c_r);
                else if (family == "ApexCliqueFan") p = apex_clique_fan(c_n, c_k);
                else if (family == "TwoApexClique") p = two_apex_clique(c_n, c_k);
                else if (family == "StarMatching") p = star_matching(c_n);
                else throw CLI::ValidationError("--family", "unknown family " + family);
                g = make(p);
            }
            if (out_format == "json") {
                nlohmann::json j;
                j["graph6"] = to_graph6(g);
                j["n"] = g.order();
                j["edges"] = g.edge_count();
                emit(j.dump() + "\n");
            } else {
                emit(to_graph6(g) + "\n");
            }
        } else if (*count) {
            Pattern p = parse_pattern(count_pattern);
            for (const Graph& g : read_graph6_file(count_input))
                emit(std::to_string(count_copies(g, p).copies) + "\n");
        } else if (*verify) {
            Pattern target = parse_pattern(verify_target);
            bool all = true;
            for (const Graph& g : read_graph6_file(verify_input)) {
                SaturationCheck check = is_saturated(g, target);
                emit(std::string(check.saturated ? "saturated" : "not-saturated") + "\n");
                if (check.saturated && !verify_cert_out.empty()) {
                    std::ofstream out(verify_cert_out);
                    out << check.certificate->to_json() << "\n";
                }
                all = all && check.saturated;
            }
            if (!all) g_exit = 1;
        } else if (*vcert) {
            Graph g = read_graph6_file(vc_input).front();
            SaturationCertificate cert = certificate_from_json(read_file(vc_cert));
            bool ok = verify_certificate(g, cert);
            emit(std::string(ok ? "certificate-ok" : "certificate-invalid") + "\n");
            if (!ok) g_exit = 1;
        } else if (*oracle) {
            SearchBudget budget;
            budget.max_seconds = o_seconds;
            budget.max_nodes = o_nodes;
            OracleResult res = sat_oracle(o_n, parse_pattern(o_h), parse_pattern(o_f), budget);
            emit(res.to_json() + "\n");
            if (res.status == SearchStatus::BudgetExhausted) g_exit = 3;
            else if (res.minimum < 0) g_exit = 1;
        } else if (*search) {
            SearchBudget budget;
            budget.max_seconds = s_seconds;
            if (s_mode == "hfree-saturated") {
                if (s_n <= 0 || s_h.empty() || s_f.empty())
                    throw CLI::ValidationError("search", "hfree-saturated needs --n, --h, --f");
                auto g = find_h_free_saturated(s_n, parse_pattern(s_h), parse_pattern(s_f), budget);
                if (g) emit(to_graph6(*g) + "\n");
                else g_exit = 1;
            } else if (s_mode == "builder") {
                if (s_k < 5 || s_nlo <= 0 || s_nhi < s_nlo || s_h.empty())
                    throw CLI::ValidationError("search",
                                               "builder needs --k >= 5, --h, --n-lo <= --n-hi");
                SearchStatus st = SearchStatus::Complete;
                auto found = search_builder(s_k, parse_pattern(s_h), s_nlo, s_nhi, budget, &st);
                for (const BuilderSpec& b : found) emit(builder_to_json(b, true) + "\n");
                if (st == SearchStatus::BudgetExhausted) g_exit = 3;
                else if (found.empty()) g_exit = 1;
            } else {
                throw CLI::ValidationError("--mode", "unknown mode " + s_mode);
            }
        } else if (*builder) {
            if (*bverify) {
                Graph g = read_graph6_file(bv_input).front();
                auto b = verify_builder(g, bv_v, bv_k);
                emit(builder_to_json(BuilderSpec{g, bv_v, bv_k}, b.has_value()) + "\n");
                if (!b) g_exit = 1;
            } else if (*bglue) {
                BuilderSpec b1{read_graph6_file(bg_input1).front(), bg_v1, bg_k};
                if (bg_m2 > 0) {
                    BuilderSpec b2{read_graph6_file(bg_input2).front(), bg_v2, bg_k};
                    emit(to_graph6(glue(b1, bg_m1, &b2, bg_m2)) + "\n");
                } else {
                    emit(to_graph6(glue(b1, bg_m1)) + "\n");
                }
            } else if (*bcover) {
                SizeCoverage cov = size_coverage(bc_a, bc_b, bc_limit);
                nlohmann::json j;
                j["has_threshold"] = cov.has_threshold;
                if (cov.has_threshold) j["threshold"] = cov.threshold;
                j["representable_count"] = cov.representable.size();
                emit(j.dump() + "\n");
                if (!cov.has_threshold) g_exit = 1;
            } else {
                throw CLI::ValidationError("builder", "need verify, glue, or coverage");
            }
        } else if (*bounds) {
            if (bo_table) {
                emit(bounds_table(bo_n));
            } else {
                auto c = parse_bound_case(bo_case);
                if (!c) throw CLI::ValidationError("--case", "unknown case " + bo_case);
                BoundParams p;
                p.n = bo_n;
                p.r = bo_r;
                p.s = bo_s;
                if (!bo_h.empty()) {
                    p.h = parse_pattern(bo_h).graph();
                    p.h1 = bo_h1;
                    p.h2 = bo_h2;
                }
                if (!bo_f.empty()) p.f = parse_pattern(bo_f).graph();
                emit(evaluate_bound(*c, p).to_json() + "\n");
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    auto end = std::chrono::system_clock::now();
    nlohmann::json record;
    std::vector<std::string> args(argv, argv + argc);
    record["subcommand"] = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
    record["argv"] = args;
    record["version"] = kVersion;
    record["start"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          start.time_since_epoch()).count();
    record["end"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                        end.time_since_epoch()).count();
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a(g_out.str())));
    record["output_digest"] = digest;
    std::cerr << record.dump() << "\n";
    return g_exit;
}
