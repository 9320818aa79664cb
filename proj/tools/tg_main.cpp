// tg -- command-line surface for the triangle-group toolkit
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tg/jsonio.hpp"
#include "tg/render.hpp"

namespace {

using namespace tg;

// angles accept a trailing "pi" (e.g. 0.3675592642pi)
double parse_angle(const std::string& s) {
    constexpr double kPi = 3.14159265358979323846;
    if (s.size() > 2 && s.substr(s.size() - 2) == "pi")
        return kPi * std::stod(s.substr(0, s.size() - 2));
    return std::stod(s);
}

void write_out(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CLI::ValidationError("cannot open output file: " + path);
    f << data;
}

std::string census_csv(const CensusResult& r) {
    int64_t tmax = 0;
    for (auto& [k, c] : r.table) tmax = std::max(tmax, k.second);
    std::string csv = "r_length";
    for (int64_t t = 0; t <= tmax; ++t) csv += ",t" + std::to_string(t);
    csv += ",total\n";
    for (int n = 6; n <= r.max_len; n += 2) {
        csv += std::to_string(n);
        int64_t total = 0;
        for (int64_t t = 0; t <= tmax; ++t) {
            auto it = r.table.find({n, t});
            const int64_t c = it == r.table.end() ? 0 : it->second;
            total += c;
            csv += "," + std::to_string(c);
        }
        csv += "," + std::to_string(total) + "\n";
    }
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric computation in the reflection group of a Euclidean triangle"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    std::string word_str, out_path, fmt = "text";

    auto* c_id = app.add_subcommand("identity", "exact word problem for a product of reflections");
    c_id->add_option("--word", word_str, "word over {1,2,3}")->required();
    c_id->add_option("--format", fmt, "text|json");

    auto* c_nf = app.add_subcommand("nf", "free-metabelian normal form of an even word");
    c_nf->add_option("--word", word_str)->required();
    c_nf->add_option("--format", fmt);

    auto* c_tc = app.add_subcommand("tcoords", "coordinates on the conjugation class of t1");
    c_tc->add_option("--word", word_str)->required();
    c_tc->add_option("--format", fmt);

    int max_len = 18, window = 4, grid = 0;
    double tol = 0;
    auto* c_census = app.add_subcommand("census", "census of stable-word classes");
    c_census->add_option("--max-len", max_len, "largest word length (even)");
    c_census->add_option("--grid", grid, "classification grid (default 256)");
    c_census->add_option("--tol", tol, "zero tolerance (default 1e-9)");
    c_census->add_option("--format", fmt, "text|json|csv");
    c_census->add_option("--out", out_path, "output path (default stdout)");

    auto* c_search = app.add_subcommand("search", "non-generic relation candidates");
    c_search->add_option("--max-len", max_len);
    c_search->add_option("--grid", grid);
    c_search->add_option("--tol", tol);
    c_search->add_option("--format", fmt);
    c_search->add_option("--out", out_path);

    std::string witness_file, svg_path;
    auto* c_solve = app.add_subcommand("solve", "zero set of a word's exponential sum");
    c_solve->add_option("--witness", witness_file, "JSON file with word or tcoords");
    c_solve->add_option("--word", word_str, "stable word (alternative to --witness)");
    c_solve->add_option("--grid", grid, "grid (default 1024)");
    c_solve->add_option("--tol", tol, "tolerance (default 1e-10)");
    c_solve->add_option("--svg", svg_path, "write an SVG overlay of the zero set");
    c_solve->add_option("--out", out_path);

    std::string suite;
    auto* c_verify = app.add_subcommand("verify", "check a presentation's relators");
    c_verify->add_option("--suite", suite, "s|g|h|gmin")->required();
    c_verify->add_option("--window", window, "relator index window");
    c_verify->add_option("--format", fmt);

    int n0 = 1, m0 = 0;
    bool g_family = false;
    auto* c_wit = app.add_subcommand("witness", "Sigma3 minimality witness");
    c_wit->add_option("--n0", n0)->required();
    c_wit->add_option("--m0", m0)->required();
    c_wit->add_option("--window", window);
    c_wit->add_flag("--g-family", g_family, "include the G-presentation family");
    c_wit->add_option("--format", fmt);

    std::string a2_str = "0.6", a3_str = "0.7";
    auto* c_render = app.add_subcommand("render", "SVG of the reflection chain of a word");
    c_render->add_option("--word", word_str)->required();
    c_render->add_option("--alpha2", a2_str, "angle (radians, or with pi suffix)");
    c_render->add_option("--alpha3", a3_str);
    c_render->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_id) {
            const bool id = is_identity(from_word(parse_word(word_str)));
            if (fmt == "json")
                std::cout << json{{"schema", "tg/1"}, {"word", word_str}, {"identity", id}}.dump()
                          << "\n";
            else
                std::cout << (id ? "true" : "false") << "\n";
            return 0;
        }
        if (*c_nf) {
            const MetaNF nf = normal_form(to_ywords(parse_word(word_str)));
            if (fmt == "json") {
                json j = to_json(nf);
                j["schema"] = "tg/1";
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "a=" << nf.a << " b=" << nf.b
                          << " winding=" << to_json_triples(nf.winding).dump() << "\n";
            }
            return 0;
        }
        if (*c_tc) {
            const LatticeMap tc = t_coordinates(from_word(parse_word(word_str)));
            std::cout << to_json_triples(tc).dump() << "\n";
            return 0;
        }
        if (*c_census || *c_search) {
            if (max_len < 2 || max_len % 2 != 0)
                throw CLI::ValidationError("--max-len must be a positive even length");
            if (max_len > 24)
                std::cerr << "note: lengths beyond 24 exceed the tested range\n";
            CensusOptions opt;
            opt.max_len = max_len;
            opt.threads = threads;
            opt.progress = true;
            if (grid > 0) opt.solver.grid = grid;
            if (tol > 0) opt.solver.tol = tol;
            if (*c_census) {
                const CensusResult r = census(opt);
                if (fmt == "csv") write_out(out_path, census_csv(r));
                else write_out(out_path, to_json(r).dump(2) + "\n");
            } else {
                const auto wit = find_nongeneric_candidates(opt);
                json arr = json::array();
                for (auto& e : wit) arr.push_back(to_json(e));
                write_out(out_path, json{{"schema", "tg/1"}, {"witnesses", arr}}.dump(2) + "\n");
                std::cerr << wit.size() << " non-generic relation classes up to length " << max_len
                          << "\n";
            }
            return 0;
        }
        if (*c_solve) {
            LatticeMap tc;
            if (!witness_file.empty()) {
                std::ifstream f(witness_file);
                if (!f) throw std::runtime_error("cannot read " + witness_file);
                json j = json::parse(f);
                if (j.contains("tcoords")) tc = lattice_from_triples(j["tcoords"]);
                else tc = t_coordinates(from_word(parse_word(j.at("word").get<std::string>())));
            } else if (!word_str.empty()) {
                tc = t_coordinates(from_word(parse_word(word_str)));
            } else {
                throw CLI::ValidationError("solve needs --witness or --word");
            }
            SolverOptions sopt;
            if (grid > 0) sopt.grid = grid;
            if (tol > 0) sopt.tol = tol;
            sopt.threads = threads;
            const ExpSum f = expsum_of(tc);
            const ZeroSet z = zero_set(f, sopt);
            json j = to_json(z);
            j["schema"] = "tg/1";
            if (auto rf = real_form(f)) {
                json terms = json::array();
                for (auto& [w, c] : rf->cosine_terms) terms.push_back({w.p, w.q, c});
                j["real_form"] = {{"center", {rf->center.p, rf->center.q}}, {"cosine_terms", terms}};
            }
            write_out(out_path, j.dump(2) + "\n");
            if (!svg_path.empty()) {
                // plain overlay: curves and points over the parameter triangle
                std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                                  "width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
                constexpr double kPi = 3.14159265358979323846;
                auto X = [&](double a) { return a / kPi * 640.0; };
                auto Y = [&](double a) { return 640.0 - a / kPi * 640.0; };
                svg += "<polygon points=\"0,640 640,640 0,0\" fill=\"none\" stroke=\"#999\"/>\n";
                for (auto& c : z.curves) {
                    svg += "<polyline fill=\"none\" stroke=\"#4477aa\" points=\"";
                    for (size_t i = 0; i < c.vertices.size(); ++i) {
                        if (i) svg += ' ';
                        char b[48];
                        std::snprintf(b, sizeof b, "%.3f,%.3f", X(c.vertices[i].alpha2),
                                      Y(c.vertices[i].alpha3));
                        svg += b;
                    }
                    svg += "\"/>\n";
                }
                for (auto& p : z.points) {
                    char b[96];
                    std::snprintf(b, sizeof b,
                                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"#cc6677\"/>\n",
                                  X(p.alpha2), Y(p.alpha3));
                    svg += b;
                }
                svg += "</svg>\n";
                write_out(svg_path, svg);
            }
            return 0;
        }
        if (*c_verify) {
            const VerifyReport r = verify_suite(suite, window);
            if (fmt == "json") std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << r.presentation << ": checked " << r.checked << ", "
                          << (r.pass() ? "all identity" : "FAILURES") << "\n";
            return r.pass() ? 0 : 1;
        }
        if (*c_wit) {
            const MinimalityReport r = minimality_witness(n0, m0, window, g_family);
            if (fmt == "json") std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << "witness(" << n0 << "," << m0 << ") window " << window << ": "
                          << (r.pass() ? "pass" : "FAIL") << "\n";
            return r.pass() ? 0 : 1;
        }
        if (*c_render) {
            const TriangleShape s(parse_angle(a2_str), parse_angle(a3_str));
            const Chain ch = unfold(parse_word(word_str), s);
            write_out(out_path, to_svg(ch));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
