#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weilrep/order.hpp"
#include "weilrep/padic.hpp"
#include "weilrep/text.hpp"

using json = nlohmann::ordered_json;

namespace {

json gauss_json(const wr::GaussQ& q) { return q.str(); }

json param_json(const wr::VirtualRep& v) {
    json arr = json::array();
    for (auto& [rep, m] : v.summands()) {
        json s;
        if (rep.is_one_dim()) {
            s["type"] = "one_dim";
            s["eps"] = rep.one_dim().eps;
            s["s"] = gauss_json(rep.one_dim().s);
        } else {
            s["type"] = "two_dim";
            s["mu"] = gauss_json(rep.two_dim().mu);
            s["nu"] = gauss_json(rep.two_dim().nu);
        }
        s["mult"] = m;
        s["text"] = wr::to_string(rep);
        arr.push_back(s);
    }
    return arr;
}

const char* role_name(wr::JHRole r) {
    switch (r) {
        case wr::JHRole::LanglandsQuotient: return "langlands_quotient";
        case wr::JHRole::Generic: return "generic";
        default: return "other";
    }
}

void emit(bool as_json, const std::string& command, const json& result,
          const std::string& text) {
    if (as_json) {
        json out;
        out["schema"] = "v1";
        out["command"] = command;
        out["result"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::vector<wr::VirtualRep> grid_seeds(const wr::Rat& lo, const wr::Rat& hi,
                                       const wr::Rat& step) {
    std::vector<wr::GaussQ> points;
    for (wr::Rat s = lo; s <= hi; s += step) points.emplace_back(s);

    std::vector<wr::IrredWR> irreds;
    for (auto& s : points)
        for (int eps : {0, 1}) irreds.push_back(wr::IrredWR(wr::RealChar(eps, s)));
    for (auto& mu : points)
        for (auto& nu : points) {
            auto d = wr::diff_class(mu, nu);
            if (d.kind == wr::DiffKind::Integer && d.k > 0)
                irreds.push_back(wr::IrredWR::two_dim(mu, nu));
        }

    // All multisets of total dimension <= 4.
    std::vector<wr::VirtualRep> seeds;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from, long long dim_left,
                   wr::VirtualRep cur) -> void {
        if (!cur.empty()) seeds.push_back(cur);
        for (std::size_t i = from; i < irreds.size(); ++i) {
            if (irreds[i].dim() > dim_left) continue;
            wr::VirtualRep next = cur;
            next.add(irreds[i], 1);
            self(self, i, dim_left - irreds[i].dim(), next);
        }
    };
    rec(rec, 0, 4, wr::VirtualRep{});
    return seeds;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations with real Weil group parameters"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON (schema v1)");

    std::string expr;
    long long karg = 0;
    std::string group_arg;
    long long narg = 0;
    std::size_t budget = 256;
    bool dot = false;
    std::vector<std::string> grid;

    auto* red = app.add_subcommand("red", "reducibility of an induced representation");
    red->add_option("expr", expr)->required();

    auto* jh = app.add_subcommand("jh", "Jordan-Hoelder parameters of a standard module");
    jh->add_option("expr", expr)->required();

    auto* std_cmd = app.add_subcommand("std", "standard module of a parameter");
    std_cmd->add_option("param", expr)->required();

    auto* sym = app.add_subcommand("sym", "Sym^k of D_2");
    sym->add_option("k", karg)->required();

    auto* steinberg = app.add_subcommand("steinberg", "Steinberg parameter of a group");
    steinberg->add_option("group", group_arg)->required();

    auto* packet = app.add_subcommand("packet", "Steinberg packet sizes");
    packet->add_option("group", group_arg)->required();

    auto* padic = app.add_subcommand("padic", "p-adic Borel Jordan-Hoelder parameters");
    padic->add_option("n", narg)->required();

    auto* haines = app.add_subcommand("haines", "common Weil restriction check");
    haines->add_option("n", narg)->required();

    auto* order = app.add_subcommand("order", "relation graph from a seed parameter");
    auto* order_seed = order->add_option("param", expr);
    order->add_option("--budget", budget, "node budget");
    order->add_flag("--dot", dot, "emit DOT");
    order->add_option("--grid", grid, "LO HI STEP: seed all dim <= 4 grid parameters")
        ->expected(3);

    auto* closure = app.add_subcommand("closure", "dim <= 4 move closure of a module");
    closure->add_option("expr", expr)->required();

    CLI11_PARSE(app, argc, argv);

    if (red->parsed()) {
        auto fs = wr::parse_factors(expr);
        json result;
        std::string text;
        if (fs.size() == 2 && fs[0].is_char() && fs[1].is_char()) {
            auto r = wr::gl2_reducible(wr::RealChar(fs[0].as_char().eps, fs[0].as_char().s),
                                       wr::RealChar(fs[1].as_char().eps, fs[1].as_char().s));
            result["reducible"] = r.reducible;
            if (r.reducible) result["p"] = r.p;
            text = r.reducible ? "reducible, p=" + std::to_string(r.p) : "irreducible";
        } else {
            auto v = wr::speh_irreducible(fs);
            result["reducible"] = !v.irreducible;
            json ws = json::array();
            text = v.irreducible ? "irreducible" : "reducible";
            for (auto& w : v.witnesses) {
                ws.push_back({{"i", w.i}, {"j", w.j}, {"condition", w.condition}});
                text += "\n  pair (" + std::to_string(w.i) + "," + std::to_string(w.j) +
                        ") violates condition (" + std::to_string(w.condition) + ")";
            }
            result["witnesses"] = ws;
        }
        emit(as_json, "red", result, text);
        return 0;
    }

    if (jh->parsed()) {
        auto fs = wr::parse_factors(expr);
        wr::JHDecomposition dec;
        if (fs.size() == 2 && fs[0].is_char() && fs[1].is_char()) {
            dec = wr::jh_gl2(wr::RealChar(fs[0].as_char().eps, fs[0].as_char().s),
                             wr::RealChar(fs[1].as_char().eps, fs[1].as_char().s));
        } else if (fs.size() == 2 && fs[0].is_char() != fs[1].is_char()) {
            const auto& ds = fs[0].is_char() ? fs[1] : fs[0];
            const auto& ch = fs[0].is_char() ? fs[0] : fs[1];
            dec = wr::jh_gl3(wr::seg_of(ds), ch.as_char());
        } else if (fs.size() == 2) {
            dec = wr::jh_gl4(wr::seg_of(fs[0]), wr::seg_of(fs[1]));
        } else {
            throw wr::configuration_not_covered(
                "jh supports two-factor modules (GL_2, GL_3, GL_4 shapes)");
        }
        json result;
        json factors = json::array();
        std::string text;
        for (auto& f : dec.factors) {
            factors.push_back({{"role", role_name(f.role)},
                               {"multiplicity", f.multiplicity},
                               {"param", param_json(f.param)}});
            if (!text.empty()) text += "\n";
            text += std::string(role_name(f.role)) + ": " + wr::to_string(f.param);
        }
        result["factors"] = factors;
        result["tags"] = dec.tags;
        for (auto& t : dec.tags) text += "\n[" + t + "]";
        emit(as_json, "jh", result, text);
        return 0;
    }

    if (std_cmd->parsed()) {
        auto m = wr::standard_of(wr::parse_param(expr));
        json result;
        result["module"] = wr::to_string(m);
        result["central_char"] = wr::to_string(wr::central_char(m));
        emit(as_json, "std", result, wr::to_string(m));
        return 0;
    }

    if (sym->parsed()) {
        auto v = wr::sym_power(karg, wr::VirtualRep(wr::IrredWR::discrete(2)));
        json result;
        result["param"] = param_json(v);
        result["text"] = wr::to_string(v);
        emit(as_json, "sym", result, wr::to_string(v));
        return 0;
    }

    if (steinberg->parsed()) {
        auto g = wr::parse_group(group_arg);
        auto v = wr::steinberg_param(g);
        json result;
        result["param"] = param_json(v);
        result["text"] = wr::to_string(v);
        result["tempered"] = wr::is_tempered(v);
        result["discrete"] = wr::is_discrete_param(v, g);
        std::string text = wr::to_string(v);
        text += wr::is_tempered(v) ? "\ntempered: yes" : "\ntempered: no";
        text += wr::is_discrete_param(v, g) ? "\ndiscrete: yes" : "\ndiscrete: no";
        emit(as_json, "steinberg", result, text);
        return 0;
    }

    if (packet->parsed()) {
        auto g = wr::parse_group(group_arg);
        long long closed = wr::steinberg_packet_size(g);
        wr::Rat ratio = wr::weyl_ratio(g);
        json result;
        result["paper_formula"] = closed;
        result["weyl_ratio"] = ratio.str();
        std::string text = "packet size (closed form): " + std::to_string(closed) +
                           "\n|W_G|/|W_K| from root data: " + ratio.str();
        if (!(wr::Rat(closed) == ratio))
            text += "\nnote: the two values disagree for this group";
        emit(as_json, "packet", result, text);
        return 0;
    }

    if (padic->parsed()) {
        auto ws = wr::borel_jh_padic(narg);
        json result;
        result["count"] = ws.size();
        json arr = json::array();
        std::string text = std::to_string(ws.size()) + " factors";
        for (auto& w : ws) {
            json parts = json::array();
            std::string line;
            for (auto& [s, r] : w.parts) {
                parts.push_back({{"s", s.str()}, {"r", r}});
                if (!line.empty()) line += " + ";
                line += "nu^{" + s.str() + "} (x) Sym^" + std::to_string(r);
            }
            arr.push_back(parts);
            text += "\n  " + line;
        }
        result["factors"] = arr;
        emit(as_json, "padic", result, text);
        return 0;
    }

    if (haines->parsed()) {
        bool ok = wr::haines_check(wr::borel_jh_padic(narg));
        json result;
        result["common_restriction"] = ok;
        emit(as_json, "haines", result, ok ? "true" : "false");
        return 0;
    }

    if (order->parsed()) {
        std::vector<wr::VirtualRep> seeds;
        if (!grid.empty()) {
            seeds = grid_seeds(wr::parse_rat(grid[0]), wr::parse_rat(grid[1]),
                               wr::parse_rat(grid[2]));
        } else if (*order_seed) {
            seeds.push_back(wr::parse_param(expr));
        } else {
            throw wr::domain_error("order: give a seed parameter or --grid");
        }
        auto g = wr::build_graph(seeds, budget);
        if (dot) {
            std::cout << wr::export_dot(g);
            return 0;
        }
        auto rep = wr::check_transitivity(g);
        json result;
        result["nodes"] = g.nodes.size();
        result["edges"] = g.edges.size();
        result["truncated"] = g.truncated;
        result["transitivity"] = {{"verified", rep.verified},
                                  {"violated", rep.violations.size()},
                                  {"unverifiable", rep.unverifiable},
                                  {"verified_exact", rep.verified_exact},
                                  {"violated_exact", rep.violated_exact}};
        std::string text = "nodes: " + std::to_string(g.nodes.size()) +
                           "\nedges: " + std::to_string(g.edges.size()) +
                           (g.truncated ? "\ntruncated: yes" : "") +
                           "\ntransitivity: " + std::to_string(rep.verified) +
                           " verified, " + std::to_string(rep.violations.size()) +
                           " violated, " + std::to_string(rep.unverifiable) +
                           " unverifiable";
        emit(as_json, "order", result, text);
        return 0;
    }

    if (closure->parsed()) {
        wr::StandardModule m(wr::parse_factors(expr));
        auto set = wr::conjecture4_closure(m);
        json result;
        result["count"] = set.size();
        json arr = json::array();
        std::string text = std::to_string(set.size()) + " parameters";
        for (auto& v : set) {
            arr.push_back(wr::to_string(v));
            text += "\n  " + wr::to_string(v);
        }
        result["params"] = arr;
        emit(as_json, "closure", result, text);
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wr::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const wr::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
