#include "render.hpp"
#include "service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>

using namespace brauer;
using render::Json;

namespace {

bool as_json = false;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

int report_error(const std::string& kind, const std::string& msg, const std::string& where = "") {
  if (as_json)
    emit(render::error(kind, msg, where));
  else
    std::cerr << "error: " << (where.empty() ? "" : where + ": ") << msg << "\n";
  return kind == "usage" ? 2 : 1;
}

DiscTriangulation load_tri(int n, const std::string& arcs) { return build_triangulation(n, parse_arcs(arcs, n)); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer graph algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, out, edge, half, direction = "plus", arrows, arcs, arc, other_arcs;
  bool dot = false, minimal = false, dbl = false, enumerate = false;
  int n = 0, terms = 10, port = 8080;

  auto file_opt = [&](CLI::App* c) { c->add_option("file", file, "graph file")->required(); };

  auto* validate = app.add_subcommand("validate", "check a brauer-graph/1 file");
  file_opt(validate);
  auto* quiver = app.add_subcommand("quiver", "quiver of the algebra");
  file_opt(quiver);
  quiver->add_flag("--dot", dot, "emit DOT");
  auto* rels = app.add_subcommand("relations", "defining relations");
  file_opt(rels);
  rels->add_flag("--minimal", minimal, "only a minimal generating set");
  auto* projs = app.add_subcommand("projectives", "Loewy structure of the projectives");
  file_opt(projs);
  projs->add_option("--edge", edge, "only this edge");
  auto* walks = app.add_subcommand("walks", "Green walks");
  file_opt(walks);
  walks->add_flag("--double", dbl, "double-stepped walks");
  auto* mutate = app.add_subcommand("mutate", "Kauer move");
  file_opt(mutate);
  mutate->add_option("--edge", edge)->required();
  mutate->add_option("--direction", direction)->check(CLI::IsMember({"plus", "minus", "+", "-"}));
  mutate->add_option("-o,--output", out, "write the new graph here");
  auto* classify = app.add_subcommand("classify", "representation type and AR census");
  file_opt(classify);
  auto* surface = app.add_subcommand("surface", "faces and genus");
  file_opt(surface);

  auto* gentle = app.add_subcommand("gentle", "gentle algebras");
  gentle->require_subcommand(1);
  auto* gcheck = gentle->add_subcommand("check", "validate a gentle-algebra/1 file");
  file_opt(gcheck);
  auto* ggraph = gentle->add_subcommand("graph", "Brauer graph of a gentle algebra");
  file_opt(ggraph);
  ggraph->add_option("-o,--output", out);
  auto* trivext = app.add_subcommand("trivext", "trivial extension of a gentle algebra");
  file_opt(trivext);
  trivext->add_option("-o,--output", out);
  auto* cut = app.add_subcommand("cut", "admissible cuts");
  file_opt(cut);
  auto* cut_arrows = cut->add_option("--arrows", arrows, "comma separated arrow ids");
  auto* cut_enum = cut->add_flag("--enumerate", enumerate);
  cut_arrows->excludes(cut_enum);

  auto* tri = app.add_subcommand("tri", "polygon triangulations");
  tri->require_subcommand(1);
  tri->add_option("--n", n, "number of marked points")->required();
  tri->add_option("--arcs", arcs, "internal arcs, e.g. \"1-3,1-4\"");
  auto* tbuild = tri->add_subcommand("build", "Brauer graph of the triangulation");
  tbuild->add_option("-o,--output", out);
  auto* tflip = tri->add_subcommand("flip", "flip an internal arc");
  tflip->add_option("--arc", arc)->required();
  auto* tice = tri->add_subcommand("ice", "ice quiver with potential");
  auto* tparams = tri->add_subcommand("params", "derived equivalence parameters");
  tparams->add_option("--other", other_arcs, "second triangulation to compare");
  auto* tcompare = tri->add_subcommand("compare", "frozen Jacobian vs Brauer relations");
  auto* tcheck = tri->add_subcommand("check", "flip vs Kauer move on every internal arc");

  auto* resolve = app.add_subcommand("resolve", "projective resolution along a Green walk");
  file_opt(resolve);
  auto* r_edge = resolve->add_option("--edge", edge, "truncated edge");
  auto* r_half = resolve->add_option("--half", half, "explicit starting half-edge");
  r_edge->excludes(r_half);
  resolve->add_option("--terms", terms, "index of the last term")->check(CLI::NonNegativeNumber);

  auto* serve = app.add_subcommand("serve", "session service");
  serve->add_option("--port", port);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validate) {
      auto g = load_graph(file);
      int genus = brauer::faces(g).genus;
      if (as_json)
        emit({{"valid", true}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"genus", genus}});
      else
        std::cout << "valid: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, genus " << genus
                  << "\n";
    } else if (*quiver || *rels) {
      auto p = presentation(load_graph(file));
      if (dot)
        std::cout << render::dot(p.quiver);
      else if (as_json)
        emit(render::presentation(p, minimal));
      else
        std::cout << render::presentation_text(p, minimal);
    } else if (*projs) {
      auto g = load_graph(file);
      auto ps = edge.empty() ? projectives(g) : std::vector{projective(g, edge)};
      if (as_json)
        emit(render::projectives(ps));
      else
        std::cout << render::projectives_text(ps);
    } else if (*walks) {
      auto g = load_graph(file);
      auto ws = dbl ? double_stepped_walks(g) : all_green_walks(g);
      if (as_json)
        emit(render::walks(ws));
      else
        std::cout << render::walks_text(ws);
    } else if (*mutate) {
      auto g = load_graph(file);
      auto mv = kauer_move_report(g, edge, parse_direction(direction));
      if (!out.empty()) save_graph(mv.result, out);
      if (as_json) {
        Json j{{"move", render::move(mv)}};
        if (out.empty()) j["graph"] = render::graph(mv.result);
        emit(j);
      } else {
        std::cout << "case " << mv.kind << "\n";
        for (const auto& r : mv.relocations)
          std::cout << "  " << r.half << ": " << r.old_vertex << " -> " << r.new_vertex << " along " << r.slide_edge
                    << ", next to " << r.anchor << "\n";
        if (out.empty()) std::cout << serialize_graph(mv.result);
      }
    } else if (*classify) {
      auto g = load_graph(file);
      if (as_json)
        emit(render::classification(g));
      else
        std::cout << render::classification_text(g);
    } else if (*surface) {
      auto g = load_graph(file);
      if (as_json) {
        emit(render::faces(g));
      } else {
        auto f = brauer::faces(g);
        std::cout << "faces: " << f.faces.size() << "\n";
        for (const auto& x : f.faces) std::cout << "  (" << join(x) << ")\n";
        std::cout << "genus: " << f.genus << "\n";
      }
    } else if (*gcheck) {
      auto p = load_gentle(file);
      auto d = validate_gentle(p);
      auto mp = d.structural.empty() ? maximal_paths(p) : MaximalPathSet{};
      if (as_json) {
        emit(render::gentle_check(d, mp));
      } else {
        std::cout << (d.gentle() ? "gentle" : "not gentle") << "\n";
        for (const auto& s : d.structural) std::cout << "  " << s << "\n";
        for (auto [name, c] : {std::pair{"S0", &d.s0}, {"S1", &d.s1}, {"S2", &d.s2}, {"S3", &d.s3}})
          if (!c->ok) std::cout << "  " << name << " fails at " << join(c->offenders, ", ") << "\n";
        if (d.gentle()) {
          std::cout << "maximal paths:\n";
          for (const auto& m : mp.all()) std::cout << "  " << m.name() << "\n";
          for (const auto& s : mp.diagnostics) std::cout << "  ! " << s << "\n";
        }
      }
      if (!d.gentle()) return 1;
    } else if (*ggraph) {
      auto g = gentle_graph(load_gentle(file));
      if (!out.empty())
        save_graph(g, out);
      else
        std::cout << serialize_graph(g);
    } else if (*trivext) {
      auto t = trivial_extension(load_gentle(file));
      if (!out.empty()) save_graph(t.graph, out);
      if (as_json) {
        Json j{{"presentation", render::presentation(t.presentation)}};
        if (out.empty()) j["graph"] = render::graph(t.graph);
        emit(j);
      } else {
        std::cout << render::presentation_text(t.presentation);
        if (out.empty()) std::cout << serialize_graph(t.graph);
      }
    } else if (*cut) {
      auto g = load_graph(file);
      if (*cut_arrows) {
        AdmissibleCut c;
        std::stringstream ss(arrows);
        for (std::string a; std::getline(ss, a, ',');)
          if (!a.empty()) c.insert(a);
        std::cout << serialize_gentle(cut_algebra(g, c));
      } else {
        auto cs = enumerate_admissible_cuts(g);
        if (as_json) {
          Json j = Json::array();
          for (const auto& c : cs) j.push_back(std::vector<std::string>(c.begin(), c.end()));
          emit({{"cuts", j}});
        } else {
          std::cout << cs.size() << " admissible cuts\n";
          for (const auto& c : cs) std::cout << "  {" << join({c.begin(), c.end()}, ", ") << "}\n";
        }
      }
    } else if (*tri) {
      auto t = load_tri(n, arcs);
      if (*tbuild) {
        auto g = triangulation_graph(t);
        if (!out.empty())
          save_graph(g, out);
        else
          std::cout << serialize_graph(g);
      } else if (*tflip) {
        auto a = parse_arc(arc, n);
        auto t2 = flip(t, a);
        if (as_json) {
          emit({{"flipped", arc_id(a)}, {"to", arc_id(flipped_arc(t, a))}, {"triangulation", render::triangulation(t2)}});
        } else {
          std::vector<std::string> ids;
          for (const auto& x : t2.arcs) ids.push_back(arc_id(x));
          std::cout << arc_id(a) << " -> " << arc_id(flipped_arc(t, a)) << "\narcs: " << join(ids, ",") << "\n";
        }
      } else if (*tice) {
        auto iq = ice_quiver(t);
        auto fr = frozen_relations(iq);
        if (as_json)
          emit(render::ice(iq, fr));
        else
          std::cout << render::ice_text(iq, fr);
      } else if (*tparams) {
        auto p = parameters(t);
        Json j{{"parameters", render::parameters(p)}};
        std::optional<bool> eq;
        if (!other_arcs.empty()) {
          auto t2 = load_tri(n, other_arcs);
          j["other"] = render::parameters(parameters(t2));
          eq = ladkani_equivalent(t, t2);
          j["derived_equivalent"] = *eq;
        }
        if (as_json) {
          emit(j);
        } else {
          std::cout << "genus " << p.genus << ", boundary components " << p.boundary_components << ", marked points "
                    << p.marked_points << ", boundary triangles " << p.boundary_triangles << "\n";
          if (eq) std::cout << "derived equivalent: " << (*eq ? "yes" : "no") << "\n";
        }
      } else if (*tcompare) {
        auto c = compare_frozen_vs_brauer(t);
        if (as_json) {
          emit(render::comparison(c));
        } else {
          std::cout << (c.ok() ? "agree" : "differ") << " (extra Brauer relations at valency-2 points: "
                    << c.expected.size() << ")\n";
          for (const auto& s : c.only_brauer) std::cout << "  only brauer: " << s << "\n";
          for (const auto& s : c.only_ice) std::cout << "  only ice: " << s << "\n";
        }
        if (!c.ok()) return 1;
      } else if (*tcheck) {
        auto r = flip_is_kauer(t);
        if (as_json) {
          emit(render::flip_report(r));
        } else {
          for (const auto& e : r.entries)
            std::cout << e.arc << " -> " << e.flipped_to << "  plus " << (e.plus_agrees ? "ok" : "FAIL") << "  minus "
                      << (e.minus_agrees ? "ok" : "FAIL") << "\n";
        }
        if (!r.all_agree()) return 1;
      }
    } else if (*resolve) {
      auto g = load_graph(file);
      if (edge.empty() && half.empty()) return report_error("usage", "resolve needs --edge or --half");
      auto ts = half.empty() ? projective_resolution(g, edge, terms) : projective_resolution_from(g, half, terms);
      if (as_json)
        emit({{"terms", ts}});
      else
        for (std::size_t i = ts.size(); i-- > 0;) std::cout << "P_" << ts[i] << (i ? " -> " : "\n");
    } else if (*serve) {
      httplib::Server server;
      service::SessionStore store;
      service::install_routes(server, store);
      std::cerr << "listening on 127.0.0.1:" << port << "\n";
      if (!server.listen("127.0.0.1", port)) return report_error("io", "cannot bind port " + std::to_string(port));
    }
  } catch (const GraphError& e) {
    return report_error("graph", e.message(), e.where());
  } catch (const MutationError& e) {
    return report_error("mutation", e.what());
  } catch (const GentleError& e) {
    return report_error("gentle", e.what());
  } catch (const TriangulationError& e) {
    return report_error("triangulation", e.what());
  } catch (const ClassifyError& e) {
    return report_error("classify", e.what());
  } catch (const std::exception& e) {
    return report_error("internal", e.what());
  }
  return 0;
}
