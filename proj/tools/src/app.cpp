#include "pvf/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "pvf/affine.hpp"
#include "pvf/cli/parse.hpp"
#include "pvf/errors.hpp"
#include "pvf/format.hpp"
#include "pvf/frames.hpp"
#include "pvf/morphism.hpp"
#include "pvf/verify.hpp"

namespace pvf::cli {
namespace {

using Json = nlohmann::ordered_json;

// What a subcommand produces: the echoed inputs and result for JSON mode and
// the lines printed in human mode.
struct Outcome {
  Json inputs = Json::object();
  Json result;
  std::string text;
  int exit_code = kExitOk;
};

std::optional<std::size_t> dimension(std::size_t n) {
  return n == 0 ? std::nullopt : std::optional<std::size_t>(n);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string fields_to_string(const std::vector<VectorField>& fields) {
  std::vector<std::string> parts;
  for (const auto& f : fields) parts.push_back(to_string(f));
  return join(parts, "; ");
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      grid.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw ParseError(0, "bad grid value '" + item + "'");
    }
  }
  return grid;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

Json domain_error_json(const DomainError& e) {
  Json j = error_json(e.kind(), e.what());
  if (const auto* nc = dynamic_cast<const NotCommuting*>(&e)) {
    j["pair"] = {nc->i() + 1, nc->j() + 1};
    j["bracket"] = to_string(nc->bracket());
  } else if (const auto* ld = dynamic_cast<const LinearlyDependent*>(&e)) {
    std::vector<std::string> combination;
    for (const auto& c : ld->combination()) combination.push_back(to_string(c));
    j["combination"] = combination;
  } else if (const auto* ne = dynamic_cast<const NotEtale*>(&e)) {
    j["jacobian_determinant"] = to_string(ne->jacobian_determinant());
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial vector field calculus on affine n-space", "pvf"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t n = 0;
  bool json = false;
  std::uint64_t seed = 42;
  app.add_option("--n", n, "Ambient dimension (default: inferred from the input)");
  app.add_flag("--json", json, "Emit one JSON document");
  app.add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();

  std::string op;
  std::function<Outcome()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->callback([&op, &action, name = std::move(name), fn = std::move(fn)] {
      op = name;
      action = fn;
    });
  };

  // bracket
  std::string bracket_first;
  std::string bracket_second;
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [d, e] of two fields");
  bracket_cmd->add_option("first", bracket_first, "Field '[p1, ..., pn]'")->required();
  bracket_cmd->add_option("second", bracket_second, "Field '[p1, ..., pn]'")->required();
  bind(bracket_cmd, "bracket", [&] {
    const auto d = parse_field(bracket_first, dimension(n));
    const auto e = parse_field(bracket_second, d.dimension());
    const auto b = bracket(d, e);
    Outcome o;
    o.inputs = {{"first", to_string(d)}, {"second", to_string(e)}};
    o.result = to_string(b);
    o.text = to_string(b);
    return o;
  });

  // div
  std::string div_field;
  auto* div_cmd = app.add_subcommand("div", "Divergence of a field");
  div_cmd->add_option("field", div_field, "Field '[p1, ..., pn]'")->required();
  bind(div_cmd, "div", [&] {
    const auto d = parse_field(div_field, dimension(n));
    const auto dv = divergence(d);
    Outcome o;
    o.inputs = {{"field", to_string(d)}};
    o.result = to_string(dv);
    o.text = to_string(dv);
    return o;
  });

  // apply
  std::string apply_field;
  std::string apply_poly;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a field to a polynomial");
  apply_cmd->add_option("--field", apply_field, "Field '[p1, ..., pn]'")->required();
  apply_cmd->add_option("--poly", apply_poly, "Polynomial")->required();
  bind(apply_cmd, "apply", [&] {
    const auto d = parse_field(apply_field, dimension(n));
    const auto f = parse_poly(apply_poly, d.dimension());
    const auto g = apply(d, f);
    Outcome o;
    o.inputs = {{"field", to_string(d)}, {"poly", to_string(f)}};
    o.result = to_string(g);
    o.text = to_string(g);
    return o;
  });

  // pullback
  std::string pullback_map;
  std::string pullback_field;
  auto* pullback_cmd = app.add_subcommand("pullback", "Pull a field back along an etale map");
  pullback_cmd->add_option("--map", pullback_map, "Map '[f1, ..., fn]'")->required();
  pullback_cmd->add_option("--field", pullback_field, "Field '[p1, ..., pn]'")->required();
  bind(pullback_cmd, "pullback", [&] {
    const auto phi = parse_map(pullback_map, dimension(n));
    const auto d = parse_field(pullback_field, phi.dimension());
    const auto p = pullback(phi, d);
    Outcome o;
    o.inputs = {{"map", to_string(phi)}, {"field", to_string(d)}};
    o.result = to_string(p);
    o.text = to_string(p);
    return o;
  });

  // ad
  std::string ad_word;
  std::string ad_field;
  auto* ad_cmd = app.add_subcommand("ad", "Adjoint action of an automorphism word on a field");
  ad_cmd->add_option("--word", ad_word, "Letters 'affine:g;b' or 'elem:i:p' joined by '.'")
      ->required();
  ad_cmd->add_option("--field", ad_field, "Field '[p1, ..., pn]'")->required();
  bind(ad_cmd, "ad", [&] {
    const auto d = parse_field(ad_field, dimension(n));
    const auto w = parse_word(ad_word, d.dimension());
    const auto a = ad_action(w, d);
    Outcome o;
    o.inputs = {{"word", to_string(materialize(w))}, {"field", to_string(d)}};
    o.result = to_string(a);
    o.text = to_string(a);
    return o;
  });

  // etale
  std::string etale_map;
  auto* etale_cmd = app.add_subcommand("etale", "Decide whether a map is etale");
  etale_cmd->add_option("--map", etale_map, "Map '[f1, ..., fn]'")->required();
  bind(etale_cmd, "etale", [&] {
    const auto phi = parse_map(etale_map, dimension(n));
    const auto det = determinant(jacobian(phi));
    const bool etale = is_etale(phi).has_value();
    Outcome o;
    o.inputs = {{"map", to_string(phi)}};
    o.result = {{"etale", etale}, {"jacobian_determinant", to_string(det)}};
    o.text = std::string("etale=") + (etale ? "true" : "false") + "\ndet=" + to_string(det);
    return o;
  });

  // frame analyze
  std::string frame_fields;
  auto* frame_cmd = app.add_subcommand("frame", "Commuting frames");
  frame_cmd->require_subcommand(1);
  auto* analyze_cmd = frame_cmd->add_subcommand("analyze", "Frame report for n commuting fields");
  analyze_cmd->add_option("--fields", frame_fields, "Fields separated by ';'")->required();
  bind(analyze_cmd, "frame analyze", [&] {
    const auto fields = parse_fields(frame_fields, dimension(n));
    const auto fr = Frame::make(fields);
    const auto report = equivalence_report(fr);
    Outcome o;
    o.inputs = {{"fields", fields_to_string(fields)}};
    const std::string flat = report.flat_coordinates
                                 ? "(" + join([&] {
                                     std::vector<std::string> parts;
                                     for (const auto& f : *report.flat_coordinates)
                                       parts.push_back(to_string(f));
                                     return parts;
                                   }(), ", ") + ")"
                                 : "none";
    const std::string witness =
        report.darboux_witness ? to_string(*report.darboux_witness) : "none";
    o.result = {{"frame", true},
                {"condition_ii", report.condition_ii},
                {"det", to_string(report.determinant)},
                {"flat", report.flat_coordinates ? Json(flat) : Json(nullptr)},
                {"map", report.reconstructed_map ? Json(to_string(*report.reconstructed_map))
                                                 : Json(nullptr)},
                {"darboux", report.darboux_witness ? Json(witness) : Json(nullptr)},
                {"module_rank", report.module_rank}};
    std::ostringstream text;
    text << "frame=true\n"
         << "condition_ii=" << (report.condition_ii ? "true" : "false") << "\n"
         << "det=" << to_string(report.determinant) << "\n"
         << "flat=" << flat << "\n"
         << "darboux=" << witness << "\n"
         << "module_rank=" << report.module_rank;
    o.text = text.str();
    return o;
  });

  // darboux
  std::string darboux_fields;
  bool darboux_with_oracle = false;
  unsigned oracle_degree = 2;
  std::string oracle_grid = "-1,0,1";
  auto* darboux_cmd = app.add_subcommand("darboux", "Common Darboux polynomial of n commuting fields");
  darboux_cmd->add_option("--fields", darboux_fields, "Fields separated by ';'")->required();
  darboux_cmd->add_flag("--oracle", darboux_with_oracle, "Also run the bounded brute-force search");
  darboux_cmd->add_option("--degree", oracle_degree, "Oracle degree bound")->capture_default_str();
  darboux_cmd->add_option("--grid", oracle_grid, "Oracle coefficient grid, comma separated")
      ->capture_default_str();
  bind(darboux_cmd, "darboux", [&] {
    const auto fields = parse_fields(darboux_fields, dimension(n));
    const auto witness = darboux_decide(fields);
    Outcome o;
    o.inputs = {{"fields", fields_to_string(fields)}};
    o.result = {{"witness", witness ? Json(to_string(*witness)) : Json(nullptr)}};
    o.text = "witness=" + (witness ? to_string(*witness) : std::string("none"));
    if (darboux_with_oracle) {
      const auto grid = parse_grid(oracle_grid);
      const auto found = darboux_oracle(fields, oracle_degree, grid);
      o.inputs["degree"] = oracle_degree;
      o.inputs["grid"] = oracle_grid;
      o.result["oracle"] = found ? Json(to_string(*found)) : Json(nullptr);
      o.result["agree"] = found.has_value() == witness.has_value();
      o.text += "\noracle=" + (found ? to_string(*found) : std::string("none"));
      o.text += std::string("\nagree=") + (found.has_value() == witness.has_value() ? "true" : "false");
    }
    return o;
  });

  // affine cocycle | affine solve
  std::string cocycle_images;
  std::string solve_images;
  auto* affine_cmd = app.add_subcommand("affine", "Linear maps sl_n -> K^n");
  affine_cmd->require_subcommand(1);
  auto* cocycle_cmd = affine_cmd->add_subcommand("cocycle", "Check the cocycle condition");
  cocycle_cmd->add_option("--images", cocycle_images, "Images of the sl_n basis separated by ';'")
      ->required();
  bind(cocycle_cmd, "affine cocycle", [&] {
    const auto l = parse_sl_map(cocycle_images);
    const auto check = cocycle_check(l);
    Outcome o;
    std::vector<std::string> images;
    for (const auto& v : l.images()) images.push_back(to_string(v));
    o.inputs = {{"images", images}};
    o.result = {{"cocycle", check.is_cocycle}};
    o.text = std::string("cocycle=") + (check.is_cocycle ? "true" : "false");
    if (check.failing_pair) {
      const auto [i, j] = *check.failing_pair;
      o.result["failing_pair"] = {i, j};
      o.text += "\nfailing_pair=(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
    return o;
  });
  auto* solve_cmd = affine_cmd->add_subcommand("solve", "Find v with l(A) = A v");
  solve_cmd->add_option("--images", solve_images, "Images of the sl_n basis separated by ';'")
      ->required();
  bind(solve_cmd, "affine solve", [&] {
    const auto l = parse_sl_map(solve_images);
    const auto v = coboundary_solve(l);
    Outcome o;
    std::vector<std::string> images;
    for (const auto& im : l.images()) images.push_back(to_string(im));
    o.inputs = {{"images", images}};
    o.result = to_string(v);
    o.text = to_string(v);
    return o;
  });

  // verify
  std::vector<std::string> only;
  std::size_t cases = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
  verify_cmd->add_option("--only", only, "Families to run (comma separated)")->delimiter(',');
  verify_cmd->add_option("--cases", cases, "Cases per family (default: per-family)");
  bind(verify_cmd, "verify", [&] {
    verify::Config config;
    config.seed = seed;
    config.only = only;
    if (cases > 0) config.cases = cases;
    const auto summary = verify::run(config);
    Outcome o;
    o.inputs = {{"seed", seed}, {"only", only}, {"cases", cases > 0 ? Json(cases) : Json(nullptr)}};
    Json families = Json::array();
    std::ostringstream text;
    for (const auto& f : summary.families) {
      families.push_back({{"name", f.name},
                          {"cases", f.cases},
                          {"passed", f.passed},
                          {"failure", f.failure ? Json(*f.failure) : Json(nullptr)}});
      text << (f.ok() ? "ok   " : "FAIL ") << f.name << " " << f.passed << "/" << f.cases << "\n";
      if (f.failure) text << "     " << *f.failure << "\n";
    }
    o.result = {{"ok", summary.ok()}, {"families", families}};
    text << (summary.ok() ? "all families passed" : "some families failed");
    o.text = text.str();
    o.exit_code = summary.ok() ? kExitOk : kExitDomain;
    return o;
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto emit = [&](Json inputs, Json result, Json error) {
    Json doc;
    doc["op"] = op;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    doc["error"] = std::move(error);
    out << doc.dump(2) << "\n";
  };
  auto fail = [&](int code, Json error) {
    if (json) {
      emit(Json::object(), nullptr, error);
    } else {
      err << "error: " << error["kind"].get<std::string>() << ": "
          << error["message"].get<std::string>() << "\n";
    }
    return code;
  };

  try {
    Outcome o = action();
    if (json) {
      emit(std::move(o.inputs), std::move(o.result), nullptr);
    } else {
      out << o.text << "\n";
    }
    return o.exit_code;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["offset"] = e.offset();
    return fail(kExitUsage, j);
  } catch (const DimensionMismatch& e) {
    return fail(kExitUsage, domain_error_json(e));
  } catch (const DomainError& e) {
    return fail(kExitDomain, domain_error_json(e));
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, error_json("invalid-argument", e.what()));
  }
}

}  // namespace pvf::cli
