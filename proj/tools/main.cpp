// cableord: torsion order, cabling and bound reports for knot-like complexes.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cableord/bounds.hpp"
#include "cableord/cabling.hpp"
#include "cableord/errors.hpp"
#include "cableord/io.hpp"
#include "cableord/knot_spec.hpp"
#include "cableord/render.hpp"

using namespace cableord;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kIo = 1,
  kValidation = 2,
  kParse = 3,
  kLocalSystem = 4,
  kMismatch = 5,
};

struct Options {
  std::string target;
  bool json_out = false;
  bool text_out = false;
  bool check_rules = false;
  bool assume_slice = false;
  std::optional<int> base_bridge;
  std::string out_path;
};

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    write_text(o.out_path, text);
  }
}

std::string text_report(const ValidationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += (c.passed ? "pass  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  out += r.ok() ? "ok\n" : "failed\n";
  return out;
}

int cmd_validate(const Options& o) {
  const std::string text = read_text(o.target);
  ValidationReport r;
  if (is_curve_document(text)) {
    r = validate_curve(curve_from_json(text), true);
  } else {
    r = validate(complex_from_json(text));
  }
  emit(o, o.json_out ? report_to_json(r) : text_report(r));
  return r.ok() ? kOk : kValidation;
}

// Ord straight from the complex when there is nothing to cable; otherwise from the curve.
int ord_of(const CableSpec& spec) {
  if (spec.stages.empty()) return torsion_order(base_complex(spec));
  return max_right_arc(iterate_cable(spec));
}

int cmd_scalar(const Options& o, const std::string& name) {
  const auto spec = parse_knot_spec(o.target);
  int value = 0;
  if (name == "ord") {
    value = ord_of(spec);
  } else {
    const auto curve = iterate_cable(spec);
    value = name == "tau" ? tau(curve) : epsilon(curve);
  }
  if (o.json_out) {
    json doc;
    doc["schema"] = 1;
    doc["spec"] = spec.to_string();
    doc[name] = value;
    emit(o, doc.dump(2) + "\n");
  } else {
    emit(o, std::to_string(value) + "\n");
  }
  return kOk;
}

int cmd_cable(const Options& o) {
  const auto spec = parse_knot_spec(o.target);
  PegCurve cur = base_curve(spec);
  int status = kOk;
  for (const auto& st : spec.stages) {
    if (o.check_rules) {
      const auto rep = crosscheck_rules(cur, st);
      for (const auto& c : rep.checks) {
        if (c.match) continue;
        std::cerr << "rule mismatch at stage (" << st.p << "," << st.q << "), component " << c.arc.component
                  << " arc " << c.arc.start << ": " << c.detail << "\n";
      }
      std::cerr << "stage (" << st.p << "," << st.q << "): " << rep.checks.size() - rep.mismatches() << "/"
                << rep.checks.size() << " covered arcs agree, " << rep.uncovered << " uncovered\n";
      if (!rep.ok()) status = kMismatch;
    }
    cur = cable_geometric(cur, st);
  }
  emit(o, curve_to_json(cur));
  return status;
}

int cmd_bounds(const Options& o) {
  const auto spec = parse_knot_spec(o.target);
  ReportOptions ro;
  ro.slice_assumed = o.assume_slice;
  ro.base_bridge = o.base_bridge;
  const auto r = report(spec, ro);
  emit(o, o.json_out ? bounds_to_json(r) : bounds_to_text(r));
  return kOk;
}

int cmd_render(const Options& o) {
  const std::string text = read_text(o.target);
  const PegCurve pc = is_curve_document(text) ? curve_from_json(text) : curve_of(complex_from_json(text));
  emit(o, render_curve(pc));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion order, immersed curves and cabling bounds for knot-like complexes"};
  app.require_subcommand(1);
  Options o;

  auto spec_help = "knot spec: T(p,q) or file:PATH, then ;(p,q) stages";
  auto* validate = app.add_subcommand("validate", "check a complex or curve JSON file");
  validate->add_option("path", o.target, "complex or curve file")->required();
  validate->add_flag("--json", o.json_out, "JSON output");
  validate->add_flag("--text", o.text_out, "plain text output (default)");

  std::string scalar_name;
  for (const char* name : {"ord", "tau", "epsilon"}) {
    auto* sub = app.add_subcommand(name, std::string("print ") + name + " of a knot spec");
    sub->add_option("spec", o.target, spec_help)->required();
    sub->add_flag("--json", o.json_out, "JSON output");
    sub->add_flag("--text", o.text_out, "plain text output (default)");
    sub->callback([&scalar_name, name] { scalar_name = name; });
  }

  auto* cable = app.add_subcommand("cable", "cable a knot and write its curve as JSON");
  cable->add_option("spec", o.target, spec_help)->required();
  cable->add_flag("--check-rules", o.check_rules, "compare every covered arc with the closed-form rules");

  auto* bounds = app.add_subcommand("bounds", "report torsion-order bounds");
  bounds->add_option("spec", o.target, spec_help)->required();
  bounds->add_flag("--json", o.json_out, "JSON output");
  bounds->add_flag("--text", o.text_out, "aligned table (default)");
  bounds->add_flag("--assume-slice", o.assume_slice, "treat the knot as slice for the local minima bound");
  bounds->add_option("--base-bridge", o.base_bridge, "bridge index of a file base");

  auto* render = app.add_subcommand("render", "draw a curve (or a complex's curve) as ASCII");
  render->add_option("path", o.target, "curve or complex file")->required();

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--out", o.out_path, "write output to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (o.json_out && o.text_out) throw ParseError("--json and --text are exclusive");
    if (validate->parsed()) return cmd_validate(o);
    if (cable->parsed()) return cmd_cable(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (render->parsed()) return cmd_render(o);
    return cmd_scalar(o, scalar_name);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const LocalSystemRequired& e) {
    std::cerr << "local system required: " << e.what() << "\n";
    return kLocalSystem;
  } catch (const CheckMismatch& e) {
    std::cerr << "crosscheck mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
