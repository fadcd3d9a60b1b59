#include "venus/cli.hpp"

#include "venus/parser.hpp"
#include "venus/server.hpp"
#include "venus/service.hpp"
#include "venus/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace venus::cli {

namespace fs = std::filesystem;

namespace {

struct CommonFlags {
  double scale = kDefaultScale;
  std::string order = "0,1";
  bool renormalize = false;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--scale", flags.scale, "Logical units per unit length")->check(CLI::PositiveNumber);
  cmd->add_option("--order", flags.order, "Qubit display order: 0,1 or 1,0");
  cmd->add_flag("--renormalize", flags.renormalize, "Divide the input state by its norm instead of rejecting it");
  cmd->add_flag("--json", flags.json, "Emit diagram JSON instead of SVG");
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out.flush());
}

void report(std::ostream& err, const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) err << d.to_string() << "\n";
}

std::optional<RenderOptions> render_options(const CommonFlags& flags, std::ostream& err) {
  auto order = parse_order(flags.order);
  if (!order || order->permutation.size() != 2) {
    err << "error: --order must be 0,1 or 1,0\n";
    return std::nullopt;
  }
  return RenderOptions{flags.scale, *order, flags.renormalize};
}

int render_state(const std::string& state_arg, const std::string& out_path, const CommonFlags& flags,
                 std::ostream& out, std::ostream& err) {
  std::string text = state_arg;
  if (!text.empty() && text[0] == '@') {
    auto contents = read_file(text.substr(1));
    if (!contents) {
      err << "error: cannot read " << text.substr(1) << "\n";
      return kExitInvalid;
    }
    text = *contents;
  }
  auto options = render_options(flags, err);
  if (!options) return kExitInvalid;

  auto state = parse_state(text, options->renormalize);
  report(err, state.diagnostics);
  if (!state.ok()) return kExitInvalid;

  const std::string document =
      flags.json ? dump_document(geometry_document(*state.value, *options, state.diagnostics)) + "\n"
                 : render(layout(*state.value, options->scale, options->order));
  if (out_path.empty() || out_path == "-") {
    out << document;
    return kExitOk;
  }
  if (!write_file(out_path, document)) {
    err << "error: cannot write " << out_path << "\n";
    return kExitUnwritable;
  }
  return kExitOk;
}

int run_circuit(const std::string& circuit_path, const std::string& frames_dir, const CommonFlags& flags,
                std::ostream& err) {
  auto options = render_options(flags, err);
  if (!options) return kExitInvalid;
  auto text = read_file(circuit_path);
  if (!text) {
    err << "error: cannot read " << circuit_path << "\n";
    return kExitInvalid;
  }
  auto circuit = parse_circuit(*text);
  report(err, circuit.diagnostics);
  if (!circuit.ok()) return kExitInvalid;

  std::vector<Frame> frames;
  try {
    frames = run(*circuit.value);
  } catch (const CircuitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  std::error_code ec;
  fs::create_directories(frames_dir, ec);
  if (ec || !fs::is_directory(frames_dir)) {
    err << "error: cannot create " << frames_dir << "\n";
    return kExitUnwritable;
  }
  for (const auto& frame : frames) {
    const Diagram diagram = layout(frame.state, options->scale, options->order);
    std::string name = frame_filename(frame.step);
    std::string document;
    if (flags.json) {
      name.replace(name.size() - 4, 4, ".json");
      document = dump_document(to_json(diagram)) + "\n";
    } else {
      document = render(diagram);
    }
    if (!write_file(fs::path(frames_dir) / name, document)) {
      err << "error: cannot write " << (fs::path(frames_dir) / name).string() << "\n";
      return kExitUnwritable;
    }
  }
  if (!write_file(fs::path(frames_dir) / "manifest.json", frames_manifest(frames).dump(2) + "\n")) {
    err << "error: cannot write manifest in " << frames_dir << "\n";
    return kExitUnwritable;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"VENUS diagrams for one- and two-qubit states", "venus"};
  app.require_subcommand(1);

  CommonFlags render_flags;
  std::string state_arg;
  std::string out_path;
  auto* render_cmd = app.add_subcommand("render-state", "Render one state as SVG or diagram JSON");
  render_cmd->add_option("--state", state_arg, "State JSON [[re,im],...] or @file")->required();
  render_cmd->add_option("--out", out_path, "Output path (stdout when omitted)");
  add_common(render_cmd, render_flags);

  CommonFlags circuit_flags;
  std::string circuit_path;
  std::string frames_dir;
  auto* circuit_cmd = app.add_subcommand("run-circuit", "Run a circuit and write one document per frame");
  circuit_cmd->add_option("--circuit", circuit_path, "Circuit JSON file")->required();
  circuit_cmd->add_option("--frames-dir", frames_dir, "Output directory")->required();
  add_common(circuit_cmd, circuit_flags);

  ServeOptions serve_options;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API");
  serve_cmd->add_option("--port", serve_options.port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", serve_options.host, "Bind address");
  serve_cmd->add_option("--static-dir", serve_options.static_dir, "UI bundle directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (render_cmd->parsed()) return render_state(state_arg, out_path, render_flags, out, err);
  if (circuit_cmd->parsed()) return run_circuit(circuit_path, frames_dir, circuit_flags, err);
  return serve(serve_options);
}

}  // namespace venus::cli
