// Command-line front end: kernel evaluation, reproducing integrals, the
// Bergman-Fueter transform (area and contour forms), norms, and the
// verification suite. Prints JSON to stdout; identical argv gives
// byte-identical output. Exit codes: 0 ok, 2 input/module error, 3 when a
// verification suite fails tolerance.

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/transforms.hpp"
#include "bergman/verify.hpp"
#include "function_spec.hpp"

namespace {

using namespace bergman;

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string quat_json(const Quaternion& q) {
  return "[" + fmt(q.w) + "," + fmt(q.x) + "," + fmt(q.y) + "," + fmt(q.z) + "]";
}

std::vector<double> split_numbers(const std::string& s, std::size_t want, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadParameter(std::string(flag) + ": '" + tok + "' is not a number");
    }
  }
  if (out.size() != want)
    throw BadParameter(std::string(flag) + ": expected " + std::to_string(want) +
                       " comma-separated numbers");
  return out;
}

Quaternion parse_quaternion(const std::string& s, const char* flag) {
  const auto v = split_numbers(s, 4, flag);
  return {v[0], v[1], v[2], v[3]};
}

UnitImaginary parse_slice(const std::string& s, const char* flag) {
  const auto v = split_numbers(s, 3, flag);
  return {v[0], v[1], v[2]};
}

Domain parse_domain(const std::string& s) {
  if (s == "ball") return Domain::UnitBall;
  if (s == "halfspace") return Domain::HalfSpace;
  throw BadParameter("--domain: expected 'ball' or 'halfspace'");
}

Weight parse_weight(const std::string& s) {
  if (s == "none") return Weight::None;
  if (s == "rho") return Weight::Rho;
  if (s == "delta") return Weight::Delta;
  throw BadParameter("--weight: expected 'none', 'rho' or 'delta'");
}

std::string slice_json(const UnitImaginary& u) {
  return "[" + fmt(u.x()) + "," + fmt(u.y()) + "," + fmt(u.z()) + "]";
}

struct Output {
  Quaternion value;
  std::optional<std::pair<double, double>> error;  // abs, rel
  std::string rule = "{}";
  std::string extra;  // additional top-level JSON fields, each ",\"k\":v"
  int exit_code = 0;
  bool suppress_value = false;  // verify prints its own shape
  std::string body;             // full body when suppress_value is set
};

std::string render(const Output& o) {
  if (o.suppress_value) return o.body;
  std::string err = "null";
  if (o.error)
    err = "{\"abs\":" + fmt(o.error->first) + ",\"rel\":" + fmt(o.error->second) + "}";
  return "{\"value\":" + quat_json(o.value) + ",\"error\":" + err + o.extra +
         ",\"rule\":" + o.rule + "}";
}

void append_csv(const std::string& path, const std::string& command,
                const std::string& inputs, const Output& o, double ms) {
  const bool fresh = [&] {
    std::ifstream probe(path, std::ios::binary | std::ios::ate);
    return !probe.good() || probe.tellg() == 0;
  }();
  std::ofstream out(path, std::ios::app);
  if (!out) throw BadParameter("--csv: cannot open '" + path + "' for append");
  if (fresh) out << "command,inputs,vw,vx,vy,vz,abs_err,rel_err,ms\n";
  std::string quoted = inputs;
  std::string::size_type pos = 0;
  while ((pos = quoted.find('"', pos)) != std::string::npos) {
    quoted.insert(pos, 1, '"');
    pos += 2;
  }
  out << command << ",\"" << quoted << "\"," << fmt(o.value.w) << "," << fmt(o.value.x)
      << "," << fmt(o.value.y) << "," << fmt(o.value.z) << ",";
  if (o.error) out << fmt(o.error->first) << "," << fmt(o.error->second);
  else out << ",";
  char msbuf[32];
  std::snprintf(msbuf, sizeof(msbuf), "%.3f", ms);
  out << "," << msbuf << "\n";
}

// ---- subcommand option bags -------------------------------------------------

struct KernelOpts {
  std::string kernel, q, r, form;
};

struct ReproduceOpts {
  std::string fn, q, domain = "ball", slice = "1,0,0";
  int nr = 64, ntheta = 128;
  double truncation = 50.0;
};

struct BfOpts {
  std::string fn, q, slice = "1,0,0";
  int nr = 96, ntheta = 192;
};

struct ContourOpts {
  std::string fn, q, slice = "1,0,0";
  double rho = 0.8;
  int nodes = 512;
};

struct NormOpts {
  std::string fn, domain = "ball", weight = "none", kind = "slice", slice = "1,0,0";
  bool half = false, check_divergence = false;
  int nr = 64, ntheta = 128;
  double truncation = 50.0, radius = 1.0;
  std::uint64_t seed = 12345;
  std::int64_t samples = 1000000;
};

struct VerifyOpts {
  std::string suite = "all";
  double tol_scale = 1.0;
};

Output run_kernel(const KernelOpts& o) {
  std::string name = o.kernel;
  if (!o.form.empty()) {
    if (name == "ball" && (o.form == "I" || o.form == "II")) name = "ball_" + o.form;
    else if (name == "halfspace" && (o.form == "A" || o.form == "B"))
      name = "halfspace_" + o.form;
    else
      throw BadParameter("--form: expected I/II with --kernel ball or A/B with halfspace");
  }
  Output out;
  out.value = kernel_eval(kernel_from_name(name),
                          parse_quaternion(o.q, "--q"), parse_quaternion(o.r, "--r"));
  return out;
}

Output run_reproduce(const ReproduceOpts& o) {
  const SliceFunction f = cli::parse_function_spec(o.fn);
  const Domain dom = parse_domain(o.domain);
  const UnitImaginary u = parse_slice(o.slice, "--slice");
  SliceRuleParams p;
  p.n_r = o.nr;
  p.n_theta = o.ntheta;
  p.truncation = o.truncation;
  const TransformReport rep = reproduce(f, parse_quaternion(o.q, "--q"), dom, u, p);
  Output out;
  out.value = rep.value;
  out.error = {{rep.abs_error, rep.rel_error}};
  out.rule = "{\"domain\":\"" + o.domain + "\",\"slice\":" + slice_json(u) +
             ",\"n_r\":" + std::to_string(o.nr) + ",\"n_theta\":" + std::to_string(o.ntheta) +
             "}";
  return out;
}

Output run_bf(const BfOpts& o) {
  const SliceFunction f = cli::parse_function_spec(o.fn);
  const UnitImaginary u = parse_slice(o.slice, "--slice");
  const TransformReport rep =
      bergman_fueter_transform(f, parse_quaternion(o.q, "--q"), u, o.nr, o.ntheta);
  Output out;
  out.value = rep.value;
  out.error = {{rep.abs_error, rep.rel_error}};
  out.rule = "{\"slice\":" + slice_json(u) + ",\"n_r\":" + std::to_string(o.nr) +
             ",\"n_theta\":" + std::to_string(o.ntheta) + "}";
  return out;
}

Output run_contour(const ContourOpts& o) {
  const SliceFunction f = cli::parse_function_spec(o.fn);
  const UnitImaginary u = parse_slice(o.slice, "--slice");
  const TransformReport rep =
      fueter_contour_transform(f, parse_quaternion(o.q, "--q"), u, o.rho, o.nodes);
  Output out;
  out.value = rep.value;
  out.error = {{rep.abs_error, rep.rel_error}};
  out.rule = "{\"slice\":" + slice_json(u) + ",\"rho\":" + fmt(o.rho) +
             ",\"nodes\":" + std::to_string(o.nodes) + "}";
  return out;
}

Output run_norm(const NormOpts& o) {
  const SliceFunction f = cli::parse_function_spec(o.fn);
  const Domain dom = parse_domain(o.domain);
  const Weight w = parse_weight(o.weight);
  const UnitImaginary u = parse_slice(o.slice, "--slice");
  SliceRuleParams p;
  p.n_r = o.nr;
  p.n_theta = o.ntheta;
  p.radius = o.radius;
  p.truncation = o.truncation;
  p.check_divergence = o.check_divergence;

  Output out;
  double norm_sq_value = 0.0;
  if (o.kind == "slice") {
    norm_sq_value = slice_norm_sq(f, dom, u, w, o.half, p);
    out.rule = "{\"kind\":\"slice\",\"weight\":\"" + o.weight +
               "\",\"half\":" + (o.half ? std::string("true") : std::string("false")) +
               ",\"slice\":" + slice_json(u) + ",\"n_r\":" + std::to_string(o.nr) +
               ",\"n_theta\":" + std::to_string(o.ntheta) + "}";
  } else if (o.kind == "volume") {
    if (w == Weight::None) norm_sq_value = volume_norm_sq_reduced(f, dom, u, p);
    else if (w == Weight::Delta) norm_sq_value = delta_volume_norm_sq_reduced(f, dom, u, p);
    else throw BadParameter("--kind volume supports --weight none or delta");
    out.rule = "{\"kind\":\"volume\",\"weight\":\"" + o.weight +
               "\",\"slice\":" + slice_json(u) + ",\"n_r\":" + std::to_string(o.nr) +
               ",\"n_theta\":" + std::to_string(o.ntheta) + "}";
  } else if (o.kind == "mc") {
    if (w != Weight::None) throw BadParameter("--kind mc supports --weight none only");
    const McResult mc = volume_integral_mc(f, dom, o.samples, o.seed, o.truncation);
    norm_sq_value = mc.estimate;
    out.extra = ",\"stderr\":" + fmt(mc.stderr_est) +
                ",\"accepted\":" + std::to_string(mc.accepted);
    out.rule = "{\"kind\":\"mc\",\"samples\":" + std::to_string(o.samples) +
               ",\"seed\":" + std::to_string(o.seed) + "}";
  } else {
    throw BadParameter("--kind: expected 'slice', 'volume' or 'mc'");
  }
  out.value = Quaternion::real(std::sqrt(std::max(norm_sq_value, 0.0)));
  out.extra = ",\"norm_sq\":" + fmt(norm_sq_value) + out.extra;
  return out;
}

Output run_verify(const VerifyOpts& o) {
  const auto checks = verify::run_suite(verify::suite_from_name(o.suite), o.tol_scale);
  int failures = 0;
  std::string body = "{\"suite\":\"" + o.suite + "\",\"tol_scale\":" + fmt(o.tol_scale) +
                     ",\"checks\":[";
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto& c = checks[k];
    if (!c.pass) ++failures;
    if (k) body += ",";
    body += "{\"criterion\":" + std::to_string(c.criterion) + ",\"name\":\"" +
            json_escape(c.name) + "\",\"pass\":" + (c.pass ? "true" : "false") +
            ",\"observed\":" + fmt(c.observed) + ",\"threshold\":" + fmt(c.threshold) +
            ",\"metric\":\"" + json_escape(c.metric) + "\",\"note\":\"" +
            json_escape(c.note) + "\"}";
  }
  body += "],\"failures\":" + std::to_string(failures) + "}";
  Output out;
  out.suppress_value = true;
  out.body = body;
  out.value = Quaternion::real(static_cast<double>(failures));
  out.exit_code = failures > 0 ? 3 : 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic Bergman kernels of the second kind: closed-form kernels, "
               "reproducing integrals, Bergman-Fueter transforms, weighted norms, and a "
               "self-contained verification suite."};
  app.require_subcommand(1);

  std::string csv_path;
  int threads = 0;
  app.add_option("--csv", csv_path, "append a result row to this CSV file");
  app.add_option("--threads", threads,
                 "OpenMP thread count (default: SLICE_BERGMAN_THREADS or all cores)");

  KernelOpts ko;
  auto* kernel_cmd = app.add_subcommand("kernel", "evaluate a closed-form kernel");
  kernel_cmd->fallthrough();
  kernel_cmd->add_option("--kernel", ko.kernel,
                         "disk | ball_I | ball_II | halfspace_A | halfspace_B | q_factor | "
                         "bergman_fueter | ball | halfspace")
      ->required();
  kernel_cmd->add_option("--q", ko.q, "first argument, w,x,y,z")->required();
  kernel_cmd->add_option("--r", ko.r, "second argument, w,x,y,z")->required();
  kernel_cmd->add_option("--form", ko.form, "I/II for ball, A/B for halfspace");

  ReproduceOpts ro;
  auto* rep_cmd = app.add_subcommand("reproduce", "reproducing integral of a function");
  rep_cmd->fallthrough();
  rep_cmd->add_option("--fn", ro.fn, "FunctionSpec JSON")->required();
  rep_cmd->add_option("--q", ro.q, "target point, w,x,y,z")->required();
  rep_cmd->add_option("--domain", ro.domain, "ball | halfspace");
  rep_cmd->add_option("--slice", ro.slice, "integration slice unit, x,y,z");
  rep_cmd->add_option("--nr", ro.nr, "radial node count");
  rep_cmd->add_option("--ntheta", ro.ntheta, "angular node count");
  rep_cmd->add_option("--truncation", ro.truncation, "half-plane truncation radius");

  BfOpts bo;
  auto* bf_cmd = app.add_subcommand("bf-transform", "Bergman-Fueter transform (area form)");
  bf_cmd->fallthrough();
  bf_cmd->add_option("--fn", bo.fn, "FunctionSpec JSON")->required();
  bf_cmd->add_option("--q", bo.q, "target point, w,x,y,z")->required();
  bf_cmd->add_option("--slice", bo.slice, "integration slice unit, x,y,z");
  bf_cmd->add_option("--nr", bo.nr, "radial node count");
  bf_cmd->add_option("--ntheta", bo.ntheta, "angular node count");

  ContourOpts co;
  auto* ct_cmd = app.add_subcommand("contour", "Fueter transform via the contour integral");
  ct_cmd->fallthrough();
  ct_cmd->add_option("--fn", co.fn, "FunctionSpec JSON")->required();
  ct_cmd->add_option("--q", co.q, "target point, w,x,y,z")->required();
  ct_cmd->add_option("--rho", co.rho, "contour radius in (|q|+0.05, 1)");
  ct_cmd->add_option("--nodes", co.nodes, "trapezoid node count");
  ct_cmd->add_option("--slice", co.slice, "contour slice unit, x,y,z");

  NormOpts no;
  auto* norm_cmd = app.add_subcommand("norm", "slice, reduced-volume, or Monte Carlo norms");
  norm_cmd->fallthrough();
  norm_cmd->add_option("--fn", no.fn, "FunctionSpec JSON")->required();
  norm_cmd->add_option("--domain", no.domain, "ball | halfspace");
  norm_cmd->add_option("--weight", no.weight, "none | rho | delta");
  norm_cmd->add_flag("--half", no.half, "integrate over the upper half slice only");
  norm_cmd->add_option("--kind", no.kind, "slice | volume | mc");
  norm_cmd->add_option("--slice", no.slice, "slice unit, x,y,z");
  norm_cmd->add_option("--nr", no.nr, "radial node count");
  norm_cmd->add_option("--ntheta", no.ntheta, "angular node count");
  norm_cmd->add_option("--radius", no.radius, "disk radius for ball slices (0,1]");
  norm_cmd->add_option("--truncation", no.truncation, "half-plane truncation radius");
  norm_cmd->add_option("--seed", no.seed, "Monte Carlo seed");
  norm_cmd->add_option("--samples", no.samples, "Monte Carlo proposal count");
  norm_cmd->add_flag("--check-divergence", no.check_divergence,
                     "recompute at doubled resolution and fail on a >10% jump");

  VerifyOpts vo;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", vo.suite, "all | kernels | transforms | norms | schwarz");
  verify_cmd->add_option("--tol-scale", vo.tol_scale, "multiplier on plain tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cout << "{\"error\":{\"kind\":\"BadParameter\",\"detail\":\""
              << json_escape(e.what()) << "\"}}" << std::endl;
    return 2;
  }

#ifdef _OPENMP
  if (threads <= 0) {
    if (const char* env = std::getenv("SLICE_BERGMAN_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);
#endif

  const auto t0 = std::chrono::steady_clock::now();
  Output out;
  std::string command;
  try {
    if (kernel_cmd->parsed()) {
      command = "kernel";
      out = run_kernel(ko);
    } else if (rep_cmd->parsed()) {
      command = "reproduce";
      out = run_reproduce(ro);
    } else if (bf_cmd->parsed()) {
      command = "bf-transform";
      out = run_bf(bo);
    } else if (ct_cmd->parsed()) {
      command = "contour";
      out = run_contour(co);
    } else if (norm_cmd->parsed()) {
      command = "norm";
      out = run_norm(no);
    } else {
      command = "verify";
      out = run_verify(vo);
    }
  } catch (const Error& e) {
    std::cout << "{\"error\":{\"kind\":\"" << json_escape(e.kind()) << "\",\"detail\":\""
              << json_escape(e.what()) << "\"}}" << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cout << "{\"error\":{\"kind\":\"Error\",\"detail\":\"" << json_escape(e.what())
              << "\"}}" << std::endl;
    return 2;
  }
  const auto t1 = std::chrono::steady_clock::now();

  std::cout << render(out) << std::endl;

  if (!csv_path.empty()) {
    std::string inputs;
    bool skipped_command = false;
    for (int k = 1; k < argc; ++k) {
      const std::string arg = argv[k];
      if (!skipped_command && arg == command) {
        skipped_command = true;
        continue;
      }
      if (!inputs.empty()) inputs += ' ';
      inputs += arg;
    }
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    try {
      append_csv(csv_path, command, inputs, out, ms);
    } catch (const Error& e) {
      std::cerr << e.what() << std::endl;
      return 2;
    }
  }
  return out.exit_code;
}
