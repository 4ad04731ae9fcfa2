#pragma once

// Command-line front end. Kept in a header so tests can drive `run`
// in-process; tools/fibrect.cpp is a thin main() around it.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 verification or
// classification-budget failure. Errors go to stderr as one JSON line.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fibrect/cutoff.hpp"
#include "fibrect/decimal.hpp"
#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"
#include "fibrect/fibonacci.hpp"
#include "fibrect/render.hpp"
#include "fibrect/tiling.hpp"

namespace fibrect::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailure = 2 };

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IOError", what) {}
};

using AnyState = std::variant<RectState<Rational>, RectState<QuadraticNumber>>;

/// Rational text, or "a+b*sqrt5".
inline std::variant<Rational, QuadraticNumber> parse_scalar(const std::string& text) {
  if (text.find("sqrt5") != std::string::npos) return QuadraticNumber::parse(text);
  return Rational::parse(text);
}

/// Builds a state from two scalars, promoting both to Q(√5) if either is.
inline AnyState make_state(const std::string& w_text, const std::string& l_text,
                           bool normalize) {
  auto w = parse_scalar(w_text);
  auto l = parse_scalar(l_text);
  if (std::holds_alternative<Rational>(w) && std::holds_alternative<Rational>(l)) {
    Rational rw = std::get<Rational>(w), rl = std::get<Rational>(l);
    if (normalize && rl < rw) std::swap(rw, rl);
    return RectState<Rational>(rw, rl);
  }
  const auto lift = [](const std::variant<Rational, QuadraticNumber>& v) {
    return std::visit([](const auto& x) { return QuadraticNumber(x); }, v);
  };
  QuadraticNumber qw = lift(w), ql = lift(l);
  if (normalize && ql < qw) std::swap(qw, ql);
  return RectState<QuadraticNumber>(qw, ql);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline int exit_code_for(const Error& e) {
  if (dynamic_cast<const VerificationFailed*>(&e) ||
      dynamic_cast<const StepBudgetExhausted*>(&e) ||
      dynamic_cast<const InvariantViolation*>(&e))
    return kVerificationFailure;
  return kInvalidInput;
}

inline void report_error(std::ostream& err, const std::string& kind,
                         const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

namespace detail {

inline Json classification_json(const Classification& c) {
  Json j;
  if (c.is_golden()) {
    j["verdict"] = "golden";
  } else {
    j["verdict"] = "fails";
    j["step"] = c.step;
    j["mode"] = to_string(c.mode);
  }
  return j;
}

template <ExactScalar S>
void emit_tiling(std::ostream& out, const BasicTiling<S>& t,
                 const std::optional<std::string>& path) {
  const std::string text = to_json(t);
  if (!path) {
    out << text << "\n";
    return;
  }
  write_file(*path, text + "\n");
  const auto report = verify(t);
  Json j;
  j["out"] = *path;
  j["squares"] = t.squares().size();
  j["certified"] = report.certified();
  j["partial"] = t.partial();
  out << j.dump() << "\n";
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact golden-ratio rectangles: Fibonacci identities, the "
               "square cut-off process and spiral square pavings.",
               "fibrect"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::int64_t n = 0;
  std::int64_t count = 0;
  bool check = false;

  auto* identity = app.add_subcommand("identity", "Sum-of-squares identity for n");
  identity->add_option("--n", n, "Index n >= 0")->required();

  auto* convergents = app.add_subcommand("convergents", "Ratios f(k+1)/f(k), k < count");
  convergents->add_option("--count", count, "Number of convergents")->required();

  auto* sandwich_cmd = app.add_subcommand("sandwich", "Convergents 0..n as bounds on the golden ratio");
  sandwich_cmd->add_option("--n", n, "Last index")->required();

  auto* matrix = app.add_subcommand("matrix", "Closed form of M^n");
  matrix->add_option("--n", n, "Power n >= 1")->required();
  matrix->add_flag("--check", check, "Compare with repeated multiplication");

  std::optional<std::string> ratio, quad;
  std::vector<std::string> rect;
  bool golden = false, normalize = false;
  std::size_t max_steps = kDefaultStepBudget;
  std::optional<std::size_t> decimal;
  auto* classify_cmd = app.add_subcommand("classify", "Classify an aspect ratio L/W");
  auto* ratio_opt = classify_cmd->add_option("--ratio", ratio, "Rational L/W as p/q");
  auto* golden_opt = classify_cmd->add_flag("--golden", golden, "The golden ratio, exactly");
  auto* quad_opt = classify_cmd->add_option("--quad", quad, "L/W = (a/b) + (c/d)*sqrt5, written a/b,c/d");
  auto* rect_opt = classify_cmd->add_option("--rect", rect, "Width and length")->expected(2);
  ratio_opt->excludes(golden_opt, quad_opt, rect_opt);
  golden_opt->excludes(quad_opt, rect_opt);
  quad_opt->excludes(rect_opt);
  classify_cmd->add_option("--max-steps", max_steps, "Iteration budget (>= 1)");
  classify_cmd->add_flag("--normalize", normalize, "Swap sides so that W <= L");
  classify_cmd->add_option("--decimal", decimal, "Also show L/W with this many decimals");

  std::optional<std::string> out_path;
  std::string width_text, length_text;
  std::size_t prefix_k = 0;
  auto* tile = app.add_subcommand("tile", "Generate square pavings");
  tile->require_subcommand(1);
  auto* tile_fib = tile->add_subcommand("fib", "Paving of the f(n) x f(n+1) rectangle");
  tile_fib->add_option("--n", n, "Index n >= 0")->required();
  tile_fib->add_option("--out", out_path, "Write the tiling JSON here");
  auto* tile_rect = tile->add_subcommand("rect", "Greedy spiral paving of a rational rectangle");
  tile_rect->add_option("--width", width_text, "Width W (vertical)")->required();
  tile_rect->add_option("--length", length_text, "Length L (horizontal)")->required();
  tile_rect->add_option("--out", out_path, "Write the tiling JSON here");
  tile_rect->add_flag("--normalize", normalize, "Swap sides so that W <= L");
  auto* tile_prefix = tile->add_subcommand("prefix", "First k squares of a cut-off paving");
  auto* prefix_golden = tile_prefix->add_flag("--golden", golden, "The 1 x golden-ratio rectangle");
  auto* prefix_rect = tile_prefix->add_option("--rect", rect, "Width and length")->expected(2);
  prefix_golden->excludes(prefix_rect);
  tile_prefix->add_option("--k", prefix_k, "Number of squares")->required();
  tile_prefix->add_option("--out", out_path, "Write the tiling JSON here");

  std::string in_path, svg_path;
  RenderOptions options;
  auto* render = app.add_subcommand("render", "Render a tiling JSON file to SVG");
  render->add_option("--in", in_path, "Tiling JSON")->required();
  render->add_option("--out", svg_path, "SVG output path")->required();
  render->add_option("--scale", options.scale, "Pixels per unit after clearing denominators");
  render->add_option("--palette", options.palette, "default, pastel or grayscale");
  render->add_option("--stroke-width", options.stroke_width, "Stroke width in pixels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "ArgumentError", e.what());
    return kInvalidInput;
  }

  try {
    if (identity->parsed()) {
      const auto r = sum_of_squares(n);
      Json j;
      j["n"] = n;
      j["lhs"] = r.lhs.str();
      j["rhs"] = r.rhs.str();
      j["equal"] = r.equal;
      out << j.dump() << "\n";
      return r.equal ? kOk : kVerificationFailure;
    }

    if (convergents->parsed()) {
      if (count < 0) throw IndexOutOfRange("count must be >= 0");
      Json list = Json::array();
      for (std::int64_t k = 0; k < count; ++k) list.push_back(convergent(k).to_string());
      Json j;
      j["count"] = count;
      j["convergents"] = std::move(list);
      out << j.dump() << "\n";
      return kOk;
    }

    if (sandwich_cmd->parsed()) {
      const auto entries = sandwich(n);
      Json list = Json::array();
      for (const auto& e : entries) {
        Json item;
        item["value"] = e.value.to_string();
        item["side"] = to_string(e.side);
        list.push_back(std::move(item));
      }
      const bool consistent = sandwich_consistent(entries);
      Json j;
      j["n"] = n;
      j["entries"] = std::move(list);
      j["consistent"] = consistent;
      out << j.dump() << "\n";
      return consistent ? kOk : kVerificationFailure;
    }

    if (matrix->parsed()) {
      const auto closed = mat_power_closed(n);
      Json j;
      j["n"] = n;
      j["matrix"] = closed.to_string();
      j["det"] = closed.det().str();
      bool ok = true;
      if (check) {
        const auto iter = mat_power_iter(n);
        ok = iter == closed;
        j["iterated"] = iter.to_string();
        j["equal"] = ok;
      }
      out << j.dump() << "\n";
      return ok ? kOk : kVerificationFailure;
    }

    if (classify_cmd->parsed()) {
      AnyState state = RectState<Rational>(1, 2);
      if (golden) {
        state = RectState<QuadraticNumber>(1, QuadraticNumber::phi());
      } else if (ratio) {
        state = make_state("1", *ratio, normalize);
      } else if (quad) {
        const auto comma = quad->find(',');
        if (comma == std::string::npos)
          throw ParseError("--quad expects a/b,c/d");
        const QuadraticNumber q(Rational::parse(quad->substr(0, comma)),
                                Rational::parse(quad->substr(comma + 1)));
        state = make_state("1", q.to_string(), normalize);
      } else if (rect.size() == 2) {
        state = make_state(rect[0], rect[1], normalize);
      } else {
        throw ParseError("classify needs one of --ratio, --golden, --quad, --rect");
      }
      if (max_steps < 1) throw ParseError("--max-steps must be >= 1");
      Json j = std::visit(
          [&](const auto& r) {
            Json result = detail::classification_json(classify(r, max_steps));
            if (decimal) result["ratio_decimal"] = to_decimal_string(r.l() / r.w(), *decimal);
            return result;
          },
          state);
      out << j.dump() << "\n";
      return kOk;
    }

    if (tile_fib->parsed()) {
      detail::emit_tiling(out, fibonacci_tiling(n), out_path);
      return kOk;
    }

    if (tile_rect->parsed()) {
      Rational w = Rational::parse(width_text), l = Rational::parse(length_text);
      if (normalize && l < w) std::swap(w, l);
      detail::emit_tiling(out, pave(w, l), out_path);
      return kOk;
    }

    if (tile_prefix->parsed()) {
      AnyState state = RectState<QuadraticNumber>(1, QuadraticNumber::phi());
      if (!golden) {
        if (rect.size() != 2) throw ParseError("prefix needs --golden or --rect W L");
        state = make_state(rect[0], rect[1], false);
      }
      std::visit([&](const auto& r) { detail::emit_tiling(out, pave_prefix(r, prefix_k), out_path); },
                 state);
      return kOk;
    }

    if (render->parsed()) {
      const auto tiling = from_json_any(read_file(in_path));
      const std::string svg =
          std::visit([&](const auto& t) { return to_svg(t, options); }, tiling);
      write_file(svg_path, svg);
      Json j;
      j["out"] = svg_path;
      j["squares"] = std::visit([](const auto& t) { return t.squares().size(); }, tiling);
      j["approximate"] = std::holds_alternative<QuadTiling>(tiling);
      out << j.dump() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code_for(e);
  }
  report_error(err, "ArgumentError", "no command");
  return kInvalidInput;
}

}  // namespace fibrect::cli
