#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fibrect/decimal.hpp"
#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"
#include "fibrect/tiling.hpp"

namespace fibrect {

// ---------------------------------------------------------------------------
// Canonical JSON
//
//   {"width":"W","length":"L","squares":[{"index":0,"x":"0","y":"0","side":"s"},...]}
//
// Compact, keys in this order, squares in placement order, scalars in exact
// text form. Prefix tilings append "partial":true.
// ---------------------------------------------------------------------------

template <ExactScalar S>
std::string to_json(const BasicTiling<S>& t) {
  nlohmann::ordered_json doc;
  doc["width"] = t.width().to_string();
  doc["length"] = t.length().to_string();
  auto squares = nlohmann::ordered_json::array();
  for (const auto& s : t.squares()) {
    nlohmann::ordered_json j;
    j["index"] = s.index;
    j["x"] = s.x.to_string();
    j["y"] = s.y.to_string();
    j["side"] = s.side.to_string();
    squares.push_back(std::move(j));
  }
  doc["squares"] = std::move(squares);
  if (t.partial()) doc["partial"] = true;
  return doc.dump();
}

namespace detail {

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return obj.at(key);
}

template <ExactScalar S>
S scalar_member(const nlohmann::json& obj, const char* key) {
  const auto& v = member(obj, key);
  if (!v.is_string())
    throw ParseError(std::string("key '") + key + "' must be a string");
  return S::parse(v.get<std::string>());
}

inline nlohmann::json parse_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

template <ExactScalar S>
BasicTiling<S> tiling_from_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("tiling must be a JSON object");
  S width = scalar_member<S>(doc, "width");
  S length = scalar_member<S>(doc, "length");
  const auto& arr = member(doc, "squares");
  if (!arr.is_array()) throw ParseError("'squares' must be an array");
  bool partial = false;
  if (doc.contains("partial")) {
    if (!doc["partial"].is_boolean()) throw ParseError("'partial' must be a boolean");
    partial = doc["partial"].get<bool>();
  }

  std::vector<BasicSquare<S>> squares;
  squares.reserve(arr.size());
  std::vector<std::string> failed;
  for (const auto& j : arr) {
    const auto& idx = member(j, "index");
    if (!idx.is_number_unsigned()) throw ParseError("'index' must be a non-negative integer");
    squares.push_back({scalar_member<S>(j, "x"), scalar_member<S>(j, "y"),
                       scalar_member<S>(j, "side"), idx.get<std::size_t>()});
    if (squares.back().index != squares.size() - 1 &&
        (failed.empty() || failed.back() != "index"))
      failed.push_back("index");
  }

  if (sign(width) <= 0 || sign(length) <= 0) {
    failed.insert(failed.begin(), "dimensions");
    throw InvariantViolation(failed);
  }
  BasicTiling<S> t(std::move(width), std::move(length), std::move(squares), partial);
  const auto report = verify(t);
  if (!report.containment) failed.push_back("containment");
  if (!report.disjointness) failed.push_back("disjointness");
  if (!partial && !report.area) failed.push_back("area");
  if (!failed.empty()) throw InvariantViolation(failed);
  return t;
}

inline bool mentions_sqrt5(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>().find("sqrt5") != std::string::npos;
  if (j.is_structured()) {
    for (const auto& item : j)
      if (mentions_sqrt5(item)) return true;
  }
  return false;
}

}  // namespace detail

/// Parses and re-validates a tiling. Partial tilings are checked for
/// containment and disjointness only.
template <ExactScalar S = Rational>
BasicTiling<S> from_json(std::string_view text) {
  return detail::tiling_from_document<S>(detail::parse_document(text));
}

using AnyTiling = std::variant<Tiling, QuadTiling>;

/// Like from_json, choosing QuadTiling when any scalar is written in Q(√5)
/// form.
inline AnyTiling from_json_any(std::string_view text) {
  const auto doc = detail::parse_document(text);
  if (detail::mentions_sqrt5(doc))
    return detail::tiling_from_document<QuadraticNumber>(doc);
  return detail::tiling_from_document<Rational>(doc);
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

struct RenderOptions {
  std::int64_t scale = 1;  // pixels per unit after clearing denominators
  std::string palette = "default";
  std::int64_t stroke_width = 1;
};

inline constexpr std::size_t kApproxSqrt5Digits = 50;

/// Built-in palettes, 12 colours each, cycled by placement index.
inline const std::vector<std::string>& palette_colors(std::string_view name) {
  static const std::vector<std::string> kDefault = {
      "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};
  static const std::vector<std::string> kPastel = {
      "#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4", "#fed9a6", "#ffffcc",
      "#e5d8bd", "#fddaec", "#f2f2f2", "#b3e2cd", "#fdcdac", "#cbd5e8"};
  static const std::vector<std::string> kGray = {
      "#111111", "#262626", "#3b3b3b", "#505050", "#656565", "#7a7a7a",
      "#8f8f8f", "#a4a4a4", "#b9b9b9", "#cecece", "#e3e3e3", "#f8f8f8"};
  if (name == "default") return kDefault;
  if (name == "pastel") return kPastel;
  if (name == "grayscale") return kGray;
  throw InvalidOptions("unknown palette '" + std::string(name) + "'");
}

inline void validate(const RenderOptions& opts) {
  if (opts.scale < 1) throw InvalidOptions("scale must be >= 1");
  if (opts.stroke_width < 1) throw InvalidOptions("stroke_width must be >= 1");
  palette_colors(opts.palette);
}

namespace detail {

struct PixelRect {
  BigInt x, y, w, h;
};

inline void write_svg(std::ostringstream& os, const BigInt& width_px,
                      const BigInt& height_px, const std::vector<PixelRect>& rects,
                      const RenderOptions& opts, bool approximate) {
  const auto& colors = palette_colors(opts.palette);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width_px << "\" height=\"" << height_px << "\" viewBox=\"0 0 "
     << width_px << " " << height_px << "\">\n";
  if (approximate)
    os << "<!-- approximate: sqrt5 replaced by a " << kApproxSqrt5Digits
       << "-digit decimal, coordinates rounded half-even to the pixel grid -->\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width_px << "\" height=\""
     << height_px << "\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& r = rects[i];
    os << "<rect x=\"" << r.x << "\" y=\"" << r.y << "\" width=\"" << r.w
       << "\" height=\"" << r.h << "\" fill=\"" << colors[i % colors.size()]
       << "\" stroke=\"#000000\" stroke-width=\"" << opts.stroke_width << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace detail

/// Rational tilings: every coordinate is multiplied by the LCM of all
/// denominators and then by opts.scale, so the output is pixel-exact.
inline std::string to_svg(const Tiling& t, const RenderOptions& opts = {}) {
  validate(opts);
  const auto report = verify(t);
  if (!(t.partial() ? report.sound() : report.certified()))
    throw VerificationFailed("tiling does not pass verification");

  BigInt m = 1;
  const auto absorb = [&m](const Rational& v) {
    m = boost::multiprecision::lcm(m, v.denominator());
  };
  absorb(t.width());
  absorb(t.length());
  for (const auto& s : t.squares()) {
    absorb(s.x);
    absorb(s.y);
    absorb(s.side);
  }
  const Rational factor(m * opts.scale);
  const auto px = [&factor](const Rational& v) { return (v * factor).numerator(); };

  std::vector<detail::PixelRect> rects;
  rects.reserve(t.squares().size());
  for (const auto& s : t.squares()) {
    const BigInt side = px(s.side);
    rects.push_back({px(s.x), px(t.width() - s.y - s.side), side, side});
  }
  std::ostringstream os;
  detail::write_svg(os, px(t.length()), px(t.width()), rects, opts, false);
  return os.str();
}

/// Q(√5) tilings have no exact pixel grid: √5 is replaced by a 50-digit
/// decimal and each edge is rounded half-even, so adjacent squares still
/// share edges. The document carries an "approximate" comment.
inline std::string to_svg(const QuadTiling& t, const RenderOptions& opts = {}) {
  validate(opts);
  const auto report = verify(t);
  if (!(t.partial() ? report.sound() : report.certified()))
    throw VerificationFailed("tiling does not pass verification");

  const Rational scale(opts.scale);
  const auto px = [&scale](const QuadraticNumber& v) {
    return round_half_even(approximate(v, kApproxSqrt5Digits) * scale);
  };
  std::vector<detail::PixelRect> rects;
  rects.reserve(t.squares().size());
  for (const auto& s : t.squares()) {
    const BigInt left = px(s.x);
    const BigInt right = px(s.x + s.side);
    const BigInt top = px(t.width() - s.y - s.side);
    const BigInt bottom = px(t.width() - s.y);
    rects.push_back({left, top, right - left, bottom - top});
  }
  std::ostringstream os;
  detail::write_svg(os, px(t.length()), px(t.width()), rects, opts, true);
  return os.str();
}

}  // namespace fibrect
