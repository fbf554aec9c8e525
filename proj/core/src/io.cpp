#include "latsens/io.hpp"

#include <fstream>
#include <sstream>

#include "latsens/errors.hpp"
#include "latsens/support.hpp"

namespace latsens {

namespace {

Json point_json(const Point& p) {
  Json arr = Json::array();
  for (int64_t v : p) arr.push_back(v);
  return arr;
}

Point point_from(const Json& j) {
  Point p;
  for (const auto& v : j) p.push_back(v.get<int64_t>());
  return p;
}

Json family_json(const std::vector<BlockMask>& family) {
  // Blocks as 1-based variable lists, e.g. {3,4} for mask 0b1100.
  Json arr = Json::array();
  for (BlockMask b : family) {
    Json vars = Json::array();
    for (int i = 0; i < 32; ++i)
      if ((b >> i) & 1) vars.push_back(i + 1);
    arr.push_back(vars);
  }
  return arr;
}

}  // namespace

// --- truth tables ------------------------------------------------------------

std::string write_truth_table(const TruthTable& f) {
  return "n=" + std::to_string(f.vars()) + "\n" + f.to_hex() + "\n";
}

TruthTable read_truth_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, hex;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
    throw FormatError("truth table must start with an 'n=<k>' line");
  int n = 0;
  try {
    n = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw FormatError("bad variable count in '" + header + "'");
  }
  if (!std::getline(in, hex)) throw FormatError("missing hex line");
  while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' '))
    hex.pop_back();
  return TruthTable::from_hex(n, hex);
}

TruthTable load_truth_table(const std::string& path) {
  return read_truth_table(read_text_file(path));
}

void save_truth_table(const TruthTable& f, const std::string& path) {
  write_text_file(path, write_truth_table(f));
}

// --- coloring specs -----------------------------------------------------------

Json coloring_to_spec(const Coloring& c) {
  Json j;
  j["kind"] = c.kind();
  if (auto* sliced = dynamic_cast<const SlicedColoring*>(&c)) {
    j["d"] = c.dimension();
    Json slices = Json::array();
    for (const auto& s : sliced->slices()) {
      Json js;
      js["axis"] = s.axis;
      js["c"] = s.c;
      js["zeros"] = s.zeros;
      slices.push_back(std::move(js));
    }
    j["slices"] = std::move(slices);
  } else if (auto* mp = dynamic_cast<const MirrorPeriodicColoring*>(&c)) {
    j["b"] = mp->box();
    const auto& cells = mp->cells();
    std::vector<uint64_t> words((cells.size() + 63) / 64, 0);
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i]) words[i / 64] |= uint64_t{1} << (i % 64);
    j["colors"] = hex_from_bits(words, cells.size());
  } else if (auto* rep = dynamic_cast<const RepeatedColoring*>(&c)) {
    j["inner"] = coloring_to_spec(*rep->inner());
    j["copies"] = rep->copies();
  } else if (auto* dbl = dynamic_cast<const DoubledColoring*>(&c)) {
    j["inner"] = coloring_to_spec(*dbl->inner());
  } else if (auto* refl = dynamic_cast<const ReflectedColoring*>(&c)) {
    j["inner"] = coloring_to_spec(*refl->inner());
    j["signs"] = refl->signs();
  } else {
    throw FormatError("coloring kind '" + c.kind() + "' has no file form");
  }
  return j;
}

ColoringPtr coloring_from_spec(const Json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "sliced") {
    const int d = spec.at("d").get<int>();
    std::vector<Slice> slices;
    for (const auto& js : spec.at("slices")) {
      Slice s;
      s.axis = js.at("axis").get<int>();
      s.c = js.at("c").get<int64_t>();
      if (js.contains("zeros"))
        for (const auto& z : js.at("zeros")) s.zeros.push_back(z.get<int>());
      slices.push_back(std::move(s));
    }
    return std::make_shared<SlicedColoring>(d, std::move(slices));
  }
  if (kind == "mirror-periodic") {
    std::vector<int64_t> box;
    for (const auto& b : spec.at("b")) box.push_back(b.get<int64_t>());
    uint64_t cells_n = 1;
    for (int64_t b : box) cells_n *= static_cast<uint64_t>(b + 1);
    auto words =
        bits_from_hex(spec.at("colors").get<std::string>(), cells_n);
    std::vector<uint8_t> cells(cells_n);
    for (uint64_t i = 0; i < cells_n; ++i)
      cells[i] = static_cast<uint8_t>((words[i / 64] >> (i % 64)) & 1);
    return std::make_shared<MirrorPeriodicColoring>(std::move(box),
                                                    std::move(cells));
  }
  if (kind == "repeated") {
    auto inner = coloring_from_spec(spec.at("inner"));
    // File round trips trust the stored structure; the s^R precondition is
    // re-verified by the checks that rely on it.
    return std::make_shared<RepeatedColoring>(std::move(inner),
                                              spec.at("copies").get<int>());
  }
  if (kind == "doubled")
    return std::make_shared<DoubledColoring>(
        coloring_from_spec(spec.at("inner")));
  if (kind == "reflected") {
    std::vector<int> signs;
    for (const auto& s : spec.at("signs")) signs.push_back(s.get<int>());
    return std::make_shared<ReflectedColoring>(
        coloring_from_spec(spec.at("inner")), std::move(signs));
  }
  throw FormatError("unknown coloring kind '" + kind + "'");
}

std::string write_coloring_spec(const Coloring& c) {
  return coloring_to_spec(c).dump();
}

ColoringPtr read_coloring_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad coloring spec: ") + e.what());
  }
  return coloring_from_spec(j);
}

ColoringPtr load_coloring_spec(const std::string& path) {
  return read_coloring_spec(read_text_file(path));
}

std::string fingerprint_of(const TruthTable& f) {
  return "fnv1a:" + to_hex16(f.fingerprint());
}

std::string fingerprint_of(const Coloring& c) {
  return "fnv1a:" + to_hex16(fnv1a64(write_coloring_spec(c)));
}

// --- report fragments ----------------------------------------------------------

Json to_json(const SensitivitySummary& s) {
  Json j;
  j["s"] = s.s;
  j["s0"] = s.s0;
  j["s1"] = s.s1;
  j["s_witness"] = s.s_witness;
  if (s.s0_witness) j["s0_witness"] = *s.s0_witness;
  if (s.s1_witness) j["s1_witness"] = *s.s1_witness;
  return j;
}

Json to_json(const MeasureReport& m) {
  Json j;
  j["n"] = m.n;
  j["sensitivity"] = to_json(m.sens);
  j["bs"] = m.bs;
  j["bs_witness_input"] = m.bs_witness.input;
  j["bs_witness_blocks"] = family_json(m.bs_witness.family);
  Json bsl = Json::object();
  for (const auto& [l, v] : m.bs_l) bsl[std::to_string(l)] = v;
  j["bs_l"] = std::move(bsl);
  Json bslw = Json::object();
  for (const auto& [l, w] : m.bs_l_witness) bslw[std::to_string(l)] = w;
  j["bs_l_witness_input"] = std::move(bslw);
  j["block_size_cap"] = m.block_size_cap_used;
  return j;
}

Json to_json(const ColoringReport& r) {
  Json j;
  j["d"] = r.d;
  j["mode"] = to_string(r.mode);
  j["s"] = r.s;
  j["r"] = r.r;
  j["sR"] = r.sR;
  j["sB"] = r.sB;
  if (r.min_width_k) j["min_width"] = *r.min_width_k;
  j["s_witness"] = point_json(r.s_witness.where);
  j["r_witness"] = point_json(r.r_witness.where);
  if (r.sR_witness) j["sR_witness"] = point_json(r.sR_witness->where);
  if (r.sB_witness) j["sB_witness"] = point_json(r.sB_witness->where);
  j["points"] = r.points;
  j["probes"] = r.probes;
  return j;
}

namespace {

Json axis_blue_json(const AxisBlue& ab) {
  Json j;
  j["axis"] = ab.axis;  // 1-based in reports
  j["distance"] = ab.distance;
  j["sign"] = ab.sign;
  j["point"] = point_json(ab.point);
  j["blue_on_minus"] = ab.blue_minus;
  return j;
}

AxisBlue axis_blue_from(const Json& j) {
  AxisBlue ab;
  ab.axis = j.at("axis").get<int>();
  ab.distance = j.at("distance").get<int64_t>();
  ab.sign = j.at("sign").get<int>();
  ab.point = point_from(j.at("point"));
  ab.blue_minus = j.value("blue_on_minus", false);
  return ab;
}

}  // namespace

Json to_json(const MinWidthResult& w) {
  Json j;
  j["k"] = w.k;
  Json per_axis = Json::array();
  for (const auto& ab : w.nearest) per_axis.push_back(axis_blue_json(ab));
  j["nearest_blue"] = std::move(per_axis);
  return j;
}

Json to_json(const NontrivialityReport& n) {
  Json j;
  j["passed"] = n.passed;
  j["origin_red"] = n.origin_red;
  if (n.width) j["min_width"] = to_json(*n.width);
  if (!n.failure.empty()) j["failure"] = n.failure;
  j["cap_exhausted"] = n.cap_exhausted;
  return j;
}

Json to_json(const KKCheckReport& r) {
  Json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["bs"] = r.bs;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ji;
    ji["l"] = item.l;
    ji["bs_l"] = item.bs_l;
    ji["bound"] = item.bound.str();  // exact rational as "p/q"
    ji["bound_approx"] = static_cast<double>(item.bound);
    ji["holds"] = item.holds;
    items.push_back(std::move(ji));
  }
  j["items"] = std::move(items);
  j["corollary_rhs"] = r.corollary_rhs;
  j["corollary_holds"] = r.corollary_holds;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const LatticeLowerBoundReport& r) {
  Json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["s"] = r.s;
  j["r"] = r.r;
  j["bound"] = r.bound;
  j["holds_r"] = r.holds_r;
  j["holds_s"] = r.holds_s;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const BoundCheckReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ji;
    ji["check"] = item.name;
    ji["lhs"] = item.lhs;
    ji["relation"] = item.relation;
    ji["rhs"] = item.rhs;
    ji["holds"] = item.holds;
    if (!item.basis.empty()) ji["basis"] = item.basis;
    items.push_back(std::move(ji));
  }
  j["items"] = std::move(items);
  j["passed"] = r.passed;
  return j;
}

Json to_json(const RepeatedBoundReport& r) {
  Json j = to_json(r.checks);
  j["sR"] = r.sR;
  j["sR_basis"] = r.sR_basis;
  j["sB"] = r.sB;
  j["sB_basis"] = r.sB_basis;
  j["palvolgyi_instance_holds"] = r.palvolgyi_instance_holds;
  return j;
}

Json to_json(const Inequality& q) {
  Json j;
  j["name"] = q.name;
  j["lhs"] = q.lhs;
  j["relation"] = q.relation;
  j["rhs"] = q.rhs;
  j["holds"] = q.holds;
  return j;
}

Json to_json(const ReductionCertificate& c) {
  Json j;
  j["direction"] = c.direction;
  j["source_fingerprint"] = c.source_fingerprint;
  j["target_fingerprint"] = c.target_fingerprint;
  j["bit_order"] = c.bit_order;
  j["coloring_spec"] = Json::parse(c.coloring_spec);
  j["s_check_mode"] = c.s_check_mode;
  j["function_vars"] = c.function_vars;
  j["function_explicit"] = c.function_explicit;
  j["function_hex"] = c.function_hex;
  j["output_complemented"] = c.output_complemented;
  j["x_star"] = c.x_star;
  j["blocks"] = family_json(c.blocks);
  Json masks = Json::array();
  for (BlockMask b : c.blocks) masks.push_back(b);
  j["block_masks"] = std::move(masks);
  j["reflection_signs"] = c.reflection_signs;
  j["block_sizes"] = c.block_sizes;
  j["min_width"] = c.min_width_k;
  j["s_f"] = c.s_f;
  j["s_f_witness"] = c.s_f_witness;
  j["s_C"] = c.s_C;
  j["s_C_witness"] = point_json(c.s_C_witness);
  j["r_C"] = c.r_C;
  j["r_C_witness"] = point_json(c.r_C_witness);
  Json blues = Json::array();
  for (const auto& ab : c.axis_blues) blues.push_back(axis_blue_json(ab));
  j["axis_blues"] = std::move(blues);
  Json ineqs = Json::array();
  for (const auto& q : c.inequalities) ineqs.push_back(to_json(q));
  j["inequalities"] = std::move(ineqs);
  return j;
}

ReductionCertificate certificate_from_json(const Json& j) {
  ReductionCertificate c;
  c.direction = j.at("direction").get<std::string>();
  c.source_fingerprint = j.at("source_fingerprint").get<std::string>();
  c.target_fingerprint = j.at("target_fingerprint").get<std::string>();
  c.bit_order = j.at("bit_order").get<std::string>();
  c.coloring_spec = j.at("coloring_spec").dump();
  c.s_check_mode = j.at("s_check_mode").get<std::string>();
  c.function_vars = j.at("function_vars").get<int>();
  c.function_explicit = j.at("function_explicit").get<bool>();
  c.function_hex = j.at("function_hex").get<std::string>();
  c.output_complemented = j.at("output_complemented").get<bool>();
  c.x_star = j.at("x_star").get<uint64_t>();
  for (const auto& m : j.at("block_masks"))
    c.blocks.push_back(m.get<BlockMask>());
  for (const auto& s : j.at("reflection_signs"))
    c.reflection_signs.push_back(s.get<int>());
  for (const auto& b : j.at("block_sizes"))
    c.block_sizes.push_back(b.get<int64_t>());
  c.min_width_k = j.at("min_width").get<int64_t>();
  c.s_f = j.at("s_f").get<int>();
  c.s_f_witness = j.at("s_f_witness").get<uint64_t>();
  c.s_C = j.at("s_C").get<int>();
  c.s_C_witness = point_from(j.at("s_C_witness"));
  c.r_C = j.at("r_C").get<int>();
  c.r_C_witness = point_from(j.at("r_C_witness"));
  for (const auto& ab : j.at("axis_blues"))
    c.axis_blues.push_back(axis_blue_from(ab));
  for (const auto& q : j.at("inequalities")) {
    Inequality iq;
    iq.name = q.at("name").get<std::string>();
    iq.lhs = q.at("lhs").get<long long>();
    iq.rhs = q.at("rhs").get<long long>();
    iq.relation = q.at("relation").get<std::string>();
    iq.holds = q.at("holds").get<bool>();
    c.inequalities.push_back(std::move(iq));
  }
  return c;
}

std::string write_certificate(const ReductionCertificate& c) {
  return to_json(c).dump(2) + "\n";
}

ReductionCertificate read_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

Json to_json(const SeparationRecord& r) {
  Json j;
  j["n"] = r.n;
  j["table"] = r.table_hex;
  j["fingerprint"] = "fnv1a:" + to_hex16(r.fingerprint);
  j["s"] = r.s;
  j["bs"] = r.bs;
  j["ratio"] = r.ratio;
  j["witness_input"] = r.witness_input;
  j["witness_blocks"] = family_json(r.witness_family);
  return j;
}

Json to_json(const ScanResult& r) {
  Json j;
  j["n"] = r.n;
  j["functions_scanned"] = r.functions_scanned;
  j["seed"] = r.seed;
  Json best = Json::array();
  for (size_t s = 0; s < r.best_by_s.size(); ++s)
    if (r.best_by_s[s]) {
      Json item = to_json(*r.best_by_s[s]);
      best.push_back(std::move(item));
    }
  j["best_by_s"] = std::move(best);
  Json viol = Json::array();
  for (const auto& rec : r.tripwire_violations) viol.push_back(to_json(rec));
  j["tripwire_violations"] = std::move(viol);
  if (const auto* b = r.best_separation()) j["best_separation"] = to_json(*b);
  return j;
}

std::string records_to_jsonl(const ScanResult& r) {
  std::string out;
  for (const auto& rec : r.best_by_s)
    if (rec) out += to_json(*rec).dump() + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace latsens
