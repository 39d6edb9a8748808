// Command-line front end: validate, classify and transform rank-tabulated
// updown categories, compute their generating functions, and reproduce the
// builtin example families.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "updown/updown.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace updown;

struct Source {
  std::string spec_text;
  bool builtin = false;
  Family family = Family::subsets;
  std::uint64_t param = 0;
};

Source parse_source(const std::string& text) {
  Source src;
  src.spec_text = text;
  if (text.rfind("builtin:", 0) != 0) return src;
  src.builtin = true;
  std::string rest = text.substr(8);
  const auto colon = rest.find(':');
  std::string name = rest.substr(0, colon);
  src.family = family_from_name(name);
  if (src.family == Family::base_s) {
    throw UnknownFamily("unknown family 'base-s'");  // internal, not a builtin
  }
  if (colon != std::string::npos) {
    if (!family_has_param(src.family)) {
      throw UnknownFamily("family '" + name + "' takes no parameter");
    }
    src.param = std::stoull(rest.substr(colon + 1));
  } else {
    src.param = family_default_param(src.family);
  }
  return src;
}

/// Loads a table from builtin:NAME[:PARAM] or a JSON file.  For builtins the
/// rank is --max-rank when given, otherwise the family default raised to
/// min_rank (so requested series orders fit without explicit flags).
UpdownTable load_table(const std::string& text, std::optional<std::size_t> max_rank,
                       std::size_t min_rank = 0) {
  const Source src = parse_source(text);
  if (!src.builtin) {
    if (max_rank) {
      throw CLI::ValidationError("--max-rank only applies to builtin sources");
    }
    std::ifstream in(text);
    if (!in) throw UpdownError("cannot open file '" + text + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return io::import_json(buffer.str());
  }
  std::size_t rank = max_rank ? *max_rank : family_default_rank(src.family, src.param);
  if (!max_rank && rank < min_rank) rank = min_rank;
  return catalog::make_family(FamilySpec{src.family, src.param, rank});
}

std::uint64_t cover_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UPDOWN_BUDGET")) {
    return std::stoull(env);
  }
  return kDefaultCoverBudget;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string sequence_text(const std::vector<std::optional<std::uint64_t>>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i] ? std::to_string(*seq[i]) : "-";
  }
  return out;
}

std::string coeff_list(const RationalSeries& series, std::size_t from, std::size_t step,
                       std::size_t max_power) {
  std::string out;
  for (std::size_t k = from; k <= std::min(series.order(), max_power); k += step) {
    if (k != from) out += ',';
    out += format_rational(series[k]);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UpdownError("cannot write file '" + path + "'");
  out << content;
}

int run_validate(const std::string& src, std::optional<std::size_t> max_rank) {
  const UpdownTable table = load_table(src, max_rank);
  const ValidationReport report = validate(table);
  std::cout << "table: " << table.name() << "\n";
  std::cout << "objects: " << table.object_count() << "\n";
  std::cout << "edges: " << table.edge_count() << "\n";
  if (report.ok) {
    std::cout << "result: ok\n";
    return 0;
  }
  std::cout << "result: " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) {
    std::cout << v.axiom << " at " << v.where << ": " << v.message << "\n";
  }
  return 1;
}

int run_classify(const std::string& src, std::optional<std::size_t> max_rank) {
  const UpdownTable table = load_table(src, max_rank);
  const ClassificationFlags flags = classify(table);
  std::cout << "table: " << table.name() << "\n";
  std::cout << "max rank: " << table.max_rank() << "\n";
  std::cout << "univalent: " << yes_no(flags.univalent) << "\n";
  std::cout << "unital: " << yes_no(flags.unital) << "\n";
  std::cout << "simple: " << yes_no(flags.simple) << "\n";
  std::cout << "evenly-up: " << yes_no(flags.evenly_up);
  if (flags.evenly_up && !flags.up_seq.empty()) {
    std::cout << " (u = " << sequence_text(flags.up_seq) << ")";
  }
  std::cout << "\n";
  std::cout << "evenly-down: " << yes_no(flags.evenly_down);
  if (flags.evenly_down && !flags.down_seq.empty()) {
    std::cout << " (d = " << sequence_text(flags.down_seq) << ")";
  }
  std::cout << "\n";
  std::cout << "factorial: " << yes_no(flags.factorial) << "\n";
  return 0;
}

int run_genfunc(const std::string& src, std::optional<std::size_t> max_rank, std::size_t order,
                const std::string& kind, const std::string& format, bool check_closed_form) {
  const bool object_kind = kind == "object";
  const std::size_t min_rank = object_kind ? order : (order + 1) / 2;
  const UpdownTable table = load_table(src, max_rank, min_rank);
  const RationalSeries series =
      object_kind ? object_gf(table, order) : morphism_gf(table, order);

  if (format == "csv") {
    std::cout << "power,coefficient\n";
    for (std::size_t k = 0; k <= series.order(); ++k) {
      std::cout << k << "," << format_rational(series[k]) << "\n";
    }
  } else {
    json doc;
    doc["table"] = table.name();
    doc["kind"] = kind;
    doc["order"] = order;
    json coeffs = json::array();
    for (std::size_t k = 0; k <= series.order(); ++k) {
      coeffs.push_back(format_rational(series[k]));
    }
    doc["coefficients"] = std::move(coeffs);
    std::cout << doc.dump(2) << "\n";
  }

  if (check_closed_form) {
    const Source source = parse_source(src);
    if (!source.builtin) {
      throw CLI::ValidationError("--check-closed-form requires a builtin source");
    }
    const GeneratingPair reference = reference_gf(source.family, source.param, order);
    const RationalSeries& expected = object_kind ? reference.object : reference.morphism;
    for (std::size_t k = 0; k <= order; ++k) {
      if (series[k] != expected[k]) {
        std::cerr << "closed-form mismatch at power " << k << ": computed "
                  << format_rational(series[k]) << ", closed form "
                  << format_rational(expected[k]) << "\n";
        return 1;
      }
    }
    std::cerr << "closed-form check: ok (" << order + 1 << " coefficients)\n";
  }
  return 0;
}

int run_cover(const std::string& src, std::optional<std::size_t> max_rank, std::size_t depth,
              bool fibers, std::optional<std::uint64_t> budget) {
  const UpdownTable table = load_table(src, max_rank, depth);
  const CoverTable cover = universal_cover(table, depth, cover_budget(budget));
  json doc;
  doc["table"] = table.name();
  doc["depth"] = depth;
  json levels = json::array();
  for (std::size_t r = 0; r <= depth; ++r) levels.push_back(cover.level_size(r));
  doc["levels"] = std::move(levels);
  if (fibers) {
    json out = json::array();
    for (std::size_t r = 0; r <= depth; ++r) {
      for (const auto& rec : table.rank(r)) {
        out.push_back(json{{"rank", r},
                           {"index", rec.id.index},
                           {"label", rec.label},
                           {"fiber", cover.fiber(rec.id)}});
      }
    }
    doc["fibers"] = std::move(out);
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_table(std::size_t order) {
  std::cout << "#   family               U    UC   F    object g.f.; morphism g.f. (odd powers)\n";
  std::size_t row = 0;
  for (const FamilySpec& spec : builtin_specs()) {
    const UpdownTable table = catalog::make_family(spec);
    const ClassificationFlags flags = classify(table);
    const std::size_t o_order = std::min(order, table.max_rank());
    const std::size_t m_order = std::min(2 * order + 1, 2 * table.max_rank() - 1);
    const RationalSeries object = object_gf(table, o_order);
    const RationalSeries morphism = morphism_gf(table, m_order);

    std::string name = spec_display(spec);
    name.resize(21, ' ');
    auto flag_cell = [](bool value) {
      std::string cell = value ? "yes" : "no";
      cell.resize(5, ' ');
      return cell;
    };
    std::cout << ++row << (row < 10 ? "   " : "  ") << name << flag_cell(flags.univalent)
              << flag_cell(flags.evenly_up) << flag_cell(flags.factorial)
              << coeff_list(object, 0, 1, o_order) << "; "
              << coeff_list(morphism, 1, 2, m_order) << "\n";
  }
  return 0;
}

int run_product(const std::string& src1, const std::string& src2,
                std::optional<std::size_t> max_rank, const std::string& out_path) {
  const UpdownTable a = load_table(src1, max_rank);
  const UpdownTable b = load_table(src2, max_rank);
  write_file(out_path, io::export_json(product(a, b)));
  return 0;
}

int run_quotient(const std::string& src, std::optional<std::size_t> max_rank,
                 const std::string& dir, const std::string& out_path) {
  const UpdownTable table = load_table(src, max_rank);
  write_file(out_path, io::export_json(dir == "up" ? up_quotient(table) : dn_quotient(table)));
  return 0;
}

int run_wrp(const std::string& src, std::optional<std::size_t> max_rank,
            const std::string& out_path) {
  const UpdownTable table = load_table(src, max_rank);
  const WeightedPoset poset = wrp_export(table);
  json doc;
  doc["name"] = poset.name;
  json objects = json::array();
  for (const auto& level : poset.objects) objects.push_back(level);
  doc["objects"] = std::move(objects);
  json covers = json::array();
  for (const auto& cover : poset.covers) {
    covers.push_back(json{{"src", {cover.src.rank, cover.src.index}},
                          {"dst", {cover.dst.rank, cover.dst.index}},
                          {"weight", cover.weight}});
  }
  doc["covers"] = std::move(covers);
  write_file(out_path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tabulated updown categories: validation, generating functions, covers"};
  app.require_subcommand(1);

  std::string src, src2, kind = "object", format = "csv", dir, out_path;
  std::size_t order = 0;
  std::optional<std::size_t> max_rank;
  std::optional<std::uint64_t> budget;
  bool check_closed_form = false, fibers = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the table-level axioms");
  validate_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  validate_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* genfunc_cmd = app.add_subcommand("genfunc", "object/morphism generating function");
  genfunc_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  genfunc_cmd->add_option("-n,--order", order, "truncation order")->required();
  genfunc_cmd->add_option("--kind", kind, "object|morphism")
      ->check(CLI::IsMember({"object", "morphism"}));
  genfunc_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  genfunc_cmd->add_flag("--check-closed-form", check_closed_form,
                        "compare against the builtin closed form");
  genfunc_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* cover_cmd = app.add_subcommand("cover", "universal cover level sizes");
  cover_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  cover_cmd->add_option("-n,--depth", order, "cover depth")->required();
  cover_cmd->add_flag("--fibers", fibers, "include per-object fiber sizes");
  cover_cmd->add_option("--budget", budget, "cover object budget (default 10^7)");
  cover_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* classify_cmd = app.add_subcommand("classify", "structural classification flags");
  classify_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  classify_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* table_cmd = app.add_subcommand("table", "summary of the ten builtin families");
  table_cmd->add_option("-n,--order", order, "coefficients through this power")->required();

  auto* product_cmd = app.add_subcommand("product", "product of two tables");
  product_cmd->add_option("src1", src, "first factor")->required();
  product_cmd->add_option("src2", src2, "second factor")->required();
  product_cmd->add_option("-o,--output", out_path, "output JSON file")->required();
  product_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* quotient_cmd = app.add_subcommand("quotient", "univalent quotient");
  quotient_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  quotient_cmd->add_option("--dir", dir, "up|dn")
      ->required()
      ->check(CLI::IsMember({"up", "dn"}));
  quotient_cmd->add_option("-o,--output", out_path, "output JSON file")->required();
  quotient_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  auto* wrp_cmd = app.add_subcommand("wrp", "weighted-relation poset export");
  wrp_cmd->add_option("src", src, "FILE or builtin:NAME[:PARAM]")->required();
  wrp_cmd->add_option("-o,--output", out_path, "output JSON file")->required();
  wrp_cmd->add_option("--max-rank", max_rank, "builtin tabulation rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(src, max_rank);
    if (app.got_subcommand(genfunc_cmd)) {
      return run_genfunc(src, max_rank, order, kind, format, check_closed_form);
    }
    if (app.got_subcommand(cover_cmd)) return run_cover(src, max_rank, order, fibers, budget);
    if (app.got_subcommand(classify_cmd)) return run_classify(src, max_rank);
    if (app.got_subcommand(table_cmd)) return run_table(order);
    if (app.got_subcommand(product_cmd)) return run_product(src, src2, max_rank, out_path);
    if (app.got_subcommand(quotient_cmd)) return run_quotient(src, max_rank, dir, out_path);
    if (app.got_subcommand(wrp_cmd)) return run_wrp(src, max_rank, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UpdownError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
