#include "bracekit/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bracekit/brace.hpp"
#include "bracekit/error.hpp"
#include "bracekit/group.hpp"
#include "bracekit/ideals.hpp"
#include "bracekit/io.hpp"
#include "bracekit/translation.hpp"
#include "bracekit/ybe.hpp"

namespace bracekit {

namespace {

using OrderedJson = nlohmann::ordered_json;

/// Bad invocation (exit 2), as opposed to a domain Error (exit 1).
struct UsageError {
  std::string message;
};

int default_max_order() {
  if (const char* env = std::getenv("BRACEKIT_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1000000) return static_cast<int>(v);
  }
  return 16;
}

/// Order claimed by a group/brace/ybe header, or -1 when unreadable (the
/// real parser then reports the problem).  Lets the order gate run before
/// any table is validated.
int sniff_order(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size()) return -1;
  if (text[i] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      if (j.contains("n") && j["n"].is_number_integer()) return j["n"].get<int>();
    } catch (...) {
    }
    return -1;
  }
  while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) return -1;
  try {
    return std::stoi(text.substr(start, i - start));
  } catch (...) {
    return -1;
  }
}

std::string join_indices(const std::vector<int>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                      std::ostream& err) {
  CommandResult result;
  result.status = "ok";

  CLI::App app{"workbench for finite skew left braces and their Yang-Baxter solutions"};
  app.name("bracekit");
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  int max_order = default_max_order();
  app.add_option("--max-order", max_order,
                 "largest accepted order (env BRACEKIT_MAX_ORDER, default 16)")
      ->check(CLI::PositiveNumber);
  std::string labels_name;
  app.add_option("--labels", labels_name, "label elements like this named group in text output");

  std::string verify_file, opposite_file, ybe_file, ideals_file, grouplikes_file, pairs_file,
      selfopp_file, translate_file;
  bool check_inverse = false;
  std::string translate_group, translate_subgroup, enumerate_circle, example_name, example_group;

  CLI::App* cmd_verify = app.add_subcommand("verify", "check the brace axioms of a brace file");
  cmd_verify->add_option("file", verify_file, "brace file (default stdin)");
  CLI::App* cmd_opposite = app.add_subcommand("opposite", "write the opposite brace");
  cmd_opposite->add_option("file", opposite_file, "brace file (default stdin)");
  CLI::App* cmd_ybe = app.add_subcommand("ybe", "write the Yang-Baxter solution of a brace");
  cmd_ybe->add_option("file", ybe_file, "brace file (default stdin)");
  cmd_ybe->add_flag("--check-inverse", check_inverse,
                    "also verify the opposite brace's solution is the two-sided inverse");
  CLI::App* cmd_ideals = app.add_subcommand("ideals", "classify every dot-subgroup of a brace");
  cmd_ideals->add_option("file", ideals_file, "brace file (default stdin)");
  CLI::App* cmd_grouplikes = app.add_subcommand("grouplikes", "list the group-like elements");
  cmd_grouplikes->add_option("file", grouplikes_file, "brace file (default stdin)");
  CLI::App* cmd_pairs =
      app.add_subcommand("pairs", "count pairs where the operations agree (L) or anti-agree (R)");
  cmd_pairs->add_option("file", pairs_file, "brace file (default stdin)");
  CLI::App* cmd_selfopp =
      app.add_subcommand("selfopp", "decide whether a brace is isomorphic to its opposite");
  cmd_selfopp->add_option("file", selfopp_file, "brace file (default stdin)");
  CLI::App* cmd_translate = app.add_subcommand(
      "translate", "regular subgroup to brace (--group/--subgroup) or brace to regular subgroup");
  cmd_translate->add_option("file", translate_file, "brace file (default stdin)");
  cmd_translate->add_option("--group", translate_group, "named ambient group, e.g. Q8");
  cmd_translate->add_option("--subgroup", translate_subgroup,
                            "generators, e.g. \"rho(s),lambda(s)*rho(t)\"");
  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "all braces with the given circle group");
  cmd_enumerate->add_option("--circle", enumerate_circle, "named circle group")->required();
  CLI::App* cmd_example = app.add_subcommand("example", "write a built-in example brace");
  cmd_example->add_option("--name", example_name, "trivial, almost-trivial or paper-d4q8")
      ->required()
      ->check(CLI::IsMember({"trivial", "almost-trivial", "paper-d4q8"}));
  cmd_example->add_option("--group", example_group, "named group for trivial/almost-trivial");

  for (CLI::App* sub : {cmd_verify, cmd_opposite, cmd_ybe, cmd_ideals, cmd_grouplikes, cmd_pairs,
                        cmd_selfopp, cmd_translate, cmd_enumerate, cmd_example})
    sub->fallthrough();

  auto emit = [&](const std::string& line) {
    err << line << '\n';
    result.diagnostics.push_back(line);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    auto gate = [&](int order) {
      if (order > max_order)
        throw Error(ErrorCode::BoundExceeded, "order " + std::to_string(order) +
                                                  " exceeds the limit " + std::to_string(max_order) +
                                                  " (raise with --max-order)");
    };
    auto slurp_input = [&](const std::string& path) {
      if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
      }
      std::ifstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      return buffer.str();
    };
    auto load_brace = [&](const std::string& path) {
      const std::string text = slurp_input(path);
      gate(sniff_order(text));
      std::istringstream stream(text);
      return read_brace_any(stream);
    };

    std::vector<std::string> labels;
    if (!labels_name.empty()) labels = element_labels(labels_name);
    auto ensure_labels = [&](int n) {
      if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw UsageError{"--labels " + labels_name + " has " + std::to_string(labels.size()) +
                         " labels, input has order " + std::to_string(n)};
    };
    auto label_of = [&](Index x) { return labels.empty() ? std::to_string(x) : labels[x]; };
    auto set_string = [&](const std::vector<Index>& members) {
      std::string s = "{";
      for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ',';
        s += label_of(members[i]);
      }
      return s + "}";
    };
    auto print_brace = [&](const SkewBrace& b) {
      if (format == "json")
        out << brace_json(b) << '\n';
      else
        write_brace_text(out, b);
    };

    if (app.got_subcommand(cmd_verify)) {
      const SkewBrace b = load_brace(verify_file);
      const long long triples = 1LL * b.order() * b.order() * b.order();
      if (format == "json") {
        OrderedJson j;
        j["status"] = "ok";
        j["order"] = b.order();
        j["triples"] = triples;
        out << j.dump() << '\n';
      } else {
        out << "brace relation holds (" << triples << " triples)\n";
      }
    } else if (app.got_subcommand(cmd_opposite)) {
      print_brace(opposite(load_brace(opposite_file)));
    } else if (app.got_subcommand(cmd_ybe)) {
      const SkewBrace b = load_brace(ybe_file);
      const YbeSolution r = ybe_from_brace(b);
      if (format == "json")
        out << ybe_json(r) << '\n';
      else
        write_ybe_text(out, r);
      if (check_inverse) {
        const YbeSolution s = inverse_solution(b);
        if (!is_inverse_pair(r, s)) throw std::logic_error("inverse check failed");
        emit("inverse check: ok (" + std::to_string(b.order() * b.order()) +
             " pairs, both compositions identity)");
      }
    } else if (app.got_subcommand(cmd_ideals)) {
      const SkewBrace b = load_brace(ideals_file);
      ensure_labels(b.order());
      const Census c = census(b);
      if (format == "json") {
        OrderedJson j;
        j["counts"]["subgroups"] = c.counts.subgroups;
        j["counts"]["quasi_ideals"] = c.counts.quasi_ideals;
        j["counts"]["dot_qis"] = c.counts.dot_qis;
        j["counts"]["circle_qis"] = c.counts.circle_qis;
        j["counts"]["ideals"] = c.counts.ideals;
        j["counts"]["circle_stable"] = c.counts.circle_stable;
        OrderedJson rows = OrderedJson::array();
        for (const IdealReport& r : c.reports) {
          OrderedJson row;
          row["members"] = r.subject.members;
          row["quasi_ideal"] = r.is_quasi_ideal;
          row["dot_qi"] = r.is_dot_qi;
          row["circle_qi"] = r.is_circle_qi;
          row["ideal"] = r.is_ideal;
          row["circle_stable"] = r.is_circle_stable;
          row["annotation"] = r.annotation;
          if (r.witness)
            row["witness"] = OrderedJson::array({r.witness->first, r.witness->second});
          else
            row["witness"] = nullptr;
          rows.push_back(std::move(row));
        }
        j["subgroups"] = std::move(rows);
        out << j.dump() << '\n';
      } else {
        out << "subgroups=" << c.counts.subgroups << " quasi-ideals=" << c.counts.quasi_ideals
            << " dot-qis=" << c.counts.dot_qis << " circle-qis=" << c.counts.circle_qis
            << " ideals=" << c.counts.ideals << " circle-stable=" << c.counts.circle_stable
            << '\n';
        for (const IdealReport& r : c.reports) {
          std::string line = set_string(r.subject.members);
          line += r.is_ideal          ? " ideal"
                  : r.is_dot_qi       ? " dot-qi"
                  : r.is_circle_qi    ? " circle-qi"
                  : r.is_quasi_ideal  ? " quasi-ideal"
                                      : " not-quasi-ideal";
          if (r.is_circle_stable) line += " circle-stable";
          if (!r.annotation.empty()) line += " [" + r.annotation + "]";
          if (r.witness)
            line += " witness=(" + label_of(r.witness->first) + "," + label_of(r.witness->second) +
                    ")";
          out << line << '\n';
        }
      }
    } else if (app.got_subcommand(cmd_grouplikes)) {
      const SkewBrace b = load_brace(grouplikes_file);
      ensure_labels(b.order());
      const ElementSet g = group_like_elements(b);
      if (format == "json") {
        OrderedJson j;
        j["count"] = g.size();
        j["members"] = g.members;
        out << j.dump() << '\n';
      } else {
        out << "group-likes (" << g.size() << "):";
        for (Index m : g.members) out << ' ' << label_of(m);
        out << '\n';
      }
    } else if (app.got_subcommand(cmd_pairs)) {
      const SkewBrace b = load_brace(pairs_file);
      const PairCensus c = pair_census(b);
      if (format == "json") {
        OrderedJson j;
        j["l"] = c.l_count;
        j["r"] = c.r_count;
        out << j.dump() << '\n';
      } else {
        out << "L=" << c.l_count << " R=" << c.r_count << '\n';
      }
    } else if (app.got_subcommand(cmd_selfopp)) {
      const SkewBrace b = load_brace(selfopp_file);
      const SelfOppositeVerdict v = is_self_opposite(b);
      if (format == "json") {
        OrderedJson j;
        j["verdict"] = v.kind == SelfOppositeVerdict::Kind::Equal        ? "equal"
                       : v.kind == SelfOppositeVerdict::Kind::Isomorphic ? "isomorphic"
                                                                         : "no";
        if (v.witness) j["map"] = v.witness->map;
        if (v.pair_counts) {
          j["l"] = v.pair_counts->first;
          j["r"] = v.pair_counts->second;
        }
        if (v.kind == SelfOppositeVerdict::Kind::No) j["search_exhausted"] = v.search_exhausted;
        out << j.dump() << '\n';
      } else if (v.kind == SelfOppositeVerdict::Kind::Equal) {
        out << "self-opposite: equal\n";
      } else if (v.kind == SelfOppositeVerdict::Kind::Isomorphic) {
        out << "self-opposite: isomorphic\n";
        out << "isomorphism: " << join_indices(v.witness->map) << '\n';
      } else if (v.pair_counts) {
        out << "self-opposite: no (L=" << v.pair_counts->first << " R=" << v.pair_counts->second
            << ")\n";
      } else {
        out << "self-opposite: no (search exhausted)\n";
      }
    } else if (app.got_subcommand(cmd_translate)) {
      if (!translate_group.empty()) {
        if (translate_subgroup.empty()) throw UsageError{"--group requires --subgroup"};
        const GroupTable g = named_group(translate_group);
        gate(g.order());
        const std::vector<Permutation> gens =
            parse_generator_spec(g, generator_names(translate_group), translate_subgroup);
        const RegularSubgroup n = RegularSubgroup::generate(g, gens);
        print_brace(brace_from_regular_subgroup(g, n).brace);
      } else if (!translate_subgroup.empty()) {
        throw UsageError{"--subgroup requires --group"};
      } else {
        const SkewBrace b = load_brace(translate_file);
        const TranslationRecord record = regular_subgroup_from_brace(b);
        if (format == "json") {
          OrderedJson j;
          j["order"] = record.subgroup.size();
          j["degree"] = record.ambient().order();
          OrderedJson elems = OrderedJson::array();
          for (const Permutation& p : record.subgroup.elements()) elems.push_back(p.image());
          j["elements"] = std::move(elems);
          out << j.dump() << '\n';
        } else {
          out << "regular subgroup: order " << record.subgroup.size() << " on "
              << record.ambient().order() << " points\n";
          const auto& elems = record.subgroup.elements();
          for (size_t i = 0; i < elems.size(); ++i)
            out << i << ": " << join_indices(elems[i].image()) << '\n';
        }
      }
    } else if (app.got_subcommand(cmd_enumerate)) {
      const GroupTable circle = named_group(enumerate_circle);
      const BraceEnumeration e = enumerate_braces(circle, nullptr, max_order);
      if (format == "json") {
        OrderedJson j;
        j["circle"] = enumerate_circle;
        j["count"] = e.braces.size();
        j["isomorphism_classes"] = e.isomorphism_classes;
        OrderedJson dots = OrderedJson::array();
        for (const SkewBrace& b : e.braces) {
          OrderedJson rows = OrderedJson::array();
          for (const auto& row : b.dot().rows()) rows.push_back(row);
          dots.push_back(std::move(rows));
        }
        j["dots"] = std::move(dots);
        out << j.dump() << '\n';
      } else {
        out << "circle " << enumerate_circle << ": " << e.braces.size() << " braces, "
            << e.isomorphism_classes << " isomorphism classes\n";
        for (const SkewBrace& b : e.braces) {
          out << "dot:";
          const auto& rows = b.dot().rows();
          for (size_t x = 0; x < rows.size(); ++x) {
            if (x) out << " /";
            for (Index v : rows[x]) out << ' ' << v;
          }
          out << '\n';
        }
      }
    } else if (app.got_subcommand(cmd_example)) {
      SkewBrace b = d4q8_brace();
      if (example_name == "paper-d4q8") {
        if (!example_group.empty())
          throw UsageError{"--group is not used with --name paper-d4q8"};
      } else {
        if (example_group.empty())
          throw UsageError{"--name " + example_name + " requires --group"};
        const GroupTable g = named_group(example_group);
        gate(g.order());
        b = example_name == "trivial" ? trivial_brace(g) : almost_trivial_brace(g);
      }
      gate(b.order());
      print_brace(b);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::Success&) {
  } catch (const CLI::ParseError& e) {
    result.status = "error";
    result.exit_code = 2;
    emit(std::string("usage error: ") + e.what());
  } catch (const UsageError& e) {
    result.status = "error";
    result.exit_code = 2;
    emit("usage error: " + e.message);
  } catch (const Error& e) {
    result.status = "error";
    result.exit_code = 1;
    emit("error: " + std::string(error_code_name(e.code())) + ": " + e.what());
    if (!e.witness().empty()) emit("witness: " + join_indices(e.witness()));
  } catch (const std::exception& e) {
    result.status = "error";
    result.exit_code = 1;
    emit(std::string("error: ") + e.what());
  }
  return result;
}

}  // namespace bracekit
