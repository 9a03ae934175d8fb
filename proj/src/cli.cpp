#include "homoid/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "homoid/cancellativity.hpp"
#include "homoid/divisibility.hpp"
#include "homoid/enumerate.hpp"
#include "homoid/error.hpp"
#include "homoid/inversion.hpp"
#include "homoid/report_json.hpp"
#include "homoid/rewrite.hpp"
#include "homoid/towers.hpp"

namespace homoid::cli {

namespace {

  struct RunConfig {
    std::string   positional;
    std::string   preset;
    std::string   file;
    std::size_t   max_degree = 8;
    std::string   format     = "text";
    std::uint64_t budget     = 1'000'000;
    std::size_t   degree_cap = 16;
    std::string   set;
    std::string   word;
  };

  Presentation load(RunConfig const& cfg) {
    int sources = !cfg.positional.empty() + !cfg.preset.empty() + !cfg.file.empty();
    if (sources != 1) {
      throw ValidationError(
          "give exactly one presentation source: a preset name, --preset, or "
          "--file");
    }
    if (!cfg.file.empty()) {
      std::ifstream in(cfg.file);
      if (!in) {
        throw ValidationError("cannot read " + cfg.file);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_presentation(buf.str(), cfg.file);
    }
    return preset(cfg.positional.empty() ? cfg.preset : cfg.positional);
  }

  std::vector<Word> parse_set(Presentation const& p, std::string const& text) {
    if (text.empty()) {
      throw ValidationError("--set is required for this command");
    }
    std::vector<Word> out;
    std::stringstream in(text);
    std::string       piece;
    while (std::getline(in, piece, ',')) {
      out.push_back(p.parse_word(piece));
    }
    return out;
  }

  std::string join(Presentation const& p, std::vector<Element> const& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += (i == 0 ? "" : ", ") + p.format(xs[i].canonical);
    }
    return s + "}";
  }

  std::string label(Presentation const& p) {
    return p.name().empty() ? "presentation" : p.name();
  }

  int print_series(RunConfig const&       cfg,
                   std::ostream&          out,
                   char const*            what,
                   Presentation const&    p,
                   TruncatedSeries const& s) {
    if (cfg.format == "json") {
      out << json::to_json(s).dump() << '\n';
    } else {
      out << what << " of " << label(p) << " through t^" << s.truncation()
          << ": " << to_string(s) << '\n';
    }
    return success;
  }

  int cmd_growth(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p = load(cfg);
    return print_series(
        cfg, out, "growth series", p, growth_series(p, cfg.max_degree, limits));
  }

  int cmd_skew(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p = load(cfg);
    return print_series(cfg,
                        out,
                        "skew growth series",
                        p,
                        skew_growth(p, cfg.max_degree, limits));
  }

  int cmd_verify(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p = load(cfg);
    auto r = verify_inversion(p, cfg.max_degree, limits);
    if (cfg.format == "json") {
      out << json::to_json(r).dump() << '\n';
    } else {
      out << "P(t)   = " << to_string(r.growth) << '\n'
          << "N(t)   = " << to_string(r.skew) << '\n'
          << "P*N(t) = " << to_string(r.product) << '\n';
      if (r.pass) {
        out << "inversion holds to t^" << r.d_max << '\n';
      } else {
        out << "inversion FAILS at t^" << *r.first_failing_degree << '\n';
      }
    }
    return r.pass ? success : math_failure;
  }

  int cmd_mcm(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto                 p = load(cfg);
    std::vector<Element> j;
    for (auto const& w : parse_set(p, cfg.set)) {
      j.push_back(canonical(p, w, limits));
    }
    auto m = mcm(p, j, cfg.max_degree, limits);
    if (cfg.format == "json") {
      json::document doc;
      doc["set"]        = json::to_json(p, j);
      doc["max_degree"] = cfg.max_degree;
      json::document list = json::document::array();
      for (auto const& x : m) {
        list.push_back(
            {{"word", p.format(x.canonical)}, {"degree", x.degree()}});
      }
      doc["mcm"] = std::move(list);
      out << doc.dump() << '\n';
    } else {
      out << "minimal common multiples of " << join(p, j) << " through degree "
          << cfg.max_degree << ": " << m.size() << '\n';
      for (auto const& x : m) {
        out << "  " << p.format(x.canonical) << "  (degree " << x.degree()
            << ")\n";
      }
    }
    return success;
  }

  int cmd_towers(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto              p = load(cfg);
    GradedTable       table(p, cfg.max_degree, limits);
    DivisibilityIndex index(table);
    auto              towers = enumerate_towers(index, limits);
    std::size_t       height = 0;
    for (auto const& t : towers) {
      height = std::max(height, t.height());
    }
    if (cfg.format == "json") {
      json::document doc;
      doc["presentation"]    = p.name();
      doc["max_degree"]      = cfg.max_degree;
      doc["observed_height"] = height;
      json::document list    = json::document::array();
      for (auto const& t : towers) {
        list.push_back(json::to_json(p, t));
      }
      doc["towers"] = std::move(list);
      out << doc.dump() << '\n';
    } else {
      out << towers.size() << " towers of " << label(p)
          << " with a top element of degree <= " << cfg.max_degree << '\n';
      for (auto const& t : towers) {
        out << "  height " << t.height() << (t.sign() > 0 ? " (+)" : " (-)");
        for (auto const& j : t.stages) {
          out << " " << join(p, j);
        }
        out << " -> " << join(p, t.top()) << '\n';
      }
      out << "observed height: " << height << " (a lower bound)\n";
    }
    return success;
  }

  int cmd_divides(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p  = load(cfg);
    auto ws = parse_set(p, cfg.set);
    if (ws.size() != 2) {
      throw ValidationError("divides takes --set u,v");
    }
    auto u = canonical(p, ws[0], limits);
    auto v = canonical(p, ws[1], limits);
    bool r = left_divides(p, u, v, limits);
    if (cfg.format == "json") {
      json::document doc;
      doc["divisor"]  = p.format(u.canonical);
      doc["multiple"] = p.format(v.canonical);
      doc["divides"]  = r;
      out << doc.dump() << '\n';
    } else {
      out << p.format(u.canonical) << (r ? " divides " : " does not divide ")
          << p.format(v.canonical) << " from the left\n";
    }
    return success;
  }

  int cmd_classes(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p = load(cfg);
    if (!cfg.word.empty()) {
      auto w   = p.parse_word(cfg.word);
      auto cls = equivalence_class(p, w, limits);
      if (cfg.format == "json") {
        json::document doc;
        doc["word"]      = p.format(w);
        doc["canonical"] = p.format(cls.front());
        json::document members = json::document::array();
        for (auto const& u : cls) {
          members.push_back(p.format(u));
        }
        doc["class"] = std::move(members);
        out << doc.dump() << '\n';
      } else {
        out << "class of " << p.format(w) << " (" << cls.size() << " words):";
        for (auto const& u : cls) {
          out << ' ' << p.format(u);
        }
        out << '\n';
      }
      return success;
    }
    GradedTable table(p, cfg.max_degree, limits);
    if (cfg.format == "json") {
      json::document doc;
      doc["presentation"] = p.name();
      doc["max_degree"]   = cfg.max_degree;
      json::document strata = json::document::array();
      for (std::size_t d = 0; d <= cfg.max_degree; ++d) {
        json::document stratum = json::document::array();
        for (auto x = table.first_of_degree(d); x < table.end_of_degree(d); ++x) {
          stratum.push_back({{"canonical", p.format(table.word(x))},
                             {"size", table.member_codes(x).size()}});
        }
        strata.push_back(std::move(stratum));
      }
      doc["strata"] = std::move(strata);
      out << doc.dump() << '\n';
    } else {
      for (std::size_t d = 0; d <= cfg.max_degree; ++d) {
        out << "degree " << d << ": " << table.stratum_size(d)
            << (table.stratum_size(d) == 1 ? " element\n" : " elements\n");
        for (auto x = table.first_of_degree(d); x < table.end_of_degree(d); ++x) {
          out << "  " << p.format(table.word(x)) << "  ["
              << table.member_codes(x).size()
              << (table.member_codes(x).size() == 1 ? " word]\n" : " words]\n");
        }
      }
    }
    return success;
  }

  int cmd_cancel(RunConfig const& cfg, Limits const& limits, std::ostream& out) {
    auto p = load(cfg);
    auto r = cancellative_up_to(p, cfg.max_degree, limits);
    if (cfg.format == "json") {
      out << json::to_json(p, r).dump() << '\n';
    } else if (!r.witness) {
      out << "no counterexample up to degree " << r.d_max
          << " (left and right)\n";
    } else {
      auto const& w = *r.witness;
      auto        v = p.format(w.generator.canonical);
      auto        x = p.format(w.x.canonical);
      auto        y = p.format(w.y.canonical);
      out << "counterexample (" << to_string(w.side) << "): ";
      if (w.side == Side::right) {
        out << x << "·" << v << " = " << y << "·" << v;
      } else {
        out << v << "·" << x << " = " << v << "·" << y;
      }
      out << " = " << p.format(w.product.canonical) << " with " << x
          << " != " << y << '\n';
    }
    return r.witness ? math_failure : success;
  }

  int cmd_condition_l(RunConfig const& cfg,
                      Limits const&    limits,
                      std::ostream&    out) {
    auto p = load(cfg);
    auto r = condition_l_report(p, cfg.max_degree, limits);
    if (cfg.format == "json") {
      out << json::to_json(p, r).dump() << '\n';
      return success;
    }
    out << (r.verdict == ConditionLReport::Verdict::violated
                ? "condition L violated"
                : "no violation of condition L found")
        << " through degree " << r.d_max << '\n';
    for (auto const& w : r.witnesses) {
      out << "  " << join(p, w.subset) << ": minimal common multiples "
          << join(p, w.minimal) << '\n';
    }
    for (auto const& l : r.least) {
      out << "  " << join(p, l.subset) << ": one minimal common multiple in bound, "
          << p.format(l.lcm.canonical) << '\n';
    }
    for (auto const& j : r.undetermined) {
      out << "  " << join(p, j) << ": no common multiple through degree "
          << r.d_max << '\n';
    }
    return success;
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact growth and skew growth series of homogeneous monoids"};
  app.name("homoid");
  app.require_subcommand(1);

  RunConfig cfg;
  using Handler = int (*)(RunConfig const&, Limits const&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](char const* name, char const* help, Handler h, bool set_opt) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("name", cfg.positional, "preset, e.g. bii or gn:3");
    sub->add_option("--preset", cfg.preset, "preset, e.g. bii or gn:3");
    sub->add_option("--file", cfg.file, "presentation file");
    sub->add_option("--max-degree", cfg.max_degree, "degree bound")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--budget", cfg.budget, "stage subset budget")
        ->capture_default_str();
    sub->add_option("--degree-cap", cfg.degree_cap, "longest word accepted")
        ->capture_default_str();
    if (set_opt) {
      sub->add_option("--set", cfg.set, "comma-separated words");
    }
    commands.emplace_back(sub, h);
    return sub;
  };
  add("growth", "truncated growth series P(t)", cmd_growth, false);
  add("skew", "truncated skew growth series N(t)", cmd_skew, false);
  add("verify", "check P(t) N(t) = 1 through the bound", cmd_verify, false);
  add("mcm", "minimal common multiples of --set", cmd_mcm, true);
  add("towers", "list towers and the observed height", cmd_towers, false);
  add("divides", "left divisibility, --set u,v", cmd_divides, true);
  add("classes", "elements by degree, or the class of --word", cmd_classes, false)
      ->add_option("--word", cfg.word, "a word whose class to list");
  auto* cancel = add(
      "cancel", "bounded left and right cancellativity check", cmd_cancel, false);
  add("condition-l", "classify generator subsets by their mcm", cmd_condition_l, false);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  // the cancellativity check defaults to degree 7
  if (cancel->parsed() && cancel->get_option("--max-degree")->count() == 0) {
    cfg.max_degree = 7;
  }

  Limits limits;
  limits.max_degree    = cfg.degree_cap;
  limits.subset_budget = cfg.budget;

  try {
    for (auto const& [sub, handler] : commands) {
      if (sub->parsed()) {
        return handler(cfg, limits, out);
      }
    }
  } catch (LimitError const& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return resource_error;
  } catch (OverflowError const& e) {
    err << "overflow: " << e.what() << '\n';
    return resource_error;
  } catch (ValidationError const& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace homoid::cli
