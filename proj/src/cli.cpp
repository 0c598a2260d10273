#include "bsgraph/cli.hpp"

#include <algorithm>  // for reverse
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <sstream>    // for istringstream
#include <stdexcept>  // for exception

#include "CLI11.hpp"
#include "bsgraph/category.hpp"
#include "bsgraph/error.hpp"
#include "bsgraph/export.hpp"
#include "bsgraph/fixture.hpp"
#include "bsgraph/model.hpp"
#include "bsgraph/morphism.hpp"

namespace bsgraph::cli {

  namespace {
    struct Options {
      std::string fixture;
      std::string mode = "bs";
      std::string word, word2;
      std::string path, lhs, rhs, at, degree;
      std::string laws = "category,functor,factorization";
      std::size_t limit   = 0;
      std::size_t max_len = 4;
      bool        json = false, dot = false, oracle = false;
      bool        shortest = false, longest = false;
    };

    // Thrown for a finding that has already been reported on `out`.
    struct Finding {};

    bool is_finding(ErrorKind kind) {
      return kind == ErrorKind::not_covered || kind == ErrorKind::conflict
             || kind == ErrorKind::incomplete_collection;
    }

    template <typename F>
    decltype(auto) with_mode(Mode mode, F&& f) {
      if (mode == Mode::bs) {
        return f.template operator()<BsMonoid>();
      }
      return f.template operator()<GridMonoid>();
    }

    Mode mode_named(std::string const& name) {
      if (name == "bs") {
        return Mode::bs;
      }
      if (name == "grid") {
        return Mode::grid;
      }
      raise(ErrorKind::syntax, "unknown mode '" + name + "'");
    }

    template <typename M>
    void print(std::ostream& out, Options const& opt, ColouredGraph const& g,
               Morphism<M> const& lambda) {
      if (opt.json) {
        out << to_json(g, lambda).dump(2) << '\n';
      } else if (opt.dot) {
        out << to_dot(g, lambda);
      } else {
        out << to_text(g, lambda);
      }
    }

    template <typename M>
    LambdaContext<M> context(Fixture const& fx, std::ostream& out) {
      auto report = check_complete(fx.graph, fx.collection);
      if (!report.complete()) {
        out << to_text(fx.graph, report);
        throw Finding{};
      }
      return LambdaContext<M>(fx.graph, fx.collection);
    }

    int cmd_check(Options const& opt, std::ostream& out) {
      auto fx     = load_fixture(opt.fixture);
      auto report = check_complete(fx.graph, fx.collection);
      if (opt.json) {
        out << to_json(fx.graph, report).dump(2) << '\n';
      } else {
        out << to_text(fx.graph, report);
      }
      return report.complete() ? kOk : kFinding;
    }

    int cmd_word(std::string const& op, Options const& opt, std::ostream& out) {
      return with_mode(mode_named(opt.mode), [&]<typename M>() {
        auto x = M::parse(opt.word);
        if (op == "normalize") {
          if (opt.json) {
            nlohmann::ordered_json j;
            j["pair"]     = M::format(x);
            j["shortest"] = to_string(M::shortest_form(x));
            j["longest"]  = to_string(M::longest_form(x));
            out << j.dump(2) << '\n';
          } else {
            out << "pair " << M::format(x) << '\n'
                << "shortest " << M::label(x) << '\n'
                << "longest " << to_string(M::longest_form(x)) << '\n';
          }
          return kOk;
        }
        auto y = M::parse(opt.word2);
        if (op == "mul") {
          auto z = M::mul(x, y);
          out << M::format(z) << ' ' << M::label(z) << '\n';
        } else if (op == "quotient") {
          auto z = M::left_quotient(x, y);
          out << M::format(z) << ' ' << M::label(z) << '\n';
        } else {
          out << (M::is_prefix(x, y) ? "true" : "false") << '\n';
        }
        return kOk;
      });
    }

    int cmd_model(Options const& opt, std::ostream& out) {
      return with_mode(mode_named(opt.mode), [&]<typename M>() {
        auto model = ModelGraph<M>(M::parse(opt.word));
        if (opt.dot) {
          out << to_dot(model);
          return kOk;
        }
        if (opt.json) {
          nlohmann::ordered_json j;
          j["mode"]   = to_string(M::mode);
          j["degree"] = M::format(model.degree());
          auto vs     = nlohmann::ordered_json::array();
          for (auto const& z : model.vertices()) {
            vs.push_back(M::format(z));
          }
          auto es = nlohmann::ordered_json::array();
          for (auto const& e : model.edges()) {
            es.push_back({{"range", M::format(model.vertex(e.base))},
                          {"letter", std::string(1, to_char(e.letter))},
                          {"source", M::format(model.vertex(e.target))}});
          }
          auto ps = nlohmann::ordered_json::array();
          for (auto const& p : model.square_positions()) {
            ps.push_back(M::format(model.vertex(p.base)));
          }
          j["vertices"]         = std::move(vs);
          j["edges"]            = std::move(es);
          j["square_positions"] = std::move(ps);
          out << j.dump(2) << '\n';
          return kOk;
        }
        out << "degree " << M::format(model.degree()) << " = " << M::label(model.degree())
            << '\n'
            << model.vertex_count() << " vertices, " << model.edge_count() << " edges, "
            << model.square_positions().size() << " square positions\n";
        for (auto const& z : model.vertices()) {
          out << "  " << M::format(z) << ' ' << M::label(z) << '\n';
        }
        return kOk;
      });
    }

    int cmd_lift(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        auto x      = parse_path(fx.graph, opt.path);
        auto lambda = lift_path<M>(fx.graph, fx.collection, x);
        if (opt.oracle) {
          auto all = enumerate_morphisms<M>(fx.graph, fx.collection, lambda.degree());
          std::size_t traversed = 0;
          bool        found     = false;
          for (auto const& mu : all) {
            if (check_traverses(mu, x)) {
              ++traversed;
              found = found || mu == lambda;
            }
          }
          if (traversed != 1 || !found) {
            out << "oracle mismatch: " << traversed << " of " << all.size()
                << " enumerated morphisms are traversed by the path"
                << (found ? "" : ", none equal to the lift") << '\n';
            return kFinding;
          }
        }
        print(out, opt, fx.graph, lambda);
        return kOk;
      });
    }

    int cmd_compose(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        auto ctx = context<M>(fx, out);
        auto mu  = ctx.lift(parse_path(fx.graph, opt.lhs));
        auto nu  = ctx.lift(parse_path(fx.graph, opt.rhs));
        print(out, opt, fx.graph, ctx.compose(mu, nu));
        return kOk;
      });
    }

    int cmd_factorize(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        auto ctx      = context<M>(fx, out);
        auto lambda   = ctx.lift(parse_path(fx.graph, opt.path));
        auto w1       = M::parse(opt.at);
        auto w2       = M::left_quotient(w1, lambda.degree());
        auto [mu, nu] = ctx.factorize(lambda, w1, w2);
        if (opt.json) {
          nlohmann::ordered_json j;
          j["left"]  = to_json(fx.graph, mu);
          j["right"] = to_json(fx.graph, nu);
          out << j.dump(2) << '\n';
        } else {
          out << "left: " << to_string(fx.graph, shortest_traversal(fx.graph, mu)) << '\n';
          out << to_text(fx.graph, mu);
          out << "right: " << to_string(fx.graph, shortest_traversal(fx.graph, nu)) << '\n';
          out << to_text(fx.graph, nu);
        }
        return kOk;
      });
    }

    int cmd_traversals(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        auto lambda = lift_path<M>(fx.graph, fx.collection, parse_path(fx.graph, opt.path));
        bool both   = opt.shortest == opt.longest;
        auto s      = shortest_traversal(fx.graph, lambda);
        auto l      = longest_traversal(fx.graph, lambda);
        if (opt.json) {
          nlohmann::ordered_json j;
          j["degree"] = M::format(lambda.degree());
          if (both || opt.shortest) {
            j["shortest"] = to_string(fx.graph, s);
          }
          if (both || opt.longest) {
            j["longest"] = to_string(fx.graph, l);
          }
          out << j.dump(2) << '\n';
          return kOk;
        }
        if (both || opt.shortest) {
          out << "shortest (" << s.size() << "): " << to_string(fx.graph, s) << '\n';
        }
        if (both || opt.longest) {
          out << "longest (" << l.size() << "): " << to_string(fx.graph, l) << '\n';
        }
        return kOk;
      });
    }

    int cmd_enumerate(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        EnumerateOptions eo;
        if (opt.limit > 0) {
          eo.max_results = opt.limit;
        }
        auto w   = M::parse(opt.degree);
        auto all = enumerate_morphisms<M>(fx.graph, fx.collection, w, eo);
        if (opt.json) {
          auto arr = nlohmann::ordered_json::array();
          for (auto const& mu : all) {
            arr.push_back(to_json(fx.graph, mu));
          }
          out << arr.dump(2) << '\n';
          return kOk;
        }
        out << all.size() << " morphisms of degree " << M::format(w) << '\n';
        for (auto const& mu : all) {
          out << "  " << to_string(fx.graph, shortest_traversal(fx.graph, mu)) << '\n';
        }
        return kOk;
      });
    }

    int cmd_verify(Options const& opt, std::ostream& out) {
      auto fx = load_fixture(opt.fixture);
      return with_mode(fx.mode, [&]<typename M>() {
        auto               ctx = context<M>(fx, out);
        VerificationReport report;
        report.mode       = M::mode;
        report.max_length = opt.max_len;
        std::istringstream in(opt.laws);
        std::string        suite;
        while (std::getline(in, suite, ',')) {
          if (suite == "category") {
            report.merge(verify_category(ctx, opt.max_len));
          } else if (suite == "functor") {
            report.merge(verify_functor(ctx, opt.max_len));
          } else if (suite == "factorization") {
            report.merge(verify_factorization(ctx, opt.max_len));
          } else {
            raise(ErrorKind::syntax, "unknown law suite '" + suite + "'");
          }
        }
        if (opt.json) {
          out << to_json(report).dump(2) << '\n';
        } else {
          out << to_text(report);
        }
        return report.passed() ? kOk : kFinding;
      });
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  opt;
    CLI::App app{"Higher-rank graphs over BS(2,1)+ and N^2", "bsgraph"};
    app.require_subcommand(1);

    auto fixture_arg = [&opt](CLI::App* sub) {
      sub->add_option("fixture", opt.fixture, "Fixture file")->required();
    };
    auto output_flags = [&opt](CLI::App* sub, bool dot) {
      auto* j = sub->add_flag("--json", opt.json, "JSON output");
      if (dot) {
        sub->add_flag("--dot", opt.dot, "Graphviz DOT output")->excludes(j);
      }
    };

    auto* check = app.add_subcommand("check", "Check that the squares form a complete collection");
    fixture_arg(check);
    output_flags(check, false);

    auto* word = app.add_subcommand("word", "Degree arithmetic");
    word->require_subcommand(1);
    word->add_option("--mode", opt.mode, "bs or grid")->check(CLI::IsMember({"bs", "grid"}));
    auto* normalize = word->add_subcommand("normalize", "Normal form of a word");
    normalize->add_option("word", opt.word)->required();
    normalize->add_flag("--json", opt.json, "JSON output");
    for (auto [name, help] : {std::pair{"mul", "Product w1 w2"},
                              std::pair{"quotient", "w2 with the prefix w1 removed"},
                              std::pair{"prefix", "Whether w1 is a prefix of w2"}}) {
      auto* sub = word->add_subcommand(name, help);
      sub->add_option("w1", opt.word)->required();
      sub->add_option("w2", opt.word2)->required();
    }

    auto* model = app.add_subcommand("model", "The model graph of a degree");
    model->add_option("--word", opt.word, "Degree")->required();
    model->add_option("--mode", opt.mode, "bs or grid")->check(CLI::IsMember({"bs", "grid"}));
    output_flags(model, true);

    auto* lift = app.add_subcommand("lift", "The morphism traversed by a path");
    fixture_arg(lift);
    lift->add_option("--path", opt.path, "Space-separated edge names")->required();
    lift->add_flag("--oracle", opt.oracle, "Cross-check against brute-force enumeration");
    output_flags(lift, true);

    auto* compose = app.add_subcommand("compose", "Compose the lifts of two paths");
    fixture_arg(compose);
    compose->add_option("--lhs", opt.lhs)->required();
    compose->add_option("--rhs", opt.rhs)->required();
    output_flags(compose, true);

    auto* factorize = app.add_subcommand("factorize", "Split a lift at a prefix of its degree");
    fixture_arg(factorize);
    factorize->add_option("--path", opt.path)->required();
    factorize->add_option("--at", opt.at, "Degree of the left factor")->required();
    output_flags(factorize, false);

    auto* traversals = app.add_subcommand("traversals", "Shortest and longest traversals");
    fixture_arg(traversals);
    traversals->add_option("--path", opt.path)->required();
    traversals->add_flag("--shortest", opt.shortest);
    traversals->add_flag("--longest", opt.longest);
    output_flags(traversals, false);

    auto* enumerate = app.add_subcommand("enumerate", "All compatible morphisms of a degree");
    fixture_arg(enumerate);
    enumerate->add_option("--degree", opt.degree)->required();
    enumerate->add_option("--limit", opt.limit, "Stop after this many (0: no limit)");
    output_flags(enumerate, false);

    auto* verify = app.add_subcommand("verify", "Check the category laws on a bounded pool");
    fixture_arg(verify);
    verify->add_option("--max-len", opt.max_len, "Longest path lifted into the pool");
    verify->add_option("--laws", opt.laws, "Comma-separated: category,functor,factorization");
    output_flags(verify, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (check->parsed()) {
        return cmd_check(opt, out);
      }
      if (word->parsed()) {
        for (auto const* sub : word->get_subcommands()) {
          return cmd_word(sub->get_name(), opt, out);
        }
      }
      if (model->parsed()) {
        return cmd_model(opt, out);
      }
      if (lift->parsed()) {
        return cmd_lift(opt, out);
      }
      if (compose->parsed()) {
        return cmd_compose(opt, out);
      }
      if (factorize->parsed()) {
        return cmd_factorize(opt, out);
      }
      if (traversals->parsed()) {
        return cmd_traversals(opt, out);
      }
      if (enumerate->parsed()) {
        return cmd_enumerate(opt, out);
      }
      if (verify->parsed()) {
        return cmd_verify(opt, out);
      }
    } catch (Finding const&) {
      return kFinding;
    } catch (Error const& e) {
      if (is_finding(e.kind())) {
        out << e.what() << '\n';
        return kFinding;
      }
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

}  // namespace bsgraph::cli
