#include "cli.hpp"

#include "tropical/error.hpp"
#include "tropical/fan.hpp"
#include "tropical/intersection.hpp"
#include "tropical/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <type_traits>

namespace tropical::cli {

namespace {

using io::Json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_path;
  std::string window = "-5,5,-5,5";
  std::uint64_t seed = 0;
  std::size_t probes = 5;
  bool quiet = false;
};

// Prefixes errors raised while reading a document with its path.
template <typename F>
std::invoke_result_t<F> in_context(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const TropicalError& e) {
    throw TropicalError(e.code(), path + ": " + std::string(e.what()).substr(error_name(e.code()).size() + 2));
  }
}

class Session {
 public:
  Session(const Options& options, std::istream& in, std::ostream& out) : options_(options), in_(in), out_(out) {}

  Json load(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw InputError(path + ": cannot open");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    return in_context(path, [&] { return io::parse_text(text); });
  }

  TropicalCycle cycle(const std::string& path) {
    Json j = load(path);
    return in_context(path, [&] { return io::cycle_from_json(j); });
  }
  TropicalCycle unchecked_cycle(const std::string& path) {
    Json j = load(path);
    return in_context(path, [&] { return io::cycle_from_json_unchecked(j); });
  }
  PiecewiseAffineFunction function(const std::string& path) {
    Json j = load(path);
    return in_context(path, [&] { return io::function_from_json(j); });
  }
  IntegerAffineMap map(const std::string& path) {
    Json j = load(path);
    return in_context(path, [&] { return io::map_from_json(j); });
  }

  /// The command's main output, to --out or the output stream.
  void emit(const std::string& text) {
    if (options_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(options_.out_path, std::ios::binary);
    if (!file) throw InputError(options_.out_path + ": cannot write");
    file << text;
  }
  void emit(const Json& j) { emit(io::dump(j)); }

  /// A human-readable line, silenced by --quiet.
  void report(const std::string& line) {
    if (!options_.quiet) out_ << line << "\n";
  }

  const Options& options() const { return options_; }

 private:
  const Options& options_;
  std::istream& in_;
  std::ostream& out_;
};

RatVector parse_vector(const std::string& text) {
  RatVector v;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      v.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError("vector '" + text + "': " + e.what());
    }
  }
  if (v.empty()) throw InputError("empty vector '" + text + "'");
  return v;
}

io::Window parse_window(const std::string& text) {
  RatVector v = parse_vector(text);
  if (v.size() != 4) throw InputError("--window needs xmin,xmax,ymin,ymax");
  return {v[0], v[1], v[2], v[3]};
}

Json completion_to_json(const SimplicialCompletion& c) {
  Json j = Json::object();
  j["refined"] = io::cycle_to_json(c.refined);
  j["fan"] = io::fan_to_json(c.theta);
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical intersection theory on R^r", "tropical"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_option("--out", options.out_path, "Write the resulting document to this file");
  app.add_option("--window", options.window, "Plot window xmin,xmax,ymin,ymax");
  app.add_option("--seed", options.seed, "Seed for probe generation");
  app.add_option("--probes", options.probes, "Number of probes for equiv");
  app.add_flag("--quiet", options.quiet, "Suppress reports");

  std::string a, b, c;
  std::function<int(Session&)> action;
  auto command = [&](const std::string& name, const std::string& help, std::vector<std::pair<std::string*, std::string>> positionals,
                     std::function<int(Session&)> body) {
    auto* sub = app.add_subcommand(name, help);
    for (auto& [target, label] : positionals) sub->add_option(label, *target)->required();
    sub->callback([&action, body] { action = body; });
  };

  command("validate", "Check purity, the complex property and balancing", {{&a, "cycle"}}, [&](Session& s) {
    auto report = validate(s.unchecked_cycle(a));
    if (!report.valid()) {
      err << a << ": invalid\n" << io::describe(report) << "\n";
      return kInputError;
    }
    s.report(a + ": valid");
    return kOk;
  });
  command("normalize", "Coarsest representative", {{&a, "cycle"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(normalize(s.cycle(a))));
    return kOk;
  });
  command("add", "Sum of two cycles", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(add(s.cycle(a), s.cycle(b))));
    return kOk;
  });
  command("smul", "Integer multiple of a cycle", {{&a, "factor"}, {&b, "cycle"}}, [&](Session& s) {
    Rational n;
    try {
      n = parse_rational(a);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("factor: ") + e.what());
    }
    if (n.get_den() != 1) throw InputError("factor must be an integer");
    s.emit(io::cycle_to_json(scalar_multiply(n.get_num(), s.cycle(b))));
    return kOk;
  });
  command("cross", "Cross product", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(cross_product(s.cycle(a), s.cycle(b))));
    return kOk;
  });
  command("translate", "Translate by a rational vector", {{&a, "cycle"}, {&b, "vector"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(translate(s.cycle(a), parse_vector(b))));
    return kOk;
  });
  command("divisor", "Divisor of a function on a cycle", {{&a, "function"}, {&b, "cycle"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(divisor(s.function(a), s.cycle(b))));
    return kOk;
  });
  command("pushforward", "Push a cycle forward along a map", {{&a, "map"}, {&b, "cycle"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(push_forward(s.map(a), s.cycle(b))));
    return kOk;
  });
  command("pullback", "Pull a function back along a map", {{&a, "map"}, {&b, "function"}}, [&](Session& s) {
    s.emit(io::function_to_json(pull_back(s.map(a), s.function(b))));
    return kOk;
  });
  command("intersect", "Stable intersection", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(stable_intersect(s.cycle(a), s.cycle(b))));
    return kOk;
  });
  command("pair", "Degree of the stable intersection", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    s.emit(to_string(degree_pairing(s.cycle(a), s.cycle(b))) + "\n");
    return kOk;
  });
  command("recession", "Recession fan, the affine cycle equivalent to the input", {{&a, "cycle"}}, [&](Session& s) {
    s.emit(io::cycle_to_json(delta(s.cycle(a))));
    return kOk;
  });
  command("equiv", "Decide rational equivalence", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    TropicalCycle x = s.cycle(a), y = s.cycle(b);
    bool equivalent = rationally_equivalent(x, y);
    FanCycle dx = delta(x);
    if (!equivalent) {
      s.report("not equivalent; delta = " + io::cycle_to_json(dx).dump() + " versus " + io::cycle_to_json(delta(y)).dump());
      return kFalse;
    }
    std::string line = "equivalent; delta = " + io::cycle_to_json(dx).dump();
    if (s.options().probes > 0 && !x.is_zero()) {
      auto probes = default_probes(x.ambient_dim(), static_cast<int>(x.ambient_dim()) - *x.dimension(), s.options().probes, s.options().seed);
      bool agree = numerically_equivalent_sample(x, y, probes);
      line += agree ? "; pairings agree on " + std::to_string(probes.size()) + " probes" : "; pairings disagree on a probe";
    }
    s.report(line);
    return kOk;
  });
  command("zerotest", "Decide whether a fan cycle is zero by simplicial reduction", {{&a, "cycle"}}, [&](Session& s) {
    bool zero = simplicial_zero_reduction(FanCycle(s.cycle(a)));
    s.report(zero ? "zero" : "nonzero");
    return zero ? kOk : kFalse;
  });
  command("witness-translate", "Translation witness and its push-forward identity",
          {{&a, "cycle"}, {&b, "coordinate"}, {&c, "shift"}}, [&](Session& s) {
            TropicalCycle x = s.cycle(a);
            Rational mu, index;
            try {
              index = parse_rational(b);
              mu = parse_rational(c);
            } catch (const std::invalid_argument& e) {
              throw InputError(e.what());
            }
            if (index.get_den() != 1 || index < 0) throw InputError("coordinate must be a nonnegative integer");
            std::size_t i = index.get_num().get_ui();
            auto w = translation_witness(x, i, mu);
            RatVector shift = zero_rat_vector(x.ambient_dim());
            shift[i] = mu;
            TropicalCycle image = witness_image(w);
            bool holds = equals(image, add(x, scalar_multiply(-1, translate(x, shift))));
            Json j = Json::object();
            j["cycle"] = io::cycle_to_json(w.z);
            j["function"] = io::function_to_json(w.phi);
            j["map"] = io::map_to_json(w.f);
            j["image"] = io::cycle_to_json(image);
            j["holds"] = holds;
            s.emit(j);
            return holds ? kOk : kFalse;
          });
  command("simplicial-complete", "Complete simplicial fan refining a fan cycle", {{&a, "cycle"}}, [&](Session& s) {
    s.emit(completion_to_json(complete_to_simplicial(FanCycle(s.cycle(a)))));
    return kOk;
  });
  command("bezout", "Compare delta(C . D) with delta(C) . delta(D)", {{&a, "cycle"}, {&b, "other"}}, [&](Session& s) {
    auto check = bezout_verify(s.cycle(a), s.cycle(b));
    Json j = Json::object();
    j["holds"] = check.holds;
    j["lhs"] = io::cycle_to_json(check.lhs);
    j["rhs"] = io::cycle_to_json(check.rhs);
    s.emit(j);
    return check.holds ? kOk : kFalse;
  });
  command("plot", "SVG drawing of a plane cycle", {{&a, "cycle"}}, [&](Session& s) {
    s.emit(io::plot_svg(s.cycle(a), parse_window(s.options().window)));
    return kOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    Session session(options, in, out);
    return action(session);
  } catch (const TropicalError& e) {
    err << e.what() << "\n";
  } catch (const InputError& e) {
    err << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace tropical::cli
