// minkradii command-line front end. Every report is one JSON document on
// stdout; exit 0 = computed or verified, 1 = property violated, 2 = bad input.
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minkradii/error.hpp"
#include "suites.hpp"

using namespace minkradii;
using namespace minkradii::cli;
using json_io::to_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

struct Run {
  Json report;

  Run(const std::string& command, int argc, char** argv) {
    Json args = Json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    report = Json{{"command", command}, {"arguments", args}, {"inputs", Json::array()}, {"results", Json::object()}};
  }

  Json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    report["inputs"].push_back(Json{{"path", path}, {"sha256", sha256_hex(bytes)}});
    return json_io::parse(bytes);
  }

  VPolytope read_body(const std::string& path) { return json_io::body_from_json(read_json(path)); }

  int finish(int code) {
    report["status"] = code == kOk ? "ok" : code == kViolation ? "violation" : "input-error";
    report["exit"] = code;
    std::cout << report.dump(2) << '\n';
    return code;
  }
};

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::Parse, std::string(flag) + " expects a rational, got \"" + text + "\"");
  }
}

Vector parse_point(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) coords.push_back(parse_rational(item, "--point"));
  return Vector(std::move(coords));
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string approx(const Rational& q) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", q.to_double());
  return buf;
}

struct FamilyArgs {
  std::string family;
  std::size_t dim = 2;
  std::string lambda, mu, point;
};

ExamplePair build_family(const FamilyArgs& a) {
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw Error(ErrorKind::ParameterViolation, std::string("family needs ") + flag);
    return parse_rational(v, flag);
  };
  if (a.family == "sandwich-inner" || a.family == "sandwich-outer")
    return sandwich_pair(a.dim, need(a.lambda, "--lambda"), need(a.mu, "--mu"),
                         a.family == "sandwich-inner" ? Sandwich::Inner : Sandwich::Outer);
  if (a.family == "complete-nonconcentric")
    return complete_nonconcentric_pair(a.dim, a.point.empty() ? std::nullopt : std::optional(parse_point(a.point)));
  if (a.family == "triangle-blend") return triangle_blend_pair(need(a.lambda, "--lambda"));
  throw Error(ErrorKind::ParameterViolation, "unknown family \"" + a.family + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized radii and their inequalities for rational polytopes"};
  app.require_subcommand(1);

  std::string body_path, gauge_path, pair_path, out_path, which = "R,r,D,s,center,jung", suite_name;
  FamilyArgs fam;
  bool approx_flag = false, reflect = false;
  std::size_t trials = 0, dim = 0;
  std::uint64_t seed = 0;

  auto* compute = app.add_subcommand("compute", "radii, asymmetry, center and Jung ratio of a body");
  compute->add_option("--body", body_path, "body JSON")->required();
  compute->add_option("--gauge", gauge_path, "gauge JSON")->required();
  compute->add_option("--which", which, "comma list from R,r,D,s,center,jung");
  compute->add_flag("--approx", approx_flag, "append non-normative decimal approximations");

  auto* verify = app.add_subcommand("verify", "check one inequality suite");
  verify->add_option("suite", suite_name, "suite name")->required();
  verify->add_option("--body", body_path, "body JSON");
  verify->add_option("--gauge", gauge_path, "gauge JSON");
  verify->add_option("--pair", pair_path, "example pair JSON (simplex is the body)");
  verify->add_option("--family", fam.family, "construction family");
  verify->add_option("--lambda", fam.lambda, "family parameter; r of the breadth split");
  verify->add_option("--mu", fam.mu, "family parameter");
  verify->add_option("--point", fam.point, "explicit extra point, comma separated");
  verify->add_flag("--reflect", reflect, "use -S as the body");
  verify->add_option("--trials", trials, "number of seeded random instances");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--dim", dim, "dimension (random mode: 0 alternates 2 and 3)");

  auto* construct = app.add_subcommand("construct", "write a named example pair");
  construct->add_option("family", fam.family, "family name")->required();
  construct->add_option("--dim", fam.dim, "dimension");
  construct->add_option("--lambda", fam.lambda, "family parameter");
  construct->add_option("--mu", fam.mu, "family parameter");
  construct->add_option("--point", fam.point, "explicit extra point, comma separated");
  construct->add_option("--out", out_path, "output file");

  auto* certify = app.add_subcommand("certify", "optimal containment certificate for R(K, C)");
  certify->add_option("--body", body_path, "body JSON")->required();
  certify->add_option("--gauge", gauge_path, "gauge JSON")->required();
  certify->add_option("--out", out_path, "certificate output file");

  auto* explore_cmd = app.add_subcommand("explore", "search complete concentric simplex pairs off the ratio bounds");
  explore_cmd->add_option("--trials", trials, "number of trials");
  explore_cmd->add_option("--seed", seed, "random seed");
  explore_cmd->add_option("--dim", dim, "dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Run run(command, argc, argv);
  Json& results = run.report["results"];
  try {
    if (compute->parsed()) {
      const VPolytope k = run.read_body(body_path);
      const VPolytope c = run.read_body(gauge_path);
      if (k.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "body and gauge dimensions differ");
      Json approximations = Json::object();
      auto value = [&](const char* key, const Rational& q) { approximations[key] = approx(q); };
      for (const auto& w : split(which)) {
        if (w == "R") {
          const auto res = circumradius(k, c);
          results["R"] = res ? to_json(*res) : Json("infinite");
          if (res) value("R", res->value);
        } else if (w == "r") {
          const auto res = inradius(k, c);
          results["r"] = to_json(res);
          value("r", res.value);
        } else if (w == "D") {
          const auto res = diameter(k, c);
          results["D"] = to_json(res);
          value("D", res.value);
        } else if (w == "s") {
          const Rational s = asymmetry(k).s;
          results["s"] = to_json(s);
          value("s", s);
        } else if (w == "center") {
          results["center"] = to_json(asymmetry(k).center);
        } else if (w == "jung") {
          const Rational j = jung_ratio(k, c);
          results["jung"] = to_json(j);
          value("jung", j);
        } else {
          throw Error(ErrorKind::ParameterViolation, "unknown functional \"" + w + "\"");
        }
      }
      if (approx_flag) run.report["approx"] = Json{{"note", "non-normative decimal approximations"}, {"values", approximations}};
      return run.finish(kOk);
    }

    if (verify->parsed()) {
      const auto suite = suite_from_string(suite_name);
      if (!suite) throw Error(ErrorKind::ParameterViolation, "unknown suite \"" + suite_name + "\"");
      results["suite"] = to_string(*suite);
      if (trials > 0) {
        std::size_t passed = 0, skipped = 0;
        Json skips = Json::array();
        for (std::size_t i = 0; i < trials; ++i) {
          const Instance inst = random_instance(*suite, seed, i, dim);
          Outcome outcome;
          try {
            outcome = run_suite(*suite, inst);
          } catch (const Error& e) {
            // A random instance that misses a suite hypothesis is not a violation.
            ++skipped;
            skips.push_back(Json{{"trial", i}, {"reason", to_string(e.kind())}});
            continue;
          }
          if (!outcome.pass) {
            results["trials"] = i + 1;
            results["passed"] = passed;
            results["counterexample"] = Json{{"trial", i},
                                             {"seed", seed},
                                             {"body", to_json(inst.body)},
                                             {"gauge", to_json(inst.gauge)},
                                             {"result", outcome.result}};
            return run.finish(kViolation);
          }
          ++passed;
        }
        results["trials"] = trials;
        results["seed"] = seed;
        results["passed"] = passed;
        results["skipped"] = skipped;
        results["skipped_trials"] = skips;
        return run.finish(kOk);
      }

      auto load = [&]() -> Instance {
        if (!pair_path.empty() || !fam.family.empty()) {
          if (!fam.family.empty()) fam.dim = dim ? dim : 2;
          const ExamplePair pair =
              pair_path.empty() ? build_family(fam) : json_io::example_from_json(run.read_json(pair_path));
          results["family"] = to_string(pair.family);
          return {reflect ? negate(pair.simplex) : pair.simplex, pair.gauge, {1, 2}, {}};
        }
        if (gauge_path.empty() || (body_path.empty() && *suite != Suite::BreadthSplit))
          throw Error(ErrorKind::Parse, "verify needs --body and --gauge, --pair, --family or --trials");
        const VPolytope gauge = run.read_body(gauge_path);
        const VPolytope body = body_path.empty() ? gauge : run.read_body(body_path);
        return {reflect ? negate(body) : body, gauge, {1, 2}, {}};
      };
      Instance inst = load();
      if (*suite == Suite::BreadthSplit && !fam.lambda.empty() && fam.family.empty())
        inst.ratio = parse_rational(fam.lambda, "--lambda");
      const Outcome outcome = run_suite(*suite, inst);
      results["pass"] = outcome.pass;
      results["report"] = outcome.result;
      return run.finish(outcome.pass ? kOk : kViolation);
    }

    if (construct->parsed()) {
      const ExamplePair pair = build_family(fam);
      const Json encoded = to_json(pair);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
        out << encoded.dump(2) << '\n';
        results["written"] = out_path;
      }
      results["pair"] = encoded;
      return run.finish(kOk);
    }

    if (certify->parsed()) {
      const VPolytope k = run.read_body(body_path);
      const VPolytope c = run.read_body(gauge_path);
      const Extraction ex = extract(k, c);
      const bool valid = validate(k, ex.container, ex.certificate);
      const Json encoded = to_json(ex.certificate);
      const bool reread = validate(k, ex.container, json_io::certificate_from_json(json_io::parse(encoded.dump())));
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
        out << encoded.dump(2) << '\n';
      }
      results["R"] = to_json(ex.radius);
      results["translation"] = to_json(ex.translation);
      results["certificate"] = encoded;
      results["perturbed"] = ex.perturbed;
      results["valid"] = valid;
      results["valid_after_reread"] = reread;
      return run.finish(valid && reread ? kOk : kViolation);
    }

    const ExploreStats stats = explore(trials ? trials : 1000, seed, dim ? dim : 2);
    results["trials"] = stats.trials;
    results["candidates"] = stats.candidates;
    results["seed"] = seed;
    results["dim"] = dim ? dim : 2;
    results["complete"] = stats.complete;
    results["strictly_inside"] = stats.strictly_inside;
    results["all_concentric"] = stats.all_concentric;
    results["hits"] = stats.hits;
    return run.finish(kOk);
  } catch (const Error& e) {
    run.report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    std::cerr << e.what() << '\n';
    return run.finish(kInputError);
  }
}
