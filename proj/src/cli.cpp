#include "martial/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "martial/cache_store.hpp"
#include "martial/coalgebra.hpp"
#include "martial/errors.hpp"
#include "martial/genus.hpp"
#include "martial/qstats.hpp"
#include "martial/schubert.hpp"
#include "martial/verify.hpp"

namespace martial::cli {

namespace {

using json = nlohmann::json;

enum class Format { Auto, Json, Csv, Text };

struct Options {
  std::string format = "auto";
  int offset = 1;
  int jobs = 1;
  std::string perm;
  std::string pi;
  std::string rho;
  std::string genusKind;
  std::optional<int> i;
  std::optional<int> j;
  std::string suite;
  std::optional<int> maxLength;
  std::string window;
  std::string bars;
};

Format chosen(const Options& o, Format fallback) {
  if (o.format == "json") return Format::Json;
  if (o.format == "csv") return Format::Csv;
  if (o.format == "text") return Format::Text;
  return fallback;
}

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string wordText(const Word& w, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? sep : "") + std::to_string(w[k]);
  return out;
}

void printPoly(std::ostream& out, Format f, const std::string& label, const MultiPoly& p, json extra) {
  switch (f) {
    case Format::Json:
      extra["value"] = p.toJson();
      extra["text"] = p.toString();
      out << extra.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "monomial,numerator,denominator\n";
      for (const auto& [m, c] : p)
        out << csvEscape(m.isOne() ? "" : m.toString()) << "," << c.get_num().get_str() << ","
            << c.get_den().get_str() << "\n";
      break;
    default:
      out << label << " = " << p.toString() << "\n";
  }
}

int cmdRw(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm, o.offset);
  const auto& words = reducedWords(p);
  switch (chosen(o, Format::Text)) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& w : words) arr.push_back({{"word", w}, {"comaj", comaj(w)}});
      out << json{{"permutation", p.toString()}, {"length", p.length()}, {"reduced_words", arr}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "word,comaj\n";
      for (const auto& w : words) out << wordText(w, " ") << "," << comaj(w) << "\n";
      break;
    default:
      out << p.toString() << ": length " << p.length() << ", " << words.size() << " reduced word"
          << (words.size() == 1 ? "" : "s") << "\n";
      for (const auto& w : words) out << "  " << (w.empty() ? "()" : wordText(w, ",")) << "  comaj " << comaj(w) << "\n";
  }
  return kExitOk;
}

void printVector(std::ostream& out, Format f, const SchubertVector& v, json header) {
  switch (f) {
    case Format::Json: {
      json terms = json::array();
      for (const auto& [sigma, c] : v) terms.push_back({{"sigma", sigma.toString()}, {"coefficient", rationalToString(c)}});
      header["terms"] = terms;
      out << header.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "sigma,coefficient\n";
      for (const auto& [sigma, c] : v) out << sigma.toString() << "," << rationalToString(c) << "\n";
      break;
    default: {
      std::string line;
      for (const auto& [sigma, c] : v) line += (line.empty() ? "" : " + ") + rationalToString(c) + " * S_" + sigma.toString();
      out << (line.empty() ? "0" : line) << "\n";
    }
  }
}

int cmdMult(const Options& o, std::ostream& out) {
  const Permutation pi = Permutation::parse(o.pi, o.offset);
  const Permutation rho = Permutation::parse(o.rho, o.offset);
  printVector(out, chosen(o, Format::Json), structureConstants(pi, rho),
              {{"pi", pi.toString()}, {"rho", rho.toString()}});
  return kExitOk;
}

int cmdGenus(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm, o.offset);
  const Format f = chosen(o, Format::Text);
  json header{{"permutation", p.toString()}, {"genus", o.genusKind}};
  if (o.genusKind == "klyachko") {
    printPoly(out, f, "klyachko(" + p.toString() + ")", klyachkoGenus(p), header);
  } else if (o.genusKind == "affine") {
    printPoly(out, f, "gamma(" + p.toString() + ")", affineLinearGenus(p), header);
  } else if (o.genusKind == "q") {
    const auto v = qKlyachkoGenus(p);
    header["denominator_length"] = v.denomLength;
    if (f == Format::Text)
      out << "gamma_q(" << p.toString() << ") = (" << v.numerator.toString() << ") / [" << v.denomLength << "]_q!\n";
    else
      printPoly(out, f, "", v.numerator, header);
  } else {
    if (o.i.has_value() != o.j.has_value()) throw ValidationError("--i and --j go together");
    ComponentSpec spec = AffineLinearComponent{};
    if (o.i) {
      spec = TwoSlopeComponent{*o.i, *o.j};
      header["i"] = *o.i;
      header["j"] = *o.j;
    }
    printPoly(out, f, "component(" + p.toString() + ")", componentEvaluate(spec, p), header);
  }
  return kExitOk;
}

int cmdTriangle(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm, o.offset);
  const auto series = expTriangleSeries(p);
  const MultiPoly lhs = expTriangle(p);
  const MultiPoly rhs = affineLinearGenus(p);
  const bool equal = lhs == rhs && static_cast<int>(series.size()) == p.length() + 1;
  switch (chosen(o, Format::Text)) {
    case Format::Json:
      out << json{{"permutation", p.toString()},
                  {"exp_triangle", lhs.toJson()},
                  {"affine_linear", rhs.toJson()},
                  {"text", lhs.toString()},
                  {"series_terms", series.size()},
                  {"equal", equal}}
                 .dump(2)
          << "\n";
      break;
    case Format::Csv:
      out << "quantity,value\n"
          << "exp_triangle," << csvEscape(lhs.toString()) << "\naffine_linear," << csvEscape(rhs.toString())
          << "\nseries_terms," << series.size() << "\nequal," << (equal ? "true" : "false") << "\n";
      break;
    default:
      out << "exp(a nabla + b xi) S_" << p.toString() << " at S_e = " << lhs.toString() << "\n"
          << "gamma(" << p.toString() << ") = " << rhs.toString() << "\n"
          << (equal ? "equal" : "DIFFERENT") << " (" << series.size() << " series terms)\n";
  }
  return equal ? kExitOk : kExitVerificationFailure;
}

int cmdCoproduct(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm, o.offset);
  const PairVector d = coproduct(SchubertVector::basis(p));
  switch (chosen(o, Format::Text)) {
    case Format::Json: {
      json terms = json::array();
      for (const auto& [pair, c] : d)
        terms.push_back(
            {{"left", pair.first.toString()}, {"right", pair.second.toString()}, {"coefficient", rationalToString(c)}});
      out << json{{"permutation", p.toString()}, {"terms", terms}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "left,right,coefficient\n";
      for (const auto& [pair, c] : d)
        out << pair.first.toString() << "," << pair.second.toString() << "," << rationalToString(c) << "\n";
      break;
    default: {
      std::string line;
      for (const auto& [pair, c] : d)
        line += (line.empty() ? "" : " + ") + rationalToString(c) + " * S_" + pair.first.toString() + " (x) S_" +
                pair.second.toString();
      out << line << "\n";
    }
  }
  return kExitOk;
}

int cmdStanley(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm, o.offset);
  const auto& a = stanleyCoefficients(p);
  switch (chosen(o, Format::Text)) {
    case Format::Json: {
      json terms = json::array();
      for (const auto& [lambda, c] : a) terms.push_back({{"partition", lambda.parts}, {"coefficient", c.get_str()}});
      out << json{{"permutation", p.toString()}, {"reduced_words", countReducedWords(p)}, {"coefficients", terms}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "partition,coefficient\n";
      for (const auto& [lambda, c] : a) out << csvEscape(lambda.toString()) << "," << c.get_str() << "\n";
      break;
    default: {
      std::string line;
      for (const auto& [lambda, c] : a) line += (line.empty() ? "" : " + ") + c.get_str() + " * s" + lambda.toString();
      out << "St_" << p.toString() << " = " << line << "\n";
    }
  }
  return kExitOk;
}

int cmdVerify(const Options& o, std::ostream& out) {
  SuiteOptions options;
  options.jobs = std::max(1, o.jobs);
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& s : suites()) names.push_back(s.name);
  } else {
    names.push_back(o.suite);
    options.maxLength = o.maxLength;
    if (!o.window.empty()) options.window = parseWindow(o.window);
  }
  const Format f = chosen(o, Format::Text);
  bool passed = true;
  json reports = json::array();
  if (f == Format::Csv) out << "suite,passed,checked,seconds,counterexample\n";
  for (const auto& name : names) {
    const auto report = runSuite(name, options);
    passed = passed && report.passed;
    if (f == Format::Json)
      reports.push_back(report.toJson());
    else if (f == Format::Csv)
      out << report.suite << "," << (report.passed ? "true" : "false") << "," << report.checked << ","
          << report.seconds << "," << csvEscape(report.counterexample.is_null() ? "" : report.counterexample.dump())
          << "\n";
    else
      out << report.toText() << "\n";
  }
  if (f == Format::Json) out << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return passed ? kExitOk : kExitVerificationFailure;
}

std::optional<int> parseBars(const std::string& text, int fullyBarred) {
  if (text.empty() || text == "all") return fullyBarred;
  if (text == "any") return std::nullopt;
  try {
    std::size_t used = 0;
    int k = std::stoi(text, &used);
    if (used == text.size() && k >= 0) return k;
  } catch (const std::exception&) {
  }
  throw ValidationError("--bars takes a nonnegative integer, 'all' or 'any'; got " + text);
}

int cmdTableEgg(const Options& o, std::ostream& out) {
  const Permutation pi = Permutation::parse(o.pi, o.offset);
  const Permutation rho = Permutation::parse(o.rho, o.offset);
  auto bars = parseBars(o.bars, pi.length() + rho.length());
  if (!bars) throw ValidationError("table-egg shows one bar count at a time");
  const auto table = distributionTable(pi, rho, *bars);
  const auto d = qNenashevDistributions(pi, rho, *bars);
  switch (chosen(o, Format::Csv)) {
    case Format::Json: {
      json j = table.toJson();
      j["pi"] = pi.toString();
      j["rho"] = rho.toString();
      j["bars"] = *bars;
      j["identity_holds"] = d.holds();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << table.toText();
      break;
    default:
      out << table.toCsv();
  }
  return d.holds() ? kExitOk : kExitVerificationFailure;
}

int cmdRectify(const Options& o, std::ostream& out) {
  const Permutation pi = Permutation::parse(o.pi, o.offset);
  const Permutation rho = Permutation::parse(o.rho, o.offset);
  const auto bars = parseBars(o.bars, pi.length() + rho.length());
  const auto witness = rectificationWitness(pi, rho, bars);
  switch (chosen(o, Format::Json)) {
    case Format::Csv:
      out << "P,R,sources,bars,statistic,sigma,copy,word\n";
      for (const auto& e : witness.entries) {
        std::string sources;
        for (bool fromR : e.shuffle.sources) sources += fromR ? 'R' : 'P';
        out << csvEscape(e.shuffle.left.toString()) << "," << csvEscape(e.shuffle.right.toString()) << "," << sources
            << "," << e.shuffle.left.barCount() + e.shuffle.right.barCount() << "," << shuffleQStatistic(e.shuffle)
            << "," << e.sigma.toString() << "," << e.copy << "," << csvEscape(e.target.toString()) << "\n";
      }
      break;
    case Format::Text:
      out << (witness.perfect ? "perfect" : "NOT perfect") << " matching: " << witness.entries.size() << " of "
          << witness.shuffleCount << " shuffles onto " << witness.targetCount << " targets\n";
      break;
    default: {
      json j = witness.toJson();
      j["pi"] = pi.toString();
      j["rho"] = rho.toString();
      j["bars"] = bars ? json(*bars) : json("any");
      out << j.dump(2) << "\n";
    }
  }
  return witness.perfect ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert symbols, nil Hecke actions, genera and q-statistics"};
  app.name("martial");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"auto", "json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--offset", o.offset, "Value of the first entry for digit strings and comma lists")
      ->capture_default_str();

  auto* rw = app.add_subcommand("rw", "Reduced words and their comaj");
  rw->add_option("PERM", o.perm)->required();

  auto* mult = app.add_subcommand("mult", "Structure constants of S_PI S_RHO");
  mult->add_option("PI", o.pi)->required();
  mult->add_option("RHO", o.rho)->required();

  auto* genus = app.add_subcommand("genus", "Klyachko, affine-linear, q-Klyachko or component genus");
  genus->add_option("KIND", o.genusKind)->required()->check(CLI::IsMember({"klyachko", "affine", "q", "component"}));
  genus->add_option("PERM", o.perm)->required();
  genus->add_option("--i", o.i, "Left end of the two-slope band");
  genus->add_option("--j", o.j, "Right end of the two-slope band");

  auto* triangle = app.add_subcommand("triangle", "exp(a nabla + b xi) against the affine-linear genus");
  triangle->add_option("PERM", o.perm)->required();

  auto* coprod = app.add_subcommand("coproduct", "Coproduct of S_PERM");
  coprod->add_option("PERM", o.perm)->required();

  auto* stanley = app.add_subcommand("stanley", "Schur expansion of the Stanley symmetric function");
  stanley->add_option("PERM", o.perm)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite (or all)");
  std::vector<std::string> suiteNames{"all"};
  std::string suiteHelp = "Suites:";
  for (const auto& s : suites()) {
    suiteNames.push_back(s.name);
    suiteHelp += "\n  " + s.name + ": " + s.description;
  }
  verify->footer(suiteHelp);
  verify->add_option("SUITE", o.suite)->required()->check(CLI::IsMember(suiteNames));
  verify->add_option("--max-length", o.maxLength, "Suite-specific length bound");
  verify->add_option("--window", o.window, "Support window LO..HI");
  verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

  auto* egg = app.add_subcommand("table-egg", "Distribution table of the q-Nenashev identity");
  o.pi = o.rho = "12463578";
  egg->add_option("--pi", o.pi)->capture_default_str();
  egg->add_option("--rho", o.rho)->capture_default_str();
  egg->add_option("--bars", o.bars, "Bar count (default: all letters barred)");

  auto* rectify = app.add_subcommand("rectify", "Bar- and statistic-preserving matching of shuffles");
  rectify->add_option("PI", o.pi)->required();
  rectify->add_option("RHO", o.rho)->required();
  rectify->add_option("--bars", o.bars, "K, 'all' (fully barred, default) or 'any' (every bar count)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "martial: " << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<std::filesystem::path> cacheDir;
  if (const char* dir = std::getenv("SCHUBERT_CACHE_DIR"); dir && *dir) {
    cacheDir = dir;
    try {
      loadCaches(*cacheDir);
    } catch (const std::exception& e) {
      err << "martial: ignoring cache: " << e.what() << "\n";
    }
  }

  int code = kExitOk;
  try {
    if (*rw) code = cmdRw(o, out);
    else if (*mult) code = cmdMult(o, out);
    else if (*genus) code = cmdGenus(o, out);
    else if (*triangle) code = cmdTriangle(o, out);
    else if (*coprod) code = cmdCoproduct(o, out);
    else if (*stanley) code = cmdStanley(o, out);
    else if (*verify) code = cmdVerify(o, out);
    else if (*egg) code = cmdTableEgg(o, out);
    else if (*rectify) code = cmdRectify(o, out);
  } catch (const ValidationError& e) {
    err << "martial: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "martial: " << e.what() << "\n";
    return kExitVerificationFailure;
  }

  if (cacheDir) {
    try {
      saveCaches(*cacheDir);
    } catch (const std::exception& e) {
      err << "martial: could not write cache: " << e.what() << "\n";
    }
  }
  return code;
}

}  // namespace martial::cli
