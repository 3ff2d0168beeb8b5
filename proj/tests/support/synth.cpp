#include "synth.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "gausseer/elements.hpp"
#include "gausseer/log_parser.hpp"
#include "gausseer/text.hpp"

namespace gausseer::testing {

namespace {

const std::vector<std::string> kElementPool{"H", "C", "N", "O", "F", "S", "Cl", "Fe", "Cu", "Si"};

const std::vector<std::string> kUnknownMethods{"ub3lyp", "m06", "pw91pw91", "rb3lyp", "tpsstpss"};

const std::vector<std::string> kBases{"gen",    "6-31g(d)",    "6-311+g(2d,p)", "sto-3g",
                                      "3-21g*", "cc-pvdz",     "aug-cc-pvtz",   "lanl2dz",
                                      "def2svp", "6-31+g(d,p)"};

// Written form -> recovered token.
const std::vector<std::pair<std::string, std::string>> kJobOptions{
    {"opt=calcfc", "opt(calcfc)"},
    {"opt(maxcycles=50)", "opt(maxcycles=50)"},
    {"freq=noraman", "freq(noraman)"},
    {"scrf=(pcm,solvent=water)", "scrf(pcm,solvent=water)"},
    {"irc=(calcfc,maxpoints=20)", "irc(calcfc,maxpoints=20)"},
    {"scan", "scan"},
};

const std::vector<std::string> kIgnoredKeywords{"pop=full", "scf=tight", "guess=read",
                                                "geom=check", "iop(3/76=1000010000)",
                                                "nosymm", "int=ultrafine"};

const std::vector<std::string> kTitleWords{"conformer", "scan",   "transition", "state",
                                           "ground",    "anion",  "cation",     "dimer",
                                           "complex",   "solvated", "test", "run"};

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string orientation_block(const std::string& kind, const std::vector<AtomSite>& sites) {
  std::string out = "                         " + kind + " orientation:\n";
  const std::string rule = " ---------------------------------------------------------------------\n";
  out += rule;
  out += " Center     Atomic      Atomic             Coordinates (Angstroms)\n";
  out += " Number     Number       Type             X           Y           Z\n";
  out += rule;
  char buf[160];
  int center = 1;
  for (const auto& s : sites) {
    std::snprintf(buf, sizeof buf, " %6d %10d %11d %15.6f %11.6f %11.6f\n", center++,
                  elements::atomic_number(s.element), 0, s.x, s.y, s.z);
    out += buf;
  }
  out += rule;
  return out;
}

// Coordinates as the parser will read them back (6 decimals).
double rounded(double v) { return std::strtod(fixed(v, 6).c_str(), nullptr); }

}  // namespace

int LogGenerator::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool LogGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

SyntheticLog LogGenerator::next() {
  const auto& tax = default_taxonomy();
  SyntheticLog log;
  ++serial_;
  char name[64];
  std::snprintf(name, sizeof name, "synthetic_%03d.log", serial_);
  log.path = name;
  auto& truth = log.truth;

  // Route.
  std::vector<std::string> words;
  std::vector<std::string> known_methods;
  for (const auto& cat : tax.categories(AttributeKind::Method)) {
    known_methods.insert(known_methods.end(), cat.tokens.begin(), cat.tokens.end());
  }
  const auto method = chance(0.85) ? pick(known_methods) : pick(kUnknownMethods);
  const bool bare_method = chance(0.12) && tax.is_known_token(AttributeKind::Method, method);
  if (bare_method) {
    words.push_back(method);
    truth.methods.insert(method);
  } else {
    const auto basis = pick(kBases);
    std::string token = method + "/" + basis;
    truth.methods.insert(method);
    truth.basis_sets.insert(basis);
    if (chance(0.08)) {
      const auto extra = pick(known_methods);
      token += "/" + extra;
      truth.methods.insert(extra);
    }
    words.push_back(token);
  }

  std::vector<std::string> job_keywords;
  for (const auto& cat : tax.categories(AttributeKind::JobType)) {
    job_keywords.insert(job_keywords.end(), cat.tokens.begin(), cat.tokens.end());
  }
  const int njobs = uniform(0, 2);
  for (int i = 0; i < njobs; ++i) {
    if (chance(0.25)) {
      const auto& [written, recovered] = pick(kJobOptions);
      words.push_back(written);
      truth.job_types.insert(recovered);
    } else {
      const auto& kw = pick(job_keywords);
      words.push_back(kw);
      truth.job_types.insert(kw);
    }
  }
  if (truth.job_types.empty()) truth.job_types.insert("sp");
  for (int i = uniform(0, 2); i > 0; --i) words.push_back(pick(kIgnoredKeywords));
  std::shuffle(words.begin(), words.end(), rng_);
  if (chance(0.3)) {
    for (auto& w : words) {
      for (auto& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }

  static const std::vector<std::string> kPrintLevels{"#", "#p", "#n", "#t", "#P"};
  std::string route = " " + pick(kPrintLevels);
  const std::size_t wrap_at = chance(0.3) && words.size() > 1
                                  ? static_cast<std::size_t>(uniform(1, static_cast<int>(words.size()) - 1))
                                  : words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    route += (i == wrap_at ? "\n " : " ") + words[i];
  }

  // Molecule.
  std::vector<std::string> pool = kElementPool;
  std::shuffle(pool.begin(), pool.end(), rng_);
  const int nelem = uniform(1, 3);
  std::vector<AtomSite> sites;
  for (int e = 0; e < nelem; ++e) {
    for (int k = uniform(1, 3); k > 0; --k) {
      const double r = static_cast<double>(sites.size());
      sites.push_back({pool[static_cast<std::size_t>(e)], rounded(0.7 * r), rounded(-0.3 * r + 0.1 * e),
                       rounded(0.05 * uniform(-20, 20))});
    }
  }
  truth.atom_sites = sites;
  for (const auto& s : sites) truth.elements.insert(s.element);
  truth.charge = uniform(-2, 2);
  truth.multiplicity = uniform(1, 4);

  // Title.
  const bool has_title = chance(0.9);
  if (has_title) {
    truth.title = pick(kTitleWords) + " " + pick(kTitleWords) + " " + std::to_string(serial_);
  } else {
    truth.title = log.path.substr(0, log.path.rfind('.'));
  }

  std::string t;
  t += " Entering Gaussian System, Link 0=g16\n";
  t += " ******************************************\n";
  t += " Gaussian 16:  ES64L-G16RevC.01  3-Jul-2019\n";
  t += " ******************************************\n";
  t += " %nprocshared=4\n";
  t += " ----------------------------------------------\n";
  t += route + "\n";
  t += " ----------------------------------------------\n";
  t += " 1/18=20,19=15,38=1/1,3;\n";
  if (has_title) {
    t += " -------------\n " + truth.title + "\n -------------\n";
  }
  t += " Symbolic Z-matrix:\n";
  t += " Charge = " + std::to_string(truth.charge) + " Multiplicity = " +
       std::to_string(truth.multiplicity) + "\n";
  for (const auto& s : sites) t += " " + s.element + "   0.  0.  0.\n";
  t += " \n";

  // Orientation blocks: decoys first, the planted geometry last.
  const bool input_only = chance(0.2);
  const std::string kind = input_only ? "Input" : "Standard";
  if (input_only) truth.flags.insert("input_orientation");
  for (int b = uniform(0, 2); b > 0; --b) {
    auto decoy = sites;
    if (chance(0.5)) decoy.push_back({"He", 9.0, 9.0, 9.0});
    for (auto& s : decoy) s.z = rounded(s.z + 0.013);
    t += orientation_block(kind, decoy);
    t += " SCF Done:  E(RHF) =  " + fixed(-100.0 - uniform(0, 5000) / 7.0, 7) +
         "     A.U. after   12 cycles\n";
  }
  if (!input_only && chance(0.3)) {
    t += orientation_block("Input", sites);
    truth.flags.insert("input_orientation");
  }
  t += orientation_block(kind, sites);
  const auto energy_text = fixed(-50.0 - uniform(0, 900000) / 997.0, uniform(6, 10));
  truth.energy = std::strtod(energy_text.c_str(), nullptr);
  t += " SCF Done:  E(RB3LYP) =  " + energy_text + "     A.U. after    9 cycles\n";

  for (const auto& [flag, trigger] : kFlagTriggers) {
    if (flag == "input_orientation") continue;
    if (chance(0.25)) {
      t += " " + std::string(trigger) + "\n";
      truth.flags.insert(std::string(flag));
    }
  }
  if (chance(0.5)) {
    truth.degrees_of_freedom = uniform(0, 30);
    t += " Deg. of freedom    " + std::to_string(*truth.degrees_of_freedom) + "\n";
  }
  t += " Normal termination of Gaussian 16.\n";
  log.text = std::move(t);
  return log;
}

std::vector<GaussianRecord> synthetic_corpus(std::size_t n, std::uint64_t seed) {
  LogGenerator gen(seed);
  std::vector<GaussianRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto log = gen.next();
    auto record = parse_document(log.text, log.path);
    record.id = i + 1;
    out.push_back(std::move(record));
  }
  return out;
}

std::string QueryGenerator::random_clause(AttributeKind kind) {
  std::uniform_int_distribution<int> coin(0, 3);
  const auto& cats = taxonomy_.categories(kind);
  switch (coin(rng_)) {
    case 0:
    case 1:
      if (!cats.empty()) {
        std::uniform_int_distribution<std::size_t> d(0, cats.size() - 1);
        const auto& name = cats[d(rng_)].name;
        // Category names are matched case-insensitively.
        return coin(rng_) == 0 ? text::to_lower(name) : name;
      }
      [[fallthrough]];
    case 2: {
      std::uniform_int_distribution<std::size_t> d(0, corpus_.size() - 1);
      const auto& tokens = tokens_of(corpus_[d(rng_)], kind);
      if (!tokens.empty()) {
        std::uniform_int_distribution<std::size_t> t(0, tokens.size() - 1);
        return *std::next(tokens.begin(), static_cast<std::ptrdiff_t>(t(rng_)));
      }
      return "sp";
    }
    default:
      return coin(rng_) == 0 ? "Any" : "no-such-token";
  }
}

Query QueryGenerator::next() {
  Query q;
  std::uniform_int_distribution<std::size_t> doc(0, corpus_.size() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  const auto& seed_record = corpus_[doc(rng_)];
  if (coin(rng_) < 7 && !seed_record.elements.empty()) {
    // A subset (often all) of a real document's elements.
    for (const auto& e : seed_record.elements) {
      if (q.elements.empty() || coin(rng_) < 7) q.elements.insert(e);
    }
  } else {
    std::uniform_int_distribution<std::size_t> e(0, kElementPool.size() - 1);
    for (int k = 1 + coin(rng_) % 3; k > 0; --k) q.elements.insert(kElementPool[e(rng_)]);
  }
  q.element_mode = coin(rng_) < 4 ? ElementMode::Exact : ElementMode::Contains;
  for (auto kind : kAttributeKinds) {
    if (coin(rng_) < 4) q.clause(kind) = random_clause(kind);
  }
  q.connective = coin(rng_) < 5 ? Connective::And : Connective::Or;
  return q;
}

Query QueryGenerator::next_with_refinements() {
  Query q = next();
  std::uniform_int_distribution<int> count(0, 2);
  std::uniform_int_distribution<std::size_t> doc(0, corpus_.size() - 1);
  std::uniform_int_distribution<std::size_t> kind_pick(0, kAttributeKinds.size() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  for (int i = count(rng_); i > 0; --i) {
    const auto kind = kAttributeKinds[kind_pick(rng_)];
    std::vector<const GaussianRecord*> hits;
    for (const auto& r : corpus_) {
      if (matches(q, r, taxonomy_)) hits.push_back(&r);
    }
    const GaussianRecord* source = &corpus_[doc(rng_)];
    if (!hits.empty() && coin(rng_) < 8) {
      std::uniform_int_distribution<std::size_t> h(0, hits.size() - 1);
      source = hits[h(rng_)];
    }
    const auto& tokens = tokens_of(*source, kind);
    if (tokens.empty()) continue;
    q = refine(q, kind, taxonomy_.categorize_token(kind, *tokens.begin()));
  }
  return q;
}

}  // namespace gausseer::testing
